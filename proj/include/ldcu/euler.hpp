#pragma once

// Ideal-gas Euler equations in 1-D and 2-D: state conversions, physical fluxes,
// Jacobian eigenvalues and the analytic eigenvector matrices used by the local
// characteristic decomposition.

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "ldcu/error.hpp"
#include "ldcu/vec.hpp"

namespace ldcu {

using Conserved1D = Vec<3>; // (rho, rho*u, E)
using Conserved2D = Vec<4>; // (rho, rho*u, rho*v, E)

namespace var {
inline constexpr std::size_t rho = 0;
inline constexpr std::size_t momx = 1;
inline constexpr std::size_t momy = 2;
inline constexpr std::size_t ene1 = 2;
inline constexpr std::size_t ene2 = 3;
} // namespace var

struct Primitive1D {
    double rho = 0.0;
    double u = 0.0;
    double p = 0.0;
};

struct Primitive2D {
    double rho = 0.0;
    double u = 0.0;
    double v = 0.0;
    double p = 0.0;
};

enum class Direction { X, Y };

struct GasModel {
    double gamma = 1.4;
};

GasModel make_gas(double gamma); // throws InvalidConfig unless gamma > 1

// Strict mode throws on a non-positive pressure; lenient mode floors the
// pressure at kPressureFloor and counts the event. Density failures are always
// fatal. A guard is owned by one solver and is not shared between threads.
class PositivityGuard {
public:
    static constexpr double kPressureFloor = 1e-12;

    explicit PositivityGuard(bool strict = true) : strict_(strict) {}

    bool strict() const { return strict_; }
    long warnings() const { return warnings_; }

    double admit_pressure(double p, const char* where)
    {
        if (p > 0.0) return p;
        if (strict_) throw_pressure(p, where);
        ++warnings_;
        return kPressureFloor;
    }

private:
    [[noreturn]] static void throw_pressure(double p, const char* where);

    bool strict_;
    long warnings_ = 0;
};

[[noreturn]] void throw_density(double rho, const char* where);

// --- conversions -----------------------------------------------------------

inline Primitive1D primitive_from_conserved(const Conserved1D& U, const GasModel& gas,
                                            PositivityGuard* guard = nullptr)
{
    if (!(U[0] > 0.0)) throw_density(U[0], "primitive_from_conserved");
    const double u = U[1] / U[0];
    double p = (gas.gamma - 1.0) * (U[2] - 0.5 * U[0] * u * u);
    if (guard) {
        p = guard->admit_pressure(p, "primitive_from_conserved");
    } else if (!(p > 0.0)) {
        PositivityGuard strict;
        p = strict.admit_pressure(p, "primitive_from_conserved");
    }
    return {U[0], u, p};
}

inline Primitive2D primitive_from_conserved(const Conserved2D& U, const GasModel& gas,
                                            PositivityGuard* guard = nullptr)
{
    if (!(U[0] > 0.0)) throw_density(U[0], "primitive_from_conserved");
    const double u = U[1] / U[0];
    const double v = U[2] / U[0];
    double p = (gas.gamma - 1.0) * (U[3] - 0.5 * U[0] * (u * u + v * v));
    if (guard) {
        p = guard->admit_pressure(p, "primitive_from_conserved");
    } else if (!(p > 0.0)) {
        PositivityGuard strict;
        p = strict.admit_pressure(p, "primitive_from_conserved");
    }
    return {U[0], u, v, p};
}

Conserved1D conserved_from_primitive(const Primitive1D& W, const GasModel& gas);
Conserved2D conserved_from_primitive(const Primitive2D& W, const GasModel& gas);

inline double sound_speed(double rho, double p, const GasModel& gas)
{
    return std::sqrt(gas.gamma * p / rho);
}

// --- fluxes ------------------------------------------------------------------

inline Conserved1D physical_flux(const Conserved1D& U, const Primitive1D& W)
{
    return {U[1], U[1] * W.u + W.p, W.u * (U[2] + W.p)};
}

inline Conserved2D physical_flux(const Conserved2D& U, const Primitive2D& W, Direction dir)
{
    if (dir == Direction::X)
        return {U[1], U[1] * W.u + W.p, U[2] * W.u, W.u * (U[3] + W.p)};
    return {U[2], U[1] * W.v, U[2] * W.v + W.p, W.v * (U[3] + W.p)};
}

Conserved1D physical_flux_x(const Conserved1D& U, const GasModel& gas);
Conserved2D physical_flux_x(const Conserved2D& U, const GasModel& gas);
Conserved2D physical_flux_y(const Conserved2D& U, const GasModel& gas);

// --- eigenstructure ------------------------------------------------------------

// Ascending: (u-c, u, u+c) in 1-D; (un-c, un, un, un+c) in 2-D with un the
// velocity normal to `dir`.
Vec<3> eigenvalues(const Conserved1D& U, const GasModel& gas);
Vec<4> eigenvalues(const Conserved2D& U, const GasModel& gas, Direction dir);

template <std::size_t N>
struct CharBasis {
    Mat<N> R;    // right eigenvectors as columns, ascending eigenvalue order
    Mat<N> Rinv; // left eigenvectors as rows
};

// Swaps the two momentum components; maps y-direction quantities onto the
// x-direction formulas.
inline Conserved2D swap_momenta(const Conserved2D& U) { return {U[0], U[2], U[1], U[3]}; }

[[noreturn]] void throw_degenerate_basis(double rho, double p);

// Eigenvectors of the flux Jacobian at the arithmetic mean of the two states.
// Throws DegenerateBasis when the mean state has rho <= 0 or p <= 0.
inline CharBasis<3> char_basis(const Conserved1D& left, const Conserved1D& right,
                               const GasModel& gas)
{
    const double rho = 0.5 * (left[0] + right[0]);
    const double mom = 0.5 * (left[1] + right[1]);
    const double ene = 0.5 * (left[2] + right[2]);
    const double u = rho > 0.0 ? mom / rho : 0.0;
    const double p = (gas.gamma - 1.0) * (ene - 0.5 * rho * u * u);
    if (!(rho > 0.0) || !(p > 0.0)) throw_degenerate_basis(rho, p);

    const double c = std::sqrt(gas.gamma * p / rho);
    const double H = (ene + p) / rho;
    const double ek = 0.5 * u * u;
    const double b1 = (gas.gamma - 1.0) / (c * c);
    const double b2 = b1 * ek;
    const double ic = 1.0 / c;

    CharBasis<3> B;
    B.R = {Vec<3>{1.0, 1.0, 1.0},
           Vec<3>{u - c, u, u + c},
           Vec<3>{H - u * c, ek, H + u * c}};
    B.Rinv = {Vec<3>{0.5 * (b2 + u * ic), -0.5 * (b1 * u + ic), 0.5 * b1},
              Vec<3>{1.0 - b2, b1 * u, -b1},
              Vec<3>{0.5 * (b2 - u * ic), -0.5 * (b1 * u - ic), 0.5 * b1}};
    return B;
}

inline CharBasis<4> char_basis(const Conserved2D& left, const Conserved2D& right,
                               const GasModel& gas, Direction dir)
{
    const double rho = 0.5 * (left[0] + right[0]);
    // (un, ut): velocity normal and tangential to the interface
    const std::size_t in = dir == Direction::X ? 1 : 2;
    const std::size_t it = dir == Direction::X ? 2 : 1;
    const double mn = 0.5 * (left[in] + right[in]);
    const double mt = 0.5 * (left[it] + right[it]);
    const double ene = 0.5 * (left[3] + right[3]);
    const double un = rho > 0.0 ? mn / rho : 0.0;
    const double ut = rho > 0.0 ? mt / rho : 0.0;
    const double ek = 0.5 * (un * un + ut * ut);
    const double p = (gas.gamma - 1.0) * (ene - rho * ek);
    if (!(rho > 0.0) || !(p > 0.0)) throw_degenerate_basis(rho, p);

    const double c = std::sqrt(gas.gamma * p / rho);
    const double H = (ene + p) / rho;
    const double b1 = (gas.gamma - 1.0) / (c * c);
    const double b2 = b1 * ek;
    const double ic = 1.0 / c;

    // Normal-direction eigenstructure in (rho, m_n, m_t, E) ordering.
    const Mat<4> R = {Vec<4>{1.0, 1.0, 0.0, 1.0},
                      Vec<4>{un - c, un, 0.0, un + c},
                      Vec<4>{ut, ut, 1.0, ut},
                      Vec<4>{H - un * c, ek, ut, H + un * c}};
    const Mat<4> L = {Vec<4>{0.5 * (b2 + un * ic), -0.5 * (b1 * un + ic), -0.5 * b1 * ut, 0.5 * b1},
                      Vec<4>{1.0 - b2, b1 * un, b1 * ut, -b1},
                      Vec<4>{-ut, 0.0, 1.0, 0.0},
                      Vec<4>{0.5 * (b2 - un * ic), -0.5 * (b1 * un - ic), -0.5 * b1 * ut, 0.5 * b1}};

    if (dir == Direction::X) return {R, L};
    // y: permute momentum rows of R and momentum columns of Rinv
    CharBasis<4> B{R, L};
    std::swap(B.R[1], B.R[2]);
    for (auto& row : B.Rinv) std::swap(row[1], row[2]);
    return B;
}

} // namespace ldcu

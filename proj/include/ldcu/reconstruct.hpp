#pragma once

// Piecewise-linear reconstruction in local characteristic variables with the
// two-parameter SBM limiter family.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <utility>

#include "ldcu/euler.hpp"
#include "ldcu/field.hpp"

namespace ldcu {

struct LimiterParams {
    double theta = 2.0; // in [1, 2]
    double tau = 0.5;
};

inline constexpr LimiterParams kOvercompressive{2.0, -0.25};
inline constexpr LimiterParams kMinmod2{2.0, 0.5};
inline constexpr LimiterParams kFlat{0.0, 0.0}; // phi = 0: zero slopes

LimiterParams make_limiter(double theta, double tau); // throws InvalidConfig if theta outside [1, 2]

// --- scalar limiter algebra ------------------------------------------------------

inline double minmod(double a, double b)
{
    if (a > 0.0 && b > 0.0) return std::min(a, b);
    if (a < 0.0 && b < 0.0) return std::max(a, b);
    return 0.0;
}

inline double minmod(double a, double b, double c)
{
    if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
    if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
    return 0.0;
}

double minmod(std::span<const double> values); // values must be non-empty

inline double minmod(std::initializer_list<double> values)
{
    return minmod(std::span<const double>(values.begin(), values.size()));
}

// phi(r) = 0 for r <= 0, min(r*theta, 1 + tau*(r - 1)) on (0, 1], r*phi(1/r) above.
inline double sbm_phi(double r, const LimiterParams& lim)
{
    if (!(r > 0.0)) return 0.0;
    if (r <= 1.0) return std::min(r * lim.theta, 1.0 + lim.tau * (r - 1.0));
    const double s = 1.0 / r;
    return r * std::min(s * lim.theta, 1.0 + lim.tau * (s - 1.0));
}

// Relative threshold below which a backward difference counts as zero.
inline constexpr double kSlopeGuard = 1e-12;

// phi(r) * (g0 - gm) with r = (gp - g0)/(g0 - gm), written without division:
// for same-sign differences with magnitudes a <= b it is
// sign * min(theta*a, b + tau*(a - b)).
inline double limited_increment(double gm, double g0, double gp, const LimiterParams& lim)
{
    const double d0 = g0 - gm;
    const double d1 = gp - g0;
    const double scale = std::max({std::fabs(gm), std::fabs(g0), std::fabs(gp), 1.0});
    if (std::fabs(d0) <= kSlopeGuard * scale || !(d0 * d1 > 0.0)) return 0.0;
    const double a = std::min(std::fabs(d0), std::fabs(d1));
    const double b = std::max(std::fabs(d0), std::fabs(d1));
    const double m = std::min(lim.theta * a, b + lim.tau * (a - b));
    return d0 > 0.0 ? m : -m;
}

inline double limited_slope(double gm, double g0, double gp, const LimiterParams& lim, double dx)
{
    return limited_increment(gm, g0, gp, lim) / dx;
}

template <std::size_t N>
Vec<N> limited_slope(const Vec<N>& gm, const Vec<N>& g0, const Vec<N>& gp, const LimiterParams& lim,
                     double dx)
{
    Vec<N> s{};
    for (std::size_t i = 0; i < N; ++i) s[i] = limited_slope(gm[i], g0[i], gp[i], lim, dx);
    return s;
}

inline double minmod2_slope(double gm, double g0, double gp, double dx)
{
    return minmod(2.0 * (g0 - gm) / dx, (gp - gm) / (2.0 * dx), 2.0 * (gp - g0) / dx);
}

template <std::size_t N>
Vec<N> minmod2_slope(const Vec<N>& gm, const Vec<N>& g0, const Vec<N>& gp, double dx)
{
    Vec<N> s{};
    for (std::size_t i = 0; i < N; ++i) s[i] = minmod2_slope(gm[i], g0[i], gp[i], dx);
    return s;
}

// --- one interface ----------------------------------------------------------------

// Given the basis of interface j+1/2 and the cell averages of cells j-1..j+2,
// returns (U^-, U^+). `left` limits cell j, `right` limits cell j+1.
template <std::size_t N>
inline std::pair<Vec<N>, Vec<N>> reconstruct_interface(const CharBasis<N>& basis,
                                                       const Vec<N>& um1, const Vec<N>& u0,
                                                       const Vec<N>& u1, const Vec<N>& u2,
                                                       const LimiterParams& left,
                                                       const LimiterParams& right)
{
    const Vec<N> gm1 = matvec(basis.Rinv, um1);
    const Vec<N> g0 = matvec(basis.Rinv, u0);
    const Vec<N> g1 = matvec(basis.Rinv, u1);
    const Vec<N> g2 = matvec(basis.Rinv, u2);

    Vec<N> gminus{}, gplus{};
    for (std::size_t i = 0; i < N; ++i) {
        gminus[i] = g0[i] + 0.5 * limited_increment(gm1[i], g0[i], g1[i], left);
        gplus[i] = g1[i] - 0.5 * limited_increment(g0[i], g1[i], g2[i], right);
    }
    return {matvec(basis.R, gminus), matvec(basis.R, gplus)};
}

// --- whole fields -----------------------------------------------------------------

// Requires ghosts filled. Returns nx+1 interface pairs. A point value with
// rho <= 0 or p <= 0 is replaced by its own cell average.
InterfaceValues1D reconstruct_1d(const Field1D& field, const RoughnessFlags1D& flags,
                                 const GasModel& gas, const LimiterParams& rough,
                                 const LimiterParams& smooth);
// Same, reusing the storage of `out`.
void reconstruct_1d(const Field1D& field, const RoughnessFlags1D& flags, const GasModel& gas,
                    const LimiterParams& rough, const LimiterParams& smooth, InterfaceValues1D& out);

// (U^-, U^+) at interface i of reconstruct_1d alone.
std::pair<Conserved1D, Conserved1D> reconstruct_face_1d(const Field1D& field,
                                                        const RoughnessFlags1D& flags,
                                                        const GasModel& gas,
                                                        const LimiterParams& rough,
                                                        const LimiterParams& smooth, int i);
// Zero slopes everywhere: U^- and U^+ are the adjacent cell averages.
InterfaceValues1D reconstruct_1d_first_order(const Field1D& field);

InterfaceValues2D reconstruct_2d(const Field2D& field, const RoughnessFlags2D& flags,
                                 const GasModel& gas, const LimiterParams& rough,
                                 const LimiterParams& smooth);
void reconstruct_2d(const Field2D& field, const RoughnessFlags2D& flags, const GasModel& gas,
                    const LimiterParams& rough, const LimiterParams& smooth, InterfaceValues2D& out);

InterfaceValues2D reconstruct_2d_first_order(const Field2D& field);

} // namespace ldcu

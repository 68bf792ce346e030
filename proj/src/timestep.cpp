#include "ldcu/timestep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ldcu {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void rethrow_at_face(const SolverError& e, const char* dir, int i, int k)
{
    std::ostringstream os;
    os << e.detail() << " (" << dir << "-face i=" << i;
    if (k >= 0) os << ", k=" << k;
    os << ")";
    throw SolverError(e.kind(), os.str());
}

Conserved1D reflect_x(const Conserved1D& u) { return {u[0], -u[1], u[2]}; }
Conserved2D reflect_x(const Conserved2D& u) { return {u[0], -u[1], u[2], u[3]}; }
Conserved2D reflect_y(const Conserved2D& u) { return {u[0], u[1], -u[2], u[3]}; }

Conserved1D dirichlet_1d(const BoundarySide& side, const GasModel& gas)
{
    return conserved_from_primitive(Primitive1D{side.state.rho, side.state.u, side.state.p}, gas);
}

// Fills the two ghosts beyond `edge` along a line. `cell(i)` addresses the line
// by interior index; `inward` is +1 at the low end, -1 at the high end.
template <class Cell, class Reflect, class State>
void fill_line(Cell&& cell, int edge, int inward, int n, const BoundarySide& side, Reflect&& reflect,
               const State& dirichlet)
{
    for (int g = 1; g <= kGhost; ++g) {
        const int ghost = edge - inward * g;
        switch (side.kind) {
        case BoundaryKind::Free: cell(ghost) = cell(edge); break;
        case BoundaryKind::SolidWall: cell(ghost) = reflect(cell(edge + inward * (g - 1))); break;
        case BoundaryKind::Dirichlet: cell(ghost) = dirichlet; break;
        case BoundaryKind::Periodic: cell(ghost) = cell(ghost + inward * n); break;
        }
    }
}

} // namespace

void fill_ghosts(Field1D& field, const BoundarySpec& bc, const GasModel& gas)
{
    const int nx = field.nx();
    auto cell = [&](int j) -> Conserved1D& { return field[j]; };
    auto refl = [](const Conserved1D& u) { return reflect_x(u); };
    const Conserved1D dl = bc.left.kind == BoundaryKind::Dirichlet ? dirichlet_1d(bc.left, gas) : Conserved1D{};
    const Conserved1D dr = bc.right.kind == BoundaryKind::Dirichlet ? dirichlet_1d(bc.right, gas) : Conserved1D{};
    fill_line(cell, 0, +1, nx, bc.left, refl, dl);
    fill_line(cell, nx - 1, -1, nx, bc.right, refl, dr);
}

void fill_ghosts(Field2D& field, const BoundarySpec& bc, const GasModel& gas)
{
    const int nx = field.nx();
    const int ny = field.ny();
    auto dirichlet = [&](const BoundarySide& s) {
        return s.kind == BoundaryKind::Dirichlet ? conserved_from_primitive(s.state, gas) : Conserved2D{};
    };
    const Conserved2D dl = dirichlet(bc.left), dr = dirichlet(bc.right);
    const Conserved2D db = dirichlet(bc.bottom), dt = dirichlet(bc.top);
    auto refl_x = [](const Conserved2D& u) { return reflect_x(u); };
    auto refl_y = [](const Conserved2D& u) { return reflect_y(u); };

    for (int j = 0; j < nx; ++j) {
        auto cell = [&](int k) -> Conserved2D& { return field(j, k); };
        fill_line(cell, 0, +1, ny, bc.bottom, refl_y, db);
        fill_line(cell, ny - 1, -1, ny, bc.top, refl_y, dt);
    }
    for (int k = -kGhost; k < ny + kGhost; ++k) {
        auto cell = [&](int j) -> Conserved2D& { return field(j, k); };
        fill_line(cell, 0, +1, nx, bc.left, refl_x, dl);
        fill_line(cell, nx - 1, -1, nx, bc.right, refl_x, dr);
    }
}

WaveSpeeds rhs_1d(const Field1D& field, const GasModel& gas, const RoughnessFlags1D& flags,
                  const SpatialScheme& scheme, PositivityGuard& guard, std::vector<Conserved1D>& dudt,
                  InterfaceValues1D* faces)
{
    const int nx = field.nx();
    const double idx = 1.0 / field.grid().dx();
    InterfaceValues1D local;
    InterfaceValues1D& iv = faces ? *faces : local;
    if (scheme.first_order) iv = reconstruct_1d_first_order(field);
    else reconstruct_1d(field, flags, gas, scheme.rough, scheme.smooth, iv);

    dudt.resize(at(nx));
    WaveSpeeds speeds;
    Conserved1D prev{};
    for (int i = 0; i <= nx; ++i) {
        const auto& um = iv.minus[at(i)];
        const auto& up = iv.plus[at(i)];
        Conserved1D f;
        try {
            const auto wm = primitive_from_conserved(um, gas, &guard);
            const auto wp = primitive_from_conserved(up, gas, &guard);
            LocalSpeeds s;
            f = ldcu_flux_1d(um, up, wm, wp, gas, s);
            speeds.x = std::max({speeds.x, s.a_plus, -s.a_minus});
        } catch (const SolverError& e) {
            rethrow_at_face(e, "x", i, -1);
        }
        if (i > 0) dudt[at(i - 1)] = -idx * (f - prev);
        prev = f;
    }
    return speeds;
}

WaveSpeeds rhs_2d(const Field2D& field, const GasModel& gas, const RoughnessFlags2D& flags,
                  const SpatialScheme& scheme, PositivityGuard& guard, std::vector<Conserved2D>& dudt,
                  InterfaceValues2D* faces)
{
    const int nx = field.nx();
    const int ny = field.ny();
    const double idx = 1.0 / field.grid().dx();
    const double idy = 1.0 / field.grid().dy();
    InterfaceValues2D local;
    InterfaceValues2D& iv = faces ? *faces : local;
    if (scheme.first_order) iv = reconstruct_2d_first_order(field);
    else reconstruct_2d(field, flags, gas, scheme.rough, scheme.smooth, iv);

    // x differences go into dudt first, y differences are added row by row
    WaveSpeeds speeds;
    dudt.resize(at(nx * ny));
    for (int k = 0; k < ny; ++k) {
        Conserved2D prev{};
        for (int i = 0; i <= nx; ++i) {
            const auto f = iv.xface(i, k);
            Conserved2D flux;
            try {
                const auto wm = primitive_from_conserved(iv.x_minus[f], gas, &guard);
                const auto wp = primitive_from_conserved(iv.x_plus[f], gas, &guard);
                LocalSpeeds s;
                flux = ldcu_flux_2d(iv.x_minus[f], iv.x_plus[f], wm, wp, gas, Direction::X, scheme.q2d, s);
                speeds.x = std::max({speeds.x, s.a_plus, -s.a_minus});
            } catch (const SolverError& e) {
                rethrow_at_face(e, "x", i, k);
            }
            if (i > 0) dudt[at(k * nx + i - 1)] = -idx * (flux - prev);
            prev = flux;
        }
    }

    std::vector<Conserved2D> below(static_cast<std::size_t>(nx));
    for (int i = 0; i <= ny; ++i)
        for (int j = 0; j < nx; ++j) {
            const auto f = iv.yface(j, i);
            Conserved2D flux;
            try {
                const auto wm = primitive_from_conserved(iv.y_minus[f], gas, &guard);
                const auto wp = primitive_from_conserved(iv.y_plus[f], gas, &guard);
                LocalSpeeds s;
                flux = ldcu_flux_2d(iv.y_minus[f], iv.y_plus[f], wm, wp, gas, Direction::Y, scheme.q2d, s);
                speeds.y = std::max({speeds.y, s.a_plus, -s.a_minus});
            } catch (const SolverError& e) {
                rethrow_at_face(e, "y", j, i);
            }
            if (i > 0) {
                const int k = i - 1;
                Conserved2D& d = dudt[at(k * nx + j)];
                d = d + -idy * (flux - below[static_cast<std::size_t>(j)]);
                if (scheme.gravity) {
                    const auto& u = field(j, k);
                    d[2] += u[0];
                    d[3] += u[2];
                }
            }
            below[static_cast<std::size_t>(j)] = flux;
        }
    return speeds;
}

WaveSpeeds max_wave_speeds(const Field1D& field, const GasModel& gas)
{
    WaveSpeeds s;
    for (int i = 0; i <= field.nx(); ++i) {
        const auto ls = local_speeds(field[i - 1], field[i], gas);
        s.x = std::max({s.x, ls.a_plus, -ls.a_minus});
    }
    return s;
}

WaveSpeeds max_wave_speeds(const Field2D& field, const GasModel& gas)
{
    WaveSpeeds s;
    for (int k = 0; k < field.ny(); ++k)
        for (int i = 0; i <= field.nx(); ++i) {
            const auto ls = local_speeds(field(i - 1, k), field(i, k), gas, Direction::X);
            s.x = std::max({s.x, ls.a_plus, -ls.a_minus});
        }
    for (int i = 0; i <= field.ny(); ++i)
        for (int j = 0; j < field.nx(); ++j) {
            const auto ls = local_speeds(field(j, i - 1), field(j, i), gas, Direction::Y);
            s.y = std::max({s.y, ls.a_plus, -ls.a_minus});
        }
    return s;
}

double cfl_dt(const WaveSpeeds& s, double cfl, double dx, double dy, double t, double t_end)
{
    const double remainder = t_end - t;
    double dt = remainder;
    if (s.x > 0.0) dt = std::min(dt, cfl * dx / s.x);
    if (dy > 0.0 && s.y > 0.0) dt = std::min(dt, cfl * dy / s.y);
    return dt;
}

void rk_combine(Field1D& out, const Field1D& in, const Field1D& u0, const std::vector<Conserved1D>& l,
                double a, double b, double dt)
{
    for (int j = 0; j < in.nx(); ++j) {
        const auto& x = in[j];
        const auto& x0 = u0[j];
        const auto& d = l[at(j)];
        auto& y = out[j];
        for (std::size_t c = 0; c < 3; ++c) y[c] = a * x0[c] + b * (x[c] + dt * d[c]);
    }
}

void rk_combine(Field2D& out, const Field2D& in, const Field2D& u0, const std::vector<Conserved2D>& l,
                double a, double b, double dt)
{
    const int nx = in.nx();
    for (int k = 0; k < in.ny(); ++k)
        for (int j = 0; j < nx; ++j) {
            const auto& x = in(j, k);
            const auto& x0 = u0(j, k);
            const auto& d = l[at(k * nx + j)];
            auto& y = out(j, k);
            for (std::size_t c = 0; c < 4; ++c) y[c] = a * x0[c] + b * (x[c] + dt * d[c]);
        }
}

void rk_combine(Field1D& u, const Field1D& u0, const std::vector<Conserved1D>& l, double a,
                double b, double dt)
{
    rk_combine(u, u, u0, l, a, b, dt);
}

void rk_combine(Field2D& u, const Field2D& u0, const std::vector<Conserved2D>& l, double a,
                double b, double dt)
{
    rk_combine(u, u, u0, l, a, b, dt);
}

void enforce_symmetry_diagonal(Field2D& field)
{
    const int n = field.nx();
    if (n != field.ny() || field.grid().dx() != field.grid().dy())
        throw SolverError(ErrorKind::NonSquareGrid, "diagonal symmetry needs nx == ny and dx == dy");
    const Field2D old = field;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            const auto& a = old(j, k);
            const auto& t = old(k, j);
            field(j, k) = {(a[0] + t[0]) / 2.0, (a[1] + t[2]) / 2.0, (a[2] + t[1]) / 2.0,
                           (a[3] + t[3]) / 2.0};
        }
}

void enforce_symmetry_mirror(Field2D& field)
{
    const int nx = field.nx();
    if (nx % 2 != 0) {
        std::ostringstream os;
        os << "mirror symmetry needs an even nx, got " << nx;
        throw SolverError(ErrorKind::OddCellCount, os.str());
    }
    const Field2D old = field;
    for (int k = 0; k < field.ny(); ++k)
        for (int j = 0; j < nx; ++j) {
            const auto& a = old(j, k);
            const auto& m = old(nx - 1 - j, k);
            field(j, k) = {(a[0] + m[0]) / 2.0, (a[1] - m[1]) / 2.0, (a[2] + m[2]) / 2.0,
                           (a[3] + m[3]) / 2.0};
        }
}

} // namespace ldcu

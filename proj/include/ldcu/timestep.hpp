#pragma once

// Semi-discrete right-hand sides, boundary conditions, CFL control, the
// three-stage SSP Runge-Kutta integrator and symmetry enforcement.

#include <type_traits>
#include <vector>

#include "ldcu/field.hpp"
#include "ldcu/flux.hpp"
#include "ldcu/reconstruct.hpp"

namespace ldcu {

// Free copies the nearest interior cell, SolidWall mirrors with the normal
// momentum negated, Dirichlet writes the prescribed state. In 2-D the y sides
// are filled first, then the x sides over full columns, so corner ghosts
// are defined.
void fill_ghosts(Field1D& field, const BoundarySpec& bc, const GasModel& gas);
void fill_ghosts(Field2D& field, const BoundarySpec& bc, const GasModel& gas);

// Limiters and switches that define the spatial operator.
struct SpatialScheme {
    LimiterParams rough = kOvercompressive;
    LimiterParams smooth = kMinmod2;
    bool first_order = false; // zero slopes; test knob
    AntiDiffusion2D q2d = AntiDiffusion2D::Analog;
    bool gravity = false; // 2-D source (0, 0, rho, rho*v)
};

struct WaveSpeeds {
    double x = 0.0; // max over x-faces of max(a+, -a-)
    double y = 0.0;
};

// dU/dt for every interior cell (index j, or k*nx + j in 2-D). Ghosts must be
// filled. Returns the extreme local speeds met on the faces; `faces`, when
// given, receives the reconstructed point values.
WaveSpeeds rhs_1d(const Field1D& field, const GasModel& gas, const RoughnessFlags1D& flags,
                  const SpatialScheme& scheme, PositivityGuard& guard, std::vector<Conserved1D>& dudt,
                  InterfaceValues1D* faces = nullptr);

WaveSpeeds rhs_2d(const Field2D& field, const GasModel& gas, const RoughnessFlags2D& flags,
                  const SpatialScheme& scheme, PositivityGuard& guard, std::vector<Conserved2D>& dudt,
                  InterfaceValues2D* faces = nullptr);

// Local speeds from adjacent cell-average pairs (ghosts filled).
WaveSpeeds max_wave_speeds(const Field1D& field, const GasModel& gas);
WaveSpeeds max_wave_speeds(const Field2D& field, const GasModel& gas);

// dt = cfl * min(dx / s.x, dy / s.y) (1-D: pass dy <= 0), clipped so that
// t + dt does not pass t_end. With no wave motion the whole remainder is taken.
double cfl_dt(const WaveSpeeds& s, double cfl, double dx, double dy, double t, double t_end);

// --- SSP-RK3 -----------------------------------------------------------------------

// out <- a*u0 + b*(in + dt*l) over interior cells; out may alias in.
void rk_combine(Field1D& out, const Field1D& in, const Field1D& u0, const std::vector<Conserved1D>& l,
                double a, double b, double dt);
void rk_combine(Field2D& out, const Field2D& in, const Field2D& u0, const std::vector<Conserved2D>& l,
                double a, double b, double dt);
// u <- a*u0 + b*(u + dt*l) over interior cells.
void rk_combine(Field1D& u, const Field1D& u0, const std::vector<Conserved1D>& l, double a,
                double b, double dt);
void rk_combine(Field2D& u, const Field2D& u0, const std::vector<Conserved2D>& l, double a,
                double b, double dt);

// Shu-Osher stages starting from an already evaluated L(u^n):
//   u1 = u^n + dt L(u^n); u2 = 3/4 u^n + 1/4 (u1 + dt L(u1));
//   u^{n+1} = 1/3 u^n + 2/3 (u2 + dt L(u2)).
// `rhs(u, l)` evaluates L; `after_stage(u, stage)` runs after each stage is
// formed (validation and ghost refill) with stage = 1, 2, 3.
template <class FieldT, class Deriv, class RhsFn, class AfterStageFn>
void ssprk3_from_first_stage(FieldT& u, const Deriv& l0, double dt, RhsFn&& rhs,
                             AfterStageFn&& after_stage)
{
    const FieldT u0 = u;
    rk_combine(u, u0, l0, 0.0, 1.0, dt);
    after_stage(u, 1);

    Deriv l;
    rhs(u, l);
    rk_combine(u, u0, l, 0.75, 0.25, dt);
    after_stage(u, 2);

    rhs(u, l);
    rk_combine(u, u0, l, 1.0 / 3.0, 2.0 / 3.0, dt);
    after_stage(u, 3);
}

template <class FieldT, class RhsFn, class AfterStageFn>
void ssprk3_step(FieldT& u, double dt, RhsFn&& rhs, AfterStageFn&& after_stage)
{
    using Deriv = std::vector<std::remove_cvref_t<decltype(u.storage().front())>>;
    Deriv l0;
    rhs(u, l0);
    ssprk3_from_first_stage(u, l0, dt, rhs, after_stage);
}

// --- symmetry enforcement ------------------------------------------------------------

// Averages with the transpose: rho, E symmetric; rho*u paired with rho*v.
// Throws NonSquareGrid unless nx == ny and dx == dy.
void enforce_symmetry_diagonal(Field2D& field);

// Mirror about the vertical centre line: cell j pairs with nx-1-j (the
// 1-based pairing j <-> M+1-j). rho, rho*v, E symmetric, rho*u antisymmetric.
// Throws OddCellCount for odd nx.
void enforce_symmetry_mirror(Field2D& field);

} // namespace ldcu

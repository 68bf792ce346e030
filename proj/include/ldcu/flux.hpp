#pragma once

// Low-dissipation central-upwind numerical fluxes: one-sided local speeds, the
// intermediate state U*, and the built-in anti-diffusion term.

#include <algorithm>
#include <cmath>

#include "ldcu/euler.hpp"
#include "ldcu/reconstruct.hpp"

namespace ldcu {

struct LocalSpeeds {
    double a_plus = 0.0;  // >= 0
    double a_minus = 0.0; // <= 0
};

// How the 2-D anti-diffusion is built: the dimension-by-dimension analogue of
// the 1-D term, or none (classical central-upwind flux).
enum class AntiDiffusion2D { Analog, Zero };

inline constexpr double kSpeedGapTol = 1e-12;

inline LocalSpeeds local_speeds(const Primitive1D& wm, const Primitive1D& wp, const GasModel& gas)
{
    const double cm = sound_speed(wm.rho, wm.p, gas);
    const double cp = sound_speed(wp.rho, wp.p, gas);
    return {std::max({wp.u + cp, wm.u + cm, 0.0}), std::min({wp.u - cp, wm.u - cm, 0.0})};
}

inline LocalSpeeds local_speeds(const Primitive2D& wm, const Primitive2D& wp, const GasModel& gas,
                                Direction dir)
{
    const double cm = sound_speed(wm.rho, wm.p, gas);
    const double cp = sound_speed(wp.rho, wp.p, gas);
    const double um = dir == Direction::X ? wm.u : wm.v;
    const double up = dir == Direction::X ? wp.u : wp.v;
    return {std::max({up + cp, um + cm, 0.0}), std::min({up - cp, um - cm, 0.0})};
}

LocalSpeeds local_speeds(const Conserved1D& um, const Conserved1D& up, const GasModel& gas);
LocalSpeeds local_speeds(const Conserved2D& um, const Conserved2D& up, const GasModel& gas,
                         Direction dir);

// True when a+ - a- is too small to divide by; c_ref is the sound speed of the
// average state.
inline bool speed_gap_vanishes(const LocalSpeeds& s, double c_ref)
{
    return s.a_plus - s.a_minus <= kSpeedGapTol * (std::fabs(s.a_plus) + std::fabs(s.a_minus) + c_ref);
}

[[noreturn]] void throw_zero_speed_gap(const LocalSpeeds& s);
[[noreturn]] void throw_star_density(double rho_star);

// U* = [a+ U+ - a- U- - (F(U+) - F(U-))] / (a+ - a-)
template <std::size_t N>
Vec<N> intermediate_state(const Vec<N>& um, const Vec<N>& up, const Vec<N>& fm, const Vec<N>& fp,
                          const LocalSpeeds& s, double c_ref = 0.0)
{
    if (speed_gap_vanishes(s, c_ref)) throw_zero_speed_gap(s);
    const double inv = 1.0 / (s.a_plus - s.a_minus);
    Vec<N> star{};
    for (std::size_t i = 0; i < N; ++i)
        star[i] = (s.a_plus * up[i] - s.a_minus * um[i] - (fp[i] - fm[i])) * inv;
    return star;
}

// minmod(-a-(rho* - rho-), a+(rho+ - rho*)) * (1, u*, (u*)^2/2)
inline Conserved1D antidiffusion_1d(const Conserved1D& um, const Conserved1D& up,
                                    const Conserved1D& star, const LocalSpeeds& s)
{
    if (!(star[0] > 0.0)) throw_star_density(star[0]);
    const double w = minmod(-s.a_minus * (star[0] - um[0]), s.a_plus * (up[0] - star[0]));
    const double us = star[1] / star[0];
    return {w, w * us, w * 0.5 * us * us};
}

// Dimension-by-dimension analogue: minmod weight from the density jump across
// the interface normal to `dir`, times (1, u*, v*, (u*^2 + v*^2)/2).
inline Conserved2D antidiffusion_2d(const Conserved2D& um, const Conserved2D& up,
                                    const Conserved2D& star, const LocalSpeeds& s)
{
    if (!(star[0] > 0.0)) throw_star_density(star[0]);
    const double w = minmod(-s.a_minus * (star[0] - um[0]), s.a_plus * (up[0] - star[0]));
    const double us = star[1] / star[0];
    const double vs = star[2] / star[0];
    return {w, w * us, w * vs, w * 0.5 * (us * us + vs * vs)};
}

// Flux from primitive states already computed by the caller; `speeds` receives
// the local speeds used.
Conserved1D ldcu_flux_1d(const Conserved1D& um, const Conserved1D& up, const Primitive1D& wm,
                         const Primitive1D& wp, const GasModel& gas, LocalSpeeds& speeds);

Conserved2D ldcu_flux_2d(const Conserved2D& um, const Conserved2D& up, const Primitive2D& wm,
                         const Primitive2D& wp, const GasModel& gas, Direction dir,
                         AntiDiffusion2D q2d, LocalSpeeds& speeds);

Conserved1D ldcu_flux_1d(const Conserved1D& um, const Conserved1D& up, const GasModel& gas);
Conserved2D ldcu_flux_2d_x(const Conserved2D& um, const Conserved2D& up, const GasModel& gas,
                           AntiDiffusion2D q2d = AntiDiffusion2D::Analog);
Conserved2D ldcu_flux_2d_y(const Conserved2D& um, const Conserved2D& up, const GasModel& gas,
                           AntiDiffusion2D q2d = AntiDiffusion2D::Analog);

} // namespace ldcu

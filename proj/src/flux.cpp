#include "ldcu/flux.hpp"

#include <sstream>

namespace ldcu {

namespace {

template <std::size_t N>
double average_sound_speed(const Vec<N>& um, const Vec<N>& up, const GasModel& gas)
{
    const Vec<N> avg = 0.5 * (um + up);
    if (!(avg[0] > 0.0)) return 0.0;
    double ke = 0.0;
    for (std::size_t i = 1; i + 1 < N; ++i) ke += avg[i] * avg[i];
    const double p = (gas.gamma - 1.0) * (avg[N - 1] - 0.5 * ke / avg[0]);
    return p > 0.0 ? std::sqrt(gas.gamma * p / avg[0]) : 0.0;
}

// The gap test needs c_ref only when a+ - a- is already tiny.
template <std::size_t N>
bool gap_vanishes(const LocalSpeeds& s, const Vec<N>& um, const Vec<N>& up, const GasModel& gas)
{
    if (s.a_plus - s.a_minus > 1e-8) return false;
    return speed_gap_vanishes(s, average_sound_speed(um, up, gas));
}

// Central-upwind part shared by both dimensions: diffusion term oriented as
// a+a-/(a+ - a-) (U+ - U-), which is dissipative since a+a- <= 0.
template <std::size_t N>
Vec<N> central_upwind(const Vec<N>& um, const Vec<N>& up, const Vec<N>& fm, const Vec<N>& fp,
                      const LocalSpeeds& s)
{
    const double inv = 1.0 / (s.a_plus - s.a_minus);
    const double diff = s.a_plus * s.a_minus * inv;
    Vec<N> f{};
    for (std::size_t i = 0; i < N; ++i)
        f[i] = (s.a_plus * fm[i] - s.a_minus * fp[i]) * inv + diff * (up[i] - um[i]);
    return f;
}

} // namespace

void throw_zero_speed_gap(const LocalSpeeds& s)
{
    std::ostringstream os;
    os << "a+ - a- vanishes (a+=" << s.a_plus << ", a-=" << s.a_minus << ")";
    throw SolverError(ErrorKind::ZeroSpeedGap, os.str());
}

void throw_star_density(double rho_star)
{
    std::ostringstream os;
    os << "intermediate density " << rho_star << " is not positive";
    throw SolverError(ErrorKind::NonPositiveStarDensity, os.str());
}

LocalSpeeds local_speeds(const Conserved1D& um, const Conserved1D& up, const GasModel& gas)
{
    return local_speeds(primitive_from_conserved(um, gas), primitive_from_conserved(up, gas), gas);
}

LocalSpeeds local_speeds(const Conserved2D& um, const Conserved2D& up, const GasModel& gas,
                         Direction dir)
{
    return local_speeds(primitive_from_conserved(um, gas), primitive_from_conserved(up, gas), gas,
                        dir);
}

Conserved1D ldcu_flux_1d(const Conserved1D& um, const Conserved1D& up, const Primitive1D& wm,
                         const Primitive1D& wp, const GasModel& gas, LocalSpeeds& speeds)
{
    speeds = local_speeds(wm, wp, gas);
    const Conserved1D fm = physical_flux(um, wm);
    const Conserved1D fp = physical_flux(up, wp);
    if (gap_vanishes(speeds, um, up, gas)) return 0.5 * (fm + fp);

    const Conserved1D f = central_upwind(um, up, fm, fp, speeds);
    const Conserved1D star = intermediate_state(um, up, fm, fp, speeds);
    return f + antidiffusion_1d(um, up, star, speeds);
}

Conserved2D ldcu_flux_2d(const Conserved2D& um, const Conserved2D& up, const Primitive2D& wm,
                         const Primitive2D& wp, const GasModel& gas, Direction dir,
                         AntiDiffusion2D q2d, LocalSpeeds& speeds)
{
    speeds = local_speeds(wm, wp, gas, dir);
    const Conserved2D fm = physical_flux(um, wm, dir);
    const Conserved2D fp = physical_flux(up, wp, dir);
    if (gap_vanishes(speeds, um, up, gas)) return 0.5 * (fm + fp);

    const Conserved2D f = central_upwind(um, up, fm, fp, speeds);
    if (q2d == AntiDiffusion2D::Zero) return f;
    const Conserved2D star = intermediate_state(um, up, fm, fp, speeds);
    return f + antidiffusion_2d(um, up, star, speeds);
}

Conserved1D ldcu_flux_1d(const Conserved1D& um, const Conserved1D& up, const GasModel& gas)
{
    LocalSpeeds s;
    return ldcu_flux_1d(um, up, primitive_from_conserved(um, gas), primitive_from_conserved(up, gas),
                        gas, s);
}

Conserved2D ldcu_flux_2d_x(const Conserved2D& um, const Conserved2D& up, const GasModel& gas,
                           AntiDiffusion2D q2d)
{
    LocalSpeeds s;
    return ldcu_flux_2d(um, up, primitive_from_conserved(um, gas), primitive_from_conserved(up, gas),
                        gas, Direction::X, q2d, s);
}

Conserved2D ldcu_flux_2d_y(const Conserved2D& um, const Conserved2D& up, const GasModel& gas,
                           AntiDiffusion2D q2d)
{
    LocalSpeeds s;
    return ldcu_flux_2d(um, up, primitive_from_conserved(um, gas), primitive_from_conserved(up, gas),
                        gas, Direction::Y, q2d, s);
}

} // namespace ldcu

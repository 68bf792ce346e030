#include "ldcu/solver.hpp"

#include <algorithm>
#include <sstream>

namespace ldcu {

namespace {

[[noreturn]] void invalid_config(std::string_view what, std::string_view value)
{
    std::ostringstream os;
    os << "unknown " << what << " '" << value << "'";
    throw SolverError(ErrorKind::InvalidConfig, os.str());
}

[[noreturn]] void bad_stage_state(int stage, int j, int k, double t, const char* what, double value)
{
    std::ostringstream os;
    os << what << " " << value << " after RK stage " << stage << " in cell j=" << j;
    if (k >= 0) os << ", k=" << k;
    os << " (step from t=" << t << ")";
    throw SolverError(ErrorKind::InvalidStateAtStage, os.str());
}

// Checks one cell after an RK stage; in lenient mode a non-positive pressure
// is repaired by raising E to the floor pressure.
template <std::size_t N>
void admit_stage_cell(Vec<N>& u, const GasModel& gas, PositivityGuard& guard, int stage, int j, int k,
                      double t)
{
    if (!(u[0] > 0.0)) bad_stage_state(stage, j, k, t, "density", u[0]);
    double ke = 0.0;
    for (std::size_t c = 1; c + 1 < N; ++c) ke += u[c] * u[c];
    ke *= 0.5 / u[0];
    const double p = (gas.gamma - 1.0) * (u[N - 1] - ke);
    if (p > 0.0) return;
    if (guard.strict()) bad_stage_state(stage, j, k, t, "pressure", p);
    u[N - 1] = guard.admit_pressure(p, "rk stage") / (gas.gamma - 1.0) + ke;
}

RoughnessFlags1D with_boundary(RoughnessFlags1D f, const BoundarySpec& bc)
{
    f.periodic = bc.left.kind == BoundaryKind::Periodic;
    return f;
}

RoughnessFlags2D with_boundary(RoughnessFlags2D f, const BoundarySpec& bc)
{
    f.periodic_x = bc.left.kind == BoundaryKind::Periodic;
    f.periodic_y = bc.bottom.kind == BoundaryKind::Periodic;
    return f;
}

double land_on(double t, double dt, double t_end) { return dt >= t_end - t ? t_end : t + dt; }

template <std::size_t N>
bool cell_ok(const Vec<N>& u, const GasModel& gas)
{
    if (!(u[0] > 0.0)) return false;
    double ke = 0.0;
    for (std::size_t c = 1; c + 1 < N; ++c) ke += u[c] * u[c];
    return (gas.gamma - 1.0) * (u[N - 1] - 0.5 * ke / u[0]) > 0.0;
}

// Shu-Osher SSP-RK3 from an evaluated L(u^n). When a stage leaves a cell with
// rho <= 0 or p <= 0, `flatten` zeroes the slopes around the offending cells
// (returning false once nothing new can be flattened) and the stage is
// recomputed from the same input. `finish(u, stage)` validates and refills
// ghosts.
// u0, tmp and l are scratch storage kept by the caller between steps.
template <class FieldT, class Deriv, class Rhs, class BadCells, class Flatten, class Finish>
void ssprk3_with_fallback(FieldT& u, const Deriv& l0, double dt, FieldT& u0, FieldT& tmp, Deriv& l,
                          Rhs&& rhs, BadCells&& bad_cells, Flatten&& flatten, Finish&& finish)
{
    static constexpr double a[3] = {0.0, 0.75, 1.0 / 3.0};
    static constexpr double b[3] = {1.0, 0.25, 2.0 / 3.0};
    // stage inputs/outputs: u0 -> u -> tmp -> u
    u0 = u;
    tmp = u;
    const FieldT* ins[3] = {&u0, &u, &tmp};
    FieldT* outs[3] = {&u, &tmp, &u};
    l = l0;
    for (int stage = 0; stage < 3; ++stage) {
        const FieldT& in = *ins[stage];
        FieldT& out = *outs[stage];
        if (stage > 0) rhs(in, l);
        for (;;) {
            rk_combine(out, in, u0, l, a[stage], b[stage], dt);
            const auto bad = bad_cells(out);
            if (bad.empty() || !flatten(bad)) break;
            rhs(in, l);
        }
        finish(out, stage + 1);
    }
}

} // namespace

std::string_view to_string(Scheme s)
{
    switch (s) {
    case Scheme::Ldcu: return "ldcu";
    case Scheme::AdaptiveMM: return "a-mm";
    case Scheme::AdaptiveWLR: return "a-wlr";
    }
    return "?";
}

std::string_view to_string(SymmetryMode m)
{
    switch (m) {
    case SymmetryMode::None: return "none";
    case SymmetryMode::Diagonal: return "diagonal";
    case SymmetryMode::Mirror: return "mirror";
    }
    return "?";
}

std::string_view to_string(AntiDiffusion2D q)
{
    return q == AntiDiffusion2D::Analog ? "analog" : "zero";
}

std::string_view to_string(WlrPointValue w)
{
    switch (w) {
    case WlrPointValue::Minus: return "minus";
    case WlrPointValue::Plus: return "plus";
    case WlrPointValue::Average: return "average";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name)
{
    if (name == "ldcu") return Scheme::Ldcu;
    if (name == "a-mm") return Scheme::AdaptiveMM;
    if (name == "a-wlr") return Scheme::AdaptiveWLR;
    invalid_config("scheme", name);
}

SymmetryMode parse_symmetry(std::string_view name)
{
    if (name == "none") return SymmetryMode::None;
    if (name == "diagonal") return SymmetryMode::Diagonal;
    if (name == "mirror") return SymmetryMode::Mirror;
    invalid_config("symmetry mode", name);
}

AntiDiffusion2D parse_q2d(std::string_view name)
{
    if (name == "analog") return AntiDiffusion2D::Analog;
    if (name == "zero") return AntiDiffusion2D::Zero;
    invalid_config("q2d mode", name);
}

WlrPointValue parse_wlr_point(std::string_view name)
{
    if (name == "minus") return WlrPointValue::Minus;
    if (name == "plus") return WlrPointValue::Plus;
    if (name == "average") return WlrPointValue::Average;
    invalid_config("WLR point value", name);
}

// --- 1-D ---------------------------------------------------------------------------

Solver1D::Solver1D(Field1D initial, const GasModel& gas, const BoundarySpec& bc,
                   const SolverConfig& cfg, double t0)
    : u_(std::move(initial)), gas_(gas), bc_(bc), cfg_(cfg), guard_(cfg.strict), t_(t0)
{
    if (!(cfg_.cfl > 0.0 && cfg_.cfl < 1.0))
        throw SolverError(ErrorKind::InvalidConfig, "cfl must lie in (0, 1)");
    if (cfg_.symmetry != SymmetryMode::None)
        throw SolverError(ErrorKind::InvalidConfig, "symmetry enforcement is 2-D only");
    flags_.rough.assign(static_cast<std::size_t>(u_.nx()), 0);
}

RoughnessFlags1D Solver1D::compute_flags()
{
    switch (cfg_.scheme) {
    case Scheme::AdaptiveMM: return mm_flags_1d(u_, cfg_.mm);
    case Scheme::AdaptiveWLR:
        if (hist_.complete()) {
            eps_bar_ = wlr_smooth_1d(wlr_residuals_1d(hist_, u_.grid().dx(), bc_), bc_);
            return wlr_flags_1d(eps_bar_, cfg_.wlr, u_.grid().dx());
        }
        break;
    case Scheme::Ldcu: break;
    }
    RoughnessFlags1D none;
    none.rough.assign(static_cast<std::size_t>(u_.nx()), 0);
    return none;
}

RoughnessFlags1D Solver1D::current_flags()
{
    fill_ghosts(u_, bc_, gas_);
    return with_boundary(compute_flags(), bc_);
}

void Solver1D::after_stage(Field1D& u, int stage)
{
    for (int j = 0; j < u.nx(); ++j) admit_stage_cell(u[j], gas_, guard_, stage, j, -1, t_);
    fill_ghosts(u, bc_, gas_);
}

StepRecord Solver1D::step(double t_end)
{
    fill_ghosts(u_, bc_, gas_);
    flags_ = with_boundary(compute_flags(), bc_);

    auto& l0 = work_.l0;
    const WaveSpeeds speeds = rhs_1d(u_, gas_, flags_, cfg_.spatial, guard_, l0, &work_.faces);
    if (cfg_.scheme == Scheme::AdaptiveWLR) {
        std::vector<double> rho, mom;
        wlr_samples(work_.faces, cfg_.wlr_point, rho, mom);
        hist_.push(std::move(rho), std::move(mom), t_);
    }

    dt_ = cfl_dt(speeds, cfg_.cfl, u_.grid().dx(), 0.0, t_, t_end);
    const int nx = u_.nx();
    auto rhs = [&](const Field1D& u, std::vector<Conserved1D>& l) {
        rhs_1d(u, gas_, flags_, cfg_.spatial, guard_, l, &work_.faces);
    };
    auto bad_cells = [&](const Field1D& u) {
        std::vector<int> bad;
        for (int j = 0; j < nx; ++j)
            if (!cell_ok(u[j], gas_)) bad.push_back(j);
        return bad;
    };
    auto flatten = [&](const std::vector<int>& bad) {
        if (!cfg_.positivity_fallback) return false;
        if (flags_.flat.empty()) flags_.flat.assign(static_cast<std::size_t>(nx), 0);
        bool changed = false;
        for (int j : bad)
            for (int m = std::max(j - 1, 0); m <= std::min(j + 1, nx - 1); ++m) {
                auto& f = flags_.flat[static_cast<std::size_t>(m)];
                if (!f) ++flattened_;
                changed = changed || !f;
                f = 1;
            }
        return changed;
    };
    auto finish = [&](Field1D& u, int stage) { after_stage(u, stage); };
    ssprk3_with_fallback(u_, l0, dt_, work_.u0, work_.tmp, work_.l, rhs, bad_cells, flatten, finish);

    t_ = land_on(t_, dt_, t_end);
    ++steps_;
    return {t_, dt_, flags_.count(), guard_.warnings(), flattened_};
}

void Solver1D::advance_to(double t_end, const std::function<void(const StepRecord&)>& on_step)
{
    while (t_ < t_end) {
        const StepRecord r = step(t_end);
        if (on_step) on_step(r);
    }
}

// --- 2-D ---------------------------------------------------------------------------

Solver2D::Solver2D(Field2D initial, const GasModel& gas, const BoundarySpec& bc,
                   const SolverConfig& cfg, double t0)
    : u_(std::move(initial)), gas_(gas), bc_(bc), cfg_(cfg), guard_(cfg.strict), t_(t0)
{
    if (!(cfg_.cfl > 0.0 && cfg_.cfl < 1.0))
        throw SolverError(ErrorKind::InvalidConfig, "cfl must lie in (0, 1)");
    flags_ = RoughnessFlags2D::none(u_.nx(), u_.ny());
    // Reject an unusable symmetry mode before any work is done.
    if (cfg_.symmetry == SymmetryMode::Diagonal) {
        Field2D probe = u_;
        enforce_symmetry_diagonal(probe);
    } else if (cfg_.symmetry == SymmetryMode::Mirror && u_.nx() % 2 != 0) {
        Field2D probe = u_;
        enforce_symmetry_mirror(probe);
    }
}

RoughnessFlags2D Solver2D::compute_flags()
{
    const double dx = u_.grid().dx();
    const double dy = u_.grid().dy();
    switch (cfg_.scheme) {
    case Scheme::AdaptiveMM: return mm_flags_2d(u_, cfg_.mm);
    case Scheme::AdaptiveWLR:
        if (hist_.complete()) {
            eps_bar_ = wlr_smooth_2d(wlr_residuals_2d(hist_, dx, dy, bc_), u_.nx(), u_.ny(), bc_);
            return wlr_flags_2d(eps_bar_, u_.nx(), u_.ny(), cfg_.wlr, dx, dy);
        } else {
            auto none = RoughnessFlags2D::none(u_.nx(), u_.ny());
            none.shared = true;
            return none;
        }
    case Scheme::Ldcu: break;
    }
    return RoughnessFlags2D::none(u_.nx(), u_.ny());
}

RoughnessFlags2D Solver2D::current_flags()
{
    fill_ghosts(u_, bc_, gas_);
    return with_boundary(compute_flags(), bc_);
}

void Solver2D::after_stage(Field2D& u, int stage)
{
    for (int k = 0; k < u.ny(); ++k)
        for (int j = 0; j < u.nx(); ++j) admit_stage_cell(u(j, k), gas_, guard_, stage, j, k, t_);
    fill_ghosts(u, bc_, gas_);
}

StepRecord Solver2D::step(double t_end)
{
    fill_ghosts(u_, bc_, gas_);
    flags_ = with_boundary(compute_flags(), bc_);
    if (cfg_.scheme == Scheme::AdaptiveWLR) hist_.push(corner_averages(u_), t_);

    auto& l0 = work_.l0;
    const WaveSpeeds speeds = rhs_2d(u_, gas_, flags_, cfg_.spatial, guard_, l0, &work_.faces);
    dt_ = cfl_dt(speeds, cfg_.cfl, u_.grid().dx(), u_.grid().dy(), t_, t_end);

    const int nx = u_.nx();
    const int ny = u_.ny();
    auto rhs = [&](const Field2D& u, std::vector<Conserved2D>& l) {
        rhs_2d(u, gas_, flags_, cfg_.spatial, guard_, l, &work_.faces);
    };
    auto bad_cells = [&](const Field2D& u) {
        std::vector<std::pair<int, int>> bad;
        for (int k = 0; k < ny; ++k)
            for (int j = 0; j < nx; ++j)
                if (!cell_ok(u(j, k), gas_)) bad.emplace_back(j, k);
        return bad;
    };
    auto flatten = [&](const std::vector<std::pair<int, int>>& bad) {
        if (!cfg_.positivity_fallback) return false;
        if (flags_.flat.empty()) flags_.flat.assign(static_cast<std::size_t>(nx * ny), 0);
        bool changed = false;
        for (const auto& [j, k] : bad)
            for (int kk = std::max(k - 1, 0); kk <= std::min(k + 1, ny - 1); ++kk)
                for (int jj = std::max(j - 1, 0); jj <= std::min(j + 1, nx - 1); ++jj) {
                    auto& f = flags_.flat[static_cast<std::size_t>(kk * nx + jj)];
                    if (!f) ++flattened_;
                    changed = changed || !f;
                    f = 1;
                }
        return changed;
    };
    auto finish = [&](Field2D& u, int stage) { after_stage(u, stage); };
    ssprk3_with_fallback(u_, l0, dt_, work_.u0, work_.tmp, work_.l, rhs, bad_cells, flatten, finish);

    if (cfg_.symmetry == SymmetryMode::Diagonal) enforce_symmetry_diagonal(u_);
    if (cfg_.symmetry == SymmetryMode::Mirror) enforce_symmetry_mirror(u_);

    t_ = land_on(t_, dt_, t_end);
    ++steps_;
    const long count = flags_.shared ? flags_.count_x() : flags_.count_x() + flags_.count_y();
    return {t_, dt_, count, guard_.warnings(), flattened_};
}

void Solver2D::advance_to(double t_end, const std::function<void(const StepRecord&)>& on_step)
{
    while (t_ < t_end) {
        const StepRecord r = step(t_end);
        if (on_step) on_step(r);
    }
}

} // namespace ldcu

#pragma once

// Time loops for the LDCU, A-MM and A-WLR schemes in 1-D and 2-D.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ldcu/indicators.hpp"
#include "ldcu/timestep.hpp"

namespace ldcu {

// Ldcu runs Minmod2 everywhere; the adaptive schemes switch to the rough
// limiter on flagged cells.
enum class Scheme { Ldcu, AdaptiveMM, AdaptiveWLR };
enum class SymmetryMode { None, Diagonal, Mirror };

std::string_view to_string(Scheme s);        // "ldcu", "a-mm", "a-wlr"
std::string_view to_string(SymmetryMode m);  // "none", "diagonal", "mirror"
std::string_view to_string(AntiDiffusion2D q);
std::string_view to_string(WlrPointValue w);
Scheme parse_scheme(std::string_view name); // throws InvalidConfig
SymmetryMode parse_symmetry(std::string_view name);
AntiDiffusion2D parse_q2d(std::string_view name);
WlrPointValue parse_wlr_point(std::string_view name);

struct SolverConfig {
    Scheme scheme = Scheme::Ldcu;
    SpatialScheme spatial{};
    MMConfig mm{};
    WLRConfig wlr{};
    WlrPointValue wlr_point = WlrPointValue::Minus;
    double cfl = 0.4;
    bool strict = true;
    // Recompute a stage with zero slopes around cells it left with rho <= 0
    // or p <= 0 before reporting a positivity failure.
    bool positivity_fallback = true;
    SymmetryMode symmetry = SymmetryMode::None;
};

struct StepRecord {
    double t = 0.0;  // time reached by the step
    double dt = 0.0;
    long flags_count = 0; // rough cells (2-D MM: x and y flags summed)
    long warnings = 0;    // cumulative lenient-mode pressure floors
    long flattened = 0;   // cumulative cells given zero slopes by the positivity fallback
};

class Solver1D {
public:
    Solver1D(Field1D initial, const GasModel& gas, const BoundarySpec& bc, const SolverConfig& cfg,
             double t0 = 0.0);

    // One SSP-RK3 step, clipped so that time() does not pass t_end.
    StepRecord step(double t_end);
    // Steps until t_end; `on_step` sees every record.
    void advance_to(double t_end, const std::function<void(const StepRecord&)>& on_step = {});

    const Field1D& field() const { return u_; }
    double time() const { return t_; }
    long steps() const { return steps_; }
    long warnings() const { return guard_.warnings(); }
    long flattened() const { return flattened_; }
    const GasModel& gas() const { return gas_; }
    const SolverConfig& config() const { return cfg_; }

    // Flags used by the most recent step, or those the next step would use
    // before any step has run.
    const RoughnessFlags1D& flags() const { return flags_; }
    RoughnessFlags1D current_flags();
    // Smoothed residuals from the most recent WLR evaluation (empty before).
    const std::vector<double>& last_eps_bar() const { return eps_bar_; }
    const WlrHistory1D& history() const { return hist_; }

private:
    RoughnessFlags1D compute_flags();
    void after_stage(Field1D& u, int stage);

    struct Workspace {
        InterfaceValues1D faces;
        std::vector<Conserved1D> l0, l;
        Field1D u0, tmp;
    };

    Field1D u_;
    GasModel gas_;
    BoundarySpec bc_;
    SolverConfig cfg_;
    PositivityGuard guard_;
    WlrHistory1D hist_;
    RoughnessFlags1D flags_;
    std::vector<double> eps_bar_;
    double t_ = 0.0;
    double dt_ = 0.0; // step in progress, for diagnostics
    long steps_ = 0;
    long flattened_ = 0;
    Workspace work_;
};

class Solver2D {
public:
    Solver2D(Field2D initial, const GasModel& gas, const BoundarySpec& bc, const SolverConfig& cfg,
             double t0 = 0.0);

    StepRecord step(double t_end);
    void advance_to(double t_end, const std::function<void(const StepRecord&)>& on_step = {});

    const Field2D& field() const { return u_; }
    double time() const { return t_; }
    long steps() const { return steps_; }
    long warnings() const { return guard_.warnings(); }
    long flattened() const { return flattened_; }
    const GasModel& gas() const { return gas_; }
    const SolverConfig& config() const { return cfg_; }

    const RoughnessFlags2D& flags() const { return flags_; }
    RoughnessFlags2D current_flags();
    const std::vector<double>& last_eps_bar() const { return eps_bar_; }

private:
    RoughnessFlags2D compute_flags();
    void after_stage(Field2D& u, int stage);

    struct Workspace {
        InterfaceValues2D faces;
        std::vector<Conserved2D> l0, l;
        Field2D u0, tmp;
    };

    Field2D u_;
    GasModel gas_;
    BoundarySpec bc_;
    SolverConfig cfg_;
    PositivityGuard guard_;
    WlrHistory2D hist_;
    RoughnessFlags2D flags_;
    std::vector<double> eps_bar_;
    double t_ = 0.0;
    double dt_ = 0.0;
    long steps_ = 0;
    long flattened_ = 0;
    Workspace work_;
};

} // namespace ldcu

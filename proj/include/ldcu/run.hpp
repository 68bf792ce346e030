#pragma once

// Run driver shared by the CLI and the acceptance suite.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldcu/analysis.hpp"
#include "ldcu/problems.hpp"
#include "ldcu/snapshot.hpp"

namespace ldcu {

struct RunConfig {
    std::string problem = "sod";
    Scheme scheme = Scheme::Ldcu;
    int nx = 0; // 0: problem default
    int ny = 0;
    double cfl = 0.4;
    std::optional<double> C;     // WLR constant; default from the problem
    std::optional<double> delta; // MM threshold
    LimiterParams rough = kOvercompressive;
    LimiterParams smooth = kMinmod2;
    AntiDiffusion2D q2d = AntiDiffusion2D::Analog;
    WlrPointValue wlr_point = WlrPointValue::Minus;
    std::optional<SymmetryMode> symmetry; // default from the problem
    bool strict = true;
    bool first_order = false;
    bool positivity_fallback = true;
    std::optional<double> t_final;    // overrides the last snapshot time
    std::vector<double> snapshot_times; // empty: problem default
    std::filesystem::path output_dir;   // empty: keep snapshots in memory only
    unsigned seed = 0;                  // reserved; the solver is deterministic
};

// Applies key=value settings (config file or CLI) on top of `cfg`. Keys:
// problem, scheme, nx, ny, cfl, C, delta, theta_rough, tau_rough,
// theta_smooth, tau_smooth, q2d, wlr_point, symmetry, strict, first_order,
// positivity_fallback, t_final, snapshot_times (comma separated), output, seed.
// Unknown keys or bad values throw InvalidConfig.
void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& kv);

struct RunResult {
    std::vector<Snapshot> snapshots;
    std::vector<std::filesystem::path> files;
    long steps = 0;
    long warnings = 0;
    long flattened = 0;
    double wall_seconds = 0.0;
    double gamma = 1.4;
    SolverConfig solver; // as actually used
    int nx = 0, ny = 0;
};

// Runs to each snapshot time in turn. Adaptive schemes attach the flags the
// next step would use at that time. With output_dir set, writes one CSV per
// snapshot plus manifest.json.
RunResult run(const RunConfig& cfg);

// JSON manifest: every tunable, step count, wall time, warnings, files.
std::string manifest_json(const RunConfig& cfg, const RunResult& r);

// L1 density errors against the problem's exact density at t_final for each
// mesh, with observed orders. Throws InvalidConfig if the problem has none.
std::vector<ConvergenceRow> convergence_study(RunConfig cfg, const std::vector<int>& meshes);

} // namespace ldcu

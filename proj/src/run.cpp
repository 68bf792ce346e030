#include "ldcu/run.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ldcu {

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value)
{
    throw SolverError(ErrorKind::InvalidConfig, "bad value '" + value + "' for key '" + key + "'");
}

double parse_double(const std::string& key, const std::string& s)
{
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) bad_value(key, s);
    return v;
}

int parse_int(const std::string& key, const std::string& s)
{
    int v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) bad_value(key, s);
    return v;
}

bool parse_bool(const std::string& key, const std::string& s)
{
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    bad_value(key, s);
}

std::vector<double> parse_times(const std::string& key, const std::string& s)
{
    std::vector<double> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    return out;
}

std::string snapshot_name(const std::string& problem, Scheme scheme, double t)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "_t%.6g.csv", t);
    return problem + "_" + std::string(to_string(scheme)) + buf;
}

std::vector<double> resolve_times(const RunConfig& cfg, const ProblemSpec& p)
{
    std::vector<double> times = cfg.snapshot_times.empty() ? p.snapshot_times : cfg.snapshot_times;
    if (cfg.t_final) {
        std::erase_if(times, [&](double t) { return t > *cfg.t_final; });
        if (times.empty() || times.back() != *cfg.t_final) times.push_back(*cfg.t_final);
    }
    std::sort(times.begin(), times.end());
    if (times.empty() || times.front() < 0.0) throw SolverError(ErrorKind::InvalidConfig, "no valid snapshot times");
    return times;
}

template <class Solver, class Flags>
Snapshot capture(Solver& solver, const std::string& problem, Scheme scheme)
{
    if (scheme == Scheme::Ldcu)
        return make_snapshot(solver.field(), solver.gas(), problem, std::string(to_string(scheme)), solver.time());
    const Flags flags = solver.current_flags();
    return make_snapshot(solver.field(), solver.gas(), problem, std::string(to_string(scheme)), solver.time(),
                         &flags);
}

} // namespace

void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& kv)
{
    for (const auto& [key, value] : kv) {
        if (key == "problem") cfg.problem = value;
        else if (key == "scheme") cfg.scheme = parse_scheme(value);
        else if (key == "nx") cfg.nx = parse_int(key, value);
        else if (key == "ny") cfg.ny = parse_int(key, value);
        else if (key == "cfl") cfg.cfl = parse_double(key, value);
        else if (key == "C") cfg.C = parse_double(key, value);
        else if (key == "delta") cfg.delta = parse_double(key, value);
        else if (key == "theta_rough") cfg.rough = make_limiter(parse_double(key, value), cfg.rough.tau);
        else if (key == "tau_rough") cfg.rough.tau = parse_double(key, value);
        else if (key == "theta_smooth") cfg.smooth = make_limiter(parse_double(key, value), cfg.smooth.tau);
        else if (key == "tau_smooth") cfg.smooth.tau = parse_double(key, value);
        else if (key == "q2d") cfg.q2d = parse_q2d(value);
        else if (key == "wlr_point") cfg.wlr_point = parse_wlr_point(value);
        else if (key == "symmetry") cfg.symmetry = parse_symmetry(value);
        else if (key == "strict") cfg.strict = parse_bool(key, value);
        else if (key == "first_order") cfg.first_order = parse_bool(key, value);
        else if (key == "positivity_fallback") cfg.positivity_fallback = parse_bool(key, value);
        else if (key == "t_final") cfg.t_final = parse_double(key, value);
        else if (key == "snapshot_times") cfg.snapshot_times = parse_times(key, value);
        else if (key == "output") cfg.output_dir = value;
        else if (key == "seed") cfg.seed = static_cast<unsigned>(parse_int(key, value));
        else throw SolverError(ErrorKind::InvalidConfig, "unknown key '" + key + "'");
    }
}

RunResult run(const RunConfig& cfg)
{
    const ProblemSpec p = build_problem(cfg.problem);
    const GasModel gas = make_gas(p.gamma);

    SolverConfig sc = default_config(p, cfg.scheme);
    sc.cfl = cfg.cfl;
    if (cfg.C) sc.wlr.C = *cfg.C;
    if (cfg.delta) sc.mm.delta = *cfg.delta;
    if (cfg.symmetry) sc.symmetry = *cfg.symmetry;
    sc.spatial.rough = cfg.rough;
    sc.spatial.smooth = cfg.smooth;
    sc.spatial.q2d = cfg.q2d;
    sc.spatial.first_order = cfg.first_order;
    sc.wlr_point = cfg.wlr_point;
    sc.strict = cfg.strict;
    sc.positivity_fallback = cfg.positivity_fallback;
    if (!(sc.wlr.C > 0.0)) throw SolverError(ErrorKind::InvalidConfig, "C must be positive");
    if (!(sc.mm.delta > 0.0)) throw SolverError(ErrorKind::InvalidConfig, "delta must be positive");
    make_limiter(sc.spatial.rough.theta, sc.spatial.rough.tau);
    make_limiter(sc.spatial.smooth.theta, sc.spatial.smooth.tau);

    const std::vector<double> times = resolve_times(cfg, p);
    if (!cfg.output_dir.empty()) std::filesystem::create_directories(cfg.output_dir);

    RunResult r;
    r.gamma = gas.gamma;
    r.solver = sc;
    const auto start = std::chrono::steady_clock::now();

    auto emit = [&](Snapshot s) {
        if (!cfg.output_dir.empty()) {
            const auto path = cfg.output_dir / snapshot_name(p.name, cfg.scheme, s.time);
            write_snapshot(path, s);
            r.files.push_back(path);
        }
        r.snapshots.push_back(std::move(s));
    };

    if (p.dim == 1) {
        r.nx = cfg.nx > 0 ? cfg.nx : p.nx;
        r.ny = 1;
        Solver1D solver(initial_field_1d(p, r.nx), gas, p.bc, sc);
        for (double t : times) {
            solver.advance_to(t);
            emit(capture<Solver1D, RoughnessFlags1D>(solver, p.name, cfg.scheme));
        }
        r.steps = solver.steps();
        r.warnings = solver.warnings();
        r.flattened = solver.flattened();
    } else {
        r.nx = cfg.nx > 0 ? cfg.nx : p.nx;
        r.ny = cfg.ny > 0 ? cfg.ny : (cfg.nx > 0 ? p.ny * cfg.nx / p.nx : p.ny);
        Solver2D solver(initial_field_2d(p, r.nx, r.ny), gas, p.bc, sc);
        for (double t : times) {
            solver.advance_to(t);
            emit(capture<Solver2D, RoughnessFlags2D>(solver, p.name, cfg.scheme));
        }
        r.steps = solver.steps();
        r.warnings = solver.warnings();
        r.flattened = solver.flattened();
    }
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!cfg.output_dir.empty()) {
        std::ofstream os(cfg.output_dir / "manifest.json");
        os << manifest_json(cfg, r) << '\n';
    }
    return r;
}

std::string manifest_json(const RunConfig& cfg, const RunResult& r)
{
    using nlohmann::json;
    const SolverConfig& s = r.solver;
    json files = json::array();
    for (const auto& f : r.files) files.push_back(f.filename().string());
    json times = json::array();
    for (const auto& snap : r.snapshots) times.push_back(snap.time);
    json m = {
        {"problem", cfg.problem},
        {"scheme", std::string(to_string(cfg.scheme))},
        {"nx", r.nx},
        {"ny", r.ny},
        {"gamma", r.gamma},
        {"cfl", s.cfl},
        {"delta", s.mm.delta},
        {"C", s.wlr.C},
        {"theta_rough", s.spatial.rough.theta},
        {"tau_rough", s.spatial.rough.tau},
        {"theta_smooth", s.spatial.smooth.theta},
        {"tau_smooth", s.spatial.smooth.tau},
        {"q2d", std::string(to_string(s.spatial.q2d))},
        {"wlr_point", std::string(to_string(s.wlr_point))},
        {"symmetry", std::string(to_string(s.symmetry))},
        {"gravity", s.spatial.gravity},
        {"strict", s.strict},
        {"first_order", s.spatial.first_order},
        {"seed", cfg.seed},
        {"snapshot_times", times},
        {"steps", r.steps},
        {"wall_seconds", r.wall_seconds},
        {"pressure_warnings", r.warnings},
        {"positivity_fallback", s.positivity_fallback},
        {"flattened_cells", r.flattened},
        {"files", files},
    };
    return m.dump(2);
}

std::vector<ConvergenceRow> convergence_study(RunConfig cfg, const std::vector<int>& meshes)
{
    const ProblemSpec p = build_problem(cfg.problem);
    if (!p.exact_density) throw SolverError(ErrorKind::InvalidConfig, cfg.problem + " has no exact solution");
    const double t = cfg.t_final.value_or(p.t_final);
    cfg.snapshot_times = {t};
    cfg.output_dir.clear();

    std::vector<double> errors;
    for (int n : meshes) {
        cfg.nx = n;
        const RunResult r = run(cfg);
        const Snapshot& s = r.snapshots.back();
        // exact cell averages by 4-point Gauss quadrature
        static constexpr double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                         0.8611363115940526};
        static constexpr double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                         0.3478548451374538};
        double e = 0.0;
        for (std::size_t c = 0; c < s.cells(); ++c) {
            double avg = 0.0;
            for (int q = 0; q < 4; ++q) avg += 0.5 * gw[q] * p.exact_density(s.x[c] + 0.5 * s.dx * gx[q], t);
            e += s.dx * std::fabs(s.rho[c] - avg);
        }
        errors.push_back(e);
    }
    return convergence_table(meshes, errors);
}

} // namespace ldcu

// ldcu: run benchmark problems and post-process snapshots.
//
//   ldcu run --problem example3 --scheme a-wlr --output out/
//   ldcu run --config run.cfg --set C=0.2
//   ldcu l1 coarse.csv fine.csv [--xmin -1 --xmax 0]
//   ldcu contact-width snap.csv --xmin 0.55 --xmax 0.65
//   ldcu convergence --problem smooth-advect --scheme ldcu --meshes 100,200,400
//   ldcu list

#include <cstdio>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "ldcu/run.hpp"

namespace {

void print_norms(const ldcu::L1Norms& n, bool two_d)
{
    std::printf("rho %.10e\nu   %.10e\n", n.rho, n.u);
    if (two_d) std::printf("v   %.10e\n", n.v);
    std::printf("p   %.10e\nE   %.10e\n", n.p, n.E);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Adaptive low-dissipation central-upwind Euler solver"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Run a catalogue problem and write snapshots");
    std::string config_path;
    std::vector<std::string> overrides;
    std::map<std::string, std::string> flags;
    run_cmd->add_option("--config", config_path, "key=value configuration file");
    run_cmd->add_option("--problem", flags["problem"], "problem name (see 'list')");
    run_cmd->add_option("--scheme", flags["scheme"], "ldcu, a-mm or a-wlr");
    run_cmd->add_option("--nx", flags["nx"], "cells in x");
    run_cmd->add_option("--ny", flags["ny"], "cells in y (2-D)");
    run_cmd->add_option("--cfl", flags["cfl"], "CFL number");
    run_cmd->add_option("--C", flags["C"], "WLR adaption constant");
    run_cmd->add_option("--delta", flags["delta"], "MM threshold");
    run_cmd->add_option("--q2d", flags["q2d"], "2-D anti-diffusion: analog or zero");
    run_cmd->add_option("--t-final", flags["t_final"], "final time");
    run_cmd->add_option("--snapshot-times", flags["snapshot_times"], "comma-separated output times");
    run_cmd->add_option("--output,-o", flags["output"], "output directory");
    run_cmd->add_option("--seed", flags["seed"], "reserved; runs are deterministic");
    bool lenient = false;
    run_cmd->add_flag("--lenient", lenient, "floor non-positive pressures instead of aborting");
    run_cmd->add_option("--set", overrides, "extra key=value settings, applied last");

    // l1
    auto* l1_cmd = app.add_subcommand("l1", "L1 distance between a snapshot and a finer one");
    std::string coarse_path, fine_path;
    std::optional<double> xmin, xmax;
    l1_cmd->add_option("coarse", coarse_path)->required()->check(CLI::ExistingFile);
    l1_cmd->add_option("fine", fine_path)->required()->check(CLI::ExistingFile);
    l1_cmd->add_option("--xmin", xmin);
    l1_cmd->add_option("--xmax", xmax);

    // contact-width
    auto* cw_cmd = app.add_subcommand("contact-width", "Cells across a monotone density jump");
    std::string snap_path;
    double cw_lo = 0.0, cw_hi = 0.0, frac_lo = 0.1, frac_hi = 0.9;
    cw_cmd->add_option("snapshot", snap_path)->required()->check(CLI::ExistingFile);
    cw_cmd->add_option("--xmin", cw_lo)->required();
    cw_cmd->add_option("--xmax", cw_hi)->required();
    cw_cmd->add_option("--low", frac_lo);
    cw_cmd->add_option("--high", frac_hi);

    // convergence
    auto* conv_cmd = app.add_subcommand("convergence", "L1 density errors and observed orders");
    std::string conv_problem = "smooth-advect", conv_scheme = "ldcu";
    std::vector<int> meshes = {100, 200, 400};
    bool conv_first_order = false;
    conv_cmd->add_option("--problem", conv_problem);
    conv_cmd->add_option("--scheme", conv_scheme);
    conv_cmd->add_option("--meshes", meshes)->delimiter(',');
    conv_cmd->add_flag("--first-order", conv_first_order, "zero slopes");

    app.add_subcommand("list", "List catalogue problems");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            ldcu::RunConfig cfg;
            if (!config_path.empty()) ldcu::apply_settings(cfg, ldcu::parse_key_values(config_path));
            std::map<std::string, std::string> given;
            for (const auto& [k, v] : flags)
                if (!v.empty()) given[k] = v;
            if (lenient) given["strict"] = "false";
            for (const auto& kv : overrides) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw ldcu::SolverError(ldcu::ErrorKind::InvalidConfig, "--set needs key=value");
                given[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            ldcu::apply_settings(cfg, given);
            const auto r = ldcu::run(cfg);
            if (cfg.output_dir.empty()) {
                for (const auto& s : r.snapshots) ldcu::write_snapshot(std::cout, s);
            } else {
                std::cout << ldcu::manifest_json(cfg, r) << '\n';
            }
        } else if (*l1_cmd) {
            const auto coarse = ldcu::read_snapshot(coarse_path);
            const auto fine = ldcu::read_snapshot(fine_path);
            std::optional<ldcu::XWindow> w;
            if (xmin || xmax) w = ldcu::XWindow{xmin.value_or(-1e300), xmax.value_or(1e300)};
            print_norms(ldcu::l1_error(coarse, fine, w), coarse.dim() == 2);
        } else if (*cw_cmd) {
            const auto s = ldcu::read_snapshot(snap_path);
            std::cout << ldcu::contact_width(s, {cw_lo, cw_hi}, frac_lo, frac_hi) << '\n';
        } else if (*conv_cmd) {
            ldcu::RunConfig cfg;
            cfg.problem = conv_problem;
            cfg.scheme = ldcu::parse_scheme(conv_scheme);
            cfg.first_order = conv_first_order;
            std::printf("%8s %14s %8s\n", "n", "L1(rho)", "order");
            for (const auto& row : ldcu::convergence_study(cfg, meshes))
                std::printf("%8d %14.6e %8.3f\n", row.n, row.error, row.order);
        } else {
            for (const auto& name : ldcu::problem_names()) {
                const auto p = ldcu::build_problem(name);
                std::printf("%-14s %dD  nx=%d", name.c_str(), p.dim, p.nx);
                if (p.dim == 2) std::printf(" ny=%d", p.ny);
                std::printf("  t=%g  C=%g\n", p.t_final, p.wlr.C);
            }
        }
    } catch (const ldcu::SolverError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

#include "ldcu/problems.hpp"

#include <cmath>
#include <numbers>

namespace ldcu {

namespace {

using std::numbers::pi;

Primitive2D state(double rho, double u, double v, double p) { return {rho, u, v, p}; }

ProblemSpec example1()
{
    ProblemSpec p;
    p.name = "example1";
    p.xmin = -10.0;
    p.xmax = 5.0;
    p.initial = [](double x, double) {
        if (x < -4.5) return state(1.51695, 0.523346, 0.0, 1.805);
        return state(1.0 + 0.1 * std::sin(20.0 * x), 0.0, 0.0, 1.0);
    };
    p.bc = BoundarySpec::all(BoundaryKind::Free);
    p.t_final = 5.0;
    p.nx = 1200; // dx = 1/80
    p.wlr.C = 0.1;
    return p;
}

ProblemSpec example2()
{
    ProblemSpec p;
    p.name = "example2";
    p.xmin = -5.0;
    p.xmax = 15.0;
    p.initial = [](double x, double) {
        if (x < -4.0) return state(27.0 / 7.0, 4.0 * std::sqrt(35.0) / 9.0, 0.0, 31.0 / 3.0);
        return state(1.0 + 0.2 * std::sin(5.0 * x), 0.0, 0.0, 1.0);
    };
    p.bc = BoundarySpec::all(BoundaryKind::Free);
    p.t_final = 5.0;
    p.nx = 800; // dx = 1/40
    p.wlr.C = 0.35;
    return p;
}

ProblemSpec example3()
{
    ProblemSpec p;
    p.name = "example3";
    p.initial = [](double x, double) {
        if (x < 0.1) return state(1.0, 0.0, 0.0, 1000.0);
        if (x <= 0.9) return state(1.0, 0.0, 0.0, 0.01);
        return state(1.0, 0.0, 0.0, 100.0);
    };
    p.bc = BoundarySpec::all(BoundaryKind::SolidWall);
    p.t_final = 0.038;
    p.nx = 400;
    p.wlr.C = 0.1;
    return p;
}

ProblemSpec example4()
{
    ProblemSpec p;
    p.name = "example4";
    p.dim = 2;
    p.xmax = p.ymax = 1.2;
    p.initial = [](double x, double y) {
        if (x > 1.0 && y > 1.0) return state(1.5, 0.0, 0.0, 1.5);
        if (x < 1.0 && y > 1.0) return state(0.5323, 1.206, 0.0, 0.3);
        if (x < 1.0 && y < 1.0) return state(0.138, 1.206, 1.206, 0.029);
        return state(0.5323, 0.0, 1.206, 0.3);
    };
    p.bc = BoundarySpec::all(BoundaryKind::Free);
    p.t_final = 1.0;
    p.nx = p.ny = 1000; // dx = 3/2500
    p.wlr.C = 4.0;
    return p;
}

ProblemSpec example5()
{
    ProblemSpec p;
    p.name = "example5";
    p.dim = 2;
    p.xmax = p.ymax = 0.5;
    p.initial = [](double x, double y) {
        if (std::fabs(x) + std::fabs(y) < 0.15) return state(0.125, 0.0, 0.0, 0.14);
        return state(1.0, 0.0, 0.0, 1.0);
    };
    p.bc = BoundarySpec::all(BoundaryKind::SolidWall);
    p.t_final = 2.5;
    p.nx = p.ny = 1000; // dx = 1/2000
    p.wlr.C = 5.0;
    p.symmetry = SymmetryMode::Diagonal;
    return p;
}

ProblemSpec example6()
{
    ProblemSpec p;
    p.name = "example6";
    p.dim = 2;
    p.xmax = 0.25;
    p.gamma = 5.0 / 3.0;
    p.initial = [gamma = p.gamma](double x, double y) {
        const bool lower = y < 0.5;
        const double rho = lower ? 2.0 : 1.0;
        const double pr = lower ? 2.0 * y + 1.0 : y + 1.5;
        const double c = std::sqrt(gamma * pr / rho);
        return state(rho, 0.0, -0.025 * c * std::cos(8.0 * pi * x), pr);
    };
    p.bc.left.kind = BoundaryKind::SolidWall;
    p.bc.right.kind = BoundaryKind::SolidWall;
    p.bc.bottom = {BoundaryKind::Dirichlet, state(2.0, 0.0, 0.0, 1.0)};
    p.bc.top = {BoundaryKind::Dirichlet, state(1.0, 0.0, 0.0, 2.5)};
    p.t_final = 2.95;
    p.nx = 256; // dx = dy = 1/1024
    p.ny = 1024;
    p.wlr.C = 3.0;
    p.symmetry = SymmetryMode::Mirror;
    p.gravity = true;
    p.snapshot_times = {1.95, 2.95};
    return p;
}

ProblemSpec sod()
{
    ProblemSpec p;
    p.name = "sod";
    p.initial = [](double x, double) {
        return x < 0.5 ? state(1.0, 0.0, 0.0, 1.0) : state(0.125, 0.0, 0.0, 0.1);
    };
    p.bc = BoundarySpec::all(BoundaryKind::Free);
    p.t_final = 0.2;
    p.nx = 400;
    p.wlr.C = 0.1;
    return p;
}

ProblemSpec smooth_advect()
{
    ProblemSpec p;
    p.name = "smooth-advect";
    p.initial = [](double x, double) { return state(1.0 + 0.5 * std::sin(2.0 * pi * x), 1.0, 0.0, 1.0); };
    p.exact_density = [](double x, double t) { return 1.0 + 0.5 * std::sin(2.0 * pi * (x - t)); };
    p.bc = BoundarySpec::all(BoundaryKind::Periodic);
    p.t_final = 1.0;
    p.nx = 200;
    p.wlr.C = 0.1;
    return p;
}

} // namespace

ProblemSpec build_problem(std::string_view name)
{
    ProblemSpec p;
    if (name == "example1") p = example1();
    else if (name == "example2") p = example2();
    else if (name == "example3") p = example3();
    else if (name == "example4") p = example4();
    else if (name == "example5") p = example5();
    else if (name == "example6") p = example6();
    else if (name == "sod") p = sod();
    else if (name == "smooth-advect") p = smooth_advect();
    else throw SolverError(ErrorKind::UnknownProblem, "no problem named '" + std::string(name) + "'");
    if (p.snapshot_times.empty()) p.snapshot_times = {p.t_final};
    return p;
}

std::vector<std::string> problem_names()
{
    return {"example1", "example2", "example3", "example4", "example5", "example6", "sod", "smooth-advect"};
}

Field1D initial_field_1d(const ProblemSpec& p, int nx)
{
    if (p.dim != 1) throw SolverError(ErrorKind::InvalidConfig, p.name + " is not a 1-D problem");
    if (nx < 8) throw SolverError(ErrorKind::InvalidConfig, "need at least 8 cells");
    const GasModel gas = make_gas(p.gamma);
    Field1D f(p.grid_1d(nx));
    for (int j = 0; j < nx; ++j) {
        const Primitive2D w = p.initial(f.grid().xc(j), 0.0);
        f[j] = conserved_from_primitive(Primitive1D{w.rho, w.u, w.p}, gas);
    }
    return f;
}

Field2D initial_field_2d(const ProblemSpec& p, int nx, int ny)
{
    if (p.dim != 2) throw SolverError(ErrorKind::InvalidConfig, p.name + " is not a 2-D problem");
    if (nx < 8 || ny < 8) throw SolverError(ErrorKind::InvalidConfig, "need at least 8 cells per dimension");
    const GasModel gas = make_gas(p.gamma);
    Field2D f(p.grid_2d(nx, ny));
    for (int k = 0; k < ny; ++k)
        for (int j = 0; j < nx; ++j) f(j, k) = conserved_from_primitive(p.initial(f.grid().xc(j), f.grid().yc(k)), gas);
    return f;
}

SolverConfig default_config(const ProblemSpec& p, Scheme scheme)
{
    SolverConfig cfg;
    cfg.scheme = scheme;
    cfg.mm = p.mm;
    cfg.wlr = p.wlr;
    cfg.symmetry = p.symmetry;
    cfg.spatial.gravity = p.gravity;
    return cfg;
}

} // namespace ldcu

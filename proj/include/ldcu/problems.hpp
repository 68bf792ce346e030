#pragma once

// Benchmark catalogue: example1..example6 plus the "sod" and "smooth-advect"
// verification problems.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ldcu/solver.hpp"

namespace ldcu {

struct ProblemSpec {
    std::string name;
    int dim = 1;
    double xmin = 0.0, xmax = 1.0;
    double ymin = 0.0, ymax = 1.0; // 2-D only
    double gamma = 1.4;
    // Pointwise primitive state; 1-D problems ignore y and return v = 0.
    std::function<Primitive2D(double x, double y)> initial;
    BoundarySpec bc;
    double t_final = 0.0;
    int nx = 0;
    int ny = 1;
    MMConfig mm{};
    WLRConfig wlr{};
    SymmetryMode symmetry = SymmetryMode::None;
    bool gravity = false;
    std::vector<double> snapshot_times;

    // Exact density for problems that have one (smooth-advect), else empty.
    std::function<double(double x, double t)> exact_density;

    Grid1D grid_1d(int n) const { return {n, xmin, xmax}; }
    Grid2D grid_2d(int n, int m) const { return {n, m, xmin, xmax, ymin, ymax}; }
};

ProblemSpec build_problem(std::string_view name); // throws UnknownProblem
std::vector<std::string> problem_names();

// Cell averages by midpoint evaluation of the pointwise state.
Field1D initial_field_1d(const ProblemSpec& p, int nx);
Field2D initial_field_2d(const ProblemSpec& p, int nx, int ny);

// Solver configuration seeded from the problem's defaults (SI constants,
// symmetry mode, gravity).
SolverConfig default_config(const ProblemSpec& p, Scheme scheme);

} // namespace ldcu

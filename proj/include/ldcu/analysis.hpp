#pragma once

// Post-processing on snapshots: L1 distances, contact width, convergence tables.

#include <functional>
#include <optional>
#include <vector>

#include "ldcu/snapshot.hpp"

namespace ldcu {

struct L1Norms {
    double rho = 0.0, u = 0.0, v = 0.0, p = 0.0, E = 0.0;
};

// Optional x-window [lo, hi]: only cells whose centre lies inside count.
struct XWindow {
    double lo, hi;
};

// Fine cells are averaged onto each coarse cell; the fine mesh must be an
// integer refinement of the coarse one over the same domain, otherwise
// IncompatibleMeshes. L1 = sum dx*|diff| (times dy in 2-D).
L1Norms l1_error(const Snapshot& coarse, const Snapshot& fine, std::optional<XWindow> window = {});

// Against a pointwise exact state evaluated at cell centres.
using ExactState = std::function<Primitive2D(double x, double y)>;
L1Norms l1_error(const Snapshot& coarse, const ExactState& exact, std::optional<XWindow> window = {});

// Cells spanned by the low..high fraction crossings of the density jump in
// the 1-D window: f = (rho - min)/(max - min), oriented to increase; width is
// (first index with f >= high) - (last index with f <= low). A sharp step
// gives 1. Throws NonMonotoneWindow if rho is constant or not monotone there.
int contact_width(const Snapshot& s, XWindow window, double low = 0.1, double high = 0.9);

struct ConvergenceRow {
    int n = 0;
    double error = 0.0;
    double order = 0.0; // vs the previous row; 0 for the first
};

// order_i = log(e_{i-1}/e_i) / log(n_i/n_{i-1}).
std::vector<ConvergenceRow> convergence_table(const std::vector<int>& meshes,
                                              const std::vector<double>& errors);

} // namespace ldcu

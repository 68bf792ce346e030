#pragma once

// Smoothness indicators that mark "rough" cells: the minmod-based indicator
// and the weak-local-residual (WLR) indicator, in 1-D and 2-D.

#include <span>
#include <vector>

#include "ldcu/field.hpp"

namespace ldcu {

struct MMConfig {
    double delta = 1e-4; // density jump below which differences are ignored
};

struct WLRConfig {
    double C = 0.1; // adaption constant in eps_bar > C * dx^2
};

// Which reconstructed point value at an interface feeds the 1-D residual.
enum class WlrPointValue { Minus, Plus, Average };

// --- minmod-based -------------------------------------------------------------

// rho_bar holds nx interior values plus kGhost ghosts on each side.
RoughnessFlags1D mm_flags_1d(std::span<const double> rho_bar, const MMConfig& cfg);
RoughnessFlags1D mm_flags_1d(const Field1D& field, const MMConfig& cfg);

// Dimension by dimension: x flags from s^x along rows, y flags from s^y along
// columns. Ghost layers must be filled.
RoughnessFlags2D mm_flags_2d(const Field2D& field, const MMConfig& cfg);

// --- weak local residuals, 1-D ------------------------------------------------------

// Interface (rho, rho*u) samples at the two previous time levels, nx+1 each.
class WlrHistory1D {
public:
    void push(std::vector<double> rho, std::vector<double> mom, double t);
    void clear() { levels_ = 0; }

    bool complete() const { return levels_ >= 2; }
    int levels() const { return levels_; }
    double dt_nm2() const { return t_nm1_ - t_nm2_; }

    const std::vector<double>& rho_nm1() const { return rho_nm1_; }
    const std::vector<double>& mom_nm1() const { return mom_nm1_; }
    const std::vector<double>& rho_nm2() const { return rho_nm2_; }
    const std::vector<double>& mom_nm2() const { return mom_nm2_; }

private:
    std::vector<double> rho_nm1_, mom_nm1_, rho_nm2_, mom_nm2_;
    double t_nm1_ = 0.0;
    double t_nm2_ = 0.0;
    int levels_ = 0;
};

// Samples (rho, rho*u) from the reconstructed interface values.
void wlr_samples(const InterfaceValues1D& iv, WlrPointValue which, std::vector<double>& rho,
                 std::vector<double>& mom);

// eps^{n-3/2} at every interface. The stencil reaches one ghost interface per
// side: wrapped when periodic, mirrored (momentum negated) at a solid wall,
// otherwise the nearest interface copied. Throws HistoryIncomplete.
std::vector<double> wlr_residuals_1d(const WlrHistory1D& hist, double dx, const BoundarySpec& bc = {});

// (eps_{i-1} + 4 eps_i + eps_{i+1}) / 6, ghost values as above.
std::vector<double> wlr_smooth_1d(std::span<const double> eps, const BoundarySpec& bc = {});

// Cell j (between interfaces j and j+1) is rough iff
// max(|eps_bar_j|, |eps_bar_{j+1}|) > C dx^2.
RoughnessFlags1D wlr_flags_1d(std::span<const double> eps_bar, const WLRConfig& cfg, double dx);

// --- weak local residuals, 2-D ------------------------------------------------------

// Values at cell corners: corner (a, b), a = 0..nx, b = 0..ny, sits at
// (x_{a-1/2}, y_{b-1/2}) and is stored at b*(nx+1) + a.
struct CornerValues {
    int nx = 0;
    int ny = 0;
    std::vector<double> rho, momx, momy;

    std::size_t index(int a, int b) const { return static_cast<std::size_t>(b * (nx + 1) + a); }
};

// Four-cell averages of the cell averages; ghosts, including corner ghosts,
// must be filled.
CornerValues corner_averages(const Field2D& field);

class WlrHistory2D {
public:
    void push(CornerValues values, double t);
    void clear() { levels_ = 0; }

    bool complete() const { return levels_ >= 2; }
    int levels() const { return levels_; }
    double dt_nm2() const { return t_nm1_ - t_nm2_; }

    const CornerValues& nm1() const { return nm1_; }
    const CornerValues& nm2() const { return nm2_; }

private:
    CornerValues nm1_, nm2_;
    double t_nm1_ = 0.0;
    double t_nm2_ = 0.0;
    int levels_ = 0;
};

// eps^{n-3/2} at every corner, (nx+1)*(ny+1) values in CornerValues order.
// Ghost corners follow the 1-D rule per direction.
std::vector<double> wlr_residuals_2d(const WlrHistory2D& hist, double dx, double dy,
                                     const BoundarySpec& bc = {});

// 1-4-16 weighted nine-point corner average (weights sum to 36).
std::vector<double> wlr_smooth_2d(std::span<const double> eps, int nx, int ny, const BoundarySpec& bc = {});

// Cell (j, k) is rough iff any of its four corners has |eps_bar| > C max(dx^2, dy^2).
RoughnessFlags2D wlr_flags_2d(std::span<const double> eps_bar, int nx, int ny,
                              const WLRConfig& cfg, double dx, double dy);

} // namespace ldcu

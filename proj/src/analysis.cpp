#include "ldcu/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ldcu {

namespace {

[[noreturn]] void incompatible(const std::string& what)
{
    throw SolverError(ErrorKind::IncompatibleMeshes, what);
}

bool inside(const std::optional<XWindow>& w, double x) { return !w || (x >= w->lo && x <= w->hi); }

double domain_lo(const std::vector<double>& c, double d) { return c.front() - 0.5 * d; }

bool close(double a, double b, double scale) { return std::fabs(a - b) <= 1e-9 * scale; }

} // namespace

L1Norms l1_error(const Snapshot& coarse, const Snapshot& fine, std::optional<XWindow> window)
{
    if (coarse.dim() != fine.dim()) incompatible("snapshots differ in dimension");
    if (coarse.cells() == 0 || fine.cells() == 0) incompatible("empty snapshot");
    if (fine.nx % coarse.nx != 0 || fine.ny % coarse.ny != 0) {
        std::ostringstream os;
        os << "fine mesh " << fine.nx << "x" << fine.ny << " does not refine " << coarse.nx << "x" << coarse.ny;
        incompatible(os.str());
    }
    const int rx = fine.nx / coarse.nx;
    const int ry = fine.ny / coarse.ny;
    const double xlen = coarse.dx * coarse.nx;
    if (!close(fine.dx * fine.nx, xlen, xlen) || !close(domain_lo(fine.x, fine.dx), domain_lo(coarse.x, coarse.dx), xlen))
        incompatible("snapshots cover different x ranges");
    if (coarse.dim() == 2) {
        const double ylen = coarse.dy * coarse.ny;
        if (!close(fine.dy * fine.ny, ylen, ylen) ||
            !close(domain_lo(fine.y, fine.dy), domain_lo(coarse.y, coarse.dy), ylen))
            incompatible("snapshots cover different y ranges");
    }

    const bool two_d = coarse.dim() == 2;
    const double area = coarse.dx * (two_d ? coarse.dy : 1.0);
    const double inv = 1.0 / (rx * ry);
    L1Norms n;
    for (int k = 0; k < coarse.ny; ++k)
        for (int j = 0; j < coarse.nx; ++j) {
            const auto c = static_cast<std::size_t>(k * coarse.nx + j);
            if (!inside(window, coarse.x[c])) continue;
            double rho = 0, u = 0, v = 0, p = 0, E = 0;
            for (int b = 0; b < ry; ++b)
                for (int a = 0; a < rx; ++a) {
                    const auto f = static_cast<std::size_t>((k * ry + b) * fine.nx + j * rx + a);
                    rho += fine.rho[f];
                    u += fine.u[f];
                    if (two_d) v += fine.v[f];
                    p += fine.p[f];
                    E += fine.E[f];
                }
            n.rho += area * std::fabs(coarse.rho[c] - rho * inv);
            n.u += area * std::fabs(coarse.u[c] - u * inv);
            if (two_d) n.v += area * std::fabs(coarse.v[c] - v * inv);
            n.p += area * std::fabs(coarse.p[c] - p * inv);
            n.E += area * std::fabs(coarse.E[c] - E * inv);
        }
    return n;
}

L1Norms l1_error(const Snapshot& coarse, const ExactState& exact, std::optional<XWindow> window)
{
    const bool two_d = coarse.dim() == 2;
    const double area = coarse.dx * (two_d ? coarse.dy : 1.0);
    const GasModel gas{coarse.gamma};
    L1Norms n;
    for (std::size_t c = 0; c < coarse.cells(); ++c) {
        if (!inside(window, coarse.x[c])) continue;
        const Primitive2D w = exact(coarse.x[c], two_d ? coarse.y[c] : 0.0);
        const double E = w.p / (gas.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v);
        n.rho += area * std::fabs(coarse.rho[c] - w.rho);
        n.u += area * std::fabs(coarse.u[c] - w.u);
        if (two_d) n.v += area * std::fabs(coarse.v[c] - w.v);
        n.p += area * std::fabs(coarse.p[c] - w.p);
        n.E += area * std::fabs(coarse.E[c] - E);
    }
    return n;
}

int contact_width(const Snapshot& s, XWindow window, double low, double high)
{
    if (s.dim() != 1) throw SolverError(ErrorKind::InvalidConfig, "contact width needs a 1-D snapshot");
    std::vector<double> rho;
    for (std::size_t c = 0; c < s.cells(); ++c)
        if (s.x[c] >= window.lo && s.x[c] <= window.hi) rho.push_back(s.rho[c]);
    if (rho.size() < 2) throw SolverError(ErrorKind::NonMonotoneWindow, "window holds fewer than two cells");

    if (rho.back() < rho.front()) std::reverse(rho.begin(), rho.end());
    const double lo = rho.front();
    const double hi = rho.back();
    if (!(hi > lo)) throw SolverError(ErrorKind::NonMonotoneWindow, "density is constant in the window");
    for (std::size_t i = 1; i < rho.size(); ++i)
        if (rho[i] < rho[i - 1]) {
            std::ostringstream os;
            os << "density is not monotone in [" << window.lo << ", " << window.hi << "]";
            throw SolverError(ErrorKind::NonMonotoneWindow, os.str());
        }

    int last_low = -1;
    int first_high = -1;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double f = (rho[i] - lo) / (hi - lo);
        if (f <= low) last_low = static_cast<int>(i);
        if (f >= high && first_high < 0) first_high = static_cast<int>(i);
    }
    return first_high - last_low;
}

std::vector<ConvergenceRow> convergence_table(const std::vector<int>& meshes,
                                              const std::vector<double>& errors)
{
    if (meshes.size() != errors.size())
        throw SolverError(ErrorKind::InvalidConfig, "mesh and error lists differ in length");
    std::vector<ConvergenceRow> rows;
    for (std::size_t i = 0; i < meshes.size(); ++i) {
        ConvergenceRow r{meshes[i], errors[i], 0.0};
        if (i > 0 && errors[i] > 0.0 && errors[i - 1] > 0.0)
            r.order = std::log(errors[i - 1] / errors[i]) /
                      std::log(static_cast<double>(meshes[i]) / meshes[i - 1]);
        rows.push_back(r);
    }
    return rows;
}

} // namespace ldcu

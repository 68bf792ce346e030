#include "ldcu/indicators.hpp"

#include <algorithm>
#include <cmath>

#include "ldcu/reconstruct.hpp"

namespace ldcu {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Interface or corner index one past either end mapped back into [0, last];
// `sign` multiplies the momentum normal to that end.
struct Image {
    int i;
    double sign;
};

Image image(int i, int last, BoundaryKind lo, BoundaryKind hi)
{
    if (i >= 0 && i <= last) return {i, 1.0};
    const bool low = i < 0;
    const int d = low ? -i : i - last;
    switch (low ? lo : hi) {
    case BoundaryKind::Periodic: return {low ? last - d : d, 1.0};
    case BoundaryKind::SolidWall: return {low ? d : last - d, -1.0};
    default: return {low ? 0 : last, 1.0};
    }
}

bool mm_rough(double s_left, double s, double s_right, double delta)
{
    return std::fabs(s) > std::max(std::fabs(s_left), std::fabs(s_right)) + delta;
}

} // namespace

RoughnessFlags1D mm_flags_1d(std::span<const double> rho_bar, const MMConfig& cfg)
{
    const int nx = static_cast<int>(rho_bar.size()) - 2 * kGhost;
    RoughnessFlags1D flags;
    if (nx <= 0) return flags;
    // s at interior index j = -1..nx lives at s[j + 1]
    std::vector<double> s(at(nx + 2));
    for (int j = -1; j <= nx; ++j) {
        const std::size_t c = at(j + kGhost);
        s[at(j + 1)] = minmod(rho_bar[c + 1] - rho_bar[c], rho_bar[c] - rho_bar[c - 1]);
    }
    flags.rough.assign(at(nx), 0);
    for (int j = 0; j < nx; ++j)
        flags.rough[at(j)] = mm_rough(s[at(j)], s[at(j + 1)], s[at(j + 2)], cfg.delta) ? 1 : 0;
    return flags;
}

RoughnessFlags1D mm_flags_1d(const Field1D& field, const MMConfig& cfg)
{
    std::vector<double> rho(field.storage().size());
    std::transform(field.storage().begin(), field.storage().end(), rho.begin(),
                   [](const Conserved1D& u) { return u[0]; });
    return mm_flags_1d(rho, cfg);
}

RoughnessFlags2D mm_flags_2d(const Field2D& field, const MMConfig& cfg)
{
    const int nx = field.nx();
    const int ny = field.ny();
    auto flags = RoughnessFlags2D::none(nx, ny);

    std::vector<double> s(at(nx + 2));
    for (int k = 0; k < ny; ++k) {
        for (int j = -1; j <= nx; ++j)
            s[at(j + 1)] = minmod(field(j + 1, k)[0] - field(j, k)[0], field(j, k)[0] - field(j - 1, k)[0]);
        for (int j = 0; j < nx; ++j)
            flags.x[at(k * nx + j)] = mm_rough(s[at(j)], s[at(j + 1)], s[at(j + 2)], cfg.delta) ? 1 : 0;
    }

    s.assign(at(ny + 2), 0.0);
    for (int j = 0; j < nx; ++j) {
        for (int k = -1; k <= ny; ++k)
            s[at(k + 1)] = minmod(field(j, k + 1)[0] - field(j, k)[0], field(j, k)[0] - field(j, k - 1)[0]);
        for (int k = 0; k < ny; ++k)
            flags.y[at(k * nx + j)] = mm_rough(s[at(k)], s[at(k + 1)], s[at(k + 2)], cfg.delta) ? 1 : 0;
    }
    return flags;
}

// --- 1-D WLR -------------------------------------------------------------------------

void WlrHistory1D::push(std::vector<double> rho, std::vector<double> mom, double t)
{
    rho_nm2_ = std::move(rho_nm1_);
    mom_nm2_ = std::move(mom_nm1_);
    t_nm2_ = t_nm1_;
    rho_nm1_ = std::move(rho);
    mom_nm1_ = std::move(mom);
    t_nm1_ = t;
    levels_ = std::min(levels_ + 1, 2);
}

void wlr_samples(const InterfaceValues1D& iv, WlrPointValue which, std::vector<double>& rho,
                 std::vector<double>& mom)
{
    const std::size_t n = iv.minus.size();
    rho.resize(n);
    mom.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (which) {
        case WlrPointValue::Minus:
            rho[i] = iv.minus[i][0];
            mom[i] = iv.minus[i][1];
            break;
        case WlrPointValue::Plus:
            rho[i] = iv.plus[i][0];
            mom[i] = iv.plus[i][1];
            break;
        case WlrPointValue::Average:
            rho[i] = 0.5 * (iv.minus[i][0] + iv.plus[i][0]);
            mom[i] = 0.5 * (iv.minus[i][1] + iv.plus[i][1]);
            break;
        }
    }
}

std::vector<double> wlr_residuals_1d(const WlrHistory1D& hist, double dx, const BoundarySpec& bc)
{
    if (!hist.complete())
        throw SolverError(ErrorKind::HistoryIncomplete, "1-D WLR needs two stored time levels");
    const auto& r1 = hist.rho_nm1();
    const auto& r2 = hist.rho_nm2();
    const auto& m1 = hist.mom_nm1();
    const auto& m2 = hist.mom_nm2();
    if (r1.size() != r2.size() || m1.size() != r1.size() || m2.size() != r1.size() || r1.empty())
        throw SolverError(ErrorKind::HistoryIncomplete, "1-D WLR levels differ in interface count");

    const int last = static_cast<int>(r1.size()) - 1;
    const double dt = hist.dt_nm2();
    std::vector<double> eps(r1.size());
    for (int i = 0; i <= last; ++i) {
        const Image li = image(i - 1, last, bc.left.kind, bc.right.kind);
        const Image ri = image(i + 1, last, bc.left.kind, bc.right.kind);
        const auto l = at(li.i);
        const auto c = at(i);
        const auto r = at(ri.i);
        const double drho = (r1[r] - r2[r]) + 4.0 * (r1[c] - r2[c]) + (r1[l] - r2[l]);
        const double dmom = ri.sign * (m1[r] + m2[r]) - li.sign * (m1[l] + m2[l]);
        eps[c] = dx / 6.0 * drho + dt / 4.0 * dmom;
    }
    return eps;
}

std::vector<double> wlr_smooth_1d(std::span<const double> eps, const BoundarySpec& bc)
{
    const int last = static_cast<int>(eps.size()) - 1;
    auto e = [&](int i) { return eps[at(image(i, last, bc.left.kind, bc.right.kind).i)]; };
    std::vector<double> bar(eps.size());
    for (int i = 0; i <= last; ++i) bar[at(i)] = (e(i - 1) + 4.0 * e(i) + e(i + 1)) / 6.0;
    return bar;
}

RoughnessFlags1D wlr_flags_1d(std::span<const double> eps_bar, const WLRConfig& cfg, double dx)
{
    RoughnessFlags1D flags;
    const int nx = static_cast<int>(eps_bar.size()) - 1;
    if (nx <= 0) return flags;
    const double threshold = cfg.C * dx * dx;
    flags.rough.assign(at(nx), 0);
    for (int j = 0; j < nx; ++j) {
        const double e = std::max(std::fabs(eps_bar[at(j)]), std::fabs(eps_bar[at(j + 1)]));
        flags.rough[at(j)] = e > threshold ? 1 : 0;
    }
    return flags;
}

// --- 2-D WLR -------------------------------------------------------------------------

CornerValues corner_averages(const Field2D& field)
{
    CornerValues cv;
    cv.nx = field.nx();
    cv.ny = field.ny();
    const auto n = at((cv.nx + 1) * (cv.ny + 1));
    cv.rho.resize(n);
    cv.momx.resize(n);
    cv.momy.resize(n);
    for (int b = 0; b <= cv.ny; ++b) {
        for (int a = 0; a <= cv.nx; ++a) {
            const auto& u00 = field(a - 1, b - 1);
            const auto& u10 = field(a, b - 1);
            const auto& u01 = field(a - 1, b);
            const auto& u11 = field(a, b);
            const auto idx = cv.index(a, b);
            cv.rho[idx] = 0.25 * (u00[0] + u10[0] + u01[0] + u11[0]);
            cv.momx[idx] = 0.25 * (u00[1] + u10[1] + u01[1] + u11[1]);
            cv.momy[idx] = 0.25 * (u00[2] + u10[2] + u01[2] + u11[2]);
        }
    }
    return cv;
}

void WlrHistory2D::push(CornerValues values, double t)
{
    nm2_ = std::move(nm1_);
    t_nm2_ = t_nm1_;
    nm1_ = std::move(values);
    t_nm1_ = t;
    levels_ = std::min(levels_ + 1, 2);
}

std::vector<double> wlr_residuals_2d(const WlrHistory2D& hist, double dx, double dy,
                                     const BoundarySpec& bc)
{
    if (!hist.complete())
        throw SolverError(ErrorKind::HistoryIncomplete, "2-D WLR needs two stored time levels");
    const auto& L1 = hist.nm1();
    const auto& L2 = hist.nm2();
    if (L1.nx != L2.nx || L1.ny != L2.ny || L1.rho.size() != L2.rho.size())
        throw SolverError(ErrorKind::HistoryIncomplete, "2-D WLR levels differ in corner count");

    const int nx = L1.nx;
    const int ny = L1.ny;
    const double dt = hist.dt_nm2();
    const double big = std::max({dt, dx, dy});
    const double cu = dx * dy / (36.0 * big);
    const double cf = dy * dt / (24.0 * big);
    const double cg = dx * dt / (24.0 * big);
    constexpr double w[3] = {1.0, 4.0, 1.0};

    auto ix = [&](int a) { return image(a, nx, bc.left.kind, bc.right.kind); };
    auto iy = [&](int b) { return image(b, ny, bc.bottom.kind, bc.top.kind); };
    auto id = [&](int a, int b) { return L1.index(ix(a).i, iy(b).i); };

    std::vector<double> eps(L1.rho.size());
    for (int b = 0; b <= ny; ++b) {
        for (int a = 0; a <= nx; ++a) {
            double U = 0.0;
            for (int db = -1; db <= 1; ++db)
                for (int da = -1; da <= 1; ++da) {
                    const auto i = id(a + da, b + db);
                    U += w[da + 1] * w[db + 1] * (L1.rho[i] - L2.rho[i]);
                }
            double F = 0.0;
            for (int db = -1; db <= 1; ++db) {
                const auto r = id(a + 1, b + db);
                const auto l = id(a - 1, b + db);
                F += w[db + 1] * (ix(a + 1).sign * (L1.momx[r] + L2.momx[r]) -
                                  ix(a - 1).sign * (L1.momx[l] + L2.momx[l]));
            }
            double G = 0.0;
            for (int da = -1; da <= 1; ++da) {
                const auto t = id(a + da, b + 1);
                const auto s = id(a + da, b - 1);
                G += w[da + 1] * (iy(b + 1).sign * (L1.momy[t] + L2.momy[t]) -
                                  iy(b - 1).sign * (L1.momy[s] + L2.momy[s]));
            }
            eps[L1.index(a, b)] = cu * U + cf * F + cg * G;
        }
    }
    return eps;
}

std::vector<double> wlr_smooth_2d(std::span<const double> eps, int nx, int ny, const BoundarySpec& bc)
{
    constexpr double w[3] = {1.0, 4.0, 1.0};
    auto id = [&](int a, int b) {
        return at(image(b, ny, bc.bottom.kind, bc.top.kind).i * (nx + 1) +
                  image(a, nx, bc.left.kind, bc.right.kind).i);
    };
    std::vector<double> bar(eps.size());
    for (int b = 0; b <= ny; ++b)
        for (int a = 0; a <= nx; ++a) {
            double s = 0.0;
            for (int db = -1; db <= 1; ++db)
                for (int da = -1; da <= 1; ++da) s += w[da + 1] * w[db + 1] * eps[id(a + da, b + db)];
            bar[at(b * (nx + 1) + a)] = s / 36.0;
        }
    return bar;
}

RoughnessFlags2D wlr_flags_2d(std::span<const double> eps_bar, int nx, int ny,
                              const WLRConfig& cfg, double dx, double dy)
{
    auto flags = RoughnessFlags2D::none(nx, ny);
    flags.shared = true;
    const double threshold = cfg.C * std::max(dx * dx, dy * dy);
    auto e = [&](int a, int b) { return std::fabs(eps_bar[at(b * (nx + 1) + a)]); };
    for (int k = 0; k < ny; ++k)
        for (int j = 0; j < nx; ++j) {
            const double m = std::max({e(j, k), e(j + 1, k), e(j, k + 1), e(j + 1, k + 1)});
            flags.x[at(k * nx + j)] = m > threshold ? 1 : 0;
        }
    flags.y = flags.x;
    return flags;
}

} // namespace ldcu

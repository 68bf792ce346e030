#include "doctest.h"

#include <cmath>
#include <functional>
#include <numbers>

#include "ldcu/indicators.hpp"

using namespace ldcu;

namespace {

std::vector<double> with_ghosts(std::vector<double> interior)
{
    interior.insert(interior.begin(), kGhost, interior.front());
    interior.insert(interior.end(), kGhost, interior.back());
    return interior;
}

WlrHistory1D history(const std::vector<double>& r2, const std::vector<double>& m2, const std::vector<double>& r1,
                     const std::vector<double>& m1, double dt)
{
    WlrHistory1D h;
    h.push(r2, m2, 0.0);
    h.push(r1, m1, dt);
    return h;
}

Field2D field_2d(int nx, int ny, const std::function<Conserved2D(int, int)>& f)
{
    Field2D u(Grid2D{nx, ny, 0.0, 1.0, 0.0, 1.0});
    for (int k = -kGhost; k < ny + kGhost; ++k)
        for (int j = -kGhost; j < nx + kGhost; ++j) u(j, k) = f(j, k);
    return u;
}

} // namespace

TEST_CASE("minmod indicator")
{
    const MMConfig cfg{1e-4};
    CHECK(mm_flags_1d(with_ghosts(std::vector<double>(10, 2.0)), cfg).count() == 0);

    std::vector<double> ramp;
    for (int j = -kGhost; j < 10 + kGhost; ++j) ramp.push_back(1.0 + 0.1 * j);
    CHECK(mm_flags_1d(ramp, cfg).count() == 0);

    // a jump smeared over one cell: only that cell has a nonzero minmod difference
    std::vector<double> jump(14, 1.0);
    for (int c = 8; c < 14; ++c) jump[static_cast<std::size_t>(c)] = 2.0;
    jump[7] = 1.5;
    const auto f = mm_flags_1d(jump, cfg);
    CHECK(f.count() == 1);
    CHECK(f(7 - kGhost));

    // a jump below delta is ignored
    std::vector<double> tiny(14, 1.0);
    for (int j = 7; j < 14; ++j) tiny[static_cast<std::size_t>(j)] = 1.0 + 5e-5;
    CHECK(mm_flags_1d(tiny, cfg).count() == 0);
}

TEST_CASE("2-D minmod indicator reduces to 1-D")
{
    const int nx = 16, ny = 5;
    auto rho = [](int j) { return j < 8 ? 1.0 : j == 8 ? 2.0 : 3.0; };
    const Field2D u = field_2d(nx, ny, [&](int j, int) { return Conserved2D{rho(j), 0.0, 0.0, 2.5}; });
    const auto f2 = mm_flags_2d(u, MMConfig{});
    std::vector<double> line;
    for (int j = -kGhost; j < nx + kGhost; ++j) line.push_back(rho(j));
    const auto f1 = mm_flags_1d(line, MMConfig{});
    CHECK(f1.count() > 0);
    CHECK(f2.count_y() == 0);
    for (int k = 0; k < ny; ++k)
        for (int j = 0; j < nx; ++j) CHECK(f2.rough_x(j, k) == f1(j));

    const Field2D c = field_2d(8, 8, [](int, int) { return Conserved2D{1.0, 0.0, 0.0, 2.5}; });
    const auto fc = mm_flags_2d(c, MMConfig{});
    CHECK(fc.count_x() + fc.count_y() == 0);
}

TEST_CASE("1-D weak local residuals")
{
    const std::size_t n = 11;
    const std::vector<double> zero(n, 0.0), rho(n, 1.3), mom(n, 0.7);

    CHECK_THROWS_AS(wlr_residuals_1d(WlrHistory1D{}, 0.1), SolverError);

    // steady and uniform states
    for (double e : wlr_residuals_1d(history(rho, zero, rho, zero, 0.01), 0.1)) CHECK(e == 0.0);
    for (double e : wlr_residuals_1d(history(rho, mom, rho, mom, 0.01), 0.1)) CHECK(e == doctest::Approx(0.0).scale(1.0));

    // a single density change at interface 5 between the levels
    auto r1 = rho;
    r1[5] += 0.6;
    const auto eps = wlr_residuals_1d(history(rho, zero, r1, zero, 0.01), 0.1);
    CHECK(eps[5] == doctest::Approx(0.1 / 6.0 * 4.0 * 0.6));
    CHECK(eps[4] == doctest::Approx(0.1 / 6.0 * 0.6));
    CHECK(eps[6] == doctest::Approx(0.1 / 6.0 * 0.6));
    CHECK(eps[2] == 0.0);
}

TEST_CASE("residual of an exact smooth solution decays like dx^4")
{
    const double pi = std::numbers::pi;
    const BoundarySpec periodic = BoundarySpec::all(BoundaryKind::Periodic);
    std::vector<double> m;
    for (int nx : {50, 100, 200, 400}) {
        const double dx = 1.0 / nx, dt = 0.4 * dx;
        WlrHistory1D h;
        for (double t : {0.3, 0.3 + dt}) {
            std::vector<double> r(static_cast<std::size_t>(nx + 1)), q(r.size());
            for (int i = 0; i <= nx; ++i) {
                r[static_cast<std::size_t>(i)] = 1.0 + 0.5 * std::sin(2.0 * pi * (i * dx - t));
                q[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
            }
            h.push(r, q, t);
        }
        double mx = 0.0;
        for (double e : wlr_smooth_1d(wlr_residuals_1d(h, dx, periodic), periodic)) mx = std::max(mx, std::fabs(e));
        m.push_back(mx);
    }
    for (std::size_t i = 1; i < m.size(); ++i) CHECK(std::log2(m[i - 1] / m[i]) == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("residual stencils at the domain ends")
{
    const double pi = std::numbers::pi;
    const int nx = 20;
    const double dx = 1.0 / nx;
    // periodic data: interfaces 0 and nx coincide
    WlrHistory1D h;
    for (double t : {0.0, 0.01}) {
        std::vector<double> r(nx + 1), q(nx + 1);
        for (int i = 0; i <= nx; ++i) {
            r[static_cast<std::size_t>(i)] = 1.0 + 0.5 * std::sin(2.0 * pi * (i * dx - t));
            q[static_cast<std::size_t>(i)] = 0.8 * r[static_cast<std::size_t>(i)];
        }
        h.push(r, q, t);
    }
    const BoundarySpec periodic = BoundarySpec::all(BoundaryKind::Periodic);
    const auto e = wlr_smooth_1d(wlr_residuals_1d(h, dx, periodic), periodic);
    CHECK(e.front() == doctest::Approx(e.back()).epsilon(1e-12));

    // data mirrored about the centre with walls: residuals mirror too
    WlrHistory1D w;
    for (double t : {0.0, 0.01}) {
        std::vector<double> r(nx + 1), q(nx + 1);
        for (int i = 0; i <= nx; ++i) {
            const double x = i * dx - 0.5;
            r[static_cast<std::size_t>(i)] = 1.0 + std::cos(3.0 * x) + t * x * x;
            q[static_cast<std::size_t>(i)] = std::sin(2.0 * x) * (1.0 + t);
        }
        w.push(r, q, t);
    }
    const BoundarySpec walls = BoundarySpec::all(BoundaryKind::SolidWall);
    const auto ew = wlr_smooth_1d(wlr_residuals_1d(w, dx, walls), walls);
    for (int i = 0; i <= nx; ++i)
        CHECK(ew[static_cast<std::size_t>(i)] ==
              doctest::Approx(ew[static_cast<std::size_t>(nx - i)]).epsilon(1e-10).scale(1e-12));
}

TEST_CASE("residual smoothing and 1-D flags")
{
    const std::vector<double> c(7, 2.5);
    for (double v : wlr_smooth_1d(c)) CHECK(v == doctest::Approx(2.5));
    const std::vector<double> spike = {0, 0, 0, 6, 0, 0, 0};
    const auto s = wlr_smooth_1d(spike);
    CHECK(s[2] == doctest::Approx(1.0));
    CHECK(s[3] == doctest::Approx(4.0));
    CHECK(s[4] == doctest::Approx(1.0));
    CHECK(s[0] == 0.0);

    const double dx = 0.1;
    const WLRConfig cfg{2.0}; // threshold 0.02
    std::vector<double> e(11, 0.0);
    CHECK(wlr_flags_1d(e, cfg, dx).count() == 0);
    e[4] = -0.03;
    const auto f = wlr_flags_1d(e, cfg, dx);
    CHECK(f.count() == 2);
    CHECK(f(3));
    CHECK(f(4));
    e[4] = cfg.C * dx * dx;
    CHECK(wlr_flags_1d(e, cfg, dx).count() == 0);
}

TEST_CASE("2-D weak local residuals and flags")
{
    const int nx = 8, ny = 6;
    const Field2D rest = field_2d(nx, ny, [](int j, int k) { return Conserved2D{1.0 + 0.1 * j * k, 0.0, 0.0, 2.5}; });
    WlrHistory2D h;
    CHECK_THROWS_AS(wlr_residuals_2d(h, 0.1, 0.1), SolverError);
    h.push(corner_averages(rest), 0.0);
    h.push(corner_averages(rest), 0.01);
    for (double e : wlr_residuals_2d(h, 0.1, 0.1)) CHECK(e == 0.0);

    const auto cc = corner_averages(field_2d(4, 4, [](int, int) { return Conserved2D{2.0, 0.5, -0.5, 9.0}; }));
    for (std::size_t i = 0; i < cc.rho.size(); ++i) {
        CHECK(cc.rho[i] == 2.0);
        CHECK(cc.momx[i] == 0.5);
        CHECK(cc.momy[i] == -0.5);
    }

    // constant in y, v = 0: every corner row carries the same residual
    auto level = [&](double s) {
        return field_2d(nx, ny, [s](int j, int) {
            return Conserved2D{1.0 + 0.2 * std::sin(0.7 * j + s), 0.3 * std::cos(0.5 * j + s), 0.0, 2.5};
        });
    };
    WlrHistory2D g;
    g.push(corner_averages(level(0.0)), 0.0);
    g.push(corner_averages(level(0.1)), 0.02);
    const auto eps = wlr_residuals_2d(g, 0.1, 0.1);
    bool any = false;
    for (int b = 0; b <= ny; ++b)
        for (int a = 0; a <= nx; ++a) {
            const double ref = eps[static_cast<std::size_t>(a)];
            CHECK(eps[static_cast<std::size_t>(b * (nx + 1) + a)] == doctest::Approx(ref).epsilon(1e-12).scale(1e-15));
            any = any || ref != 0.0;
        }
    CHECK(any);

    // and that residual is dy/max(dt, dx, dy) times the 1-D one built from the same interface values
    auto line = [&](double s) {
        std::vector<double> r, q;
        for (int a = 0; a <= nx; ++a) {
            r.push_back(0.5 * (2.0 + 0.2 * std::sin(0.7 * (a - 1) + s) + 0.2 * std::sin(0.7 * a + s)));
            q.push_back(0.5 * (0.3 * std::cos(0.5 * (a - 1) + s) + 0.3 * std::cos(0.5 * a + s)));
        }
        return std::pair{r, q};
    };
    const auto [r2, q2] = line(0.0);
    const auto [r1, q1] = line(0.1);
    WlrHistory1D h1;
    h1.push(r2, q2, 0.0);
    h1.push(r1, q1, 0.02);
    const auto e1 = wlr_residuals_1d(h1, 0.1);
    for (int a = 0; a <= nx; ++a)
        CHECK(eps[static_cast<std::size_t>(a)] == doctest::Approx(e1[static_cast<std::size_t>(a)]).epsilon(1e-10).scale(1e-14));

    std::vector<double> bar((nx + 1) * (ny + 1), 0.0);
    CHECK(wlr_flags_2d(bar, nx, ny, WLRConfig{1.0}, 0.1, 0.1).count_x() == 0);
    for (double& v : bar) v = 0.005;
    CHECK(wlr_flags_2d(bar, nx, ny, WLRConfig{1.0}, 0.1, 0.1).count_x() == 0);
    bar[static_cast<std::size_t>(3 * (nx + 1) + 4)] = 0.5;
    const auto f = wlr_flags_2d(bar, nx, ny, WLRConfig{1.0}, 0.1, 0.1);
    CHECK(f.count_x() == 4);
    CHECK(f.rough_x(3, 2));
    CHECK(f.rough_x(4, 2));
    CHECK(f.rough_x(3, 3));
    CHECK(f.rough_x(4, 3));
    CHECK(f.count_y() == 4);

    std::vector<double> one(bar.size(), 0.0);
    one[static_cast<std::size_t>(2 * (nx + 1) + 3)] = 36.0;
    const auto sm = wlr_smooth_2d(one, nx, ny);
    CHECK(sm[static_cast<std::size_t>(2 * (nx + 1) + 3)] == doctest::Approx(16.0));
    CHECK(sm[static_cast<std::size_t>(2 * (nx + 1) + 4)] == doctest::Approx(4.0));
    CHECK(sm[static_cast<std::size_t>(3 * (nx + 1) + 4)] == doctest::Approx(1.0));
}

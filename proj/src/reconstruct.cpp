#include "ldcu/reconstruct.hpp"

#include <sstream>
#include <tuple>

namespace ldcu {

namespace {

[[noreturn]] void rethrow_with_location(const SolverError& e, const char* what, int j, int k)
{
    std::ostringstream os;
    os << e.detail() << " (" << what << " interface at j=" << j;
    if (k >= 0) os << ", k=" << k;
    os << ")";
    throw SolverError(e.kind(), os.str());
}

template <std::size_t N>
bool admissible(const Vec<N>& u, const GasModel& gas)
{
    if (!(u[0] > 0.0)) return false;
    double ke = 0.0;
    for (std::size_t i = 1; i + 1 < N; ++i) ke += u[i] * u[i];
    return (gas.gamma - 1.0) * (2.0 * u[0] * u[N - 1] - ke) > 0.0;
}

} // namespace

LimiterParams make_limiter(double theta, double tau)
{
    if (!(theta >= 1.0 && theta <= 2.0)) {
        std::ostringstream os;
        os << "limiter theta must lie in [1, 2], got " << theta;
        throw SolverError(ErrorKind::InvalidConfig, os.str());
    }
    return {theta, tau};
}

double minmod(std::span<const double> values)
{
    if (values.empty()) throw SolverError(ErrorKind::InvalidConfig, "minmod of an empty list");
    const bool all_pos = std::all_of(values.begin(), values.end(), [](double z) { return z > 0.0; });
    if (all_pos) return *std::min_element(values.begin(), values.end());
    const bool all_neg = std::all_of(values.begin(), values.end(), [](double z) { return z < 0.0; });
    if (all_neg) return *std::max_element(values.begin(), values.end());
    return 0.0;
}

std::pair<Conserved1D, Conserved1D> reconstruct_face_1d(const Field1D& field,
                                                        const RoughnessFlags1D& flags,
                                                        const GasModel& gas,
                                                        const LimiterParams& rough,
                                                        const LimiterParams& smooth, int i)
{
    // interface between cells j = i-1 and j+1 = i
    const int j = i - 1;
    const Conserved1D& q0 = field[j];
    const Conserved1D& q1 = field[j + 1];
    const double rho = 0.5 * (q0[0] + q1[0]);
    const double mom = 0.5 * (q0[1] + q1[1]);
    const double ene = 0.5 * (q0[2] + q1[2]);
    const double gm1 = gas.gamma - 1.0;
    const double u = rho > 0.0 ? mom / rho : 0.0;
    const double ek = 0.5 * u * u;
    const double p = gm1 * (ene - rho * ek);
    if (!(rho > 0.0) || !(p > 0.0)) {
        try {
            throw_degenerate_basis(rho, p);
        } catch (const SolverError& e) {
            rethrow_with_location(e, "x", i, -1);
        }
    }
    // Same eigenvectors as char_basis, applied without forming the matrices:
    // with A = (b2 rho - b1 u m + b1 E)/2 and B = (u rho - m)/(2c) the
    // characteristic variables are (A + B, rho - 2A, A - B).
    const double c = std::sqrt(gas.gamma * p / rho);
    const double H = (ene + p) / rho;
    const double ic = 1.0 / c;
    const double hb1 = 0.5 * gm1 * ic * ic;
    const double hb2 = hb1 * ek;
    const double hic = 0.5 * ic;
    Vec<3> g[4];
    for (int q = 0; q < 4; ++q) {
        const Conserved1D& w = field[j - 1 + q];
        const double A = hb2 * w[0] - hb1 * u * w[1] + hb1 * w[2];
        const double B = hic * (u * w[0] - w[1]);
        g[q] = {A + B, w[0] - 2.0 * A, A - B};
    }
    const auto& lim_l = flags.is_flat(j) ? kFlat : flags(j) ? rough : smooth;
    const auto& lim_r = flags.is_flat(j + 1) ? kFlat : flags(j + 1) ? rough : smooth;
    Vec<3> gm{}, gp{};
    for (std::size_t k = 0; k < 3; ++k) {
        gm[k] = g[1][k] + 0.5 * limited_increment(g[0][k], g[1][k], g[2][k], lim_l);
        gp[k] = g[2][k] - 0.5 * limited_increment(g[1][k], g[2][k], g[3][k], lim_r);
    }
    // columns (1, u - c, H - uc), (1, u, ek), (1, u + c, H + uc)
    auto back = [&](const Vec<3>& v) {
        const double r = v[0] + v[1] + v[2];
        const double d = v[2] - v[0];
        return Conserved1D{r, u * r + c * d, H * (v[0] + v[2]) + ek * v[1] + u * c * d};
    };
    const Conserved1D um = back(gm);
    const Conserved1D up = back(gp);
    return {admissible(um, gas) ? um : q0, admissible(up, gas) ? up : q1};
}

InterfaceValues1D reconstruct_1d(const Field1D& field, const RoughnessFlags1D& flags,
                                 const GasModel& gas, const LimiterParams& rough,
                                 const LimiterParams& smooth)
{
    InterfaceValues1D out;
    reconstruct_1d(field, flags, gas, rough, smooth, out);
    return out;
}

void reconstruct_1d(const Field1D& field, const RoughnessFlags1D& flags, const GasModel& gas,
                    const LimiterParams& rough, const LimiterParams& smooth, InterfaceValues1D& out)
{
    const int nx = field.nx();
    out.minus.resize(static_cast<std::size_t>(nx + 1));
    out.plus.resize(static_cast<std::size_t>(nx + 1));
    for (int i = 0; i <= nx; ++i)
        std::tie(out.minus[static_cast<std::size_t>(i)], out.plus[static_cast<std::size_t>(i)]) =
            reconstruct_face_1d(field, flags, gas, rough, smooth, i);
}

InterfaceValues1D reconstruct_1d_first_order(const Field1D& field)
{
    const int nx = field.nx();
    InterfaceValues1D out;
    out.minus.resize(static_cast<std::size_t>(nx + 1));
    out.plus.resize(static_cast<std::size_t>(nx + 1));
    for (int i = 0; i <= nx; ++i) {
        out.minus[static_cast<std::size_t>(i)] = field[i - 1];
        out.plus[static_cast<std::size_t>(i)] = field[i];
    }
    return out;
}

namespace {

// 2-D analog of reconstruct_face_1d for the interface between cells a and b,
// with w[0..3] the cells a-1, a, b, b+1 along the normal. `in`/`it` index the
// normal and tangential momenta. Returns false if the mean state is degenerate.
template <std::size_t in, std::size_t it>
bool face_2d(const Conserved2D* const w[4], const GasModel& gas,
             const LimiterParams& lim_l, const LimiterParams& lim_r, Conserved2D& um, Conserved2D& up)
{
    const Conserved2D& q0 = *w[1];
    const Conserved2D& q1 = *w[2];
    const double rho = 0.5 * (q0[0] + q1[0]);
    const double mn = 0.5 * (q0[in] + q1[in]);
    const double mt = 0.5 * (q0[it] + q1[it]);
    const double ene = 0.5 * (q0[3] + q1[3]);
    const double gm1 = gas.gamma - 1.0;
    const double un = rho > 0.0 ? mn / rho : 0.0;
    const double ut = rho > 0.0 ? mt / rho : 0.0;
    const double ek = 0.5 * (un * un + ut * ut);
    const double p = gm1 * (ene - rho * ek);
    if (!(rho > 0.0) || !(p > 0.0)) return false;
    // A = (b2 rho - b1 un m_n - b1 ut m_t + b1 E)/2, B = (un rho - m_n)/(2c);
    // characteristic variables (A + B, rho - 2A, m_t - ut rho, A - B)
    const double c = std::sqrt(gas.gamma * p / rho);
    const double H = (ene + p) / rho;
    const double ic = 1.0 / c;
    const double hb1 = 0.5 * gm1 * ic * ic;
    const double hb2 = hb1 * ek;
    const double hic = 0.5 * ic;
    Vec<4> g[4];
    for (int q = 0; q < 4; ++q) {
        const Conserved2D& v = *w[q];
        const double A = hb2 * v[0] - hb1 * un * v[in] - hb1 * ut * v[it] + hb1 * v[3];
        const double B = hic * (un * v[0] - v[in]);
        g[q] = {A + B, v[0] - 2.0 * A, v[it] - ut * v[0], A - B};
    }
    Vec<4> gm{}, gp{};
    for (std::size_t k = 0; k < 4; ++k) {
        gm[k] = g[1][k] + 0.5 * limited_increment(g[0][k], g[1][k], g[2][k], lim_l);
        gp[k] = g[2][k] - 0.5 * limited_increment(g[1][k], g[2][k], g[3][k], lim_r);
    }
    // columns (1, un - c, ut, H - un c), (1, un, ut, ek), (0, 0, 1, ut), (1, un + c, ut, H + un c)
    auto back = [&](const Vec<4>& v) {
        const double r = v[0] + v[1] + v[3];
        const double d = v[3] - v[0];
        Conserved2D u;
        u[0] = r;
        u[in] = un * r + c * d;
        u[it] = ut * r + v[2];
        u[3] = H * (v[0] + v[3]) + ek * v[1] + ut * v[2] + un * c * d;
        return u;
    };
    um = back(gm);
    up = back(gp);
    if (!admissible(um, gas)) um = q0;
    if (!admissible(up, gas)) up = q1;
    return true;
}

} // namespace

InterfaceValues2D reconstruct_2d(const Field2D& field, const RoughnessFlags2D& flags,
                                 const GasModel& gas, const LimiterParams& rough,
                                 const LimiterParams& smooth)
{
    InterfaceValues2D out;
    reconstruct_2d(field, flags, gas, rough, smooth, out);
    return out;
}

void reconstruct_2d(const Field2D& field, const RoughnessFlags2D& flags, const GasModel& gas,
                    const LimiterParams& rough, const LimiterParams& smooth, InterfaceValues2D& out)
{
    const int nx = field.nx();
    const int ny = field.ny();
    out.nx = nx;
    out.ny = ny;
    const auto nxf = static_cast<std::size_t>((nx + 1) * ny);
    const auto nyf = static_cast<std::size_t>(nx * (ny + 1));
    out.x_minus.resize(nxf);
    out.x_plus.resize(nxf);
    out.y_minus.resize(nyf);
    out.y_plus.resize(nyf);

    auto fail = [&](const char* dir, int a, int b, const Conserved2D& l, const Conserved2D& r) {
        try {
            char_basis(l, r, gas, Direction::X);
        } catch (const SolverError& e) {
            rethrow_with_location(e, dir, a, b);
        }
    };

    // x-sweep: one row at a time
    for (int k = 0; k < ny; ++k) {
        for (int i = 0; i <= nx; ++i) {
            const int j = i - 1;
            const Conserved2D* const w[4] = {&field(j - 1, k), &field(j, k), &field(j + 1, k), &field(j + 2, k)};
            const auto& lim_l = flags.is_flat(j, k) ? kFlat : flags.rough_x(j, k) ? rough : smooth;
            const auto& lim_r = flags.is_flat(j + 1, k) ? kFlat : flags.rough_x(j + 1, k) ? rough : smooth;
            if (!face_2d<1, 2>(w, gas, lim_l, lim_r, out.x_minus[out.xface(i, k)], out.x_plus[out.xface(i, k)]))
                fail("x", i, k, *w[1], *w[2]);
        }
    }

    // y-sweep: one column at a time
    for (int i = 0; i <= ny; ++i) {
        const int k = i - 1;
        for (int j = 0; j < nx; ++j) {
            const Conserved2D* const w[4] = {&field(j, k - 1), &field(j, k), &field(j, k + 1), &field(j, k + 2)};
            const auto& lim_b = flags.is_flat(j, k) ? kFlat : flags.rough_y(j, k) ? rough : smooth;
            const auto& lim_t = flags.is_flat(j, k + 1) ? kFlat : flags.rough_y(j, k + 1) ? rough : smooth;
            if (!face_2d<2, 1>(w, gas, lim_b, lim_t, out.y_minus[out.yface(j, i)], out.y_plus[out.yface(j, i)]))
                fail("y", j, i, *w[1], *w[2]);
        }
    }
}

InterfaceValues2D reconstruct_2d_first_order(const Field2D& field)
{
    const int nx = field.nx();
    const int ny = field.ny();
    InterfaceValues2D out;
    out.nx = nx;
    out.ny = ny;
    out.x_minus.resize(static_cast<std::size_t>((nx + 1) * ny));
    out.x_plus.resize(out.x_minus.size());
    out.y_minus.resize(static_cast<std::size_t>(nx * (ny + 1)));
    out.y_plus.resize(out.y_minus.size());
    for (int k = 0; k < ny; ++k)
        for (int i = 0; i <= nx; ++i) {
            out.x_minus[out.xface(i, k)] = field(i - 1, k);
            out.x_plus[out.xface(i, k)] = field(i, k);
        }
    for (int i = 0; i <= ny; ++i)
        for (int j = 0; j < nx; ++j) {
            out.y_minus[out.yface(j, i)] = field(j, i - 1);
            out.y_plus[out.yface(j, i)] = field(j, i);
        }
    return out;
}

} // namespace ldcu

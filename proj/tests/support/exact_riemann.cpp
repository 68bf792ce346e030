#include "exact_riemann.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

ExactRiemann::ExactRiemann(RiemannState left, RiemannState right, double gamma, double tol)
    : l_(left), r_(right), g_(gamma)
{
    cl_ = std::sqrt(g_ * l_.p / l_.rho);
    cr_ = std::sqrt(g_ * r_.p / r_.rho);
    if (2.0 / (g_ - 1.0) * (cl_ + cr_) <= r_.u - l_.u) throw std::domain_error("vacuum generated");

    // two-rarefaction guess
    const double z = (g_ - 1.0) / (2.0 * g_);
    double p = std::pow((cl_ + cr_ - 0.5 * (g_ - 1.0) * (r_.u - l_.u)) /
                            (cl_ / std::pow(l_.p, z) + cr_ / std::pow(r_.p, z)),
                        1.0 / z);
    for (iterations_ = 1; iterations_ <= 100; ++iterations_) {
        const double F = f(p, l_, cl_) + f(p, r_, cr_) + (r_.u - l_.u);
        const double next = std::max(p - F / (df(p, l_, cl_) + df(p, r_, cr_)), 1e-14);
        const double change = 2.0 * std::fabs(next - p) / (next + p);
        p = next;
        if (change < tol) break;
    }
    p_star_ = p;
    u_star_ = 0.5 * (l_.u + r_.u) + 0.5 * (f(p, r_, cr_) - f(p, l_, cl_));
}

double ExactRiemann::f(double p, const RiemannState& s, double c) const
{
    if (p > s.p) {
        const double A = 2.0 / ((g_ + 1.0) * s.rho);
        const double B = (g_ - 1.0) / (g_ + 1.0) * s.p;
        return (p - s.p) * std::sqrt(A / (p + B));
    }
    return 2.0 * c / (g_ - 1.0) * (std::pow(p / s.p, (g_ - 1.0) / (2.0 * g_)) - 1.0);
}

double ExactRiemann::df(double p, const RiemannState& s, double c) const
{
    if (p > s.p) {
        const double A = 2.0 / ((g_ + 1.0) * s.rho);
        const double B = (g_ - 1.0) / (g_ + 1.0) * s.p;
        return std::sqrt(A / (B + p)) * (1.0 - 0.5 * (p - s.p) / (B + p));
    }
    return 1.0 / (s.rho * c) * std::pow(p / s.p, -(g_ + 1.0) / (2.0 * g_));
}

RiemannState ExactRiemann::sample(double xi) const
{
    const double g = g_;
    const double gm = (g - 1.0) / (g + 1.0);
    if (xi <= u_star_) {
        const auto& s = l_;
        const double c = cl_;
        const double pr = p_star_ / s.p;
        if (p_star_ > s.p) {
            const double speed = s.u - c * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
            if (xi <= speed) return s;
            return {s.rho * (pr + gm) / (gm * pr + 1.0), u_star_, p_star_};
        }
        const double head = s.u - c;
        const double c_star = c * std::pow(pr, (g - 1.0) / (2.0 * g));
        const double tail = u_star_ - c_star;
        if (xi <= head) return s;
        if (xi >= tail) return {s.rho * std::pow(pr, 1.0 / g), u_star_, p_star_};
        const double cf = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * (s.u - xi));
        const double u = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * s.u + xi);
        const double rho = s.rho * std::pow(cf / c, 2.0 / (g - 1.0));
        return {rho, u, s.p * std::pow(cf / c, 2.0 * g / (g - 1.0))};
    }
    const auto& s = r_;
    const double c = cr_;
    const double pr = p_star_ / s.p;
    if (p_star_ > s.p) {
        const double speed = s.u + c * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
        if (xi >= speed) return s;
        return {s.rho * (pr + gm) / (gm * pr + 1.0), u_star_, p_star_};
    }
    const double head = s.u + c;
    const double c_star = c * std::pow(pr, (g - 1.0) / (2.0 * g));
    const double tail = u_star_ + c_star;
    if (xi >= head) return s;
    if (xi <= tail) return {s.rho * std::pow(pr, 1.0 / g), u_star_, p_star_};
    const double cf = 2.0 / (g + 1.0) * (c - 0.5 * (g - 1.0) * (s.u - xi));
    const double u = 2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * s.u + xi);
    const double rho = s.rho * std::pow(cf / c, 2.0 / (g - 1.0));
    return {rho, u, s.p * std::pow(cf / c, 2.0 * g / (g - 1.0))};
}

} // namespace oracle

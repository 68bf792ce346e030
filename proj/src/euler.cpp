#include "ldcu/euler.hpp"

#include <sstream>

namespace ldcu {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonPositiveDensity: return "NonPositiveDensity";
    case ErrorKind::NonPositivePressure: return "NonPositivePressure";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::ZeroSpeedGap: return "ZeroSpeedGap";
    case ErrorKind::NonPositiveStarDensity: return "NonPositiveStarDensity";
    case ErrorKind::HistoryIncomplete: return "HistoryIncomplete";
    case ErrorKind::InvalidStateAtStage: return "InvalidStateAtStage";
    case ErrorKind::ZeroWaveSpeed: return "ZeroWaveSpeed";
    case ErrorKind::NonSquareGrid: return "NonSquareGrid";
    case ErrorKind::OddCellCount: return "OddCellCount";
    case ErrorKind::UnknownProblem: return "UnknownProblem";
    case ErrorKind::IncompatibleMeshes: return "IncompatibleMeshes";
    case ErrorKind::NonMonotoneWindow: return "NonMonotoneWindow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "UnknownError";
}

GasModel make_gas(double gamma)
{
    if (!(gamma > 1.0)) {
        std::ostringstream os;
        os << "gamma must exceed 1, got " << gamma;
        throw SolverError(ErrorKind::InvalidConfig, os.str());
    }
    return GasModel{gamma};
}

void PositivityGuard::throw_pressure(double p, const char* where)
{
    std::ostringstream os;
    os << where << ": pressure " << p << " is not positive";
    throw SolverError(ErrorKind::NonPositivePressure, os.str());
}

void throw_density(double rho, const char* where)
{
    std::ostringstream os;
    os << where << ": density " << rho << " is not positive";
    throw SolverError(ErrorKind::NonPositiveDensity, os.str());
}

void throw_degenerate_basis(double rho, double p)
{
    std::ostringstream os;
    os << "average state has rho=" << rho << ", p=" << p;
    throw SolverError(ErrorKind::DegenerateBasis, os.str());
}

Conserved1D conserved_from_primitive(const Primitive1D& W, const GasModel& gas)
{
    if (!(W.rho > 0.0)) throw_density(W.rho, "conserved_from_primitive");
    if (!(W.p > 0.0)) {
        PositivityGuard strict;
        strict.admit_pressure(W.p, "conserved_from_primitive");
    }
    return {W.rho, W.rho * W.u, W.p / (gas.gamma - 1.0) + 0.5 * W.rho * W.u * W.u};
}

Conserved2D conserved_from_primitive(const Primitive2D& W, const GasModel& gas)
{
    if (!(W.rho > 0.0)) throw_density(W.rho, "conserved_from_primitive");
    if (!(W.p > 0.0)) {
        PositivityGuard strict;
        strict.admit_pressure(W.p, "conserved_from_primitive");
    }
    return {W.rho, W.rho * W.u, W.rho * W.v,
            W.p / (gas.gamma - 1.0) + 0.5 * W.rho * (W.u * W.u + W.v * W.v)};
}

Conserved1D physical_flux_x(const Conserved1D& U, const GasModel& gas)
{
    return physical_flux(U, primitive_from_conserved(U, gas));
}

Conserved2D physical_flux_x(const Conserved2D& U, const GasModel& gas)
{
    return physical_flux(U, primitive_from_conserved(U, gas), Direction::X);
}

Conserved2D physical_flux_y(const Conserved2D& U, const GasModel& gas)
{
    return physical_flux(U, primitive_from_conserved(U, gas), Direction::Y);
}

Vec<3> eigenvalues(const Conserved1D& U, const GasModel& gas)
{
    const auto W = primitive_from_conserved(U, gas);
    const double c = sound_speed(W.rho, W.p, gas);
    return {W.u - c, W.u, W.u + c};
}

Vec<4> eigenvalues(const Conserved2D& U, const GasModel& gas, Direction dir)
{
    const auto W = primitive_from_conserved(U, gas);
    const double c = sound_speed(W.rho, W.p, gas);
    const double un = dir == Direction::X ? W.u : W.v;
    return {un - c, un, un, un + c};
}

} // namespace ldcu

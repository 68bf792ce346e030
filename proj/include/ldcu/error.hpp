#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ldcu {

enum class ErrorKind {
    NonPositiveDensity,
    NonPositivePressure,
    DegenerateBasis,
    ZeroSpeedGap,
    NonPositiveStarDensity,
    HistoryIncomplete,
    InvalidStateAtStage,
    ZeroWaveSpeed,
    NonSquareGrid,
    OddCellCount,
    UnknownProblem,
    IncompatibleMeshes,
    NonMonotoneWindow,
    ParseError,
    InvalidConfig,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as SolverError; kind() lets callers and tests
// discriminate without parsing the message.
class SolverError : public std::runtime_error {
public:
    SolverError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; } // message without the kind prefix

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace ldcu

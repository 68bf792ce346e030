#pragma once

// Snapshot CSV files and flat key=value configuration text.
//
// A snapshot starts with '#'-prefixed key=value lines in the fixed order
// problem, scheme, time, nx, ny, dx, dy, gamma, followed by "# columns=...",
// then one comma-separated row per cell (x fastest in 2-D). Columns are
// x, [y,] rho, u, [v,] p, E and optionally rough (1-D and 2-D WLR) or
// rough_x, rough_y (2-D MM). 1-D files carry ny=1 and dy=0.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ldcu/field.hpp"

namespace ldcu {

struct Snapshot {
    std::string problem;
    std::string scheme;
    double time = 0.0;
    int nx = 0;
    int ny = 1;
    double dx = 0.0;
    double dy = 0.0;
    double gamma = 1.4;

    std::vector<double> x, y, rho, u, v, p, E; // y, v empty in 1-D
    std::vector<std::uint8_t> rough, rough_x, rough_y;

    int dim() const { return y.empty() ? 1 : 2; }
    std::size_t cells() const { return rho.size(); }
    std::vector<std::string> columns() const;
};

Snapshot make_snapshot(const Field1D& f, const GasModel& gas, const std::string& problem,
                       const std::string& scheme, double time, const RoughnessFlags1D* flags = nullptr);
Snapshot make_snapshot(const Field2D& f, const GasModel& gas, const std::string& problem,
                       const std::string& scheme, double time, const RoughnessFlags2D* flags = nullptr);

void write_snapshot(std::ostream& os, const Snapshot& s);
void write_snapshot(const std::filesystem::path& path, const Snapshot& s);
// Throws ParseError naming the offending line.
Snapshot read_snapshot(std::istream& is);
Snapshot read_snapshot(const std::filesystem::path& path);

// Shortest round-trip decimal form ("%.17g").
std::string format_double(double v);

// key=value lines; blank lines and '#' comments ignored, whitespace around
// keys and values trimmed. Throws ParseError on a line without '=' or on a
// repeated key.
std::map<std::string, std::string> parse_key_values(std::istream& is);
std::map<std::string, std::string> parse_key_values(const std::filesystem::path& path);

} // namespace ldcu

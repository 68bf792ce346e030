#include "ldcu/snapshot.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ldcu {

namespace {

constexpr const char* kHeaderKeys[] = {"problem", "scheme", "time", "nx", "ny", "dx", "dy", "gamma"};

[[noreturn]] void parse_error(const std::string& source, int line, const std::string& what)
{
    std::ostringstream os;
    os << source << ":" << line << ": " << what;
    throw SolverError(ErrorKind::ParseError, os.str());
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double to_double(const std::string& s, int line)
{
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto r = std::from_chars(s.data(), end, v);
    if (r.ec != std::errc{} || r.ptr != end) parse_error("snapshot", line, "not a number: '" + s + "'");
    return v;
}

int to_int(const std::string& s, int line)
{
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto r = std::from_chars(s.data(), end, v);
    if (r.ec != std::errc{} || r.ptr != end) parse_error("snapshot", line, "not an integer: '" + s + "'");
    return v;
}

template <class S>
auto column_target(S& s, const std::string& name) -> decltype(&s.x)
{
    if (name == "x") return &s.x;
    if (name == "y") return &s.y;
    if (name == "rho") return &s.rho;
    if (name == "u") return &s.u;
    if (name == "v") return &s.v;
    if (name == "p") return &s.p;
    if (name == "E") return &s.E;
    return nullptr;
}

template <class S>
auto flag_target(S& s, const std::string& name) -> decltype(&s.rough)
{
    if (name == "rough") return &s.rough;
    if (name == "rough_x") return &s.rough_x;
    if (name == "rough_y") return &s.rough_y;
    return nullptr;
}

Snapshot header(const std::string& problem, const std::string& scheme, double time, int nx, int ny,
                double dx, double dy, double gamma)
{
    Snapshot s;
    s.problem = problem;
    s.scheme = scheme;
    s.time = time;
    s.nx = nx;
    s.ny = ny;
    s.dx = dx;
    s.dy = dy;
    s.gamma = gamma;
    return s;
}

} // namespace

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> Snapshot::columns() const
{
    std::vector<std::string> c = {"x"};
    if (dim() == 2) c.push_back("y");
    c.insert(c.end(), {"rho", "u"});
    if (dim() == 2) c.push_back("v");
    c.insert(c.end(), {"p", "E"});
    if (!rough.empty()) c.push_back("rough");
    if (!rough_x.empty()) c.push_back("rough_x");
    if (!rough_y.empty()) c.push_back("rough_y");
    return c;
}

Snapshot make_snapshot(const Field1D& f, const GasModel& gas, const std::string& problem,
                       const std::string& scheme, double time, const RoughnessFlags1D* flags)
{
    Snapshot s = header(problem, scheme, time, f.nx(), 1, f.grid().dx(), 0.0, gas.gamma);
    for (int j = 0; j < f.nx(); ++j) {
        const auto w = primitive_from_conserved(f[j], gas);
        s.x.push_back(f.grid().xc(j));
        s.rho.push_back(w.rho);
        s.u.push_back(w.u);
        s.p.push_back(w.p);
        s.E.push_back(f[j][2]);
    }
    if (flags) s.rough = flags->rough;
    return s;
}

Snapshot make_snapshot(const Field2D& f, const GasModel& gas, const std::string& problem,
                       const std::string& scheme, double time, const RoughnessFlags2D* flags)
{
    Snapshot s = header(problem, scheme, time, f.nx(), f.ny(), f.grid().dx(), f.grid().dy(), gas.gamma);
    for (int k = 0; k < f.ny(); ++k)
        for (int j = 0; j < f.nx(); ++j) {
            const auto w = primitive_from_conserved(f(j, k), gas);
            s.x.push_back(f.grid().xc(j));
            s.y.push_back(f.grid().yc(k));
            s.rho.push_back(w.rho);
            s.u.push_back(w.u);
            s.v.push_back(w.v);
            s.p.push_back(w.p);
            s.E.push_back(f(j, k)[3]);
        }
    if (flags) {
        if (flags->shared) {
            s.rough = flags->x;
        } else {
            s.rough_x = flags->x;
            s.rough_y = flags->y;
        }
    }
    return s;
}

void write_snapshot(std::ostream& os, const Snapshot& s)
{
    os << "# problem=" << s.problem << '\n'
       << "# scheme=" << s.scheme << '\n'
       << "# time=" << format_double(s.time) << '\n'
       << "# nx=" << s.nx << '\n'
       << "# ny=" << s.ny << '\n'
       << "# dx=" << format_double(s.dx) << '\n'
       << "# dy=" << format_double(s.dy) << '\n'
       << "# gamma=" << format_double(s.gamma) << '\n';
    const auto cols = s.columns();
    os << "# columns=";
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
    os << '\n';

    for (std::size_t i = 0; i < s.cells(); ++i) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c) os << ',';
            if (const auto* d = column_target(s, cols[c])) os << format_double((*d)[i]);
            else os << int((*flag_target(s, cols[c]))[i]);
        }
        os << '\n';
    }
}

void write_snapshot(const std::filesystem::path& path, const Snapshot& s)
{
    std::ofstream os(path);
    if (!os) throw SolverError(ErrorKind::InvalidConfig, "cannot write " + path.string());
    write_snapshot(os, s);
}

Snapshot read_snapshot(std::istream& is)
{
    Snapshot s;
    std::string line;
    int lineno = 0;
    std::size_t header = 0;
    std::vector<std::string> cols;

    while (header < std::size(kHeaderKeys) + 1 && std::getline(is, line)) {
        ++lineno;
        if (line.rfind("# ", 0) != 0) parse_error("snapshot", lineno, "expected a '# key=value' header line");
        const auto eq = line.find('=');
        if (eq == std::string::npos) parse_error("snapshot", lineno, "header line without '='");
        const std::string key = trim(line.substr(2, eq - 2));
        const std::string val = trim(line.substr(eq + 1));
        const std::string expect = header < std::size(kHeaderKeys) ? kHeaderKeys[header] : "columns";
        if (key != expect) parse_error("snapshot", lineno, "expected key '" + expect + "', got '" + key + "'");
        if (key == "problem") s.problem = val;
        else if (key == "scheme") s.scheme = val;
        else if (key == "time") s.time = to_double(val, lineno);
        else if (key == "nx") s.nx = to_int(val, lineno);
        else if (key == "ny") s.ny = to_int(val, lineno);
        else if (key == "dx") s.dx = to_double(val, lineno);
        else if (key == "dy") s.dy = to_double(val, lineno);
        else if (key == "gamma") s.gamma = to_double(val, lineno);
        else cols = split(val, ',');
        ++header;
    }
    if (header != std::size(kHeaderKeys) + 1) parse_error("snapshot", lineno, "truncated header");
    for (const auto& c : cols)
        if (!column_target(s, c) && !flag_target(s, c)) parse_error("snapshot", lineno, "unknown column '" + c + "'");

    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != cols.size()) parse_error("snapshot", lineno, "wrong number of fields");
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (auto* d = column_target(s, cols[c])) {
                d->push_back(to_double(fields[c], lineno));
            } else {
                const int f = to_int(fields[c], lineno);
                if (f != 0 && f != 1) parse_error("snapshot", lineno, "flag must be 0 or 1");
                flag_target(s, cols[c])->push_back(static_cast<std::uint8_t>(f));
            }
        }
    }
    const auto expected = static_cast<std::size_t>(s.nx) * static_cast<std::size_t>(s.ny);
    if (s.rho.size() != expected) parse_error("snapshot", lineno, "row count does not match nx*ny");
    return s;
}

Snapshot read_snapshot(const std::filesystem::path& path)
{
    std::ifstream is(path);
    if (!is) throw SolverError(ErrorKind::ParseError, "cannot open " + path.string());
    return read_snapshot(is);
}

std::map<std::string, std::string> parse_key_values(std::istream& is)
{
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) parse_error("config", lineno, "expected key=value");
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) parse_error("config", lineno, "empty key");
        if (!kv.emplace(key, trim(t.substr(eq + 1))).second)
            parse_error("config", lineno, "repeated key '" + key + "'");
    }
    return kv;
}

std::map<std::string, std::string> parse_key_values(const std::filesystem::path& path)
{
    std::ifstream is(path);
    if (!is) throw SolverError(ErrorKind::ParseError, "cannot open " + path.string());
    return parse_key_values(is);
}

} // namespace ldcu

#include "chaoswave/key.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "chaoswave/errors.hpp"

namespace chaoswave {

void SecretKey::validate() const {
    if (!(x0 > 0.0 && x0 < 1.0))
        throw ParamError("key: x0 must lie in the open interval (0,1)");
    if (!(m > 0.0 && m < 1.0))
        throw ParamError("key: m must lie in the open interval (0,1)");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParamError("key: alpha must lie in the open interval (0,1)");
    if (n1 == 0)
        throw ParamError("key: n1 must be a positive integer");
    if (!(n1 < n2 && n2 < n3 && n3 < n4))
        throw ParamError("key: stage bounds must satisfy n1 < n2 < n3 < n4");
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_real(const std::string& name, const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw FormatError("key file: bad real value for '" + name + "': " + text);
    return value;
}

std::uint32_t parse_uint(const std::string& name, const std::string& text) {
    std::uint32_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw FormatError("key file: bad integer value for '" + name + "': " + text);
    return value;
}

} // namespace

SecretKey load_key_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("key file: cannot open " + path);

    std::map<std::string, std::string> fields;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw FormatError("key file: expected name=value, got: " + line);
        const std::string name = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (fields.count(name))
            throw FormatError("key file: duplicate field '" + name + "'");
        fields[name] = value;
    }

    static const char* kNames[] = {"x0", "m", "n1", "n2", "n3", "n4", "alpha"};
    for (const char* name : kNames)
        if (!fields.count(name))
            throw FormatError(std::string("key file: missing field '") + name + "'");
    for (const auto& [name, value] : fields) {
        bool known = false;
        for (const char* k : kNames) known = known || name == k;
        if (!known)
            throw FormatError("key file: unknown field '" + name + "'");
    }

    SecretKey key;
    key.x0 = parse_real("x0", fields["x0"]);
    key.m = parse_real("m", fields["m"]);
    key.n1 = parse_uint("n1", fields["n1"]);
    key.n2 = parse_uint("n2", fields["n2"]);
    key.n3 = parse_uint("n3", fields["n3"]);
    key.n4 = parse_uint("n4", fields["n4"]);
    key.alpha = parse_real("alpha", fields["alpha"]);
    key.validate();
    return key;
}

namespace {

// Shortest decimal string that parses back to the identical binary64.
std::string round_trip_decimal(double value) {
    char buf[64];
    for (int digits = 15; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, value);
        if (parse_real("round_trip", buf) == value) break;
    }
    return buf;
}

} // namespace

void save_key_file(const SecretKey& key, const std::string& path) {
    key.validate();
    std::ostringstream out;
    out << "x0=" << round_trip_decimal(key.x0) << "\n";
    out << "m=" << round_trip_decimal(key.m) << "\n";
    out << "n1=" << key.n1 << "\n";
    out << "n2=" << key.n2 << "\n";
    out << "n3=" << key.n3 << "\n";
    out << "n4=" << key.n4 << "\n";
    out << "alpha=" << round_trip_decimal(key.alpha) << "\n";

    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoError("key file: cannot write " + path);
    file << out.str();
    if (!file)
        throw IoError("key file: write failed for " + path);
}

} // namespace chaoswave

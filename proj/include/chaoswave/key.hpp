#pragma once

#include <cstdint>
#include <string>

namespace chaoswave {

/// Full key material of the cipher. Defaults are the reference parameter set.
struct SecretKey {
    double x0 = 0.123456;       // initial map state, in (0,1)
    double m = 0.489;           // map system parameter, in (0,1)
    std::uint32_t n1 = 1;       // shuffle-stage bounds, strictly increasing
    std::uint32_t n2 = 2;
    std::uint32_t n3 = 3;
    std::uint32_t n4 = 4;
    double alpha = 0.2;         // modulation control parameter, in (0,1)

    /// Throws ParamError if any field is outside its domain.
    void validate() const;

    bool operator==(const SecretKey&) const = default;
};

/// Parses a `name=value` key file (x0, m, n1..n4, alpha, one pair per line).
/// Blank lines and lines starting with '#' are ignored.
SecretKey load_key_file(const std::string& path);

/// Writes a key file in the format accepted by load_key_file. Reals are
/// emitted with enough digits that the binary64 values round-trip exactly.
void save_key_file(const SecretKey& key, const std::string& path);

} // namespace chaoswave

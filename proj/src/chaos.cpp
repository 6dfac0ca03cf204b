#include "chaoswave/chaos.hpp"

#include <cmath>

#include "chaoswave/errors.hpp"

namespace chaoswave {

namespace {

// Escape hatch for degenerate iterates. Eq-boundary hits map to exactly 1,
// and 0/1 are fixed or escaping points of the map, so they must never become
// the running state. The remap folds the previous state back into (0,1).
constexpr double kGuardSeed = 0.123456;
constexpr double kGuardFallback = 0.6180339887;

} // namespace

double pwlcm_step(double x, double m) {
    double r;
    if (x > 0.0 && x < m)
        r = x / m;
    else
        r = (1.0 - x) / (1.0 - m);
    if (r <= 0.0 || r >= 1.0) {
        double g = 0.5 * (x + kGuardSeed);
        g -= std::floor(g);
        if (g <= 0.0 || g >= 1.0) g = kGuardFallback;
        r = g;
    }
    return r;
}

ChaosEngine::ChaosEngine(const SecretKey& key) : x_(key.x0), m_(key.m) {
    key.validate();
    for (std::uint64_t i = 0; i < kWarmup; ++i) next_state();
}

double ChaosEngine::next_state() {
    x_ = pwlcm_step(x_, m_);
    ++iterations_;
    return x_;
}

std::uint64_t extract_index(double x, std::uint64_t k) {
    if (k == 0)
        throw ParamError("extract_index: k must be at least 1");
    if (!(x > 0.0 && x < 1.0))
        throw ParamError("extract_index: state outside (0,1)");
    const auto digits = static_cast<std::uint64_t>(std::floor(x * 1e10));
    return digits % k + 1;
}

std::uint8_t extract_key_byte(double x) {
    const auto digits = static_cast<std::uint64_t>(std::floor(x * 1e15));
    return static_cast<std::uint8_t>(digits % 256);
}

double quantize4(double x) {
    double k = std::round(x * 1e4);
    if (k < 1.0) k = 1.0;
    if (k > 9999.0) k = 9999.0;
    return k / 1e4;
}

ModSequence make_mod_sequence(ChaosEngine& engine, std::size_t p) {
    ModSequence seq;
    seq.y.reserve(p);
    seq.s.reserve(p);
    for (std::size_t j = 0; j < p; ++j) {
        const double y = quantize4(engine.next_state());
        seq.y.push_back(y);
        seq.s.push_back(y > 0.5 ? 1 : 0);
    }
    return seq;
}

std::vector<std::uint8_t> make_keystream(ChaosEngine& engine,
                                         std::span<const std::uint8_t> shuffle_keys,
                                         std::size_t total_len) {
    if (total_len < shuffle_keys.size())
        throw ParamError("make_keystream: total_len shorter than the shuffle-phase bytes");
    std::vector<std::uint8_t> keystream(shuffle_keys.begin(), shuffle_keys.end());
    keystream.reserve(total_len);
    while (keystream.size() < total_len)
        keystream.push_back(extract_key_byte(engine.next_state()));
    return keystream;
}

} // namespace chaoswave

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chaoswave/key.hpp"

namespace chaoswave {

/// Iterated piecewise-linear chaotic map with a monotone consumption index.
///
/// Construction warms the map up by 999 iterations, discarding the transient;
/// the first next_state() call therefore returns the 1000th iterate. States
/// are consumed strictly in order and never reused. Single consumer; safe to
/// move between threads, not to share mutably.
class ChaosEngine {
public:
    static constexpr std::uint64_t kWarmup = 999;

    explicit ChaosEngine(const SecretKey& key);

    /// Applies the map once (x/m on (0,m), (1-x)/(1-m) on [m,1)) and returns
    /// the new state. A degenerate result (<=0 or >=1, reachable only when an
    /// iterate hits the piece boundary exactly) is remapped deterministically
    /// back into (0,1).
    double next_state();

    double state() const { return x_; }
    /// Total map applications, warm-up included.
    std::uint64_t iterations() const { return iterations_; }
    /// States emitted to callers since construction.
    std::uint64_t consumed() const { return iterations_ - kWarmup; }

private:
    double x_;
    double m_;
    std::uint64_t iterations_ = 0;
};

/// One raw application of the map: x/m on (0,m), (1-x)/(1-m) otherwise,
/// followed by the degenerate-state guard. The guard fires only when an
/// iterate lands on the piece boundary (the raw result is then exactly 1);
/// it folds 0.5*(x + 0.123456) back into (0,1) by taking the fractional part.
double pwlcm_step(double x, double m);

/// Random position in [1,k] from a map state: floor(x*1e10) mod k + 1.
std::uint64_t extract_index(double x, std::uint64_t k);

/// Key byte from a map state: floor(x*1e15) mod 256.
std::uint8_t extract_key_byte(double x);

/// Rounds to 4 decimal digits (half away from zero) and clamps the result
/// into [0.0001, 0.9999] so it can always be divided by.
double quantize4(double x);

/// Modulation sequence: quantized states y and the derived bit sequence s.
struct ModSequence {
    std::vector<double> y;        // 4-decimal-digit values in [0.0001, 0.9999]
    std::vector<std::uint8_t> s;  // s[j] = 1 exactly when y[j] > 0.5
};

/// Consumes exactly p states from the engine.
ModSequence make_mod_sequence(ChaosEngine& engine, std::size_t p);

/// Extends the shuffle-phase key bytes to total_len by extracting one fresh
/// byte per map iteration. total_len below the existing length is an error.
std::vector<std::uint8_t> make_keystream(ChaosEngine& engine,
                                         std::span<const std::uint8_t> shuffle_keys,
                                         std::size_t total_len);

} // namespace chaoswave

#pragma once

#include <cstdint>
#include <span>

namespace chaoswave {

/// Negates ca[j] wherever s[j] == 1. Self-inverse.
void sign_flip(std::span<double> ca, std::span<const std::uint8_t> s);

/// ca[j] <- alpha * y[j] * ca[j].
void modulate(std::span<double> ca, std::span<const double> y, double alpha);

/// ca[j] <- ca[j] / (alpha * y[j]). Exact inverse of modulate up to binary64
/// rounding; y entries are guaranteed nonzero by the ModSequence clamp.
void demodulate(std::span<double> ca, std::span<const double> y, double alpha);

} // namespace chaoswave

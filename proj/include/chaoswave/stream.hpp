#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chaoswave/image.hpp"

namespace chaoswave {

// Fixed public constants of the diffusion and mixing passes; not key material.
inline constexpr std::uint8_t kDiffusionSentinel = 170; // virtual S[len+1]
inline constexpr std::uint8_t kMixCipherSeed = 85;      // C[0]
inline constexpr std::uint8_t kMixKeySeed = 123;        // key[0]

/// Converts each field value to its nearest binary32 and emits 4 bytes,
/// little-endian, row-major. Non-finite values are a FormatError.
std::vector<std::uint8_t> serialize(const RealField& field);

/// Exact inverse of serialize at the byte level. Requires bytes.size() == 4*rows*cols.
RealField deserialize(std::span<const std::uint8_t> bytes, std::size_t rows, std::size_t cols);

/// Backward self-keyed diffusion: for k = len down to 2,
/// S[k-1] ^= S[k] ^ S[k+1] (1-based, S[len+1] = sentinel). In place.
void self_diffuse(std::span<std::uint8_t> stream);

/// Forward replay of the same recurrence; exact inverse of self_diffuse.
void inverse_self_diffuse(std::span<std::uint8_t> stream);

/// 8-bit circular left rotation by 3.
constexpr std::uint8_t rotl3(std::uint8_t b) {
    return static_cast<std::uint8_t>((b << 3) | (b >> 5));
}

/// Forward chained mixing: C[i] = S[i] ^ key[i] ^ rotl3(key[i-1]) ^ C[i-1]
/// with C[0]=85, key[0]=123. In place; keystream length must match.
void mix(std::span<std::uint8_t> stream, std::span<const std::uint8_t> keystream);

/// Exact inverse of mix.
void unmix(std::span<std::uint8_t> stream, std::span<const std::uint8_t> keystream);

} // namespace chaoswave

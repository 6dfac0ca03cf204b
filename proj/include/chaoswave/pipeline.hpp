#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chaoswave/image.hpp"
#include "chaoswave/key.hpp"

namespace chaoswave {

/// On-disk ciphertext container. Layout (big-endian integers):
///   "CWC1" | version u8 | rows u32 | cols u32 | mode u8 | payload
/// Mode 0 is the exact mode; its payload holds 4*rows*cols bytes.
struct CipherBlob {
    static constexpr std::uint8_t kVersion = 1;
    static constexpr std::uint8_t kModeExact = 0;

    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::uint8_t version = kVersion;
    std::uint8_t mode = kModeExact;
    std::vector<std::uint8_t> payload;

    std::vector<std::uint8_t> to_bytes() const;
    static CipherBlob from_bytes(std::span<const std::uint8_t> bytes);

    void save(const std::string& path) const;
    static CipherBlob load(const std::string& path);
};

/// Chaotic states consumed per phase of one run. Encrypt and decrypt must
/// balance exactly: the phases cover disjoint, contiguous index ranges.
struct ConsumptionLedger {
    std::uint64_t warmup = 0;
    std::uint64_t shuffle = 0;
    std::uint64_t mod_sequence = 0;
    std::uint64_t keystream_extension = 0;

    std::uint64_t total() const { return warmup + shuffle + mod_sequence + keystream_extension; }
    bool operator==(const ConsumptionLedger&) const = default;
};

/// Full forward pipeline: analysis, staged shuffle, sign flip + modulation,
/// synthesis, exact-mode serialization, self diffusion, keyed mixing.
CipherBlob encrypt(const GrayImage& image, const SecretKey& key,
                   ConsumptionLedger* ledger = nullptr);

/// Exact reversal. The schedule, modulation sequence and keystream are
/// regenerated from the key in the identical consumption order; the blob
/// carries no key-derived material. A wrong key is not detectable and yields
/// a garbage image.
GrayImage decrypt(const CipherBlob& blob, const SecretKey& key,
                  ConsumptionLedger* ledger = nullptr);

/// The intermediate synthesized field after shuffle + modulation, before
/// diffusion. Real-valued; normalize externally for display export.
RealField shuffled_preview(const GrayImage& image, const SecretKey& key);

} // namespace chaoswave

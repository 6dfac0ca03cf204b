#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chaoswave/chaos.hpp"
#include "chaoswave/key.hpp"

namespace chaoswave {

/// One recorded transposition: 1-based positions, m <= k.
struct SwapPair {
    std::uint32_t k;
    std::uint32_t m;
    bool operator==(const SwapPair&) const = default;
};

/// Key-dependent staged shuffle plan. Stage xi holds the p-1 swaps
/// (k = p down to 2) for that pass; key_bytes are the bytes extracted from
/// the same states, in consumption order.
struct ShuffleSchedule {
    std::size_t p = 0;
    std::uint32_t n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    std::vector<std::vector<SwapPair>> stages;
    std::vector<std::uint8_t> key_bytes;
};

/// Which sub-bands participate in a given stage (1-based).
struct StagePlanes {
    bool cD = false;
    bool cH = false;
    bool cV = false;
    bool cA = false;
};

StagePlanes stage_planes(std::uint32_t stage, std::uint32_t n1, std::uint32_t n2,
                         std::uint32_t n3, std::uint32_t n4);

/// The four sub-bands flattened row-major to length-p arrays.
struct FlatBands {
    std::vector<double> cA;
    std::vector<double> cH;
    std::vector<double> cV;
    std::vector<double> cD;
};

/// Consumes n4*(p-1) engine states: one per (stage, count) step, feeding both
/// the swap position (k = p-count+1) and the key byte. Requires p >= 2.
ShuffleSchedule build_schedule(ChaosEngine& engine, std::size_t p, const SecretKey& key);

/// Applies the schedule in place. Within each step the same swap hits every
/// participating plane.
void shuffle(FlatBands& bands, const ShuffleSchedule& schedule);

/// Replays stages last-to-first, swaps last-to-first; exact inverse of shuffle.
void unshuffle(FlatBands& bands, const ShuffleSchedule& schedule);

} // namespace chaoswave

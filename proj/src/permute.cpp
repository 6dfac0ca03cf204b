#include "chaoswave/permute.hpp"

#include <utility>

#include "chaoswave/errors.hpp"

namespace chaoswave {

StagePlanes stage_planes(std::uint32_t stage, std::uint32_t n1, std::uint32_t n2,
                         std::uint32_t n3, std::uint32_t n4) {
    if (stage == 0 || stage > n4) return {};
    if (stage <= n1) return {true, true, true, true};
    if (stage <= n2) return {false, true, true, true};
    if (stage <= n3) return {false, false, true, true};
    return {false, false, false, true};
}

ShuffleSchedule build_schedule(ChaosEngine& engine, std::size_t p, const SecretKey& key) {
    key.validate();
    if (p < 2)
        throw ParamError("build_schedule: p must be at least 2");

    ShuffleSchedule schedule;
    schedule.p = p;
    schedule.n1 = key.n1;
    schedule.n2 = key.n2;
    schedule.n3 = key.n3;
    schedule.n4 = key.n4;
    schedule.stages.resize(key.n4);
    schedule.key_bytes.reserve(static_cast<std::size_t>(key.n4) * (p - 1));

    for (std::uint32_t stage = 1; stage <= key.n4; ++stage) {
        auto& swaps = schedule.stages[stage - 1];
        swaps.reserve(p - 1);
        for (std::size_t count = 1; count <= p - 1; ++count) {
            const double x = engine.next_state();
            const auto k = static_cast<std::uint32_t>(p - count + 1);
            const auto m = static_cast<std::uint32_t>(extract_index(x, k));
            swaps.push_back({k, m});
            schedule.key_bytes.push_back(extract_key_byte(x));
        }
    }
    return schedule;
}

namespace {

void check_bands(const FlatBands& bands, const ShuffleSchedule& schedule) {
    if (bands.cA.size() != schedule.p || bands.cH.size() != schedule.p ||
        bands.cV.size() != schedule.p || bands.cD.size() != schedule.p)
        throw ShapeError("shuffle: band length does not match schedule");
}

void apply_swap(FlatBands& bands, const StagePlanes& planes, const SwapPair& sw) {
    const std::size_t k = sw.k - 1;
    const std::size_t m = sw.m - 1;
    if (planes.cD) std::swap(bands.cD[k], bands.cD[m]);
    if (planes.cH) std::swap(bands.cH[k], bands.cH[m]);
    if (planes.cV) std::swap(bands.cV[k], bands.cV[m]);
    if (planes.cA) std::swap(bands.cA[k], bands.cA[m]);
}

} // namespace

void shuffle(FlatBands& bands, const ShuffleSchedule& schedule) {
    check_bands(bands, schedule);
    for (std::uint32_t stage = 1; stage <= schedule.n4; ++stage) {
        const StagePlanes planes =
            stage_planes(stage, schedule.n1, schedule.n2, schedule.n3, schedule.n4);
        for (const SwapPair& sw : schedule.stages[stage - 1])
            apply_swap(bands, planes, sw);
    }
}

void unshuffle(FlatBands& bands, const ShuffleSchedule& schedule) {
    check_bands(bands, schedule);
    for (std::uint32_t stage = schedule.n4; stage >= 1; --stage) {
        const StagePlanes planes =
            stage_planes(stage, schedule.n1, schedule.n2, schedule.n3, schedule.n4);
        const auto& swaps = schedule.stages[stage - 1];
        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
            apply_swap(bands, planes, *it);
    }
}

} // namespace chaoswave

#include "chaoswave/stream.hpp"

#include <bit>
#include <cmath>

#include "chaoswave/errors.hpp"

namespace chaoswave {

std::vector<std::uint8_t> serialize(const RealField& field) {
    std::vector<std::uint8_t> out;
    out.reserve(4 * field.size());
    for (const double v : field.values) {
        if (!std::isfinite(v))
            throw FormatError("serialize: non-finite field value");
        const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
        out.push_back(static_cast<std::uint8_t>(bits & 0xFF));
        out.push_back(static_cast<std::uint8_t>((bits >> 8) & 0xFF));
        out.push_back(static_cast<std::uint8_t>((bits >> 16) & 0xFF));
        out.push_back(static_cast<std::uint8_t>((bits >> 24) & 0xFF));
    }
    return out;
}

RealField deserialize(std::span<const std::uint8_t> bytes, std::size_t rows, std::size_t cols) {
    if (bytes.size() != 4 * rows * cols)
        throw ShapeError("deserialize: byte count does not match 4*rows*cols");
    RealField field(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        const std::uint32_t bits = static_cast<std::uint32_t>(bytes[4 * i]) |
                                   (static_cast<std::uint32_t>(bytes[4 * i + 1]) << 8) |
                                   (static_cast<std::uint32_t>(bytes[4 * i + 2]) << 16) |
                                   (static_cast<std::uint32_t>(bytes[4 * i + 3]) << 24);
        // NaN/Inf pass through untouched: wrong-key decryption feeds arbitrary
        // bytes in here and must stay well defined.
        field.values[i] = static_cast<double>(std::bit_cast<float>(bits));
    }
    return field;
}

void self_diffuse(std::span<std::uint8_t> stream) {
    const std::size_t len = stream.size();
    if (len < 2)
        throw ParamError("self_diffuse: stream must hold at least 2 bytes");
    const auto at = [&](std::size_t i) -> std::uint8_t {
        return i == len + 1 ? kDiffusionSentinel : stream[i - 1];
    };
    for (std::size_t k = len; k >= 2; --k)
        stream[k - 2] = static_cast<std::uint8_t>(stream[k - 2] ^ at(k) ^ at(k + 1));
}

void inverse_self_diffuse(std::span<std::uint8_t> stream) {
    const std::size_t len = stream.size();
    if (len < 2)
        throw ParamError("inverse_self_diffuse: stream must hold at least 2 bytes");
    const auto at = [&](std::size_t i) -> std::uint8_t {
        return i == len + 1 ? kDiffusionSentinel : stream[i - 1];
    };
    for (std::size_t k = 2; k <= len; ++k)
        stream[k - 2] = static_cast<std::uint8_t>(stream[k - 2] ^ at(k) ^ at(k + 1));
}

void mix(std::span<std::uint8_t> stream, std::span<const std::uint8_t> keystream) {
    if (keystream.size() != stream.size())
        throw ShapeError("mix: keystream length does not match stream");
    std::uint8_t prev_cipher = kMixCipherSeed;
    std::uint8_t prev_key = kMixKeySeed;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const std::uint8_t key = keystream[i];
        const auto cipher =
            static_cast<std::uint8_t>(stream[i] ^ key ^ rotl3(prev_key) ^ prev_cipher);
        stream[i] = cipher;
        prev_cipher = cipher;
        prev_key = key;
    }
}

void unmix(std::span<std::uint8_t> stream, std::span<const std::uint8_t> keystream) {
    if (keystream.size() != stream.size())
        throw ShapeError("unmix: keystream length does not match stream");
    std::uint8_t prev_cipher = kMixCipherSeed;
    std::uint8_t prev_key = kMixKeySeed;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const std::uint8_t cipher = stream[i];
        const std::uint8_t key = keystream[i];
        stream[i] = static_cast<std::uint8_t>(cipher ^ key ^ rotl3(prev_key) ^ prev_cipher);
        prev_cipher = cipher;
        prev_key = key;
    }
}

} // namespace chaoswave

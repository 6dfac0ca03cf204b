#pragma once

// Deterministic synthetic test corpus. The scenes are smooth multi-wave
// fields: neighbor correlation is high in every direction (like a
// photograph), the range stays inside [12, 242] so no pixel saturates, and
// generation depends on nothing but the variant number.

#include <cmath>
#include <cstdint>
#include <vector>

#include "chaoswave/image.hpp"

namespace testsupport {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

// Multi-octave value noise: random control grids blended with smoothstep
// weights. Pure +,-,*,/ arithmetic, so the pixels are bit-identical on any
// IEEE-754 platform (no libm in the loop).
inline chaoswave::GrayImage synthetic_image(std::uint64_t variant, std::size_t rows = 256,
                                            std::size_t cols = 256) {
    Rng rng(variant * 1000003ULL + 17);
    struct Layer {
        std::size_t cells;
        double amp;
    };
    const Layer layers[] = {{3, 1.0}, {7, 0.45}, {13, 0.18}};

    std::vector<std::vector<double>> grids;
    for (const Layer& layer : layers) {
        std::vector<double> grid((layer.cells + 1) * (layer.cells + 1));
        for (auto& v : grid) v = rng.uniform();
        grids.push_back(std::move(grid));
    }

    const auto smooth = [](double t) { return t * t * (3.0 - 2.0 * t); };
    std::vector<double> field(rows * cols);
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            double v = 0.0;
            for (std::size_t t = 0; t < std::size(layers); ++t) {
                const std::size_t cells = layers[t].cells;
                const double u_row = static_cast<double>(i * cells) / static_cast<double>(rows);
                const double u_col = static_cast<double>(j * cells) / static_cast<double>(cols);
                const auto r0 = static_cast<std::size_t>(u_row);
                const auto c0 = static_cast<std::size_t>(u_col);
                const double sr = smooth(u_row - static_cast<double>(r0));
                const double sc = smooth(u_col - static_cast<double>(c0));
                const std::vector<double>& g = grids[t];
                const std::size_t stride = cells + 1;
                const double top = g[r0 * stride + c0] * (1.0 - sc) + g[r0 * stride + c0 + 1] * sc;
                const double bottom =
                    g[(r0 + 1) * stride + c0] * (1.0 - sc) + g[(r0 + 1) * stride + c0 + 1] * sc;
                v += layers[t].amp * (top * (1.0 - sr) + bottom * sr);
            }
            field[i * cols + j] = v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }

    chaoswave::GrayImage image(rows, cols);
    const double span = hi - lo;
    for (std::size_t k = 0; k < field.size(); ++k)
        image.pixels[k] =
            static_cast<std::uint8_t>(std::lround(12.0 + 230.0 * (field[k] - lo) / span));
    return image;
}

/// Variant numbers of the frozen five-image acceptance corpus.
inline const std::vector<std::uint64_t>& corpus_variants() {
    static const std::vector<std::uint64_t> variants = {1, 2, 3, 4, 5};
    return variants;
}

/// Uniform random bytes for stream-level property tests.
inline std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng.next() >> 56);
    return out;
}

/// Uniform random noise image (every pixel independent).
inline chaoswave::GrayImage noise_image(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    return chaoswave::GrayImage(rows, cols, random_bytes(rows * cols, seed));
}

} // namespace testsupport

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chaoswave/image.hpp"
#include "chaoswave/key.hpp"
#include "chaoswave/pipeline.hpp"

namespace chaoswave {

/// Upper 0.001 critical value of chi-square with 255 degrees of freedom;
/// a uniform byte histogram stays below this with probability 0.999.
inline constexpr double kChiSquare255Crit = 330.519744;

/// Sampling PRNG for pair selection: 64-bit LCG (Knuth constants), wholly
/// separate from the cipher's chaotic map so metrics never touch its state.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform draw in [0, n) from the high bits.
    std::uint64_t below(std::uint64_t n) { return (next() >> 32) % n; }

private:
    std::uint64_t state_;
};

enum class Direction { horizontal, vertical, diagonal };

/// Gray values of sampled pixels and of their neighbors, index-aligned.
struct AdjacentPairs {
    std::vector<double> x;
    std::vector<double> y;
};

/// Sample Pearson correlation coefficient. Throws ParamError when either
/// component has zero variance (correlation undefined) or fewer than 2 pairs.
double correlation(std::span<const double> x, std::span<const double> y);
double correlation(const AdjacentPairs& pairs);

/// Draws `count` positions uniformly (seeded, reproducible) and pairs each
/// with its neighbor: (0,+1) horizontal, (+1,0) vertical, (+1,+1) diagonal.
AdjacentPairs sample_adjacent_pairs(const GrayImage& image, Direction direction,
                                    std::size_t count, std::uint64_t seed);

/// Shannon entropy in bits per symbol over the 256 byte values.
double entropy(std::span<const std::uint8_t> data);

/// Net pixel/byte change rate in percent: 100 * #{i : a[i] != b[i]} / n.
double npcr(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Byte-value counts and the uniformity chi-square statistic.
struct Histogram {
    static constexpr int kDof = 255;
    std::array<std::uint64_t, 256> counts{};
    double chi_square = 0.0;
};

Histogram histogram(std::span<const std::uint8_t> data);

/// Correlation/entropy/NPCR/histogram results for one image pair.
struct MetricsReport {
    double corr_horizontal = 0.0;
    double corr_vertical = 0.0;
    double corr_diagonal = 0.0;
    double entropy_bits = 0.0;
    double npcr_percent = 0.0;
    Histogram hist;
};

/// First rows*cols payload bytes reshaped to an image; the convention used
/// for plain-vs-cipher comparisons and scatter sampling.
GrayImage display_plane(const CipherBlob& blob);

/// Metrics of a plain image by itself (npcr_percent is left at 0).
MetricsReport analyze_plain(const GrayImage& image, std::uint64_t seed,
                            std::size_t pair_count = 1000);

/// Cipher-side metrics: correlations on the display plane, entropy and
/// histogram over the full payload, NPCR of plain vs display plane.
MetricsReport analyze_cipher(const GrayImage& plain, const CipherBlob& blob,
                             std::uint64_t seed, std::size_t pair_count = 1000);

/// Encrypts with `key`, decrypts with x0 perturbed by `delta`, and reports
/// the wrong decryption: its correlations, entropy and histogram, and its
/// NPCR against the plain image.
MetricsReport key_sensitivity(const GrayImage& image, const SecretKey& key,
                              double delta, std::uint64_t seed = 0);

nlohmann::json to_json(const Histogram& hist);
nlohmann::json to_json(const MetricsReport& report);

/// One `image,metric,value` row per metric.
void write_metrics_csv(std::ostream& out, const std::string& image_name,
                       const MetricsReport& report, bool header = true);
/// `value,count` rows.
void write_histogram_csv(std::ostream& out, const Histogram& hist);
/// `x,y` rows for scatter plotting.
void write_pairs_csv(std::ostream& out, const AdjacentPairs& pairs);

} // namespace chaoswave

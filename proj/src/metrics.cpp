#include "chaoswave/metrics.hpp"

#include <cmath>
#include <ostream>

#include "chaoswave/errors.hpp"

namespace chaoswave {

double correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw ShapeError("correlation: component arrays differ in length");
    const std::size_t n = x.size();
    if (n < 2)
        throw ParamError("correlation: need at least 2 pairs");
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double cov = 0.0, var_x = 0.0, var_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if (var_x == 0.0 || var_y == 0.0)
        throw ParamError("correlation: undefined for zero variance");
    return cov / (std::sqrt(var_x) * std::sqrt(var_y));
}

double correlation(const AdjacentPairs& pairs) {
    return correlation(pairs.x, pairs.y);
}

AdjacentPairs sample_adjacent_pairs(const GrayImage& image, Direction direction,
                                    std::size_t count, std::uint64_t seed) {
    if (count == 0)
        throw ParamError("sample_adjacent_pairs: count must be positive");
    std::size_t dr = 0, dc = 0;
    switch (direction) {
        case Direction::horizontal: dc = 1; break;
        case Direction::vertical: dr = 1; break;
        case Direction::diagonal: dr = 1; dc = 1; break;
    }
    if (image.rows <= dr || image.cols <= dc)
        throw ParamError("sample_adjacent_pairs: image too small to supply pairs");

    Lcg64 rng(seed);
    AdjacentPairs pairs;
    pairs.x.reserve(count);
    pairs.y.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t r = rng.below(image.rows - dr);
        const std::size_t c = rng.below(image.cols - dc);
        pairs.x.push_back(static_cast<double>(image.at(r, c)));
        pairs.y.push_back(static_cast<double>(image.at(r + dr, c + dc)));
    }
    return pairs;
}

double entropy(std::span<const std::uint8_t> data) {
    if (data.empty())
        throw ParamError("entropy: empty input");
    std::array<std::uint64_t, 256> counts{};
    for (const std::uint8_t b : data) ++counts[b];
    const double n = static_cast<double>(data.size());
    double h = 0.0;
    for (const std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

double npcr(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size())
        throw ShapeError("npcr: inputs differ in size");
    if (a.empty())
        throw ParamError("npcr: empty input");
    std::size_t differing = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++differing;
    return 100.0 * static_cast<double>(differing) / static_cast<double>(a.size());
}

Histogram histogram(std::span<const std::uint8_t> data) {
    if (data.empty())
        throw ParamError("histogram: empty input");
    Histogram hist;
    for (const std::uint8_t b : data) ++hist.counts[b];
    const double expected = static_cast<double>(data.size()) / 256.0;
    double chi = 0.0;
    for (const std::uint64_t c : hist.counts) {
        const double d = static_cast<double>(c) - expected;
        chi += d * d / expected;
    }
    hist.chi_square = chi;
    return hist;
}

GrayImage display_plane(const CipherBlob& blob) {
    const std::size_t n = static_cast<std::size_t>(blob.rows) * blob.cols;
    if (blob.payload.size() < n)
        throw ShapeError("display_plane: payload shorter than one pixel plane");
    return GrayImage(blob.rows, blob.cols,
                     std::vector<std::uint8_t>(blob.payload.begin(),
                                               blob.payload.begin() + static_cast<std::ptrdiff_t>(n)));
}

namespace {

void fill_correlations(MetricsReport& report, const GrayImage& image, std::uint64_t seed,
                       std::size_t pair_count) {
    report.corr_horizontal =
        correlation(sample_adjacent_pairs(image, Direction::horizontal, pair_count, seed));
    report.corr_vertical =
        correlation(sample_adjacent_pairs(image, Direction::vertical, pair_count, seed));
    report.corr_diagonal =
        correlation(sample_adjacent_pairs(image, Direction::diagonal, pair_count, seed));
}

} // namespace

MetricsReport analyze_plain(const GrayImage& image, std::uint64_t seed, std::size_t pair_count) {
    MetricsReport report;
    fill_correlations(report, image, seed, pair_count);
    report.entropy_bits = entropy(image.pixels);
    report.hist = histogram(image.pixels);
    return report;
}

MetricsReport analyze_cipher(const GrayImage& plain, const CipherBlob& blob, std::uint64_t seed,
                             std::size_t pair_count) {
    const GrayImage display = display_plane(blob);
    if (plain.rows != display.rows || plain.cols != display.cols)
        throw ShapeError("analyze_cipher: plain image and blob dimensions differ");
    MetricsReport report;
    fill_correlations(report, display, seed, pair_count);
    report.entropy_bits = entropy(blob.payload);
    report.hist = histogram(blob.payload);
    report.npcr_percent = npcr(plain.pixels, display.pixels);
    return report;
}

MetricsReport key_sensitivity(const GrayImage& image, const SecretKey& key, double delta,
                              std::uint64_t seed) {
    SecretKey perturbed = key;
    perturbed.x0 = key.x0 + delta;
    if (!(perturbed.x0 > 0.0 && perturbed.x0 < 1.0))
        throw ParamError("key_sensitivity: perturbed x0 leaves (0,1)");

    const CipherBlob blob = encrypt(image, key);
    const GrayImage wrong = decrypt(blob, perturbed);

    MetricsReport report;
    fill_correlations(report, wrong, seed, 1000);
    report.entropy_bits = entropy(wrong.pixels);
    report.hist = histogram(wrong.pixels);
    report.npcr_percent = npcr(image.pixels, wrong.pixels);
    return report;
}

nlohmann::json to_json(const Histogram& hist) {
    return nlohmann::json{{"counts", hist.counts},
                          {"chi_square", hist.chi_square},
                          {"dof", Histogram::kDof}};
}

nlohmann::json to_json(const MetricsReport& report) {
    return nlohmann::json{{"correlation",
                           {{"horizontal", report.corr_horizontal},
                            {"vertical", report.corr_vertical},
                            {"diagonal", report.corr_diagonal}}},
                          {"entropy", report.entropy_bits},
                          {"npcr", report.npcr_percent},
                          {"chi_square", report.hist.chi_square},
                          {"dof", Histogram::kDof}};
}

void write_metrics_csv(std::ostream& out, const std::string& image_name,
                       const MetricsReport& report, bool header) {
    if (header) out << "image,metric,value\n";
    const auto row = [&](const char* metric, double value) {
        out << image_name << ',' << metric << ',' << value << '\n';
    };
    row("correlation_horizontal", report.corr_horizontal);
    row("correlation_vertical", report.corr_vertical);
    row("correlation_diagonal", report.corr_diagonal);
    row("entropy", report.entropy_bits);
    row("npcr", report.npcr_percent);
    row("chi_square", report.hist.chi_square);
}

void write_histogram_csv(std::ostream& out, const Histogram& hist) {
    out << "value,count\n";
    for (std::size_t v = 0; v < hist.counts.size(); ++v)
        out << v << ',' << hist.counts[v] << '\n';
}

void write_pairs_csv(std::ostream& out, const AdjacentPairs& pairs) {
    out << "x,y\n";
    for (std::size_t i = 0; i < pairs.x.size(); ++i)
        out << pairs.x[i] << ',' << pairs.y[i] << '\n';
}

} // namespace chaoswave

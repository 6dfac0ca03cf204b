#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chaoswave/errors.hpp"
#include "chaoswave/image.hpp"
#include "chaoswave/key.hpp"
#include "chaoswave/metrics.hpp"
#include "chaoswave/pgm.hpp"
#include "chaoswave/pipeline.hpp"

namespace cw = chaoswave;
namespace fs = std::filesystem;

namespace {

// Exit codes by failure class, so scripts can tell them apart:
//   3 I/O (missing/unwritable file), 4 malformed input, 5 bad parameter values,
//   6 other library failure. CLI11 reports its own usage-error codes.
constexpr int kExitIo = 3;
constexpr int kExitFormat = 4;
constexpr int kExitParam = 5;
constexpr int kExitOther = 6;

double fresh_x0() {
    std::random_device rd;
    for (;;) {
        const std::uint64_t bits =
            (static_cast<std::uint64_t>(rd()) << 32) | static_cast<std::uint64_t>(rd());
        const double x = static_cast<double>(bits >> 11) * 0x1.0p-53;
        if (x > 0.0 && x < 1.0) return x;
    }
}

cw::GrayImage normalized_preview(const cw::RealField& field) {
    double lo = field.values.front(), hi = field.values.front();
    for (const double v : field.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi - lo;
    cw::GrayImage out(field.rows, field.cols);
    for (std::size_t i = 0; i < field.size(); ++i) {
        const double t = span > 0.0 ? (field.values[i] - lo) / span : 0.0;
        out.pixels[i] = static_cast<std::uint8_t>(std::round(t * 255.0));
    }
    return out;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw cw::IoError("cannot write " + path.string());
    out << text;
    if (!out)
        throw cw::IoError("write failed for " + path.string());
}

void dump_pairs(const fs::path& dir, const std::string& prefix, const cw::GrayImage& image,
                std::uint64_t seed) {
    const struct { cw::Direction dir; const char* name; } directions[] = {
        {cw::Direction::horizontal, "horizontal"},
        {cw::Direction::vertical, "vertical"},
        {cw::Direction::diagonal, "diagonal"},
    };
    for (const auto& d : directions) {
        std::ofstream out(dir / (prefix + "_" + d.name + ".csv"));
        cw::write_pairs_csv(out, cw::sample_adjacent_pairs(image, d.dir, 1000, seed));
    }
}

int run_analyze(const std::string& in, const std::string& out_dir, const cw::SecretKey& key,
                std::uint64_t seed, const std::string& format) {
    const cw::GrayImage plain = cw::read_pgm(in);
    const cw::CipherBlob blob = cw::encrypt(plain, key);

    const cw::MetricsReport plain_report = cw::analyze_plain(plain, seed);
    const cw::MetricsReport cipher_report = cw::analyze_cipher(plain, blob, seed);
    const double delta = 1e-14;
    const cw::MetricsReport sensitivity = cw::key_sensitivity(plain, key, delta, seed);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    const std::string name = fs::path(in).stem().string();

    if (format == "csv") {
        std::ostringstream csv;
        cw::write_metrics_csv(csv, name + "_plain", plain_report, true);
        cw::write_metrics_csv(csv, name + "_cipher", cipher_report, false);
        cw::write_metrics_csv(csv, name + "_wrong_key", sensitivity, false);
        write_text_file(dir / "report.csv", csv.str());
    } else {
        nlohmann::json report{{"image", name},
                              {"seed", seed},
                              {"key_delta", delta},
                              {"plain", cw::to_json(plain_report)},
                              {"cipher", cw::to_json(cipher_report)},
                              {"wrong_key", cw::to_json(sensitivity)}};
        write_text_file(dir / "report.json", report.dump(2) + "\n");
    }

    {
        std::ofstream hp(dir / "histogram_plain.csv");
        cw::write_histogram_csv(hp, plain_report.hist);
        std::ofstream hc(dir / "histogram_cipher.csv");
        cw::write_histogram_csv(hc, cipher_report.hist);
    }
    dump_pairs(dir, "pairs_plain", plain, seed);
    dump_pairs(dir, "pairs_cipher", cw::display_plane(blob), seed);

    std::cout << "entropy=" << cipher_report.entropy_bits
              << " npcr=" << cipher_report.npcr_percent
              << " chi_square=" << cipher_report.hist.chi_square << "\n"
              << "report written to " << (dir / (format == "csv" ? "report.csv" : "report.json")).string()
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chaoswave: chaotic wavelet-domain grayscale image cipher"};
    app.require_subcommand(1);

    std::string in_path, out_path, key_path, format = "json";
    std::uint64_t seed = 0;

    const auto add_key_option = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("-k,--key", key_path, "key file (name=value lines)")
                        ->envname("CHAOSWAVE_KEY");
        if (required) opt->required();
        return opt;
    };

    auto* enc = app.add_subcommand("encrypt", "encrypt a PGM image to a cipher blob");
    enc->add_option("-i,--in", in_path, "input PGM (P5)")->required();
    enc->add_option("-o,--out", out_path, "output blob path")->required();
    add_key_option(enc, true);

    auto* dec = app.add_subcommand("decrypt", "decrypt a cipher blob to a PGM image");
    dec->add_option("-i,--in", in_path, "input blob path")->required();
    dec->add_option("-o,--out", out_path, "output PGM path")->required();
    add_key_option(dec, true);

    auto* ana = app.add_subcommand("analyze", "statistical report for an image under a key");
    ana->add_option("-i,--in", in_path, "input PGM (P5)")->required();
    ana->add_option("-o,--out", out_path, "output directory for report and CSV dumps")->required();
    add_key_option(ana, true);
    ana->add_option("-s,--seed", seed, "pair-sampling seed (default 0)");
    ana->add_option("-f,--format", format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* gen = app.add_subcommand("keygen", "write a key file with default parameters and a fresh x0");
    gen->add_option("-o,--out", out_path, "output key file path")->required();

    auto* pre = app.add_subcommand("preview", "export the shuffled intermediate as a normalized PGM");
    pre->add_option("-i,--in", in_path, "input PGM (P5)")->required();
    pre->add_option("-o,--out", out_path, "output PGM path")->required();
    add_key_option(pre, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (gen->parsed()) {
            cw::SecretKey key;
            key.x0 = fresh_x0();
            cw::save_key_file(key, out_path);
            std::cout << "key written to " << out_path << "\n";
            return 0;
        }

        const cw::SecretKey key = cw::load_key_file(key_path);
        if (enc->parsed()) {
            const cw::GrayImage image = cw::read_pgm(in_path);
            cw::encrypt(image, key).save(out_path);
            std::cout << "cipher blob written to " << out_path << "\n";
        } else if (dec->parsed()) {
            const cw::CipherBlob blob = cw::CipherBlob::load(in_path);
            cw::write_pgm(cw::decrypt(blob, key), out_path);
            std::cout << "decrypted image written to " << out_path << "\n";
        } else if (pre->parsed()) {
            const cw::GrayImage image = cw::read_pgm(in_path);
            cw::write_pgm(normalized_preview(cw::shuffled_preview(image, key)), out_path);
            std::cout << "shuffled preview written to " << out_path << "\n";
        } else if (ana->parsed()) {
            return run_analyze(in_path, out_path, key, seed, format);
        }
        return 0;
    } catch (const cw::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const cw::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const cw::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    } catch (const cw::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOther;
    }
}

#include "chaoswave/pgm.hpp"

#include <fstream>
#include <string>

#include "chaoswave/errors.hpp"

namespace chaoswave {

namespace {

bool is_pgm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

// Skips whitespace and '#'-to-end-of-line comments between header tokens.
void skip_separators(std::span<const std::uint8_t> bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        if (is_pgm_space(bytes[pos])) {
            ++pos;
        } else if (bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
}

std::uint64_t read_number(std::span<const std::uint8_t> bytes, std::size_t& pos,
                          const char* what) {
    skip_separators(bytes, pos);
    if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9')
        throw FormatError(std::string("pgm: expected ") + what);
    std::uint64_t value = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
        value = value * 10 + (bytes[pos] - '0');
        if (value > 0xFFFFFFFFull)
            throw FormatError(std::string("pgm: ") + what + " out of range");
        ++pos;
    }
    return value;
}

} // namespace

GrayImage parse_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2)
        throw FormatError("pgm: file too short for a magic number");
    if (bytes[0] != 'P')
        throw FormatError("pgm: not a PNM file");
    if (bytes[1] != '5')
        throw FormatError("pgm: unsupported magic (only binary P5 is accepted)");

    std::size_t pos = 2;
    const std::uint64_t width = read_number(bytes, pos, "width");
    const std::uint64_t height = read_number(bytes, pos, "height");
    const std::uint64_t maxval = read_number(bytes, pos, "maxval");
    if (width == 0 || height == 0)
        throw FormatError("pgm: dimensions must be positive");
    if (maxval != 255)
        throw FormatError("pgm: unsupported maxval (must be 255)");
    if (pos >= bytes.size() || !is_pgm_space(bytes[pos]))
        throw FormatError("pgm: missing whitespace before raster");
    ++pos; // exactly one separator byte, then the raster

    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() - pos < count)
        throw FormatError("pgm: truncated raster");
    return GrayImage(height, width,
                     std::vector<std::uint8_t>(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                                               bytes.begin() + static_cast<std::ptrdiff_t>(pos + count)));
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& image) {
    const std::string header =
        "P5\n" + std::to_string(image.cols) + " " + std::to_string(image.rows) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.pixels.begin(), image.pixels.end());
    return out;
}

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("pgm: cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return parse_pgm(bytes);
}

void write_pgm(const GrayImage& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("pgm: cannot write " + path);
    const auto bytes = encode_pgm(image);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("pgm: write failed for " + path);
}

} // namespace chaoswave

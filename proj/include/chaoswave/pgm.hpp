#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chaoswave/image.hpp"

namespace chaoswave {

/// Parses a binary PGM (P5, maxval 255). Comments are allowed between header
/// tokens per the PGM grammar. Other magics, other maxvals and short rasters
/// are distinct FormatErrors.
GrayImage parse_pgm(std::span<const std::uint8_t> bytes);

/// Encodes as P5 with maxval 255. parse_pgm(encode_pgm(img)) == img, and the
/// raster bytes round-trip bit-for-bit.
std::vector<std::uint8_t> encode_pgm(const GrayImage& image);

GrayImage read_pgm(const std::string& path);
void write_pgm(const GrayImage& image, const std::string& path);

} // namespace chaoswave

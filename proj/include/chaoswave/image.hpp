#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "chaoswave/errors.hpp"

namespace chaoswave {

/// 8-bit grayscale image, row-major storage.
struct GrayImage {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;

    GrayImage(std::size_t rows_, std::size_t cols_, std::uint8_t fill = 0)
        : rows(rows_), cols(cols_), pixels(rows_ * cols_, fill) {
        if (rows == 0 || cols == 0)
            throw ShapeError("GrayImage: dimensions must be positive");
    }

    GrayImage(std::size_t rows_, std::size_t cols_, std::vector<std::uint8_t> data)
        : rows(rows_), cols(cols_), pixels(std::move(data)) {
        if (rows == 0 || cols == 0)
            throw ShapeError("GrayImage: dimensions must be positive");
        if (pixels.size() != rows * cols)
            throw ShapeError("GrayImage: pixel buffer size does not match dimensions");
    }

    std::uint8_t& at(std::size_t r, std::size_t c) { return pixels[r * cols + c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
    std::size_t size() const { return pixels.size(); }

    bool operator==(const GrayImage&) const = default;
};

/// Real-valued plane (wavelet coefficients, synthesized fields), row-major.
struct RealField {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    RealField() = default;

    RealField(std::size_t rows_, std::size_t cols_, double fill = 0.0)
        : rows(rows_), cols(cols_), values(rows_ * cols_, fill) {
        if (rows == 0 || cols == 0)
            throw ShapeError("RealField: dimensions must be positive");
    }

    RealField(std::size_t rows_, std::size_t cols_, std::vector<double> data)
        : rows(rows_), cols(cols_), values(std::move(data)) {
        if (rows == 0 || cols == 0)
            throw ShapeError("RealField: dimensions must be positive");
        if (values.size() != rows * cols)
            throw ShapeError("RealField: value buffer size does not match dimensions");
    }

    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    std::size_t size() const { return values.size(); }
};

} // namespace chaoswave

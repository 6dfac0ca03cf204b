#include "chaoswave/wavelet.hpp"

#include "chaoswave/errors.hpp"

namespace chaoswave {

SubBands dwt2(const RealField& field) {
    if (field.rows % 2 != 0 || field.cols % 2 != 0)
        throw ShapeError("dwt2: both dimensions must be even");
    const std::size_t r = field.rows / 2;
    const std::size_t c = field.cols / 2;
    SubBands bands{RealField(r, c), RealField(r, c), RealField(r, c), RealField(r, c)};
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const double a = field.at(2 * i, 2 * j);
            const double b = field.at(2 * i, 2 * j + 1);
            const double cc = field.at(2 * i + 1, 2 * j);
            const double d = field.at(2 * i + 1, 2 * j + 1);
            bands.cA.at(i, j) = (a + b + cc + d) / 2.0;
            bands.cH.at(i, j) = (a - b + cc - d) / 2.0;
            bands.cV.at(i, j) = (a + b - cc - d) / 2.0;
            bands.cD.at(i, j) = (a - b - cc + d) / 2.0;
        }
    }
    return bands;
}

SubBands dwt2(const GrayImage& image) {
    RealField field(image.rows, image.cols);
    for (std::size_t i = 0; i < image.size(); ++i)
        field.values[i] = static_cast<double>(image.pixels[i]);
    return dwt2(field);
}

RealField idwt2(const SubBands& bands) {
    const std::size_t r = bands.cA.rows;
    const std::size_t c = bands.cA.cols;
    const auto same = [&](const RealField& f) { return f.rows == r && f.cols == c; };
    if (!same(bands.cH) || !same(bands.cV) || !same(bands.cD))
        throw ShapeError("idwt2: sub-band planes differ in shape");
    RealField out(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const double a = bands.cA.at(i, j);
            const double h = bands.cH.at(i, j);
            const double v = bands.cV.at(i, j);
            const double d = bands.cD.at(i, j);
            out.at(2 * i, 2 * j) = (a + h + v + d) / 2.0;
            out.at(2 * i, 2 * j + 1) = (a - h + v - d) / 2.0;
            out.at(2 * i + 1, 2 * j) = (a + h - v - d) / 2.0;
            out.at(2 * i + 1, 2 * j + 1) = (a - h - v + d) / 2.0;
        }
    }
    return out;
}

} // namespace chaoswave

#pragma once

#include "chaoswave/image.hpp"

namespace chaoswave {

/// Level-1 orthonormal Haar sub-bands: approximation plus horizontal,
/// vertical and diagonal detail, each of size (rows/2) x (cols/2).
struct SubBands {
    RealField cA;
    RealField cH;
    RealField cV;
    RealField cD;
};

/// Separable orthonormal Haar analysis on non-overlapping 2x2 blocks
/// {a,b;c,d}: cA=(a+b+c+d)/2, cH=(a-b+c-d)/2, cV=(a+b-c-d)/2, cD=(a-b-c+d)/2.
/// Dimensions must be even.
SubBands dwt2(const RealField& field);
SubBands dwt2(const GrayImage& image);

/// Exact adjoint of dwt2. Output is real-valued and deliberately not clamped:
/// modulated coefficients legitimately synthesize out-of-range values.
RealField idwt2(const SubBands& bands);

} // namespace chaoswave

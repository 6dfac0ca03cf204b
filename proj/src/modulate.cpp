#include "chaoswave/modulate.hpp"

#include "chaoswave/errors.hpp"

namespace chaoswave {

void sign_flip(std::span<double> ca, std::span<const std::uint8_t> s) {
    if (ca.size() != s.size())
        throw ShapeError("sign_flip: coefficient and bit arrays differ in length");
    for (std::size_t j = 0; j < ca.size(); ++j)
        if (s[j]) ca[j] = -ca[j];
}

void modulate(std::span<double> ca, std::span<const double> y, double alpha) {
    if (ca.size() != y.size())
        throw ShapeError("modulate: coefficient and y arrays differ in length");
    for (std::size_t j = 0; j < ca.size(); ++j)
        ca[j] = alpha * y[j] * ca[j];
}

void demodulate(std::span<double> ca, std::span<const double> y, double alpha) {
    if (ca.size() != y.size())
        throw ShapeError("demodulate: coefficient and y arrays differ in length");
    for (std::size_t j = 0; j < ca.size(); ++j) {
        if (y[j] == 0.0)
            throw ParamError("demodulate: zero modulation value violates the sequence invariant");
        ca[j] = ca[j] / (alpha * y[j]);
    }
}

} // namespace chaoswave

#include <cmath>
#include <vector>

#include <doctest.h>

#include "chaoswave/errors.hpp"
#include "chaoswave/modulate.hpp"
#include "support/corpus.hpp"

using namespace chaoswave;

TEST_SUITE("modulate") {

TEST_CASE("sign flip negates exactly the marked entries") {
    std::vector<double> ca = {1.0, -2.0, 3.0};
    const std::vector<std::uint8_t> s = {1, 0, 1};
    sign_flip(ca, s);
    CHECK(ca == std::vector<double>{-1.0, -2.0, -3.0});

    std::vector<double> untouched = {5.0, -6.0};
    sign_flip(untouched, std::vector<std::uint8_t>{0, 0});
    CHECK(untouched == std::vector<double>{5.0, -6.0});
}

TEST_CASE("sign flip is an exact involution") {
    testsupport::Rng rng(21);
    std::vector<double> ca(1000);
    std::vector<std::uint8_t> s(1000);
    for (auto& v : ca) v = rng.uniform(-1e8, 1e8);
    for (auto& b : s) b = static_cast<std::uint8_t>(rng.next() & 1);
    const std::vector<double> original = ca;
    sign_flip(ca, s);
    sign_flip(ca, s);
    CHECK(ca == original);
}

TEST_CASE("modulation scales by alpha*y") {
    std::vector<double> ca = {10.0};
    modulate(ca, std::vector<double>{0.5}, 0.2);
    CHECK(ca[0] == 1.0);

    std::vector<double> zero = {0.0};
    modulate(zero, std::vector<double>{0.7431}, 0.9);
    CHECK(zero[0] == 0.0);
}

TEST_CASE("modulation is a strict contraction on nonzero values") {
    testsupport::Rng rng(22);
    std::vector<double> ca(500), y(500);
    for (auto& v : ca) v = rng.uniform(-1e4, 1e4);
    for (auto& v : y) v = 0.0001 + 0.9998 * rng.uniform();
    const std::vector<double> original = ca;
    modulate(ca, y, 0.2);
    for (std::size_t j = 0; j < ca.size(); ++j)
        if (original[j] != 0.0) CHECK(std::abs(ca[j]) < std::abs(original[j]));
}

TEST_CASE("demodulation inverts modulation") {
    std::vector<double> ca = {1.0};
    demodulate(ca, std::vector<double>{0.5}, 0.2);
    CHECK(ca[0] == doctest::Approx(10.0).epsilon(1e-12));

    testsupport::Rng rng(23);
    std::vector<double> values(2000), y(2000);
    for (auto& v : values) v = rng.uniform(-500.0, 500.0);
    for (auto& v : y) v = std::round((0.0001 + 0.9998 * rng.uniform()) * 1e4) / 1e4;
    const std::vector<double> original = values;
    modulate(values, y, 0.2);
    demodulate(values, y, 0.2);
    for (std::size_t j = 0; j < values.size(); ++j)
        CHECK(values[j] == doctest::Approx(original[j]).epsilon(1e-9));
}

TEST_CASE("round trip holds at the smallest modulation factor") {
    // alpha*y at its floor (0.2 * 0.0001 = 2e-5) amplifies by 5e4 on the way
    // back; binary64 keeps the relative error far below 1e-9.
    std::vector<double> y(1000, 0.0001);
    testsupport::Rng rng(24);
    std::vector<double> values(1000);
    for (auto& v : values) v = rng.uniform(-1000.0, 1000.0);
    const std::vector<double> original = values;
    modulate(values, y, 0.2);
    demodulate(values, y, 0.2);
    double worst = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (original[j] == 0.0) continue;
        worst = std::max(worst, std::abs(values[j] - original[j]) / std::abs(original[j]));
    }
    MESSAGE("worst relative round-trip error at alpha*y=2e-5: ", worst);
    CHECK(worst < 1e-9);
}

TEST_CASE("length mismatches and zero y are rejected") {
    std::vector<double> ca = {1.0, 2.0};
    CHECK_THROWS_AS(sign_flip(ca, std::vector<std::uint8_t>{1}), ShapeError);
    CHECK_THROWS_AS(modulate(ca, std::vector<double>{0.5}, 0.2), ShapeError);
    CHECK_THROWS_AS(demodulate(ca, std::vector<double>{0.5}, 0.2), ShapeError);
    CHECK_THROWS_AS(demodulate(ca, std::vector<double>{0.5, 0.0}, 0.2), ParamError);
}

} // TEST_SUITE

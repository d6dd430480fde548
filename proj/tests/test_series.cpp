#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fsdet/rng.hpp"
#include "fsdet/series.hpp"

using namespace fsdet;

namespace {

TaylorCoeffs random_series(SplitMix64& rng, int order, double max_modulus) {
    TaylorCoeffs s(order);
    const double two_pi = 8.0 * std::atan(1.0);
    for (int k = 0; k <= order; ++k) {
        const double mod = max_modulus * rng.uniform();
        const double phase = two_pi * rng.uniform();
        s.coeffs[static_cast<std::size_t>(k)] =
            mod * Complex(std::cos(phase), std::sin(phase));
    }
    return s;
}

double max_abs_diff(const TaylorCoeffs& a, const TaylorCoeffs& b) {
    double worst = 0.0;
    for (int k = 0; k <= std::min(a.order(), b.order()); ++k) {
        worst = std::max(worst, std::abs(a.at(k) - b.at(k)));
    }
    return worst;
}

double max_abs(const TaylorCoeffs& a) {
    double worst = 0.0;
    for (Complex v : a.coeffs) worst = std::max(worst, std::abs(v));
    return worst;
}

}  // namespace

TEST_CASE("lincomb basics") {
    const TaylorCoeffs one_plus_z({1.0, 1.0});
    const TaylorCoeffs one_minus_z({1.0, -1.0});
    const TaylorCoeffs sum = series_lincomb({{1.0, one_plus_z}, {1.0, one_minus_z}}, 1);
    CHECK(sum.at(0) == Complex(2.0));
    CHECK(sum.at(1) == Complex(0.0));

    const TaylorCoeffs s({3.0, {0.0, 1.0}, -2.0});
    const TaylorCoeffs zero = series_lincomb({{0.0, s}}, 2);
    for (int k = 0; k <= 2; ++k) CHECK(zero.at(k) == Complex(0.0));

    const TaylorCoeffs t({0.0, 1.0, 2.0});
    const TaylorCoeffs same = series_lincomb({{2.0, t}, {-1.0, t}}, 2);
    CHECK(max_abs_diff(same, t) == 0.0);

    CHECK_THROWS_WITH_AS(series_lincomb({}, 2), "no terms", std::invalid_argument);
}

TEST_CASE("cauchy product basics") {
    const TaylorCoeffs one_plus_z({1.0, 1.0, 0.0});
    const TaylorCoeffs sq = series_mul(one_plus_z, one_plus_z, 2);
    CHECK(sq.at(0) == Complex(1.0));
    CHECK(sq.at(1) == Complex(2.0));
    CHECK(sq.at(2) == Complex(1.0));

    SplitMix64 rng(7);
    const TaylorCoeffs s = random_series(rng, 4, 5.0);
    const TaylorCoeffs identity({1.0, 0.0, 0.0, 0.0, 0.0});
    CHECK(max_abs_diff(series_mul(identity, s, 4), s) == 0.0);

    const TaylorCoeffs z({0.0, 1.0, 0.0});
    const TaylorCoeffs zz = series_mul(z, z, 2);
    CHECK(zz.at(0) == Complex(0.0));
    CHECK(zz.at(1) == Complex(0.0));
    CHECK(zz.at(2) == Complex(1.0));
}

TEST_CASE("binomial series examples") {
    const TaylorCoeffs k = series_binomial_pow(1.0, 1, -2.0, 3);
    for (int n = 0; n <= 3; ++n) CHECK(k.at(n).real() == doctest::Approx(n + 1).epsilon(1e-15));

    const TaylorCoeffs cube = series_binomial_pow(1.0, 3, -2.0, 4);
    CHECK(cube.at(0) == Complex(1.0));
    CHECK(cube.at(1) == Complex(0.0));
    CHECK(cube.at(2) == Complex(0.0));
    CHECK(cube.at(3) == Complex(2.0));
    CHECK(cube.at(4) == Complex(0.0));

    // (1 - z^3)^{-2/3}: leading fractional coefficient 2/3, cross-checked
    // by cubing the series and comparing with the integer exponent case.
    const TaylorCoeffs frac = series_binomial_pow(1.0, 3, -2.0 / 3.0, 9);
    CHECK(frac.at(3).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(frac.at(3).imag() == 0.0);
    const TaylorCoeffs cubed = series_mul(series_mul(frac, frac, 9), frac, 9);
    const TaylorCoeffs direct = series_binomial_pow(1.0, 3, -2.0, 9);
    CHECK(max_abs_diff(cubed, direct) < 1e-12);

    CHECK_THROWS_AS(series_binomial_pow(1.0, 0, -2.0, 3), std::invalid_argument);
}

TEST_CASE("product is commutative and associative") {
    SplitMix64 rng(123);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int order = 4 + static_cast<int>(rng.below(13));  // up to 16
        const TaylorCoeffs a = random_series(rng, order, 10.0);
        const TaylorCoeffs b = random_series(rng, order, 10.0);
        const TaylorCoeffs c = random_series(rng, order, 10.0);
        const double scale = std::max(1.0, max_abs(series_mul(a, b, order)));
        worst = std::max(worst,
                         max_abs_diff(series_mul(a, b, order), series_mul(b, a, order)) /
                             scale);
        const TaylorCoeffs left = series_mul(series_mul(a, b, order), c, order);
        const TaylorCoeffs right = series_mul(a, series_mul(b, c, order), order);
        worst = std::max(worst,
                         max_abs_diff(left, right) / std::max(1.0, max_abs(left)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("binomial series inverts under exponent negation") {
    SplitMix64 rng(99);
    const double two_pi = 8.0 * std::atan(1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const double mod = rng.uniform();
        const double phase = two_pi * rng.uniform();
        const Complex u = mod * Complex(std::cos(phase), std::sin(phase));
        const double p = -3.0 + 6.0 * rng.uniform();
        const int k = 1 + static_cast<int>(rng.below(3));
        const TaylorCoeffs pos = series_binomial_pow(u, k, p, 12);
        const TaylorCoeffs neg = series_binomial_pow(u, k, -p, 12);
        const TaylorCoeffs prod = series_mul(pos, neg, 12);
        worst = std::max(worst, std::abs(prod.at(0) - 1.0));
        for (int n = 1; n <= 12; ++n) worst = std::max(worst, std::abs(prod.at(n)));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("coefficient csv round trip") {
    SplitMix64 rng(5);
    const TaylorCoeffs s = random_series(rng, 6, 3.0);
    const TaylorCoeffs back = coeffs_from_csv(coeffs_to_csv(s));
    REQUIRE(back.order() == s.order());
    for (int k = 0; k <= 6; ++k) CHECK(back.at(k) == s.at(k));  // 17 digits round-trip exactly

    CHECK_THROWS_AS(coeffs_from_csv("re,im\n1,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(coeffs_from_csv("k,re,im\n0,1,2\n2,0,0\n"), std::invalid_argument);
    CHECK_THROWS_AS(coeffs_from_csv("k,re,im\n"), std::invalid_argument);
}

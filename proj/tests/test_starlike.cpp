#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fsdet/determinants.hpp"
#include "fsdet/rng.hpp"
#include "fsdet/starlike.hpp"

using namespace fsdet;

namespace {

const double kTwoPi = 8.0 * std::atan(1.0);

CaratheodoryCoeffs coeffs_of(std::initializer_list<Complex> values) {
    CaratheodoryCoeffs c;
    c.c = values;
    return c;
}

double max_coeff_diff(const StarlikeCoeffs& a, const StarlikeCoeffs& b) {
    double worst = 0.0;
    for (int n = 1; n <= std::min(a.order(), b.order()); ++n) {
        worst = std::max(worst, std::abs(a.an(n) - b.an(n)));
    }
    return worst;
}

}  // namespace

TEST_CASE("lift examples") {
    const StarlikeCoeffs koebe = lift_starlike(coeffs_of({2.0, 2.0, 2.0, 2.0}), 5);
    for (int n = 1; n <= 5; ++n) {
        CHECK(std::abs(koebe.an(n) - Complex(n)) < 1e-14);
    }

    const StarlikeCoeffs two_sym = lift_starlike(coeffs_of({0.0, 2.0, 0.0, 2.0}), 5);
    const double expected_two[] = {1.0, 0.0, 1.0, 0.0, 1.0};
    for (int n = 1; n <= 5; ++n) {
        CHECK(std::abs(two_sym.an(n) - Complex(expected_two[n - 1])) < 1e-14);
    }

    const StarlikeCoeffs threefold = lift_starlike(coeffs_of({0.0, 0.0, 2.0, 0.0}), 5);
    CHECK(std::abs(threefold.an(2)) == 0.0);
    CHECK(std::abs(threefold.an(3)) == 0.0);
    CHECK(std::abs(threefold.an(4) - Complex(2.0 / 3.0)) < 1e-15);
    CHECK(std::abs(threefold.an(5)) == 0.0);

    CHECK_THROWS_WITH_AS(lift_starlike(coeffs_of({2.0, 2.0}), 5),
                         "insufficient coefficients", std::invalid_argument);
}

TEST_CASE("recurrence reproduces the closed coefficient identities") {
    // a2 = c1, 2 a3 = c2 + c1^2, 6 a4 = 2 c3 + 3 c1 c2 + c1^3
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(5));
        const CaratheodoryCoeffs c = mixture_coeffs(random_mixture(rng, m), 3);
        const StarlikeCoeffs f = lift_starlike(c, 4);
        const Complex c1 = c.ck(1), c2 = c.ck(2), c3 = c.ck(3);
        CHECK(std::abs(f.an(2) - c1) < 1e-14);
        CHECK(std::abs(2.0 * f.an(3) - (c2 + c1 * c1)) < 1e-13);
        CHECK(std::abs(6.0 * f.an(4) - (2.0 * c3 + 3.0 * c1 * c2 + c1 * c1 * c1)) < 1e-13);
    }
}

TEST_CASE("catalog entries") {
    const StarlikeCoeffs koebe = catalog(CatalogId::koebe);
    for (int n = 1; n <= koebe.order(); ++n) {
        CHECK(koebe.an(n).real() == doctest::Approx(n).epsilon(1e-15));
    }
    CHECK_FALSE(koebe.suspect);

    const StarlikeCoeffs two_sym = catalog(CatalogId::two_symmetric);
    CHECK(std::abs(two_sym.an(3) - Complex(1.0)) == 0.0);
    CHECK(std::abs(two_sym.an(4)) == 0.0);
    CHECK_FALSE(two_sym.suspect);

    const StarlikeCoeffs lit2 = catalog(CatalogId::paper_thm2_literal);
    CHECK(std::abs(lit2.an(4) - Complex(2.0)) == 0.0);
    CHECK(std::abs(lit2.an(2)) == 0.0);
    CHECK(std::abs(lit2.an(7) - Complex(3.0)) == 0.0);
    CHECK(lit2.suspect);  // Re[zf'/f] -> -2 as z^3 -> -1

    const double alpha = 0.8;
    const StarlikeCoeffs lit3 = catalog(CatalogId::paper_thm3_literal, alpha);
    CHECK(lit3.an(3).real() == doctest::Approx(1.0 / std::sqrt(alpha)).epsilon(1e-14));
    CHECK(lit3.an(5).real() == doctest::Approx(1.0 / alpha).epsilon(1e-14));
    CHECK(std::abs(lit3.an(2)) == 0.0);
    CHECK(std::abs(lit3.an(4)) == 0.0);
    CHECK(lit3.suspect);  // pole at |z| = alpha^{1/4} < 1

    CHECK_FALSE(catalog(CatalogId::paper_thm3_literal, 1.0).suspect);
    CHECK_FALSE(catalog(CatalogId::paper_thm3_literal, 4.0).suspect);

    const StarlikeCoeffs k3 = catalog(CatalogId::kfold, 3.0);
    CHECK(k3.an(4).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK_FALSE(k3.suspect);

    CHECK_THROWS_AS(catalog(CatalogId::paper_thm3_literal, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(catalog(CatalogId::kfold, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(catalog(CatalogId::kfold, 1.5), std::invalid_argument);
}

TEST_CASE("rotation") {
    const StarlikeCoeffs koebe = catalog(CatalogId::koebe, 0.0, 5);
    CHECK(max_coeff_diff(rotate(koebe, Complex(1.0)), koebe) == 0.0);

    const StarlikeCoeffs flipped = rotate(koebe, Complex(-1.0));
    const double expected[] = {1.0, -2.0, 3.0, -4.0, 5.0};
    for (int n = 1; n <= 5; ++n) {
        CHECK(std::abs(flipped.an(n) - Complex(expected[n - 1])) == 0.0);
    }

    const StarlikeCoeffs turned = rotate(koebe, Complex(0.0, 1.0));
    CHECK(std::abs(turned.an(2) - Complex(0.0, 2.0)) < 1e-15);
    CHECK(std::abs(turned.an(3) - Complex(-3.0, 0.0)) < 1e-15);
    CHECK(std::abs(turned.an(4) - Complex(0.0, -4.0)) < 1e-15);
    CHECK(std::abs(turned.an(5) - Complex(5.0, 0.0)) < 1e-15);

    CHECK_THROWS_AS(rotate(koebe, Complex(0.5)), std::invalid_argument);
}

TEST_CASE("lifted coefficients satisfy |a_n| <= n") {
    SplitMix64 rng(21);
    double worst = -1.0;
    for (int s = 0; s < 10000; ++s) {
        const int m = 1 + static_cast<int>(rng.below(6));
        const StarlikeCoeffs f =
            lift_starlike(mixture_coeffs(random_mixture(rng, m), 5), 6);
        for (int n = 2; n <= 6; ++n) {
            worst = std::max(worst, std::abs(f.an(n)) - static_cast<double>(n));
        }
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("single atom lifts to a rotated koebe function") {
    SplitMix64 rng(31);
    const StarlikeCoeffs koebe = catalog(CatalogId::koebe, 0.0, 6);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = kTwoPi * rng.uniform();
        const StarlikeCoeffs lifted =
            lift_starlike(mixture_coeffs(AtomMixture{{1.0}, {theta}}, 5), 6);
        const StarlikeCoeffs rotated =
            rotate(koebe, Complex(std::cos(theta), std::sin(theta)));
        worst = std::max(worst, max_coeff_diff(lifted, rotated));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("rotation leaves every functional modulus unchanged") {
    SplitMix64 rng(41);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(5));
        const StarlikeCoeffs f =
            lift_starlike(mixture_coeffs(random_mixture(rng, m), 5), 6);
        const double phase = kTwoPi * rng.uniform();
        const StarlikeCoeffs g = rotate(f, Complex(std::cos(phase), std::sin(phase)));
        const Functional fns[] = {
            Functional::fekete_szego(0.1 + 2.9 * rng.uniform()),
            Functional::h2_2(0.1 + 2.9 * rng.uniform()),
            Functional::b2_1(0.1 + 2.9 * rng.uniform()),
            Functional::h3(0.5, 1.5, 2.5),
        };
        for (const Functional& fn : fns) {
            const double before = std::abs(functional_eval(f, fn));
            const double after = std::abs(functional_eval(g, fn));
            worst = std::max(worst, std::abs(after - before));
        }
    }
    CHECK(worst <= 1e-12);
}

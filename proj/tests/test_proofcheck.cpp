#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fsdet/proofcheck.hpp"

using namespace fsdet;

TEST_CASE("t2 profile values") {
    // F(0) coincides with G1 across the grid
    for (int ic = 0; ic <= 20; ++ic) {
        const double c = 2.0 * ic / 20.0;
        const T2Profile p = t2_profile(c, 0.0, 0.7);
        CHECK(p.f == doctest::Approx(p.g1).epsilon(1e-14));
    }

    // G2(2) = 4 - 2 beta
    for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const T2Profile p = t2_profile(2.0, 1.0, beta);
        CHECK(p.g2 == doctest::Approx(4.0 - 2.0 * beta).epsilon(1e-14));
        CHECK(p.f == doctest::Approx(p.g2).epsilon(1e-13));
    }

    // G3(1) = (1 + beta)/2
    for (double beta : {0.0, 0.3, 1.0}) {
        const T2Profile p = t2_profile(1.0, 0.5, beta);
        REQUIRE(p.g3.has_value());
        CHECK(*p.g3 == doctest::Approx((1.0 + beta) / 2.0).epsilon(1e-14));
    }

    // G3 only exists for c <= 1
    CHECK_FALSE(t2_profile(1.5, 0.5, 0.5).g3.has_value());

    CHECK_THROWS_WITH_AS(t2_profile(2.5, 0.0, 0.5), "out of range", std::invalid_argument);
    CHECK_THROWS_AS(t2_profile(1.0, 1.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(t2_profile(1.0, 0.5, 1.5), std::invalid_argument);
}

TEST_CASE("t3 profile values") {
    // alpha = 1 collapses the low-branch G to the constant 1
    for (int ic = 0; ic <= 20; ++ic) {
        const double c = 2.0 * ic / 20.0;
        CHECK(t3_profile(c, 0.0, 1.0).g == doctest::Approx(1.0).epsilon(1e-14));
    }

    // high-branch G at c = 2 evaluates to 9 alpha - 8
    CHECK(t3_profile(2.0, 0.0, 2.0).g == doctest::Approx(10.0).epsilon(1e-14));

    // derivative against a centered difference
    for (double alpha : {0.7, 1.0, 1.6}) {
        for (double c : {0.3, 1.1, 1.9}) {
            for (double rho : {0.2, 0.5, 0.8}) {
                const double h = 1e-5;
                const double fd =
                    (t3_profile(c, rho + h, alpha).f - t3_profile(c, rho - h, alpha).f) /
                    (2.0 * h);
                CHECK(t3_profile(c, rho, alpha).fprime == doctest::Approx(fd).epsilon(1e-8));
            }
        }
    }

    // F' stays nonnegative on the printed range
    for (double alpha : {2.0 / 3.0, 0.8, 1.0, 10.0 / 9.0}) {
        for (int ic = 0; ic <= 40; ++ic) {
            const double c = 2.0 * ic / 40.0;
            CHECK(t3_profile(c, 0.0, alpha).fprime >= -1e-12);
            CHECK(t3_profile(c, 1.0, alpha).fprime >= -1e-12);
        }
    }

    CHECK_THROWS_AS(t3_profile(1.0, 0.5, -0.1), std::invalid_argument);
}

TEST_CASE("proof replay passes on both suites") {
    const ProofReport t2 = verify_claims(ProofTheorem::t2, 128);
    CHECK(t2.pass());
    CHECK(t2.claims.size() >= 8);
    bool saw_rho_star = false;
    for (const ProofClaim& claim : t2.claims) {
        INFO(claim.label, " deviation ", claim.max_deviation);
        CHECK(claim.pass);
        if (claim.label == "rho_star_at_c_over_2_minus_c") saw_rho_star = true;
    }
    CHECK(saw_rho_star);

    const ProofReport t3 = verify_claims(ProofTheorem::t3, 128);
    CHECK(t3.pass());
    for (const ProofClaim& claim : t3.claims) {
        INFO(claim.label, " deviation ", claim.max_deviation);
        CHECK(claim.pass);
    }

    CHECK_THROWS_AS(verify_claims(ProofTheorem::t2, 50), std::invalid_argument);
}

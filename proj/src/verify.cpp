#include "fsdet/verify.hpp"

#include <cmath>

#include "fsdet/caratheodory.hpp"
#include "fsdet/determinants.hpp"
#include "fsdet/proofcheck.hpp"
#include "fsdet/rng.hpp"
#include "fsdet/starlike.hpp"

namespace fsdet {

namespace {

const double kTwoPi = 8.0 * std::atan(1.0);

struct Accumulator {
    long long samples = 0;
    long long violations = 0;
    double max_deviation = 0.0;

    void observe(double deviation, double tol) {
        ++samples;
        max_deviation = std::max(max_deviation, deviation);
        if (deviation > tol) ++violations;
    }

    SuiteCheck finish(const std::string& label) const {
        return {label, samples, violations, max_deviation, violations == 0};
    }
};

// Random test function with a1 = 1 and |a_n| <= n, the shape every lift
// of a valid mixture has.
StarlikeCoeffs random_coeffs(SplitMix64& rng, int order) {
    StarlikeCoeffs f;
    f.a.assign(static_cast<std::size_t>(order) + 1, Complex(0.0));
    f.a[1] = 1.0;
    for (int n = 2; n <= order; ++n) {
        const double mod = static_cast<double>(n) * rng.uniform();
        const double phase = kTwoPi * rng.uniform();
        f.a[static_cast<std::size_t>(n)] = mod * Complex(std::cos(phase), std::sin(phase));
    }
    f.provenance = "random";
    return f;
}

}  // namespace

bool SuiteReport::pass() const {
    for (const SuiteCheck& check : checks) {
        if (!check.pass) return false;
    }
    return true;
}

SuiteReport lemmas_suite(long long samples, std::uint64_t seed) {
    SuiteReport report;
    report.suite = "lemmas";
    SplitMix64 rng(seed);

    Accumulator lemma1, lemma2, an_bound, trip_x, trip_roundtrip;
    const double sigmas[] = {-2.0, -1.0, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
    for (long long s = 0; s < samples; ++s) {
        const int m = 1 + static_cast<int>(rng.below(6));
        const AtomMixture mix = random_mixture(rng, m);
        const CaratheodoryCoeffs c = mixture_coeffs(mix, 8);

        double worst = 0.0;
        for (int k = 1; k <= 8; ++k) worst = std::max(worst, std::abs(c.ck(k)) - 2.0);
        lemma1.observe(worst, 1e-12);

        double worst2 = 0.0;
        for (double sigma : sigmas) {
            const Lemma2Check chk = lemma2_check(c, sigma);
            worst2 = std::max(worst2, chk.lhs - chk.bound);
        }
        lemma2.observe(worst2, 1e-12);

        const StarlikeCoeffs f = lift_starlike(c, 6);
        double worsta = 0.0;
        for (int n = 2; n <= 6; ++n) {
            worsta = std::max(worsta, std::abs(f.an(n)) - static_cast<double>(n));
        }
        an_bound.observe(worsta, 1e-9);

        if (std::abs(c.ck(1)) <= 1.9) {
            const Lemma3Inverse inv = lemma3_invert(c);
            trip_x.observe(std::abs(inv.params.x) - 1.0, 1e-9);
            if (std::abs(inv.params.x) < 1.0 - 1e-6) {
                const CaratheodoryCoeffs rotated = rotate(c, inv.rotation);
                const CaratheodoryCoeffs redone = lemma3_coeffs(inv.params);
                const double dev = std::max(std::abs(redone.ck(2) - rotated.ck(2)),
                                            std::abs(redone.ck(3) - rotated.ck(3)));
                trip_roundtrip.observe(dev, 1e-10);
            }
        }
    }
    report.checks.push_back(lemma1.finish("coefficient_bound_ck_le_2"));
    report.checks.push_back(lemma2.finish("sigma_functional_bound"));
    report.checks.push_back(an_bound.finish("lift_bound_an_le_n"));
    report.checks.push_back(trip_x.finish("invert_recovers_x_in_disk"));
    report.checks.push_back(trip_roundtrip.finish("triple_round_trip"));

    // |c2| and |c3| never leave the disk of radius 2 anywhere on the
    // parametrization box; z is taken on the boundary with the worst
    // phase, which dominates every other z.
    Accumulator box;
    const int n = 50;
    for (int ic = 0; ic < n; ++ic) {
        const double c1 = 2.0 * ic / (n - 1);
        const double rest = 4.0 - c1 * c1;
        for (int ir = 0; ir < n; ++ir) {
            const double rho = static_cast<double>(ir) / (n - 1);
            for (int ip = 0; ip < n; ++ip) {
                const double phi = kTwoPi * ip / n;
                const Complex x = rho * Complex(std::cos(phi), std::sin(phi));
                const Complex c2 = (c1 * c1 + x * rest) / 2.0;
                const Complex head =
                    (c1 * c1 * c1 + 2.0 * x * c1 * rest - x * x * c1 * rest) / 4.0;
                const double c3_worst =
                    std::abs(head) + (1.0 - rho * rho) * rest / 2.0;
                box.observe(std::max(std::abs(c2) - 2.0, c3_worst - 2.0), 1e-12);
            }
        }
    }
    report.checks.push_back(box.finish("triple_stays_in_coefficient_body"));
    return report;
}

SuiteReport identities_suite(long long samples, std::uint64_t seed) {
    SuiteReport report;
    report.suite = "identities";
    SplitMix64 rng(seed);

    Accumulator expansion, triangle, rotation_inv, homogeneity;
    for (long long s = 0; s < samples; ++s) {
        const StarlikeCoeffs f = random_coeffs(rng, 6);
        const double l1 = 0.1 + 2.9 * rng.uniform();
        const double l2 = 0.1 + 2.9 * rng.uniform();
        const double l3 = 0.1 + 2.9 * rng.uniform();

        const Complex expanded = h3_expand(f, l1, l2, l3);
        DeterminantSpec spec;
        spec.kind = DeterminantSpec::Kind::hankel;
        spec.n = 1;
        spec.q = 3;
        spec.lambdas = {l1, l2, l3};
        const Complex direct = hankel_lambda(f, spec);
        const double scale = std::max(1.0, std::max(std::abs(expanded), std::abs(direct)));
        expansion.observe(std::abs(expanded - direct) / scale, 1e-12);

        triangle.observe(std::abs(expanded) - triangle_rhs(f, l1, l2, l3), 1e-12);

        const double phase = kTwoPi * rng.uniform();
        const Complex eta(std::cos(phase), std::sin(phase));
        const StarlikeCoeffs rotated = rotate(f, eta);
        const Functional fns[] = {Functional::fekete_szego(l2 / l1),
                                  Functional::h2_2(l3 / l2), Functional::b2_1(l1 / l3),
                                  Functional::h3(l1, l2, l3)};
        double worst = 0.0;
        for (const Functional& fn : fns) {
            const double before = std::abs(functional_eval(f, fn));
            const double after = std::abs(functional_eval(rotated, fn));
            worst = std::max(worst, std::abs(after - before) / std::max(1.0, before));
        }
        rotation_inv.observe(worst, 1e-12);

        const double t = 0.1 + 2.9 * rng.uniform();
        DeterminantSpec scaled = spec;
        for (double& l : scaled.lambdas) l *= t;
        const Complex lhs = hankel_lambda(f, scaled);
        const Complex rhs = t * direct;
        homogeneity.observe(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), 1e-12);
    }
    report.checks.push_back(expansion.finish("h3_expansion_matches_determinant"));
    report.checks.push_back(triangle.finish("triangle_majorant"));
    report.checks.push_back(rotation_inv.finish("rotation_invariance_of_moduli"));
    report.checks.push_back(homogeneity.finish("first_row_homogeneity"));
    return report;
}

SuiteReport proofs_suite(int grid) {
    SuiteReport report;
    report.suite = "proofs";
    for (ProofTheorem theorem : {ProofTheorem::t2, ProofTheorem::t3}) {
        const ProofReport proof = verify_claims(theorem, grid);
        const char* prefix = theorem == ProofTheorem::t2 ? "t2." : "t3.";
        for (const ProofClaim& claim : proof.claims) {
            report.checks.push_back({prefix + claim.label, claim.grid,
                                     claim.pass ? 0LL : 1LL, claim.max_deviation,
                                     claim.pass});
        }
    }
    return report;
}

}  // namespace fsdet

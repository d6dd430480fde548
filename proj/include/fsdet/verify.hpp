#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fsdet {

struct SuiteCheck {
    std::string label;
    long long samples = 0;  // samples checked, or grid points per axis
    long long violations = 0;
    double max_deviation = 0.0;
    bool pass = true;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool pass() const;
};

/// Coefficient-inequality suite over seeded random mixtures: |c_k| <= 2,
/// the sigma-functional inequality, |a_n| <= n after lifting, the
/// (c1, x, z) round trip, and the |c2|, |c3| box check.
SuiteReport lemmas_suite(long long samples, std::uint64_t seed);

/// Algebraic-identity suite over seeded random coefficient sequences:
/// the 3x3 expansion against the determinant, the triangle majorant,
/// rotation invariance of every functional modulus, and first-row
/// homogeneity.
SuiteReport identities_suite(long long samples, std::uint64_t seed);

/// Wraps verify_claims for both proof replays.
SuiteReport proofs_suite(int grid);

}  // namespace fsdet

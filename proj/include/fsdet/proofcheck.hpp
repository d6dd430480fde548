#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fsdet {

/// Scalar profile of the t2 (b2_1) proof calculus at one point:
///   F(rho) = (2-b)c^3/4 + b(4-c^2)/6 + b c(4-c^2) rho/6
///            + b(c-2)(4-c^2) rho^2/12
/// with G1 = F(0), G2 = F(1) = (1-b)c^3/2 + b c, and, for c in [0,1],
/// G3 = F(c/(2-c)) = (3-b)c^3/6 + 2b/3.
struct T2Profile {
    double f;
    double g1;
    double g2;
    std::optional<double> g3;  // only defined for c <= 1
};

T2Profile t2_profile(double c, double rho, double beta);

/// Scalar profile of the t3 (h2_2) proof calculus at one point:
///   F(rho) = (9a-8)c^4/16 + c(4-c^2)/6 + (10-9a)c^2(4-c^2) rho/24
///            + (4-c^2)(c-2)[(4-3a)c - 6a] rho^2/48
/// with F' its rho-derivative and G the limiting profile F(1):
/// (a-1)c^4 - 2(a-1)c^2 + a for a <= 10/9, and the variant
/// (3a-2)c^4/12 + (3a-4)c^2/3 + a above 10/9.
struct T3Profile {
    double f;
    double fprime;
    double g;
};

T3Profile t3_profile(double c, double rho, double alpha);

enum class ProofTheorem { t2, t3 };

struct ProofClaim {
    std::string label;
    int grid;
    double max_deviation;
    bool pass;
};

struct ProofReport {
    ProofTheorem theorem;
    int grid;
    std::vector<ProofClaim> claims;

    bool pass() const;
};

/// Replays every extremum/monotonicity claim of the chosen proof on a
/// grid (at least 100 points per axis): algebraic identities at 1e-12,
/// derivative-vs-finite-difference at 1e-6, extremum locations at 1e-8.
ProofReport verify_claims(ProofTheorem theorem, int grid = 512);

}  // namespace fsdet

#pragma once

#include <vector>

#include "fsdet/rng.hpp"
#include "fsdet/series.hpp"

namespace fsdet {

/// Convex combination of Moebius/Herglotz kernels (1 + e^{i theta} z) /
/// (1 - e^{i theta} z). Finite mixtures are dense enough for functionals
/// that depend on finitely many coefficients.
struct AtomMixture {
    std::vector<double> weights;  // nonnegative, sum to 1 within 1e-12
    std::vector<double> angles;   // radians, same length as weights

    int atom_count() const { return static_cast<int>(weights.size()); }
};

/// Throws std::invalid_argument when the mixture is not a probability
/// vector over at least one atom.
void validate(const AtomMixture& mix);

/// Coefficients c_1..c_N of p(z) = 1 + c_1 z + c_2 z^2 + ... in the
/// Caratheodory class P (Re p > 0, p(0) = 1).
struct CaratheodoryCoeffs {
    std::vector<Complex> c;  // c[i] holds c_{i+1}

    int count() const { return static_cast<int>(c.size()); }

    /// 1-based accessor: ck(1) is c_1.
    Complex ck(int k) const;

    /// Full series 1 + sum c_k z^k, truncated to `order` (<= count()).
    TaylorCoeffs to_series(int order) const;
};

/// c_k = 2 * sum_j t_j e^{i k theta_j}, k = 1..order. A single atom at
/// theta = 0 is exactly the extremal L0(z) = (1+z)/(1-z) with c_k = 2.
CaratheodoryCoeffs mixture_coeffs(const AtomMixture& mix, int order);

/// p(z) -> p(eta z): c_k -> eta^k c_k. Requires |eta| = 1.
CaratheodoryCoeffs rotate(const CaratheodoryCoeffs& c, Complex eta);

/// Parameters (c1, x, z) describing one admissible leading triple
/// (c_1, c_2, c_3) of a P-function:
///   2 c2 = c1^2 + x (4 - c1^2)
///   4 c3 = c1^3 + 2 x c1 (4 - c1^2) - x^2 c1 (4 - c1^2)
///          + 2 z (1 - |x|^2) (4 - c1^2)
/// c1 is kept real in [0, 2]; general c1 is recovered by rotation.
struct Lemma3Params {
    double c1 = 0.0;
    Complex x;
    Complex z;
};

void validate(const Lemma3Params& p);

/// The triple (c1, c2, c3) produced by the parametrization above.
CaratheodoryCoeffs lemma3_coeffs(const Lemma3Params& p);

struct Lemma3Inverse {
    Lemma3Params params;
    /// Rotation eta applied to the input (c_k -> eta^k c_k) so that c1
    /// became real nonnegative; identity when it already was.
    Complex rotation;
    /// True when |x| = 1 within 1e-9: the z-term's weight vanishes and z
    /// is not recoverable (params.z is left at 0).
    bool z_unconstrained = false;
};

/// Recover (c1, x, z) from the first three coefficients. Requires
/// |c1| < 2 strictly; throws "degenerate: c1 on boundary" otherwise and
/// "input not in P-representable range" when the recovered |x| exceeds
/// 1 + 1e-9.
Lemma3Inverse lemma3_invert(const CaratheodoryCoeffs& c);

struct Lemma2Check {
    double lhs;    // |c2 - sigma * c1^2 / 2|
    double bound;  // 2 * max{1, |sigma - 1|}
};

/// Evaluates the sharp P-class inequality |c2 - sigma c1^2/2| <=
/// 2 max{1, |sigma-1|} at the given coefficients.
Lemma2Check lemma2_check(const CaratheodoryCoeffs& c, double sigma);

/// Seeded random mixture: Dirichlet-uniform weights (normalized
/// exponential variates) and uniform angles.
AtomMixture random_mixture(SplitMix64& rng, int atoms);

}  // namespace fsdet

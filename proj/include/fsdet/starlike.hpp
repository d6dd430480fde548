#pragma once

#include <string>
#include <vector>

#include "fsdet/caratheodory.hpp"
#include "fsdet/series.hpp"

namespace fsdet {

/// Normalized coefficients of a (candidate) starlike function
/// f(z) = z + a_2 z^2 + ...; a[n] is the n-th Taylor coefficient,
/// a[0] = 0 and a[1] = 1 always.
struct StarlikeCoeffs {
    std::vector<Complex> a;
    std::string provenance;
    /// Set when the generating construction failed the starlikeness
    /// spot-check (or is not even analytic on the disk).
    bool suspect = false;

    int order() const { return static_cast<int>(a.size()) - 1; }

    /// a_n, throws std::out_of_range past the truncation.
    Complex an(int n) const;
};

/// Coefficients of the f with z f'(z)/f(z) = p(z), via the recurrence
///   (n-1) a_n = sum_{k=1}^{n-1} a_k c_{n-k},   a_1 = 1,
/// obtained by matching z f' = f * p coefficient-wise. It reproduces the
/// classical identities a2 = c1, 2 a3 = c2 + c1^2, 6 a4 = 2 c3 + 3 c1 c2
/// + c1^3. Needs c_1..c_{order-1}.
StarlikeCoeffs lift_starlike(const CaratheodoryCoeffs& c, int order = kDefaultOrder);

/// Named extremal candidates. All have the single-binomial shape
/// z (1 - u z^k)^q.
enum class CatalogId {
    koebe,                // z/(1-z)^2, a_n = n
    two_symmetric,        // z/(1-z^2)
    kfold,                // z (1-z^k)^{-2/k}, param = k
    paper_thm2_literal,   // z/(1-z^3)^2 (fails the starlikeness check)
    paper_thm3_literal,   // z/(1-z^2/sqrt(alpha)), param = alpha > 0
};

StarlikeCoeffs catalog(CatalogId id, double param = 0.0, int order = kDefaultOrder);

/// f -> conj(eta) f(eta z): a_n -> eta^{n-1} a_n. Requires |eta| = 1.
StarlikeCoeffs rotate(const StarlikeCoeffs& f, Complex eta);

}  // namespace fsdet

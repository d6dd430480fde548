#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace fsdet {

using Complex = std::complex<double>;

/// Default truncation order for the whole coefficient pipeline. The
/// functionals only read a2..a5, but k-fold symmetric catalog entries
/// need headroom, and a single order removes off-by-one traps.
inline constexpr int kDefaultOrder = 10;

/// Truncated Taylor series: coeffs[k] is the coefficient of z^k, k = 0..N.
/// Dense from index 0; double precision only.
struct TaylorCoeffs {
    std::vector<Complex> coeffs;

    TaylorCoeffs() = default;
    explicit TaylorCoeffs(int order) : coeffs(static_cast<std::size_t>(order) + 1) {}
    explicit TaylorCoeffs(std::vector<Complex> c) : coeffs(std::move(c)) {}

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Coefficient of z^k; throws std::out_of_range past the truncation.
    Complex at(int k) const;

    bool all_finite() const;
};

/// Coefficient-wise sum of scalar*series, truncated to `order`.
/// Every input must be truncated to at least `order`.
TaylorCoeffs series_lincomb(const std::vector<std::pair<Complex, TaylorCoeffs>>& terms,
                            int order);

/// Cauchy product truncated to `order`: out[k] = sum_{i<=k} a[i]*b[k-i].
TaylorCoeffs series_mul(const TaylorCoeffs& a, const TaylorCoeffs& b, int order);

/// Coefficients of (1 - u*z^k)^p via the generalized binomial series:
/// the coefficient of z^{k*m} is (-u)^m * binom(p, m), everything else zero.
/// binom(p, m) is accumulated as a running product so real exponents work
/// and nothing overflows. The series is formal; convergence is the
/// caller's concern.
TaylorCoeffs series_binomial_pow(Complex u, int monomial_degree, double exponent,
                                 int order);

// Coefficient CSV, shared with the CLI: header "k,re,im", one row per
// index starting at k = 0, LF line endings, 17 significant digits.
std::string coeffs_to_csv(const TaylorCoeffs& s);
TaylorCoeffs coeffs_from_csv(const std::string& text);

}  // namespace fsdet

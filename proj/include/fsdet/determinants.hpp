#pragma once

#include <array>
#include <string>
#include <vector>

#include "fsdet/starlike.hpp"

namespace fsdet {

using ComplexMatrix = std::vector<std::vector<Complex>>;

/// Determinant of a small square complex matrix: cofactor expansion up to
/// 4x4, partial-pivot elimination above. The two routes agree to 1e-12
/// and are exposed separately so tests can cross-check them.
Complex det_eval(const ComplexMatrix& m);
Complex det_cofactor(const ComplexMatrix& m);
Complex det_partial_pivot(ComplexMatrix m);

/// One parametrized coefficient determinant.
///
/// kind == hankel: q x q matrix with entry (i,j) = a_{n+i+j-2}, except the
/// first row carries lambda_j * a_{n+j-1}.
///
/// kind == b: q x q matrix with entry (i,j) = a_{n+(i-1)q+j-1}, except the
/// last column carries lambda_i * a_{n+iq-1}. The lambda vector has length
/// q in both kinds.
struct DeterminantSpec {
    enum class Kind { hankel, b };
    Kind kind = Kind::hankel;
    int n = 1;
    int q = 2;
    std::vector<double> lambdas;
};

void validate(const DeterminantSpec& spec);

Complex hankel_lambda(const StarlikeCoeffs& f, const DeterminantSpec& spec);
Complex b_lambda(const StarlikeCoeffs& f, const DeterminantSpec& spec);

/// The ratio parameters carried by one lambda-triple:
/// gamma = l2/l1, alpha = l3/l2, beta = l1/l3, so gamma*alpha*beta = 1.
struct RatioParams {
    double gamma;
    double alpha;
    double beta;
};

/// All lambdas must be nonzero.
RatioParams ratios_from_lambdas(double l1, double l2, double l3);

/// The three named 2x2 functionals plus the full 3x3 expansion. The b2_1
/// value keeps the sign convention a2 a3 - beta a4 (the literal B
/// determinant is its negative; every bound comparison uses moduli).
struct Functional {
    enum class Kind { fekete_szego, h2_2, b2_1, h3 };
    Kind kind = Kind::fekete_szego;
    double param = 0.0;                   // gamma, alpha or beta
    std::array<double, 3> lambdas{};      // h3 only

    static Functional fekete_szego(double gamma);
    static Functional h2_2(double alpha);
    static Functional b2_1(double beta);
    static Functional h3(double l1, double l2, double l3);

    std::string name() const;
};

Complex functional_eval(const StarlikeCoeffs& f, const Functional& fn);

/// The three-term expansion
///   l2 a3 (a2 a4 - alpha a3^2) + l3 a4 (a2 a3 - beta a4)
///   + l1 a5 (a3 - gamma a2^2)
/// with alpha = l3/l2, beta = l1/l3, gamma = l2/l1. Identical to
/// hankel_lambda with kind=hankel, n=1, q=3. All lambdas must be nonzero.
Complex h3_expand(const StarlikeCoeffs& f, double l1, double l2, double l3);

/// Triangle-inequality majorant of |h3_expand|:
///   l1 |a5| |a3 - gamma a2^2| + l2 |a3| |a2 a4 - alpha a3^2|
///   + l3 |a4| |a2 a3 - beta a4|.
double triangle_rhs(const StarlikeCoeffs& f, double l1, double l2, double l3);

}  // namespace fsdet

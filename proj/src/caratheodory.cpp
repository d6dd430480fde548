#include "fsdet/caratheodory.hpp"

#include <cmath>
#include <stdexcept>

namespace fsdet {

namespace {

constexpr double kWeightTol = 1e-12;
constexpr double kUnitTol = 1e-12;
constexpr double kUnconstrainedTol = 1e-9;

}  // namespace

void validate(const AtomMixture& mix) {
    if (mix.weights.empty() || mix.weights.size() != mix.angles.size()) {
        throw std::invalid_argument("not a probability vector");
    }
    double sum = 0.0;
    for (double t : mix.weights) {
        if (!(t >= 0.0)) throw std::invalid_argument("not a probability vector");
        sum += t;
    }
    if (std::abs(sum - 1.0) > kWeightTol) {
        throw std::invalid_argument("not a probability vector");
    }
}

Complex CaratheodoryCoeffs::ck(int k) const {
    if (k < 1 || k > count()) throw std::out_of_range("coefficient index out of range");
    return c[static_cast<std::size_t>(k - 1)];
}

TaylorCoeffs CaratheodoryCoeffs::to_series(int order) const {
    if (order > count()) throw std::invalid_argument("insufficient coefficients");
    TaylorCoeffs s(order);
    s.coeffs[0] = 1.0;
    for (int k = 1; k <= order; ++k) s.coeffs[static_cast<std::size_t>(k)] = ck(k);
    return s;
}

CaratheodoryCoeffs mixture_coeffs(const AtomMixture& mix, int order) {
    validate(mix);
    CaratheodoryCoeffs out;
    out.c.assign(static_cast<std::size_t>(order), Complex(0.0));
    const int m = mix.atom_count();
    for (int j = 0; j < m; ++j) {
        const Complex w(std::cos(mix.angles[static_cast<std::size_t>(j)]),
                        std::sin(mix.angles[static_cast<std::size_t>(j)]));
        Complex pw = w;
        for (int k = 1; k <= order; ++k) {
            out.c[static_cast<std::size_t>(k - 1)] +=
                mix.weights[static_cast<std::size_t>(j)] * pw;
            pw *= w;
        }
    }
    for (Complex& v : out.c) v *= 2.0;
    return out;
}

CaratheodoryCoeffs rotate(const CaratheodoryCoeffs& c, Complex eta) {
    if (std::abs(std::abs(eta) - 1.0) > kUnitTol) {
        throw std::invalid_argument("rotation factor must have unit modulus");
    }
    CaratheodoryCoeffs out = c;
    Complex pw = eta;
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        out.c[i] *= pw;
        pw *= eta;
    }
    return out;
}

void validate(const Lemma3Params& p) {
    if (!(p.c1 >= 0.0 && p.c1 <= 2.0) || std::abs(p.x) > 1.0 + kWeightTol ||
        std::abs(p.z) > 1.0 + kWeightTol) {
        throw std::invalid_argument("outside Lemma 3 domain");
    }
}

CaratheodoryCoeffs lemma3_coeffs(const Lemma3Params& p) {
    validate(p);
    const double c1 = p.c1;
    const double rest = 4.0 - c1 * c1;
    const Complex c2 = (c1 * c1 + p.x * rest) / 2.0;
    const double xsq = std::norm(p.x);
    const Complex c3 = (c1 * c1 * c1 + 2.0 * p.x * c1 * rest - p.x * p.x * c1 * rest +
                        2.0 * p.z * (1.0 - xsq) * rest) /
                       4.0;
    CaratheodoryCoeffs out;
    out.c = {Complex(c1), c2, c3};
    return out;
}

Lemma3Inverse lemma3_invert(const CaratheodoryCoeffs& c) {
    if (c.count() < 3) throw std::invalid_argument("need c1, c2, c3");
    const Complex c1_raw = c.ck(1);
    const double c1_mod = std::abs(c1_raw);
    if (c1_mod >= 2.0) throw std::invalid_argument("degenerate: c1 on boundary");

    // Reduce to the normal form with c1 real nonnegative; the returned
    // parameters describe the rotated function.
    Complex eta(1.0);
    if (c1_mod > 0.0) eta = std::conj(c1_raw) / c1_mod;
    const Complex c2 = c.ck(2) * eta * eta;
    const Complex c3 = c.ck(3) * eta * eta * eta;
    const double c1 = c1_mod;
    const double rest = 4.0 - c1 * c1;

    Lemma3Inverse inv;
    inv.rotation = eta;
    inv.params.c1 = c1;
    const Complex x = (2.0 * c2 - c1 * c1) / rest;
    if (std::abs(x) > 1.0 + kUnconstrainedTol) {
        throw std::invalid_argument("input not in P-representable range");
    }
    inv.params.x = x;
    const double xsq = std::norm(x);
    if (std::abs(std::abs(x) - 1.0) <= kUnconstrainedTol) {
        inv.z_unconstrained = true;
        inv.params.z = 0.0;
    } else {
        Complex z = (4.0 * c3 - c1 * c1 * c1 - 2.0 * x * c1 * rest + x * x * c1 * rest) /
                    (2.0 * (1.0 - xsq) * rest);
        // The division by (1 - |x|^2) amplifies rounding noise, so a z that
        // is genuinely on the boundary can land just outside the disk. Snap
        // it back; anything beyond the noise scale is not P-representable.
        const double mod_z = std::abs(z);
        if (mod_z > 1.0 + 1e-6) {
            throw std::invalid_argument("input not in P-representable range");
        }
        if (mod_z > 1.0) z /= mod_z;
        inv.params.z = z;
    }
    return inv;
}

Lemma2Check lemma2_check(const CaratheodoryCoeffs& c, double sigma) {
    if (c.count() < 2) throw std::invalid_argument("need c1 and c2");
    const Complex c1 = c.ck(1);
    Lemma2Check out;
    out.lhs = std::abs(c.ck(2) - sigma * c1 * c1 / 2.0);
    out.bound = 2.0 * std::max(1.0, std::abs(sigma - 1.0));
    return out;
}

AtomMixture random_mixture(SplitMix64& rng, int atoms) {
    AtomMixture mix;
    mix.weights.resize(static_cast<std::size_t>(atoms));
    mix.angles.resize(static_cast<std::size_t>(atoms));
    double sum = 0.0;
    for (double& w : mix.weights) {
        w = -std::log(1.0 - rng.uniform());  // Exp(1) variate
        sum += w;
    }
    for (double& w : mix.weights) w /= sum;
    const double two_pi = 8.0 * std::atan(1.0);
    for (double& a : mix.angles) a = two_pi * rng.uniform();
    return mix;
}

}  // namespace fsdet

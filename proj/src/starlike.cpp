#include "fsdet/starlike.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fsdet {

namespace {

constexpr double kUnitTol = 1e-12;

struct BinomialShape {
    Complex u;
    int k;
    double exponent;
};

BinomialShape shape_for(CatalogId id, double param) {
    switch (id) {
        case CatalogId::koebe:
            return {Complex(1.0), 1, -2.0};
        case CatalogId::two_symmetric:
            return {Complex(1.0), 2, -1.0};
        case CatalogId::kfold: {
            const int k = static_cast<int>(std::lround(param));
            if (k < 1 || std::abs(param - k) > 1e-9) {
                throw std::invalid_argument("kfold parameter must be an integer >= 1");
            }
            return {Complex(1.0), k, -2.0 / k};
        }
        case CatalogId::paper_thm2_literal:
            return {Complex(1.0), 3, -2.0};
        case CatalogId::paper_thm3_literal: {
            if (!(param > 0.0)) throw std::invalid_argument("alpha must be positive");
            return {Complex(1.0 / std::sqrt(param)), 2, -1.0};
        }
    }
    throw std::invalid_argument("unknown catalog name");
}

std::string shape_name(CatalogId id, double param) {
    char buf[64];
    switch (id) {
        case CatalogId::koebe: return "koebe";
        case CatalogId::two_symmetric: return "two_symmetric";
        case CatalogId::kfold:
            std::snprintf(buf, sizeof buf, "kfold(%d)", static_cast<int>(std::lround(param)));
            return buf;
        case CatalogId::paper_thm2_literal: return "paper_thm2_literal";
        case CatalogId::paper_thm3_literal:
            std::snprintf(buf, sizeof buf, "paper_thm3_literal(%g)", param);
            return buf;
    }
    return "unknown";
}

// Starlikeness spot-check of f(z) = z (1 - u z^k)^q. For this shape the
// ratio has the closed form z f'/f = 1 - q u k z^k / (1 - u z^k), which
// is sampled on |z| = 0.99 at 720 points (truncated sections of these
// functions are useless that close to the boundary). A pole of f inside
// the closed unit disk flags the entry regardless of the samples.
bool spot_check_suspect(const BinomialShape& s) {
    const double mod_u = std::abs(s.u);
    if (mod_u > 0.0) {
        const double pole_radius = std::pow(mod_u, -1.0 / s.k);
        if (pole_radius < 1.0 - 1e-12) return true;
    }
    const double two_pi = 8.0 * std::atan(1.0);
    const double r = 0.99;
    const int samples = 720;
    for (int j = 0; j < samples; ++j) {
        const double theta = two_pi * j / samples;
        const Complex z = r * Complex(std::cos(theta), std::sin(theta));
        const Complex zk = std::pow(z, s.k);
        const Complex denom = 1.0 - s.u * zk;
        if (std::abs(denom) < 1e-12) return true;
        const Complex ratio = 1.0 - s.exponent * s.u * static_cast<double>(s.k) * zk / denom;
        if (ratio.real() < -1e-9) return true;
    }
    return false;
}

}  // namespace

Complex StarlikeCoeffs::an(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("insufficient coefficients");
    return a[static_cast<std::size_t>(n)];
}

StarlikeCoeffs lift_starlike(const CaratheodoryCoeffs& c, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    if (c.count() < order - 1) throw std::invalid_argument("insufficient coefficients");
    StarlikeCoeffs f;
    f.a.assign(static_cast<std::size_t>(order) + 1, Complex(0.0));
    f.a[1] = 1.0;
    for (int n = 2; n <= order; ++n) {
        Complex acc = 0.0;
        for (int k = 1; k <= n - 1; ++k) {
            acc += f.a[static_cast<std::size_t>(k)] * c.ck(n - k);
        }
        f.a[static_cast<std::size_t>(n)] = acc / static_cast<double>(n - 1);
    }
    f.provenance = "lift";
    return f;
}

StarlikeCoeffs catalog(CatalogId id, double param, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const BinomialShape s = shape_for(id, param);
    const TaylorCoeffs base = series_binomial_pow(s.u, s.k, s.exponent, order - 1);
    StarlikeCoeffs f;
    f.a.assign(static_cast<std::size_t>(order) + 1, Complex(0.0));
    for (int n = 1; n <= order; ++n) {
        f.a[static_cast<std::size_t>(n)] = base.coeffs[static_cast<std::size_t>(n - 1)];
    }
    f.provenance = shape_name(id, param);
    f.suspect = spot_check_suspect(s);
    return f;
}

StarlikeCoeffs rotate(const StarlikeCoeffs& f, Complex eta) {
    if (std::abs(std::abs(eta) - 1.0) > kUnitTol) {
        throw std::invalid_argument("rotation factor must have unit modulus");
    }
    StarlikeCoeffs out = f;
    Complex pw = 1.0;  // eta^{n-1}
    for (int n = 1; n <= f.order(); ++n) {
        out.a[static_cast<std::size_t>(n)] = pw * f.a[static_cast<std::size_t>(n)];
        pw *= eta;
    }
    return out;
}

}  // namespace fsdet

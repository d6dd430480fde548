#include "fsdet/series.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace fsdet {

namespace {

bool finite_entry(Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace

Complex TaylorCoeffs::at(int k) const {
    if (k < 0 || k > order()) {
        throw std::out_of_range("coefficient index past truncation");
    }
    return coeffs[static_cast<std::size_t>(k)];
}

bool TaylorCoeffs::all_finite() const {
    for (Complex v : coeffs) {
        if (!finite_entry(v)) return false;
    }
    return true;
}

TaylorCoeffs series_lincomb(const std::vector<std::pair<Complex, TaylorCoeffs>>& terms,
                            int order) {
    if (terms.empty()) throw std::invalid_argument("no terms");
    if (order < 0) throw std::invalid_argument("negative order");
    TaylorCoeffs out(order);
    for (const auto& [scalar, series] : terms) {
        if (series.order() < order) {
            throw std::invalid_argument("input series shorter than requested order");
        }
        for (int k = 0; k <= order; ++k) {
            out.coeffs[static_cast<std::size_t>(k)] +=
                scalar * series.coeffs[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

TaylorCoeffs series_mul(const TaylorCoeffs& a, const TaylorCoeffs& b, int order) {
    if (order < 0) throw std::invalid_argument("negative order");
    if (a.order() < order || b.order() < order) {
        throw std::invalid_argument("input series shorter than requested order");
    }
    TaylorCoeffs out(order);
    for (int k = 0; k <= order; ++k) {
        Complex acc = 0.0;
        for (int i = 0; i <= k; ++i) {
            acc += a.coeffs[static_cast<std::size_t>(i)] *
                   b.coeffs[static_cast<std::size_t>(k - i)];
        }
        out.coeffs[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

TaylorCoeffs series_binomial_pow(Complex u, int monomial_degree, double exponent,
                                 int order) {
    if (monomial_degree < 1) throw std::invalid_argument("monomial degree must be >= 1");
    if (order < 0) throw std::invalid_argument("negative order");
    TaylorCoeffs out(order);
    out.coeffs[0] = 1.0;
    // cur = binom(p, m) * (-u)^m, advanced by one factor per step.
    Complex cur = 1.0;
    for (int m = 1; m * monomial_degree <= order; ++m) {
        cur *= (-u) * ((exponent - static_cast<double>(m - 1)) / static_cast<double>(m));
        out.coeffs[static_cast<std::size_t>(m * monomial_degree)] = cur;
    }
    return out;
}

std::string coeffs_to_csv(const TaylorCoeffs& s) {
    std::string out = "k,re,im\n";
    char buf[96];
    for (int k = 0; k <= s.order(); ++k) {
        Complex v = s.coeffs[static_cast<std::size_t>(k)];
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", k, v.real(), v.imag());
        out += buf;
    }
    return out;
}

TaylorCoeffs coeffs_from_csv(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.empty() || lines[0] != "k,re,im") {
        throw std::invalid_argument("bad coefficient csv: missing `k,re,im` header");
    }
    std::vector<Complex> coeffs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty()) continue;
        const char* p = line.c_str();
        char* end = nullptr;
        long k = std::strtol(p, &end, 10);
        if (end == p || *end != ',') {
            throw std::invalid_argument("bad coefficient csv: unparsable row `" + line + "`");
        }
        p = end + 1;
        double re = std::strtod(p, &end);
        if (end == p || *end != ',') {
            throw std::invalid_argument("bad coefficient csv: unparsable row `" + line + "`");
        }
        p = end + 1;
        double im = std::strtod(p, &end);
        if (end == p || *end != '\0') {
            throw std::invalid_argument("bad coefficient csv: unparsable row `" + line + "`");
        }
        if (k != static_cast<long>(coeffs.size())) {
            throw std::invalid_argument("bad coefficient csv: indices must run 0,1,2,...");
        }
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw std::invalid_argument("bad coefficient csv: non-finite entry");
        }
        coeffs.emplace_back(re, im);
    }
    if (coeffs.empty()) throw std::invalid_argument("bad coefficient csv: no rows");
    return TaylorCoeffs(std::move(coeffs));
}

}  // namespace fsdet

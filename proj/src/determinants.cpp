#include "fsdet/determinants.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fsdet {

namespace {

void check_square(const ComplexMatrix& m) {
    if (m.empty()) throw std::invalid_argument("non-square input");
    for (const auto& row : m) {
        if (row.size() != m.size()) throw std::invalid_argument("non-square input");
    }
}

}  // namespace

Complex det_cofactor(const ComplexMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Complex acc = 0.0;
    double sign = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        ComplexMatrix minor(n - 1, std::vector<Complex>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t col = 0; col < n; ++col) {
                if (col == j) continue;
                minor[r - 1][cc++] = m[r][col];
            }
        }
        acc += sign * m[0][j] * det_cofactor(minor);
        sign = -sign;
    }
    return acc;
}

Complex det_partial_pivot(ComplexMatrix m) {
    const std::size_t n = m.size();
    Complex det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(m[r][col]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

Complex det_eval(const ComplexMatrix& m) {
    check_square(m);
    for (const auto& row : m) {
        for (Complex v : row) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw std::invalid_argument("non-finite matrix entry");
            }
        }
    }
    return m.size() <= 4 ? det_cofactor(m) : det_partial_pivot(m);
}

void validate(const DeterminantSpec& spec) {
    if (spec.n < 1 || spec.q < 1) throw std::invalid_argument("need n >= 1 and q >= 1");
    if (static_cast<int>(spec.lambdas.size()) != spec.q) {
        throw std::invalid_argument("lambda vector length must equal q");
    }
}

Complex hankel_lambda(const StarlikeCoeffs& f, const DeterminantSpec& spec) {
    validate(spec);
    if (spec.kind != DeterminantSpec::Kind::hankel) {
        throw std::invalid_argument("spec kind must be hankel");
    }
    const int need = spec.n + 2 * (spec.q - 1);
    if (f.order() < need) throw std::invalid_argument("insufficient coefficients");
    const std::size_t q = static_cast<std::size_t>(spec.q);
    ComplexMatrix m(q, std::vector<Complex>(q));
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            const int idx = spec.n + static_cast<int>(i) + static_cast<int>(j);
            m[i][j] = f.an(idx);
            if (i == 0) m[i][j] *= spec.lambdas[j];
        }
    }
    return det_eval(m);
}

Complex b_lambda(const StarlikeCoeffs& f, const DeterminantSpec& spec) {
    validate(spec);
    if (spec.kind != DeterminantSpec::Kind::b) {
        throw std::invalid_argument("spec kind must be b");
    }
    const int need = spec.n + spec.q * spec.q - 1;
    if (f.order() < need) throw std::invalid_argument("insufficient coefficients");
    const std::size_t q = static_cast<std::size_t>(spec.q);
    ComplexMatrix m(q, std::vector<Complex>(q));
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            const int idx = spec.n + static_cast<int>(i) * spec.q + static_cast<int>(j);
            m[i][j] = f.an(idx);
            if (j == q - 1) m[i][j] *= spec.lambdas[i];
        }
    }
    return det_eval(m);
}

RatioParams ratios_from_lambdas(double l1, double l2, double l3) {
    if (l1 == 0.0 || l2 == 0.0 || l3 == 0.0) {
        throw std::invalid_argument("ratio undefined; use hankel_lambda directly");
    }
    return {l2 / l1, l3 / l2, l1 / l3};
}

Functional Functional::fekete_szego(double gamma) {
    Functional fn;
    fn.kind = Kind::fekete_szego;
    fn.param = gamma;
    return fn;
}

Functional Functional::h2_2(double alpha) {
    Functional fn;
    fn.kind = Kind::h2_2;
    fn.param = alpha;
    return fn;
}

Functional Functional::b2_1(double beta) {
    Functional fn;
    fn.kind = Kind::b2_1;
    fn.param = beta;
    return fn;
}

Functional Functional::h3(double l1, double l2, double l3) {
    Functional fn;
    fn.kind = Kind::h3;
    fn.lambdas = {l1, l2, l3};
    return fn;
}

std::string Functional::name() const {
    switch (kind) {
        case Kind::fekete_szego: return "fekete_szego";
        case Kind::h2_2: return "h2_2";
        case Kind::b2_1: return "b2_1";
        case Kind::h3: return "h3";
    }
    return "unknown";
}

Complex functional_eval(const StarlikeCoeffs& f, const Functional& fn) {
    switch (fn.kind) {
        case Functional::Kind::fekete_szego: {
            if (f.order() < 3) throw std::invalid_argument("insufficient coefficients");
            const Complex a2 = f.an(2);
            return f.an(3) - fn.param * a2 * a2;
        }
        case Functional::Kind::h2_2: {
            if (f.order() < 4) throw std::invalid_argument("insufficient coefficients");
            const Complex a3 = f.an(3);
            return f.an(2) * f.an(4) - fn.param * a3 * a3;
        }
        case Functional::Kind::b2_1: {
            if (f.order() < 4) throw std::invalid_argument("insufficient coefficients");
            return f.an(2) * f.an(3) - fn.param * f.an(4);
        }
        case Functional::Kind::h3:
            return h3_expand(f, fn.lambdas[0], fn.lambdas[1], fn.lambdas[2]);
    }
    throw std::invalid_argument("unknown functional");
}

Complex h3_expand(const StarlikeCoeffs& f, double l1, double l2, double l3) {
    const RatioParams r = ratios_from_lambdas(l1, l2, l3);
    if (f.order() < 5) throw std::invalid_argument("insufficient coefficients");
    const Complex a2 = f.an(2), a3 = f.an(3), a4 = f.an(4), a5 = f.an(5);
    return l2 * a3 * (a2 * a4 - r.alpha * a3 * a3) + l3 * a4 * (a2 * a3 - r.beta * a4) +
           l1 * a5 * (a3 - r.gamma * a2 * a2);
}

double triangle_rhs(const StarlikeCoeffs& f, double l1, double l2, double l3) {
    const RatioParams r = ratios_from_lambdas(l1, l2, l3);
    if (f.order() < 5) throw std::invalid_argument("insufficient coefficients");
    const Complex a2 = f.an(2), a3 = f.an(3), a4 = f.an(4), a5 = f.an(5);
    return l1 * std::abs(a5) * std::abs(a3 - r.gamma * a2 * a2) +
           l2 * std::abs(a3) * std::abs(a2 * a4 - r.alpha * a3 * a3) +
           l3 * std::abs(a4) * std::abs(a2 * a3 - r.beta * a4);
}

}  // namespace fsdet

#include "fsdet/proofcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fsdet {

namespace {

constexpr double kAlgebraTol = 1e-12;
constexpr double kExtremumTol = 1e-8;
constexpr double kDerivativeTol = 1e-6;
constexpr double kTenNinths = 10.0 / 9.0;

double f_t2(double c, double rho, double beta) {
    const double rest = 4.0 - c * c;
    return (2.0 - beta) * c * c * c / 4.0 + beta * rest / 6.0 +
           beta * c * rest * rho / 6.0 + beta * (c - 2.0) * rest * rho * rho / 12.0;
}

double fprime_t2(double c, double rho, double beta) {
    const double rest = 4.0 - c * c;
    return beta * c * rest / 6.0 + beta * (c - 2.0) * rest * rho / 6.0;
}

double g1_t2(double c, double beta) {
    return (2.0 - beta) * c * c * c / 4.0 + beta * (4.0 - c * c) / 6.0;
}

double g2_t2(double c, double beta) { return (1.0 - beta) * c * c * c / 2.0 + beta * c; }

double g3_t2(double c, double beta) {
    return (3.0 - beta) * c * c * c / 6.0 + 2.0 * beta / 3.0;
}

double f_t3(double c, double rho, double alpha) {
    const double rest = 4.0 - c * c;
    const double c2 = c * c;
    return (9.0 * alpha - 8.0) * c2 * c2 / 16.0 + c * rest / 6.0 +
           (10.0 - 9.0 * alpha) * c2 * rest * rho / 24.0 +
           rest * (c - 2.0) * ((4.0 - 3.0 * alpha) * c - 6.0 * alpha) * rho * rho / 48.0;
}

double fprime_t3(double c, double rho, double alpha) {
    const double rest = 4.0 - c * c;
    const double c2 = c * c;
    return (10.0 - 9.0 * alpha) * c2 * rest / 24.0 +
           rest * (c - 2.0) * ((4.0 - 3.0 * alpha) * c - 6.0 * alpha) * rho / 24.0;
}

double g_t3(double c, double alpha) {
    const double c2 = c * c;
    if (alpha <= kTenNinths) {
        return (alpha - 1.0) * c2 * c2 - 2.0 * (alpha - 1.0) * c2 + alpha;
    }
    return (3.0 * alpha - 2.0) * c2 * c2 / 12.0 + (3.0 * alpha - 4.0) * c2 / 3.0 + alpha;
}

double lin(double lo, double hi, int i, int n) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

struct ClaimTracker {
    std::vector<ProofClaim>* claims;
    int grid;

    void add(const std::string& label, double dev, double tol) {
        claims->push_back({label, grid, dev, dev <= tol});
    }
};

}  // namespace

T2Profile t2_profile(double c, double rho, double beta) {
    if (!(c >= 0.0 && c <= 2.0) || !(rho >= 0.0 && rho <= 1.0) ||
        !(beta >= 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("out of range");
    }
    T2Profile out;
    out.f = f_t2(c, rho, beta);
    out.g1 = g1_t2(c, beta);
    out.g2 = g2_t2(c, beta);
    if (c <= 1.0) out.g3 = g3_t2(c, beta);
    return out;
}

T3Profile t3_profile(double c, double rho, double alpha) {
    if (!(c >= 0.0 && c <= 2.0) || !(rho >= 0.0 && rho <= 1.0) || !(alpha >= 0.0)) {
        throw std::invalid_argument("out of range");
    }
    return {f_t3(c, rho, alpha), fprime_t3(c, rho, alpha), g_t3(c, alpha)};
}

bool ProofReport::pass() const {
    for (const ProofClaim& claim : claims) {
        if (!claim.pass) return false;
    }
    return true;
}

ProofReport verify_claims(ProofTheorem theorem, int grid) {
    if (grid < 100) throw std::invalid_argument("grid must have at least 100 points per axis");
    ProofReport report;
    report.theorem = theorem;
    report.grid = grid;
    ClaimTracker track{&report.claims, grid};
    const int g = grid;

    if (theorem == ProofTheorem::t2) {
        double dev_g1f0 = 0.0, dev_g2f1 = 0.0, dev_g3fr = 0.0;
        double dev_g2max = 0.0, dev_g1cap = 0.0, dev_g3max = 0.0;
        double dev_fcap = 0.0, dev_fattain = 0.0;
        for (int ib = 0; ib < g; ++ib) {
            const double beta = lin(0.0, 1.0, ib, g);
            const double cap = 4.0 - 2.0 * beta;
            double fmax = 0.0;
            for (int ic = 0; ic < g; ++ic) {
                const double c = lin(0.0, 2.0, ic, g);
                dev_g1f0 = std::max(dev_g1f0, std::abs(g1_t2(c, beta) - f_t2(c, 0.0, beta)));
                dev_g2f1 = std::max(dev_g2f1, std::abs(g2_t2(c, beta) - f_t2(c, 1.0, beta)));
                dev_g2max = std::max(dev_g2max, g2_t2(c, beta) - cap);
                dev_g1cap = std::max(dev_g1cap, g1_t2(c, beta) - cap);
                if (c <= 1.0) {
                    dev_g3fr = std::max(
                        dev_g3fr, std::abs(g3_t2(c, beta) - f_t2(c, c / (2.0 - c), beta)));
                    dev_g3max =
                        std::max(dev_g3max, g3_t2(c, beta) - (1.0 + beta) / 2.0);
                }
                // F is quadratic in rho: scan the rho axis on the same grid.
                const double rest = 4.0 - c * c;
                const double a0 = (2.0 - beta) * c * c * c / 4.0 + beta * rest / 6.0;
                const double a1 = beta * c * rest / 6.0;
                const double a2 = beta * (c - 2.0) * rest / 12.0;
                for (int ir = 0; ir < g; ++ir) {
                    const double rho = lin(0.0, 1.0, ir, g);
                    const double f = a0 + rho * (a1 + rho * a2);
                    if (f > fmax) fmax = f;
                }
            }
            dev_g2max = std::max(dev_g2max, std::abs(g2_t2(2.0, beta) - cap));
            dev_g3max = std::max(dev_g3max, std::abs(g3_t2(1.0, beta) - (1.0 + beta) / 2.0));
            dev_fcap = std::max(dev_fcap, fmax - cap);
            dev_fattain = std::max(dev_fattain, cap - fmax);
        }
        track.add("g1_equals_f_at_rho0", dev_g1f0, kAlgebraTol);
        track.add("g2_equals_f_at_rho1", dev_g2f1, kAlgebraTol);
        track.add("g3_equals_f_at_rho_star", dev_g3fr, kAlgebraTol);
        track.add("g2_max_at_c2_equals_4_minus_2beta", dev_g2max, kAlgebraTol);
        track.add("g1_below_4_minus_2beta", dev_g1cap, kAlgebraTol);
        track.add("g3_max_at_c1_equals_half_1_plus_beta", dev_g3max, kAlgebraTol);
        track.add("f_max_equals_4_minus_2beta", std::max(dev_fcap, dev_fattain), kAlgebraTol);

        // Interior critical point of F sits at rho = c/(2-c): locate the
        // sign change of the analytic derivative by bisection.
        double dev_rho = 0.0;
        for (int ic = 1; ic < 64; ++ic) {
            const double c = static_cast<double>(ic) / 64.0;
            for (double beta : {0.25, 0.5, 0.75, 1.0}) {
                double lo = 0.0, hi = 1.0;
                for (int it = 0; it < 64; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (fprime_t2(c, mid, beta) > 0.0) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                dev_rho = std::max(dev_rho, std::abs(0.5 * (lo + hi) - c / (2.0 - c)));
            }
        }
        track.add("rho_star_at_c_over_2_minus_c", dev_rho, kExtremumTol);

        double dev_fd = 0.0;
        const double h = 1e-5;
        for (int ib = 0; ib < 17; ++ib) {
            const double beta = lin(0.0, 1.0, ib, 17);
            for (int ic = 0; ic < 65; ++ic) {
                const double c = lin(0.0, 2.0, ic, 65);
                for (int ir = 0; ir < 17; ++ir) {
                    const double rho = lin(0.0, 1.0, ir, 17);
                    const double fd =
                        (f_t2(c, rho + h, beta) - f_t2(c, rho - h, beta)) / (2.0 * h);
                    dev_fd = std::max(dev_fd, std::abs(fprime_t2(c, rho, beta) - fd));
                }
            }
        }
        track.add("fprime_matches_centered_difference", dev_fd, kDerivativeTol);
        return report;
    }

    // t3: alpha sweeps [2/3, 2]; the low branch of G applies through 10/9.
    double dev_f1g = 0.0, dev_fp = 0.0;
    double dev_gc1 = 0.0, dev_gc2_low = 0.0, dev_gc2_high = 0.0;
    for (int ia = 0; ia < g; ++ia) {
        const double alpha = lin(2.0 / 3.0, 2.0, ia, g);
        for (int ic = 0; ic < g; ++ic) {
            const double c = lin(0.0, 2.0, ic, g);
            const double gv = g_t3(c, alpha);
            if (alpha <= kTenNinths) {
                dev_f1g = std::max(dev_f1g, std::abs(f_t3(c, 1.0, alpha) - gv));
                // F' is affine in rho, so its sign is settled at the endpoints.
                dev_fp = std::max(dev_fp, -std::min(fprime_t3(c, 0.0, alpha),
                                                    fprime_t3(c, 1.0, alpha)));
            }
            if (alpha <= 1.0) {
                dev_gc1 = std::max(dev_gc1, gv - g_t3(1.0, alpha));
            } else if (alpha <= kTenNinths) {
                dev_gc2_low = std::max(dev_gc2_low, gv - g_t3(2.0, alpha));
            } else {
                dev_gc2_high = std::max(dev_gc2_high, gv - g_t3(2.0, alpha));
            }
        }
        if (alpha <= 1.0) {
            dev_gc1 = std::max(dev_gc1, std::abs(g_t3(1.0, alpha) - 1.0));
        } else {
            const double target = 9.0 * alpha - 8.0;
            double& dev = (alpha <= kTenNinths) ? dev_gc2_low : dev_gc2_high;
            dev = std::max(dev, std::abs(g_t3(2.0, alpha) - target));
        }
    }
    track.add("f_at_rho1_equals_g_through_10_9", dev_f1g, kAlgebraTol);
    track.add("fprime_nonneg_on_2_3_to_10_9", dev_fp, kAlgebraTol);
    track.add("g_max_at_c1_equals_1_on_2_3_to_1", dev_gc1, kAlgebraTol);
    track.add("g_max_at_c2_equals_9a_minus_8_on_1_to_10_9", dev_gc2_low, kAlgebraTol);
    track.add("g_max_at_c2_equals_9a_minus_8_above_10_9", dev_gc2_high, kAlgebraTol);

    double dev_fd = 0.0;
    const double h = 1e-5;
    for (int ia = 0; ia < 17; ++ia) {
        const double alpha = lin(2.0 / 3.0, 2.0, ia, 17);
        for (int ic = 0; ic < 65; ++ic) {
            const double c = lin(0.0, 2.0, ic, 65);
            for (int ir = 0; ir < 17; ++ir) {
                const double rho = lin(0.0, 1.0, ir, 17);
                const double fd =
                    (f_t3(c, rho + h, alpha) - f_t3(c, rho - h, alpha)) / (2.0 * h);
                dev_fd = std::max(dev_fd, std::abs(fprime_t3(c, rho, alpha) - fd));
            }
        }
    }
    track.add("fprime_matches_centered_difference", dev_fd, kDerivativeTol);
    return report;
}

}  // namespace fsdet

#include "fsdet/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "fsdet/rng.hpp"

namespace fsdet {

namespace {

const double kTwoPi = 8.0 * std::atan(1.0);
constexpr double kLogitRange = 8.0;
constexpr double kInvPhi = 0.61803398874989485;

void validate_functional(const Functional& fn) {
    switch (fn.kind) {
        case Functional::Kind::fekete_szego:
            return;  // total in gamma
        case Functional::Kind::h2_2:
        case Functional::Kind::b2_1:
            if (fn.param < 0.0) throw std::invalid_argument("invalid functional parameters");
            return;
        case Functional::Kind::h3:
            for (double l : fn.lambdas) {
                if (!(l > 0.0)) throw std::invalid_argument("invalid functional parameters");
            }
            return;
    }
    throw std::invalid_argument("invalid functional parameters");
}

// |functional| straight from a2..a5; the hot loops feed it the same
// recurrence values the public pipeline produces.
double functional_abs(const Functional& fn, Complex a2, Complex a3, Complex a4,
                      Complex a5) {
    switch (fn.kind) {
        case Functional::Kind::fekete_szego:
            return std::abs(a3 - fn.param * a2 * a2);
        case Functional::Kind::h2_2:
            return std::abs(a2 * a4 - fn.param * a3 * a3);
        case Functional::Kind::b2_1:
            return std::abs(a2 * a3 - fn.param * a4);
        case Functional::Kind::h3: {
            const double l1 = fn.lambdas[0], l2 = fn.lambdas[1], l3 = fn.lambdas[2];
            return std::abs(l2 * a3 * (a2 * a4 - (l3 / l2) * a3 * a3) +
                            l3 * a4 * (a2 * a3 - (l1 / l3) * a4) +
                            l1 * a5 * (a3 - (l2 / l1) * a2 * a2));
        }
    }
    return 0.0;
}

// Objective over mixture parameters: params = [theta_1..theta_m,
// w_1..w_m], weights = softmax(w).
double atoms_objective(const Functional& fn, const std::vector<double>& params, int m) {
    double wmax = params[static_cast<std::size_t>(m)];
    for (int j = 1; j < m; ++j) {
        wmax = std::max(wmax, params[static_cast<std::size_t>(m + j)]);
    }
    double wsum = 0.0;
    Complex c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
    for (int j = 0; j < m; ++j) {
        const double t = std::exp(params[static_cast<std::size_t>(m + j)] - wmax);
        wsum += t;
        const double theta = params[static_cast<std::size_t>(j)];
        const Complex w(std::cos(theta), std::sin(theta));
        Complex pw = w;
        c1 += t * pw;
        pw *= w;
        c2 += t * pw;
        pw *= w;
        c3 += t * pw;
        pw *= w;
        c4 += t * pw;
    }
    const double scale = 2.0 / wsum;
    c1 *= scale;
    c2 *= scale;
    c3 *= scale;
    c4 *= scale;
    const Complex a2 = c1;
    const Complex a3 = (c2 + c1 * a2) / 2.0;
    const Complex a4 = (c3 + c2 * a2 + c1 * a3) / 3.0;
    const Complex a5 = (c4 + c3 * a2 + c2 * a3 + c1 * a4) / 4.0;
    return functional_abs(fn, a2, a3, a4, a5);
}

double lemma3_objective(const Functional& fn, double c1, double rho, double phix,
                        double phiz) {
    const Complex x = rho * Complex(std::cos(phix), std::sin(phix));
    const Complex z(std::cos(phiz), std::sin(phiz));
    const double rest = 4.0 - c1 * c1;
    const Complex c2 = (c1 * c1 + x * rest) / 2.0;
    const Complex c3 = (c1 * c1 * c1 + 2.0 * x * c1 * rest - x * x * c1 * rest +
                        2.0 * z * (1.0 - rho * rho) * rest) /
                       4.0;
    const Complex a2 = c1;
    const Complex a3 = (c2 + c1 * a2) / 2.0;
    const Complex a4 = (c3 + c2 * a2 + c1 * a3) / 3.0;
    return functional_abs(fn, a2, a3, a4, Complex(0.0));
}

struct GoldenPoint {
    double x;
    double value;
};

// Golden-section ascent of a scalar slice. Deterministic: fixed shrink
// ratio, evaluation order and tie handling.
template <typename F>
GoldenPoint golden_max(F&& f, double lo, double hi, double xtol) {
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? GoldenPoint{c, fc} : GoldenPoint{d, fd};
}

struct Candidate {
    double value = -1.0;
    std::vector<double> params;
    long long evals = 0;
};

double round_12(double v) { return std::round(v * 1e12) * 1e-12; }

// Merge rule shared by every backend: highest value first, then the
// lexicographically smallest parameter vector rounded to 1e-12. Applied
// in a fixed order over restarts, the outcome cannot depend on thread
// scheduling.
bool improves(const Candidate& incoming, const Candidate& best) {
    if (incoming.value != best.value) return incoming.value > best.value;
    for (std::size_t i = 0; i < incoming.params.size() && i < best.params.size(); ++i) {
        const double a = round_12(incoming.params[i]);
        const double b = round_12(best.params[i]);
        if (a != b) return a < b;
    }
    return false;
}

template <typename Body>
void run_indexed(int count, int threads, Body&& body) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min(threads, count);
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
}

Candidate run_atoms_restart(const Functional& fn, const SearchConfig& cfg,
                            std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int m = cfg.atoms;
    Candidate cand;
    cand.params.resize(static_cast<std::size_t>(2 * m));
    for (int j = 0; j < m; ++j) {
        cand.params[static_cast<std::size_t>(j)] = kTwoPi * rng.uniform();
    }
    for (int j = 0; j < m; ++j) {
        const double e = -std::log(1.0 - rng.uniform());
        cand.params[static_cast<std::size_t>(m + j)] =
            std::clamp(std::log(e), -kLogitRange, kLogitRange);
    }

    auto objective = [&](const std::vector<double>& p) {
        ++cand.evals;
        return atoms_objective(fn, p, m);
    };
    cand.value = objective(cand.params);

    for (int cycle = 0; cycle < cfg.max_iters; ++cycle) {
        const double before = cand.value;
        for (int coord = 0; coord < 2 * m; ++coord) {
            const double lo = coord < m ? 0.0 : -kLogitRange;
            const double hi = coord < m ? kTwoPi : kLogitRange;
            const double saved = cand.params[static_cast<std::size_t>(coord)];
            auto slice = [&](double t) {
                cand.params[static_cast<std::size_t>(coord)] = t;
                return objective(cand.params);
            };
            const GoldenPoint best = golden_max(slice, lo, hi, (hi - lo) * 1e-10);
            if (best.value > cand.value) {
                cand.value = best.value;
                cand.params[static_cast<std::size_t>(coord)] = best.x;
            } else {
                cand.params[static_cast<std::size_t>(coord)] = saved;
            }
        }
        if (cand.value - before < cfg.tol) break;
    }
    // Canonical angle representatives in [0, 2pi).
    for (int j = 0; j < m; ++j) {
        double& theta = cand.params[static_cast<std::size_t>(j)];
        theta = std::fmod(theta, kTwoPi);
        if (theta < 0.0) theta += kTwoPi;
    }
    return cand;
}

AtomMixture mixture_from_params(const std::vector<double>& params, int m) {
    AtomMixture mix;
    mix.angles.assign(params.begin(), params.begin() + m);
    mix.weights.resize(static_cast<std::size_t>(m));
    double wmax = params[static_cast<std::size_t>(m)];
    for (int j = 1; j < m; ++j) {
        wmax = std::max(wmax, params[static_cast<std::size_t>(m + j)]);
    }
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
        mix.weights[static_cast<std::size_t>(j)] =
            std::exp(params[static_cast<std::size_t>(m + j)] - wmax);
        sum += mix.weights[static_cast<std::size_t>(j)];
    }
    for (double& w : mix.weights) w /= sum;
    return mix;
}

double pipeline_value(const Functional& fn, const AtomMixture& mix) {
    const StarlikeCoeffs f = lift_starlike(mixture_coeffs(mix, kDefaultOrder - 1));
    return std::abs(functional_eval(f, fn));
}

double pipeline_value(const Functional& fn, const Lemma3Params& params) {
    const StarlikeCoeffs f = lift_starlike(lemma3_coeffs(params), 4);
    return std::abs(functional_eval(f, fn));
}

}  // namespace

SearchResult sup_over_atoms(const Functional& fn, const SearchConfig& cfg) {
    if (cfg.atoms < 1 || cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.tol > 0.0)) {
        throw std::invalid_argument("invalid search config");
    }
    validate_functional(fn);
    const BoundValue bound = bound_for(fn);

    std::vector<Candidate> outcomes(static_cast<std::size_t>(cfg.restarts));
    run_indexed(cfg.restarts, cfg.threads, [&](int r) {
        outcomes[static_cast<std::size_t>(r)] =
            run_atoms_restart(fn, cfg, cfg.seed + static_cast<std::uint64_t>(r));
    });

    Candidate best;
    long long evals = 0;
    for (const Candidate& cand : outcomes) {
        evals += cand.evals;
        if (improves(cand, best)) {
            best.value = cand.value;
            best.params = cand.params;
        }
    }

    SearchResult result;
    const AtomMixture witness = mixture_from_params(best.params, cfg.atoms);
    result.witness = witness;
    result.value = pipeline_value(fn, witness);
    result.bound = bound;
    result.gap = bound.value - result.value;
    result.seed = cfg.seed;
    result.restarts = cfg.restarts;
    result.iterations = evals;
    return result;
}

SearchResult sup_over_lemma3(const Functional& fn, const SearchConfig& cfg) {
    if (cfg.lemma3_grid < 2 || cfg.max_iters < 1 || !(cfg.tol > 0.0)) {
        throw std::invalid_argument("invalid search config");
    }
    if (fn.kind != Functional::Kind::b2_1 && fn.kind != Functional::Kind::h2_2) {
        throw std::invalid_argument("not representable by Lemma 3 alone");
    }
    validate_functional(fn);
    const BoundValue bound = bound_for(fn);

    const int g = cfg.lemma3_grid;
    std::vector<double> cs(static_cast<std::size_t>(g));
    std::vector<double> rhos(static_cast<std::size_t>(g));
    std::vector<double> phases(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
        cs[static_cast<std::size_t>(i)] = 2.0 * i / (g - 1);
        rhos[static_cast<std::size_t>(i)] = static_cast<double>(i) / (g - 1);
        phases[static_cast<std::size_t>(i)] = kTwoPi * i / g;  // [0, 2pi)
    }

    // Dense scan, sliced over c1 so threading cannot change the winner:
    // each slice keeps its first maximum, slices merge in c1 order.
    std::vector<Candidate> slice_best(static_cast<std::size_t>(g));
    run_indexed(g, cfg.threads, [&](int ic) {
        const double c1 = cs[static_cast<std::size_t>(ic)];
        Candidate local;
        local.params = {c1, 0.0, 0.0, 0.0};
        for (int ir = 0; ir < g; ++ir) {
            for (int ip = 0; ip < g; ++ip) {
                for (int iz = 0; iz < g; ++iz) {
                    const double v =
                        lemma3_objective(fn, c1, rhos[static_cast<std::size_t>(ir)],
                                         phases[static_cast<std::size_t>(ip)],
                                         phases[static_cast<std::size_t>(iz)]);
                    if (v > local.value) {
                        local.value = v;
                        local.params = {c1, rhos[static_cast<std::size_t>(ir)],
                                        phases[static_cast<std::size_t>(ip)],
                                        phases[static_cast<std::size_t>(iz)]};
                    }
                }
            }
        }
        local.evals = static_cast<long long>(g) * g * g;
        slice_best[static_cast<std::size_t>(ic)] = local;
    });

    Candidate best;
    long long evals = 0;
    for (const Candidate& cand : slice_best) {
        evals += cand.evals;
        if (cand.value > best.value) {
            best.value = cand.value;
            best.params = cand.params;
        }
    }

    // Golden-section polish around the best cell; phases are periodic and
    // run unclamped, c1 and rho stay inside their boxes.
    const double steps[4] = {2.0 / (g - 1), 1.0 / (g - 1), kTwoPi / g, kTwoPi / g};
    const double los[4] = {0.0, 0.0, -kTwoPi, -kTwoPi};
    const double his[4] = {2.0, 1.0, 2.0 * kTwoPi, 2.0 * kTwoPi};
    long long polish_evals = 0;
    auto objective = [&](const std::vector<double>& p) {
        ++polish_evals;
        return lemma3_objective(fn, p[0], p[1], p[2], p[3]);
    };
    for (int cycle = 0; cycle < cfg.max_iters; ++cycle) {
        const double before = best.value;
        for (int coord = 0; coord < 4; ++coord) {
            const double lo = std::max(los[coord], best.params[static_cast<std::size_t>(coord)] -
                                                       steps[coord]);
            const double hi = std::min(his[coord], best.params[static_cast<std::size_t>(coord)] +
                                                       steps[coord]);
            const double saved = best.params[static_cast<std::size_t>(coord)];
            auto slice = [&](double t) {
                best.params[static_cast<std::size_t>(coord)] = t;
                return objective(best.params);
            };
            const GoldenPoint top = golden_max(slice, lo, hi, (hi - lo) * 1e-10);
            if (top.value > best.value) {
                best.value = top.value;
                best.params[static_cast<std::size_t>(coord)] = top.x;
            } else {
                best.params[static_cast<std::size_t>(coord)] = saved;
            }
        }
        if (best.value - before < cfg.tol) break;
    }

    Lemma3Params witness;
    witness.c1 = best.params[0];
    witness.x = best.params[1] * Complex(std::cos(best.params[2]), std::sin(best.params[2]));
    witness.z = Complex(std::cos(best.params[3]), std::sin(best.params[3]));

    SearchResult result;
    result.witness = witness;
    result.value = pipeline_value(fn, witness);
    result.bound = bound;
    result.gap = bound.value - result.value;
    result.seed = cfg.seed;
    result.restarts = 1;
    result.iterations = evals + polish_evals;
    return result;
}

SweepReport sharpness_sweep(Functional::Kind kind, const std::vector<double>& params,
                            const SearchConfig& cfg) {
    if (params.empty()) throw std::invalid_argument("empty parameter list");
    if (kind == Functional::Kind::h3) {
        throw std::invalid_argument("sweep expects a scalar-parameter functional");
    }
    SweepReport report;
    report.kind = kind;
    report.config = cfg;
    for (double p : params) {
        Functional fn;
        fn.kind = kind;
        fn.param = p;
        SweepEntry entry;
        entry.param = p;
        entry.atoms = sup_over_atoms(fn, cfg);
        entry.value = entry.atoms.value;
        if (kind == Functional::Kind::b2_1 || kind == Functional::Kind::h2_2) {
            entry.lemma3 = sup_over_lemma3(fn, cfg);
            entry.value = std::max(entry.value, entry.lemma3->value);
        }
        entry.gap = entry.atoms.bound.value - entry.value;
        entry.attained = entry.gap <= 1e-3;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace fsdet

#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "fsdet/bounds.hpp"
#include "fsdet/caratheodory.hpp"
#include "fsdet/determinants.hpp"

namespace fsdet {

struct SearchConfig {
    int atoms = 4;
    int restarts = 64;
    int max_iters = 400;   // coordinate cycles per restart / polish
    double tol = 1e-10;    // stop when a full cycle improves less than this
    std::uint64_t seed = 42;
    int threads = 1;       // scheduling only; results are thread-count invariant
    int lemma3_grid = 65;  // points per axis of the dense pre-scan
};

struct SearchResult {
    double value = 0.0;  // estimated supremum of |functional|
    std::variant<AtomMixture, Lemma3Params> witness;
    BoundValue bound;
    double gap = 0.0;  // bound.value - value
    std::uint64_t seed = 0;
    int restarts = 0;
    long long iterations = 0;  // objective evaluations consumed
};

/// Maximizes |functional| over m-atom mixtures lifted to starlike
/// coefficients. Free variables are the m angles and m weight logits
/// (weights are normalized exponentials, so the probability simplex is
/// covered); the optimizer is coordinate-wise golden-section ascent with
/// `restarts` seeded starting points, restart r drawing from seed + r.
/// Identical (config, seed) gives a bit-identical result for any thread
/// count: restarts are independent and merged in a fixed order (highest
/// value, ties to the lexicographically smallest parameter vector
/// rounded to 1e-12).
SearchResult sup_over_atoms(const Functional& fn, const SearchConfig& cfg);

/// Maximizes |functional| over the exact coefficient-body parametrization
/// (c1 in [0,2], |x| in [0,1], arg x, arg z; |z| = 1 since the objective
/// is affine in z). Dense grid scan followed by golden-section polish of
/// the best cell. Only functionals of a2..a4 qualify (b2_1, h2_2).
SearchResult sup_over_lemma3(const Functional& fn, const SearchConfig& cfg);

struct SweepEntry {
    double param = 0.0;
    SearchResult atoms;
    std::optional<SearchResult> lemma3;
    double value = 0.0;  // best over backends
    double gap = 0.0;
    bool attained = false;  // gap <= 1e-3
};

struct SweepReport {
    Functional::Kind kind = Functional::Kind::fekete_szego;
    SearchConfig config;
    std::vector<SweepEntry> entries;
};

/// Per-parameter search over a list of functional parameters, running
/// both backends where applicable.
SweepReport sharpness_sweep(Functional::Kind kind, const std::vector<double>& params,
                            const SearchConfig& cfg);

}  // namespace fsdet

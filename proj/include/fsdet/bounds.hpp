#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fsdet/determinants.hpp"

namespace fsdet {

/// One evaluated closed-form bound. Where the source gives two
/// inconsistent forms (t3), both are reported and `consistent` says
/// whether they agree at this parameter; nothing is adjudicated silently.
struct BoundValue {
    double value = 0.0;
    std::string branch;
    std::optional<double> alt_value;
    bool consistent = true;
};

/// |a3 - gamma a2^2| <= max{1, |4 gamma - 3|}; the "unit" branch is
/// attained by z/(1-z^2) on [1/2, 1], the "koebe" branch by z/(1-z)^2.
BoundValue t1_bound(double gamma);

/// |a2 a3 - beta a4| <= 2 max{beta, |3 - 2 beta|} for beta >= 0; equals
/// the piecewise form 6-4b / 2b / 4b-6 on [0,1] / [1,3] / [3,inf).
BoundValue t2_bound(double beta);

/// |a2 a4 - alpha a3^2|, alpha >= 0. Headline form max{1, |9 alpha - 8|}
/// in `value`; the piecewise form 8-9a / 1 / 9a-8 in `alt_value`. The two
/// disagree exactly on (2/3, 7/9), where the Koebe witness value 8-9a
/// exceeds the piecewise 1, so `consistent` is false there.
BoundValue t3_bound(double alpha);

/// Grand bound  5 max{l1,|4l2-3l1|} + 8 max{l1,|3l3-2l1|}
///            + 3 max{l2,|9l3-8l2|},  all lambdas >= 0.
BoundValue t4_bound(double l1, double l2, double l3);

/// The bound matching a functional: t1 for fekete_szego, t2 for b2_1,
/// t3 for h2_2, t4 for h3.
BoundValue bound_for(const Functional& fn);

/// One row of the reference-table audit: the published value for a
/// lambda-triple next to the term-by-term recomputation from t4_bound.
struct Corollary4Row {
    std::array<double, 3> lambdas;
    double printed;
    double recomputed;
    bool match;
};

/// The eight published triples. Three rows match the recomputation
/// ((1,1,1), (2,1,1), (1,2,2)); the other five do not, and both columns
/// are reported so the discrepancy is visible.
std::vector<Corollary4Row> corollary4_table();

}  // namespace fsdet

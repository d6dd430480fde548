#include "fsdet/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace fsdet {

namespace {

constexpr double kMatchTol = 1e-12;

// Branch intervals are closed on the left, open on the right, with the
// final branch closed; adjacent expressions agree at the shared points so
// this only pins the label.
const char* t2_branch(double beta) {
    if (beta < 1.0) return "[0,1]";
    if (beta < 3.0) return "[1,3]";
    return "[3,inf)";
}

std::string t4_term(const char* plain, const char* folded, double a, double b) {
    return a >= b ? plain : folded;
}

}  // namespace

BoundValue t1_bound(double gamma) {
    BoundValue out;
    out.value = std::max(1.0, std::abs(4.0 * gamma - 3.0));
    out.branch = (gamma >= 0.5 && gamma <= 1.0) ? "unit" : "koebe";
    return out;
}

BoundValue t2_bound(double beta) {
    if (beta < 0.0) throw std::invalid_argument("outside theorem hypothesis");
    BoundValue out;
    out.value = 2.0 * std::max(beta, std::abs(3.0 - 2.0 * beta));
    out.branch = t2_branch(beta);
    return out;
}

BoundValue t3_bound(double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("outside theorem hypothesis");
    BoundValue out;
    out.value = std::max(1.0, std::abs(9.0 * alpha - 8.0));
    out.branch = (std::abs(9.0 * alpha - 8.0) <= 1.0) ? "unit" : "koebe";
    double alt;
    if (alpha <= 2.0 / 3.0) {
        alt = 8.0 - 9.0 * alpha;
    } else if (alpha <= 1.0) {
        alt = 1.0;
    } else {
        alt = 9.0 * alpha - 8.0;
    }
    out.alt_value = alt;
    out.consistent = std::abs(out.value - alt) <= kMatchTol;
    return out;
}

BoundValue t4_bound(double l1, double l2, double l3) {
    if (l1 < 0.0 || l2 < 0.0 || l3 < 0.0) {
        throw std::invalid_argument("outside theorem hypothesis");
    }
    const double b1 = std::abs(4.0 * l2 - 3.0 * l1);
    const double b2 = std::abs(3.0 * l3 - 2.0 * l1);
    const double b3 = std::abs(9.0 * l3 - 8.0 * l2);
    BoundValue out;
    out.value = 5.0 * std::max(l1, b1) + 8.0 * std::max(l1, b2) + 3.0 * std::max(l2, b3);
    out.branch = "t1=" + t4_term("l1", "|4l2-3l1|", l1, b1) +
                 ",t2=" + t4_term("l1", "|3l3-2l1|", l1, b2) +
                 ",t3=" + t4_term("l2", "|9l3-8l2|", l2, b3);
    return out;
}

BoundValue bound_for(const Functional& fn) {
    switch (fn.kind) {
        case Functional::Kind::fekete_szego: return t1_bound(fn.param);
        case Functional::Kind::b2_1: return t2_bound(fn.param);
        case Functional::Kind::h2_2: return t3_bound(fn.param);
        case Functional::Kind::h3:
            return t4_bound(fn.lambdas[0], fn.lambdas[1], fn.lambdas[2]);
    }
    throw std::invalid_argument("unknown functional");
}

std::vector<Corollary4Row> corollary4_table() {
    // Published triples and values, in the published order.
    static const std::array<std::pair<std::array<double, 3>, double>, 8> rows = {{
        {{1.0, 1.0, 1.0}, 16.0},
        {{1.0, 1.0, 2.0}, 81.0},
        {{1.0, 2.0, 1.0}, 51.5},
        {{2.0, 1.0, 1.0}, 29.0},
        {{1.0, 2.0, 2.0}, 63.0},
        {{2.0, 1.0, 2.0}, 78.0},
        {{2.0, 2.0, 1.0}, 52.5},
        {{1.0, 3.0, 2.0}, 105.0},
    }};
    std::vector<Corollary4Row> table;
    table.reserve(rows.size());
    for (const auto& [lambdas, printed] : rows) {
        Corollary4Row row;
        row.lambdas = lambdas;
        row.printed = printed;
        row.recomputed = t4_bound(lambdas[0], lambdas[1], lambdas[2]).value;
        row.match = std::abs(row.printed - row.recomputed) <= kMatchTol;
        table.push_back(row);
    }
    return table;
}

}  // namespace fsdet

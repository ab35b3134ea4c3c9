#include "ibmap/ibscore.hpp"

#include <stdexcept>

namespace ibmap {

Assertion closure_assertion(const Structure& g, Node x, Node y) {
    Assertion a;
    a.x = x;
    a.y = y;
    const auto& mb = g.blanket(x);
    if (mb.contains(y)) {
        a.kind = AssertionKind::dependence;
        mb.for_each([&](Node w) {
            if (w != y) a.z.push_back(w);
        });
    } else {
        a.kind = AssertionKind::independence;
        a.z = mb.members();
    }
    return a;
}

std::vector<Assertion> mb_closure(const Structure& g) {
    const auto n = g.num_nodes();
    std::vector<Assertion> out;
    out.reserve(n * (n > 0 ? n - 1 : 0));
    for (Node x = 0; x < n; ++x)
        for (Node y = 0; y < n; ++y)
            if (x != y) out.push_back(closure_assertion(g, x, y));
    return out;
}

double sigma_xy(const Dataset& d, const Structure& g, Node x, Node y, TestCache& cache) {
    return cached_test(cache, d, closure_assertion(g, x, y));
}

double variable_score(const Dataset& d, const Structure& g, Node x, TestCache& cache) {
    if (x >= g.num_nodes()) throw std::out_of_range("variable_score: node out of range");
    double sum = 0.0;
    for (Node y = 0; y < g.num_nodes(); ++y) {
        if (y != x) sum += sigma_xy(d, g, x, y, cache);
    }
    return sum;
}

namespace {

double sum_in_order(const std::vector<double>& v) {
    double total = 0.0;
    for (double s : v) total += s;
    return total;
}

}  // namespace

ScoreState ib_score(const Dataset& d, const Structure& g, TestCache& cache) {
    if (d.num_variables() != g.num_nodes()) {
        throw std::invalid_argument("ib_score: dataset has " + std::to_string(d.num_variables()) +
                                    " variables, structure has " +
                                    std::to_string(g.num_nodes()) + " nodes");
    }
    ScoreState s;
    s.per_variable.resize(g.num_nodes());
    for (Node x = 0; x < g.num_nodes(); ++x) s.per_variable[x] = variable_score(d, g, x, cache);
    s.total = sum_in_order(s.per_variable);
    return s;
}

ScoreState rescore_after_flip(const Dataset& d, const Structure& g, const ScoreState& s, Node x,
                              Node y, TestCache& cache) {
    const Structure flipped = flip_edge(g, x, y);
    ScoreState out = s;
    out.per_variable.at(x) = variable_score(d, flipped, x, cache);
    out.per_variable.at(y) = variable_score(d, flipped, y, cache);
    out.total = sum_in_order(out.per_variable);
    return out;
}

std::optional<double> cached_sigma_xy(const Structure& g, Node x, Node y, const TestCache& cache) {
    auto a = closure_assertion(g, x, y);
    const auto outcome = cache.peek(TestKey::of(a.x, a.y, std::move(a.z)));
    if (!outcome) return std::nullopt;
    return outcome->log_p(a.kind);
}

}  // namespace ibmap

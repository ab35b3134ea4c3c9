#include "ibmap/search.hpp"

#include <set>

namespace ibmap {

Edge select_next_structure(const Structure& g, const ScoreState& /*s*/, const TestCache& cache) {
    const auto n = g.num_nodes();
    if (n < 2) throw std::invalid_argument("select_next_structure: need at least two nodes");
    auto sigma = [&](Node x, Node y) {
        const auto v = cached_sigma_xy(g, x, y, cache);
        if (!v) {
            throw CacheMissError("select_next_structure: no cached test for pair (" +
                                 std::to_string(x) + ", " + std::to_string(y) + ")");
        }
        return *v;
    };

    Edge best{0, 1};
    double best_value = 0.0;
    bool first = true;
    for (Node x = 0; x < n; ++x) {
        for (Node y = x + 1; y < n; ++y) {
            const double value = sigma(x, y) + sigma(y, x);
            if (first || value < best_value) {
                best = {x, y};
                best_value = value;
                first = false;
            }
        }
    }
    return best;
}

SearchResult ibmap_hc(const Dataset& d, TestCache& cache, const SearchOptions& options) {
    const auto n = d.num_variables();
    const auto computed_before = cache.tests_computed();
    const auto hits_before = cache.cache_hits();

    SearchResult result;
    result.structure = options.warm_start ? *options.warm_start : Structure(n);
    if (result.structure.num_nodes() != n) {
        throw std::invalid_argument("ibmap_hc: warm start has the wrong number of nodes");
    }
    result.score = ib_score(d, result.structure, cache);
    result.score_trace.push_back(result.score.total);

    const std::size_t max_iterations = options.max_iterations ? options.max_iterations : 10 * n * n;
    std::set<Edge> plateau;
    std::size_t iterations = 0;

    while (n >= 2) {
        if (iterations++ >= max_iterations) {
            result.status = SearchStatus::iteration_limit;
            break;
        }
        const auto [x, y] = select_next_structure(result.structure, result.score, cache);
        auto neighbour = rescore_after_flip(d, result.structure, result.score, x, y, cache);
        if (neighbour.total < result.score.total) break;
        if (neighbour.total == result.score.total) {
            if (!plateau.insert({x, y}).second) break;
        } else {
            plateau.clear();
        }
        result.structure.toggle_edge(x, y);
        result.score = std::move(neighbour);
        result.score_trace.push_back(result.score.total);
        ++result.ascents;
    }

    result.tests_computed = cache.tests_computed() - computed_before;
    result.cache_hits = cache.cache_hits() - hits_before;
    return result;
}

SearchResult ibmap_hc(const Dataset& d, const SearchOptions& options) {
    TestCache cache(options.alpha);
    return ibmap_hc(d, cache, options);
}

}  // namespace ibmap

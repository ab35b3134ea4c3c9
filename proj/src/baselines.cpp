#include "ibmap/baselines.hpp"

#include <algorithm>
#include <numeric>

namespace ibmap {

namespace {

TestOutcome query(TestCache& cache, const Dataset& d, Node x, Node y, std::vector<Node> z) {
    return cache.get_or_compute(d, TestKey::of(x, y, std::move(z)));
}

bool dependent(const TestOutcome& t) { return t.log_p_dep > t.log_p_ind; }

std::vector<Node> grow_shrink(const Dataset& d, TestCache& cache, Node x) {
    const auto n = static_cast<Node>(d.num_variables());

    std::vector<Node> candidates;
    std::vector<double> strength(n, 0.0);
    for (Node y = 0; y < n; ++y) {
        if (y == x) continue;
        candidates.push_back(y);
        strength[y] = query(cache, d, x, y, {}).log_p_dep;
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Node a, Node b) { return strength[a] > strength[b]; });

    std::vector<Node> blanket;
    for (Node y : candidates) {
        if (dependent(query(cache, d, x, y, blanket))) blanket.push_back(y);
    }

    bool removed = true;
    while (removed && !blanket.empty()) {
        removed = false;
        for (std::size_t i = blanket.size(); i-- > 0;) {
            std::vector<Node> rest;
            rest.reserve(blanket.size() - 1);
            for (std::size_t j = 0; j < blanket.size(); ++j)
                if (j != i) rest.push_back(blanket[j]);
            if (!dependent(query(cache, d, x, blanket[i], rest))) {
                blanket.erase(blanket.begin() + static_cast<std::ptrdiff_t>(i));
                removed = true;
            }
        }
    }
    std::sort(blanket.begin(), blanket.end());
    return blanket;
}

}  // namespace

std::vector<std::vector<Node>> gsmn_blankets(const Dataset& d, TestCache& cache) {
    std::vector<std::vector<Node>> out(d.num_variables());
    for (Node x = 0; x < d.num_variables(); ++x) out[x] = grow_shrink(d, cache, x);
    return out;
}

SearchResult gsmn(const Dataset& d, TestCache& cache, const GsmnOptions& options) {
    const auto computed_before = cache.tests_computed();
    const auto hits_before = cache.cache_hits();
    const auto n = d.num_variables();
    const auto blankets = gsmn_blankets(d, cache);

    std::vector<NodeSet> member;
    member.reserve(n);
    for (const auto& b : blankets) member.emplace_back(n, b);

    SearchResult result;
    result.structure = Structure(n);
    for (Node x = 0; x < n; ++x) {
        for (Node y = x + 1; y < n; ++y) {
            const bool a = member[x].contains(y);
            const bool b = member[y].contains(x);
            const bool edge = options.combine == EdgeCombination::either ? (a || b) : (a && b);
            if (edge) result.structure.add_edge(x, y);
        }
    }
    result.tests_computed = cache.tests_computed() - computed_before;
    result.cache_hits = cache.cache_hits() - hits_before;
    if (options.score_result) {
        result.score = ib_score(d, result.structure, cache);
        result.score_trace.push_back(result.score.total);
    }
    return result;
}

SearchResult gsmn(const Dataset& d, const GsmnOptions& options) {
    TestCache cache(options.alpha);
    return gsmn(d, cache, options);
}

}  // namespace ibmap

#pragma once

#include <string>
#include <vector>

#include "ibmap/dataset.hpp"
#include "ibmap/graph.hpp"
#include "ibmap/rng.hpp"

namespace testing {

/// n independent fair binary columns.
inline ibmap::Dataset independent_binary(std::size_t n, std::size_t rows, std::uint64_t seed) {
    ibmap::Rng rng(seed);
    std::vector<std::vector<ibmap::Value>> cols(n, std::vector<ibmap::Value>(rows));
    for (auto& c : cols)
        for (auto& v : c) v = static_cast<ibmap::Value>(rng.below(2));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("V" + std::to_string(i));
    return ibmap::Dataset(names, std::vector<ibmap::Value>(n, 2), cols);
}

inline ibmap::Structure random_graph(std::size_t n, double p, ibmap::Rng& rng) {
    ibmap::Structure g(n);
    for (ibmap::Node x = 0; x < n; ++x)
        for (ibmap::Node y = x + 1; y < n; ++y)
            if (rng.bernoulli(p)) g.add_edge(x, y);
    return g;
}

inline ibmap::Structure path(std::size_t n) {
    ibmap::Structure g(n);
    for (ibmap::Node x = 0; x + 1 < n; ++x) g.add_edge(x, x + 1);
    return g;
}

}  // namespace testing

#pragma once

#include <optional>
#include <vector>

#include "ibmap/citest.hpp"
#include "ibmap/dataset.hpp"
#include "ibmap/graph.hpp"

namespace ibmap {

/// IB-score of a structure, kept per variable so that a single edge flip can
/// be rescored by touching two entries.
struct ScoreState {
    std::vector<double> per_variable;
    double total = 0.0;
};

/// The closure assertion for the ordered pair (x, y): dependence given
/// MB(x) \ {y} when (x, y) is an edge, independence given MB(x) otherwise.
Assertion closure_assertion(const Structure& g, Node x, Node y);

/// All n(n-1) closure assertions, ordered by x then y.
std::vector<Assertion> mb_closure(const Structure& g);

double sigma_xy(const Dataset& d, const Structure& g, Node x, Node y, TestCache& cache);

/// Sum of sigma_xy over y != x.
double variable_score(const Dataset& d, const Structure& g, Node x, TestCache& cache);

ScoreState ib_score(const Dataset& d, const Structure& g, TestCache& cache);

/// Given the exact state `s` of `g`, returns the state of flip_edge(g, x, y)
/// recomputing only the entries of x and y. A stale `s` is not detected.
ScoreState rescore_after_flip(const Dataset& d, const Structure& g, const ScoreState& s, Node x,
                              Node y, TestCache& cache);

/// sigma_xy read from the cache only; nullopt if the test was never computed.
std::optional<double> cached_sigma_xy(const Structure& g, Node x, Node y, const TestCache& cache);

}  // namespace ibmap

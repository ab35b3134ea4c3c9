#pragma once

#include <vector>

#include "ibmap/citest.hpp"
#include "ibmap/dataset.hpp"
#include "ibmap/search.hpp"

namespace ibmap {

enum class EdgeCombination { either, both };

struct GsmnOptions {
    /// `either`: edge if any endpoint keeps the other in its blanket.
    EdgeCombination combine = EdgeCombination::either;
    double alpha = 1.0;
    /// Attach the IB-score of the learned structure to the result. Scoring
    /// happens after tests_computed is recorded.
    bool score_result = true;
};

/// Grow-shrink blanket of every variable, each ascending.
///
/// Grow visits candidates once, strongest marginal dependence first (ties by
/// index), adding y when p(dep | current blanket) > 0.5. Shrink then removes
/// members with p(ind | blanket \ {y}) >= 0.5, latest-added first, repeating
/// until a full pass removes nothing.
std::vector<std::vector<Node>> gsmn_blankets(const Dataset& d, TestCache& cache);

/// GSMN structure learner on the Bayesian test with a 0.5 posterior threshold.
SearchResult gsmn(const Dataset& d, TestCache& cache, const GsmnOptions& options = {});
SearchResult gsmn(const Dataset& d, const GsmnOptions& options = {});

}  // namespace ibmap

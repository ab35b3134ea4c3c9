#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ibmap/citest.hpp"
#include "ibmap/dataset.hpp"
#include "ibmap/graph.hpp"
#include "ibmap/ibscore.hpp"

namespace ibmap {

enum class SearchStatus {
    converged,        ///< the proposed neighbour did not improve the score
    iteration_limit,  ///< aborted by the max-iterations guard
};

struct SearchOptions {
    /// Loop guard; 0 selects 10 * n^2.
    std::size_t max_iterations = 0;
    /// Starting structure; the empty structure when unset.
    std::optional<Structure> warm_start;
    /// Dirichlet hyperparameter of the test, used when the search owns its cache.
    double alpha = 1.0;
};

struct SearchResult {
    Structure structure;
    ScoreState score;
    std::size_t ascents = 0;
    std::uint64_t tests_computed = 0;
    std::uint64_t cache_hits = 0;
    SearchStatus status = SearchStatus::converged;
    /// Total score after the initial evaluation and after each accepted flip.
    std::vector<double> score_trace;
};

/// Raised when select_next_structure needs a test that is not in the cache.
class CacheMissError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The pair minimising sigma_xy + sigma_yx over all pairs, read from the cache
/// without computing tests. Ties go to the lexicographically smallest pair.
Edge select_next_structure(const Structure& g, const ScoreState& s, const TestCache& cache);

/// Hill climbing over single-edge flips of the IB-score, starting from the
/// empty structure. Equal-score moves are accepted; within a run of equal
/// scores each pair may be flipped once, after which the search stops.
SearchResult ibmap_hc(const Dataset& d, TestCache& cache, const SearchOptions& options = {});
SearchResult ibmap_hc(const Dataset& d, const SearchOptions& options = {});

}  // namespace ibmap

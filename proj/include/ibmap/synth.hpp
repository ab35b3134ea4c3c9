#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>

#include "ibmap/dataset.hpp"
#include "ibmap/graph.hpp"

namespace ibmap {

/// Positive 2x2 potential over (x_i, x_j) with i < j; entry [2a + b] is phi(a, b).
struct PairFactor {
    std::array<double, 4> phi{1.0, 1.0, 1.0, 1.0};

    double operator()(Value a, Value b) const { return phi[2 * a + b]; }
    double log_odds() const;
};

/// Binary pairwise Markov network. The partition function is never needed.
struct PairwiseModel {
    Structure structure;
    std::map<Edge, PairFactor> factors;
};

/// floor(n * tau / 2) edges taken from the front of a seeded uniform
/// permutation of all pairs.
Structure random_structure(std::size_t n, double tau, std::uint64_t seed);

/// Non-toroidal 4-neighbour grid, node index r * cols + c.
Structure ising_structure(std::size_t rows, std::size_t cols);

/// Factor with the given phi(0,0), phi(0,1), phi(1,0) and phi(1,1) solved so
/// that log(phi00 phi11 / (phi01 phi10)) = epsilon.
PairFactor factor_with_log_odds(double phi00, double phi01, double phi10, double epsilon);

/// One factor per edge with three entries uniform on (0, 1].
PairwiseModel pairwise_model(const Structure& g, double epsilon, std::uint64_t seed);

struct GibbsOptions {
    std::size_t burn_in = 100;  ///< sweeps discarded before the first row
    std::size_t thin = 9;       ///< sweeps skipped between emitted rows
};

/// Single-site Gibbs chain with index-order sweeps; columns are named X0..X{n-1}
/// and have arity 2.
Dataset gibbs_sample(const PairwiseModel& m, std::size_t n_rows, std::uint64_t seed,
                     const GibbsOptions& options = {});

/// Exact joint distribution by enumeration, indexed by the assignment with
/// node 0 as the most significant bit. For validation on small models (n <= 20).
std::vector<double> exact_joint(const PairwiseModel& m);

/// Ground truth plus a sampled dataset, every part derived from one seed
/// through named sub-streams ("structure", "params", "sampler").
struct SyntheticProblem {
    PairwiseModel model;
    Dataset data;
};

SyntheticProblem make_random_problem(std::size_t n, double tau, std::size_t rows, std::uint64_t seed,
                                     double epsilon = 1.0, const GibbsOptions& gibbs = {});

SyntheticProblem make_ising_problem(std::size_t grid_rows, std::size_t grid_cols, std::size_t rows,
                                    std::uint64_t seed, double epsilon = 1.0,
                                    const GibbsOptions& gibbs = {});

}  // namespace ibmap

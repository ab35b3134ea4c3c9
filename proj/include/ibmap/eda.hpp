#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ibmap/dataset.hpp"
#include "ibmap/graph.hpp"

namespace ibmap::eda {

using Individual = std::vector<std::uint8_t>;

struct Population {
    std::vector<Individual> individuals;
    std::vector<long> fitnesses;
};

/// Number of ones.
long onemax(std::span<const std::uint8_t> bits);

/// gamma for every consecutive all-ones block of size gamma.
long royal_road(std::span<const std::uint8_t> bits, std::size_t gamma);

enum class FitnessKind {
    onemax,
    royal_road,
    zeromax,  ///< onemax of the complement; optimum is all zeros
};

enum class LearnerKind { ibmap_hc, mi };

struct EdaConfig {
    std::size_t n = 15;
    FitnessKind fitness = FitnessKind::onemax;
    std::size_t gamma = 4;  ///< block size for royal_road
    LearnerKind learner = LearnerKind::ibmap_hc;
    std::size_t k = 1;            ///< neighbour cap of the MI learner
    double mi_threshold = 0.02;   ///< nats
    std::size_t population_size = 50;
    double selection = 0.5;
    double elitism = 0.5;
    std::size_t max_generations = 1000;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
};

long evaluate(const EdaConfig& cfg, std::span<const std::uint8_t> bits);

struct RunResult {
    bool success = false;
    std::size_t generations = 0;
    /// Every individual is evaluated once per generation, including generation 0.
    std::uint64_t fitness_evaluations = 0;
    std::vector<long> best_trace;
};

/// Empirical pairwise mutual information (nats) of two binary genes.
double mutual_information(std::span<const Individual> pop, std::size_t a, std::size_t b);

/// Each variable keeps its top-k partners by mutual information above the
/// threshold (ties to the lower index); edges are the union over variables.
Structure mi_structure(std::span<const Individual> pop, std::size_t n, std::size_t k,
                       double threshold = 0.02);

/// Each offspring starts as a uniformly drawn member of `pop` and receives one
/// Gibbs sweep in random order, every gene redrawn from the add-one smoothed
/// frequency of ones among members sharing its current blanket assignment,
/// or from the smoothed marginal when no member shares it.
std::vector<Individual> structure_gibbs_offspring(std::span<const Individual> pop,
                                                  const Structure& g, std::size_t count,
                                                  std::uint64_t seed);

/// Binary dataset (arity 2 for every gene) over the given individuals.
Dataset to_dataset(std::span<const Individual> pop, std::size_t n);

/// Structure learned by the configured learner from the selected individuals.
Structure learn_structure(const EdaConfig& cfg, std::span<const Individual> selected);

RunResult moa_run(const EdaConfig& cfg);

struct RungResult {
    std::size_t population_size = 0;
    std::size_t successes = 0;
    std::vector<RunResult> runs;
};

struct CriticalResult {
    bool found = false;
    std::size_t critical_size = 0;  ///< D*
    double mean_evaluations = 0.0;  ///< mean f* at D*
    double stddev_evaluations = 0.0;
    std::vector<RungResult> rungs;
};

inline const std::vector<std::size_t> kDefaultLadder{50, 100, 200, 400, 800, 1600, 3200};

/// Seed of repetition `rep` derived from a base seed; shared across learners so
/// runs can be paired.
std::uint64_t repetition_seed(std::uint64_t base, std::size_t rep);

/// Walks the ladder until a rung succeeds in every repetition.
CriticalResult critical_population_search(const EdaConfig& base,
                                          std::span<const std::size_t> ladder = kDefaultLadder,
                                          std::size_t repetitions = 10, std::size_t workers = 0);

std::string to_string(FitnessKind kind);
std::string to_string(LearnerKind kind);

}  // namespace ibmap::eda

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ibmap/dataset.hpp"
#include "ibmap/graph.hpp"
#include "ibmap/search.hpp"

namespace ibmap {

enum class FMode { edges, nonedges, triplets };

struct Triplet {
    Node x = 0;
    Node y = 0;
    std::vector<Node> z;

    bool operator==(const Triplet&) const = default;
    auto operator<=>(const Triplet&) const = default;
};

/// Triplets stratified by conditioning-set size; per_cardinality[c] triplets
/// with |z| = c, stored consecutively in increasing c.
struct TripletSample {
    std::vector<Triplet> triplets;
    std::vector<std::size_t> per_cardinality;

    bool operator==(const TripletSample&) const = default;
};

struct PrecisionRecall {
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
};

/// Precision/recall of `learned` against `truth`. In edges and nonedges mode
/// the positives are the edges (non-edges); in triplets mode they are the
/// sampled triplets that are separated in the graph. A metric with an empty
/// denominator counts as 1 (nothing claimed, or nothing to find).
PrecisionRecall precision_recall(const Structure& learned, const Structure& truth, FMode mode,
                                 const TripletSample* sample = nullptr);

/// 2PR / (P + R), 0 when P + R = 0.
double f_score(double precision, double recall);

double f_measure(const Structure& learned, const Structure& truth, FMode mode,
                 const TripletSample* sample = nullptr);

/// per_cardinality triplets for each |z| in 0..max_card, drawn uniformly
/// without duplicates; a cardinality with fewer distinct triplets than
/// requested is enumerated exhaustively.
TripletSample sample_triplets(std::size_t n, std::size_t per_cardinality, std::size_t max_card,
                              std::uint64_t seed);

/// `total` triplets spread as evenly as capacity allows over |z| in 0..n-2;
/// cardinalities with too few distinct triplets are taken whole and the
/// remainder is redistributed.
TripletSample sample_triplets_total(std::size_t n, std::size_t total, std::uint64_t seed);

/// 100 * C(n, 2): the usual sample size for accuracy.
constexpr std::size_t default_triplet_total(std::size_t n) noexcept { return 100 * num_pairs(n); }

/// Fraction of triplets where the test decision on d_test (p_ind > 0.5)
/// agrees with vertex separation in g.
double accuracy(const Dataset& d_test, const Structure& g, const TripletSample& sample,
                double alpha = 1.0);

struct LandscapeRecord {
    std::uint64_t index = 0;
    double score = 0.0;
    std::size_t hamming = 0;
};

struct LandscapeReport {
    std::vector<LandscapeRecord> records;  ///< one per structure, in enumeration order
    std::uint64_t argmax_index = 0;
    double max_score = 0.0;
    SearchResult hill_climb;
    std::uint64_t hill_climb_index = 0;
    std::size_t hill_climb_hamming = 0;
    /// Number of structures scoring strictly above the hill-climbing result.
    std::size_t hill_climb_rank = 0;
    /// Spearman correlation between score and Hamming distance.
    double spearman = 0.0;
};

/// Scores every structure over the dataset's variables (n <= 6).
LandscapeReport landscape(const Dataset& d, const Structure& truth, double alpha = 1.0);

/// Writes "structure_index\tscore\thamming" rows with a header line.
void write_landscape_table(const LandscapeReport& report, std::ostream& out);

/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> a, std::span<const double> b);

}  // namespace ibmap

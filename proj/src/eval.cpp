#include "ibmap/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include "ibmap/citest.hpp"
#include "ibmap/ibscore.hpp"
#include "ibmap/rng.hpp"

namespace ibmap {

double f_score(double precision, double recall) {
    const double denom = precision + recall;
    return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

namespace {

PrecisionRecall from_counts(std::size_t true_pos, std::size_t claimed, std::size_t actual) {
    PrecisionRecall pr;
    pr.precision = claimed ? static_cast<double>(true_pos) / static_cast<double>(claimed) : 1.0;
    pr.recall = actual ? static_cast<double>(true_pos) / static_cast<double>(actual) : 1.0;
    pr.f = f_score(pr.precision, pr.recall);
    return pr;
}

}  // namespace

PrecisionRecall precision_recall(const Structure& learned, const Structure& truth, FMode mode,
                                 const TripletSample* sample) {
    const auto n = learned.num_nodes();
    if (truth.num_nodes() != n) throw std::invalid_argument("f_measure: node counts differ");

    std::size_t true_pos = 0, claimed = 0, actual = 0;
    if (mode == FMode::triplets) {
        if (!sample) throw std::invalid_argument("f_measure: triplets mode needs a sample");
        for (const auto& t : sample->triplets) {
            const bool l = u_separated(learned, t.x, t.y, t.z);
            const bool r = u_separated(truth, t.x, t.y, t.z);
            claimed += l;
            actual += r;
            true_pos += l && r;
        }
    } else {
        const bool want_edge = mode == FMode::edges;
        for (Node x = 0; x < n; ++x) {
            for (Node y = x + 1; y < n; ++y) {
                const bool l = learned.has_edge(x, y) == want_edge;
                const bool r = truth.has_edge(x, y) == want_edge;
                claimed += l;
                actual += r;
                true_pos += l && r;
            }
        }
    }
    return from_counts(true_pos, claimed, actual);
}

double f_measure(const Structure& learned, const Structure& truth, FMode mode,
                 const TripletSample* sample) {
    return precision_recall(learned, truth, mode, sample).f;
}

namespace {

/// C(n, k), saturating at the maximum of std::size_t.
std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(r);
}

/// Distinct triplets with |z| = c.
std::size_t capacity(std::size_t n, std::size_t c) {
    const auto pairs = num_pairs(n);
    const auto subsets = binomial(n - 2, c);
    if (subsets && pairs > std::numeric_limits<std::size_t>::max() / subsets)
        return std::numeric_limits<std::size_t>::max();
    return pairs * subsets;
}

std::vector<Triplet> all_triplets(std::size_t n, std::size_t c) {
    std::vector<Triplet> out;
    for (Node x = 0; x < n; ++x) {
        for (Node y = x + 1; y < n; ++y) {
            std::vector<Node> rest;
            for (Node w = 0; w < n; ++w)
                if (w != x && w != y) rest.push_back(w);
            std::vector<std::size_t> idx(c);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                Triplet t{x, y, {}};
                for (auto i : idx) t.z.push_back(rest[i]);
                out.push_back(std::move(t));
                // next combination in lexicographic order
                std::size_t i = c;
                while (i > 0 && idx[i - 1] == rest.size() - c + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < c; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return out;
}

Triplet random_triplet(std::size_t n, std::size_t c, Rng& rng) {
    auto x = static_cast<Node>(rng.below(n));
    auto y = static_cast<Node>(rng.below(n - 1));
    if (y >= x) ++y;
    if (x > y) std::swap(x, y);
    std::vector<Node> rest;
    rest.reserve(n - 2);
    for (Node w = 0; w < n; ++w)
        if (w != x && w != y) rest.push_back(w);
    for (std::size_t i = 0; i < c; ++i) {
        const auto j = i + rng.below(rest.size() - i);
        std::swap(rest[i], rest[j]);
    }
    rest.resize(c);
    std::sort(rest.begin(), rest.end());
    return {x, y, std::move(rest)};
}

/// `count` distinct triplets with |z| = c (count <= capacity).
std::vector<Triplet> draw(std::size_t n, std::size_t c, std::size_t count, Rng& rng) {
    const auto cap = capacity(n, c);
    if (count >= cap) return all_triplets(n, c);
    if (cap <= 4 * count && cap <= 1'000'000) {
        // Dense request: a uniform subset of the enumeration.
        auto all = all_triplets(n, c);
        for (std::size_t i = 0; i < count; ++i) {
            const auto j = i + rng.below(all.size() - i);
            std::swap(all[i], all[j]);
        }
        all.resize(count);
        return all;
    }
    std::set<Triplet> seen;
    std::vector<Triplet> out;
    out.reserve(count);
    while (out.size() < count) {
        auto t = random_triplet(n, c, rng);
        if (seen.insert(t).second) out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

TripletSample sample_triplets(std::size_t n, std::size_t per_cardinality, std::size_t max_card,
                              std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_triplets: need at least two variables");
    if (per_cardinality == 0) throw std::invalid_argument("sample_triplets: per_cardinality must be >= 1");
    if (max_card > n - 2) throw std::invalid_argument("sample_triplets: max_card exceeds n - 2");
    Rng rng(seed);
    TripletSample out;
    for (std::size_t c = 0; c <= max_card; ++c) {
        auto ts = draw(n, c, per_cardinality, rng);
        out.per_cardinality.push_back(ts.size());
        std::move(ts.begin(), ts.end(), std::back_inserter(out.triplets));
    }
    return out;
}

TripletSample sample_triplets_total(std::size_t n, std::size_t total, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_triplets: need at least two variables");
    const std::size_t levels = n - 1;
    std::vector<std::size_t> cap(levels), quota(levels, 0);
    for (std::size_t c = 0; c < levels; ++c) cap[c] = capacity(n, c);

    // Water-filling: repeatedly split the remainder evenly over the levels
    // that still have room.
    std::size_t remaining = total;
    while (remaining > 0) {
        std::vector<std::size_t> open;
        for (std::size_t c = 0; c < levels; ++c)
            if (quota[c] < cap[c]) open.push_back(c);
        if (open.empty()) break;
        const std::size_t share = remaining / open.size();
        std::size_t extra = remaining % open.size();
        for (auto c : open) {
            std::size_t want = share + (extra > 0 ? 1 : 0);
            if (extra > 0) --extra;
            const std::size_t take = std::min(want, cap[c] - quota[c]);
            quota[c] += take;
            remaining -= take;
        }
    }

    Rng rng(seed);
    TripletSample out;
    for (std::size_t c = 0; c < levels; ++c) {
        std::vector<Triplet> ts;
        if (quota[c] > 0) ts = draw(n, c, quota[c], rng);
        out.per_cardinality.push_back(ts.size());
        std::move(ts.begin(), ts.end(), std::back_inserter(out.triplets));
    }
    return out;
}

double accuracy(const Dataset& d_test, const Structure& g, const TripletSample& sample,
                double alpha) {
    if (d_test.num_variables() != g.num_nodes()) {
        throw std::invalid_argument("accuracy: dataset and structure sizes differ");
    }
    if (sample.triplets.empty()) throw std::invalid_argument("accuracy: empty triplet sample");
    std::size_t matches = 0;
    for (const auto& t : sample.triplets) {
        const bool data_ind = bayesian_ci_test(d_test, t.x, t.y, t.z, alpha).independent();
        const bool graph_ind = u_separated(g, t.x, t.y, t.z);
        matches += data_ind == graph_ind;
    }
    return static_cast<double>(matches) / static_cast<double>(sample.triplets.size());
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("spearman: bad sizes");
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    const double mean = (static_cast<double>(a.size()) + 1.0) / 2.0;
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (ra[i] - mean) * (rb[i] - mean);
        saa += (ra[i] - mean) * (ra[i] - mean);
        sbb += (rb[i] - mean) * (rb[i] - mean);
    }
    if (saa == 0 || sbb == 0) return 0.0;
    return sab / std::sqrt(saa * sbb);
}

LandscapeReport landscape(const Dataset& d, const Structure& truth, double alpha) {
    const auto n = d.num_variables();
    if (truth.num_nodes() != n) throw std::invalid_argument("landscape: truth has wrong size");
    const auto structures = enumerate_structures(n);

    LandscapeReport report;
    report.records.reserve(structures.size());
    TestCache cache(alpha);
    bool first = true;
    for (auto it = structures.begin(); it != structures.end(); ++it) {
        const Structure g = *it;
        LandscapeRecord rec{it.index(), ib_score(d, g, cache).total, hamming(g, truth)};
        if (first || rec.score > report.max_score) {
            report.max_score = rec.score;
            report.argmax_index = rec.index;
            first = false;
        }
        report.records.push_back(rec);
    }

    SearchOptions options;
    options.alpha = alpha;
    report.hill_climb = ibmap_hc(d, options);
    report.hill_climb_index = structure_index(report.hill_climb.structure);
    report.hill_climb_hamming = hamming(report.hill_climb.structure, truth);
    const double hc = report.hill_climb.score.total;
    report.hill_climb_rank = static_cast<std::size_t>(
        std::count_if(report.records.begin(), report.records.end(),
                      [hc](const LandscapeRecord& r) { return r.score > hc; }));

    std::vector<double> scores, distances;
    scores.reserve(report.records.size());
    distances.reserve(report.records.size());
    for (const auto& r : report.records) {
        scores.push_back(r.score);
        distances.push_back(static_cast<double>(r.hamming));
    }
    report.spearman = spearman(scores, distances);
    return report;
}

void write_landscape_table(const LandscapeReport& report, std::ostream& out) {
    out << "structure_index\tscore\thamming\n";
    const auto old = out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& r : report.records) {
        out << r.index << '\t' << r.score << '\t' << r.hamming << '\n';
    }
    out.precision(old);
}

}  // namespace ibmap

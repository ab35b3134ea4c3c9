#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ibmap/eval.hpp"
#include "ibmap/synth.hpp"
#include "support.hpp"

using namespace ibmap;

TEST_CASE("f-measure on identical structures") {
    Rng rng(1);
    auto g = testing::random_graph(8, 0.3, rng);
    auto sample = sample_triplets(8, 20, 3, 2);
    CHECK(f_measure(g, g, FMode::edges) == 1.0);
    CHECK(f_measure(g, g, FMode::nonedges) == 1.0);
    CHECK(f_measure(g, g, FMode::triplets, &sample) == 1.0);
}

TEST_CASE("f-measure values") {
    CHECK(f_score(1.0, 0.5) == doctest::Approx(0.666667).epsilon(1e-6));
    CHECK(f_score(0.0, 0.0) == 0.0);
    Structure truth(4, std::vector<Edge>{{0, 1}, {2, 3}});
    Structure half(4, std::vector<Edge>{{0, 1}});
    auto pr = precision_recall(half, truth, FMode::edges);
    CHECK(pr.precision == 1.0);
    CHECK(pr.recall == 0.5);
    CHECK(pr.f == doctest::Approx(2.0 / 3.0));
    CHECK(f_measure(Structure(4), truth, FMode::edges) == 0.0);
    CHECK(f_measure(Structure(4), Structure(4), FMode::edges) == 1.0);
    CHECK_THROWS(f_measure(truth, truth, FMode::triplets));
    CHECK_THROWS(f_measure(Structure(3), truth, FMode::edges));
}

TEST_CASE("nonedge mode mirrors edge mode on complements") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        auto a = testing::random_graph(7, 0.4, rng);
        auto b = testing::random_graph(7, 0.4, rng);
        Structure ca(7), cb(7);
        for (Node x = 0; x < 7; ++x)
            for (Node y = x + 1; y < 7; ++y) {
                if (!a.has_edge(x, y)) ca.add_edge(x, y);
                if (!b.has_edge(x, y)) cb.add_edge(x, y);
            }
        CHECK(f_measure(a, b, FMode::nonedges) == doctest::Approx(f_measure(ca, cb, FMode::edges)));
    }
}

TEST_CASE("triplet samples") {
    auto s = sample_triplets_total(10, default_triplet_total(10), 7);
    CHECK(default_triplet_total(10) == 4500);
    CHECK(s.triplets.size() == 4500);
    std::set<Triplet> distinct(s.triplets.begin(), s.triplets.end());
    CHECK(distinct.size() == 4500);
    std::size_t sum = 0;
    for (auto c : s.per_cardinality) sum += c;
    CHECK(sum == 4500);
    CHECK(s.per_cardinality.size() == 9);
    CHECK(s.per_cardinality.front() == 45);
    for (const auto& t : s.triplets) {
        CHECK(t.x < t.y);
        CHECK(std::is_sorted(t.z.begin(), t.z.end()));
        for (auto w : t.z) CHECK((w != t.x && w != t.y));
    }
    CHECK(sample_triplets_total(10, 4500, 7) == s);

    auto small = sample_triplets(3, 5, 0, 1);
    CHECK(small.triplets.size() == 3);
    CHECK(small.per_cardinality == std::vector<std::size_t>{3});

    auto a = sample_triplets(12, 30, 4, 9);
    CHECK(a == sample_triplets(12, 30, 4, 9));
    CHECK(a.triplets.size() == 150);
    std::size_t offset = 0;
    for (std::size_t c = 0; c < a.per_cardinality.size(); ++c) {
        for (std::size_t i = 0; i < a.per_cardinality[c]; ++i) CHECK(a.triplets[offset + i].z.size() == c);
        offset += a.per_cardinality[c];
    }
}

TEST_CASE("accuracy") {
    // Weak factors make some true dependences invisible at this size, so the
    // perfect map is checked on average and on its separation claims.
    double mean = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto p = make_random_problem(6, 1.0, 5000, seed);
        auto sample = sample_triplets_total(6, default_triplet_total(6), seed);
        const double acc = accuracy(p.data, p.model.structure, sample);
        CHECK(acc <= 1.0);
        CHECK(accuracy(p.data, Structure::complete(6), sample) >= 0.0);
        mean += acc / 10.0;

        std::size_t separated = 0, agree = 0;
        for (const auto& t : sample.triplets) {
            if (!u_separated(p.model.structure, t.x, t.y, t.z)) continue;
            ++separated;
            agree += bayesian_ci_test(p.data, t.x, t.y, t.z).independent();
        }
        if (separated) CHECK(static_cast<double>(agree) / static_cast<double>(separated) >= 0.9);
    }
    CHECK(mean >= 0.8);

    // connected graphs agree on every unconditional triplet
    auto d = testing::independent_binary(4, 200, 3);
    auto sample = sample_triplets(4, 100, 0, 3);
    Structure star(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(accuracy(d, testing::path(4), sample) == accuracy(d, star, sample));
}

TEST_CASE("spearman") {
    std::vector<double> a{1, 2, 3, 4, 5};
    std::vector<double> b{5, 6, 7, 8, 7};
    std::vector<double> rev{5, 4, 3, 2, 1};
    CHECK(spearman(a, a) == doctest::Approx(1.0));
    CHECK(spearman(a, rev) == doctest::Approx(-1.0));
    // ranks of b: 1, 2, 3.5, 5, 3.5
    CHECK(spearman(a, b) == doctest::Approx(0.820783).epsilon(1e-5));
    std::vector<double> x{3, 1, 4, 1, 5, 9, 2, 6};
    std::vector<double> y{2, 7, 1, 8, 2, 8, 1, 8};
    CHECK(spearman(x, y) == doctest::Approx(spearman(y, x)));
}

TEST_CASE("landscape") {
    auto p = make_random_problem(3, 1.0, 200, 1);
    auto r = landscape(p.data, p.model.structure);
    CHECK(r.records.size() == 8);
    CHECK(r.records[structure_index(p.model.structure)].hamming == 0);
    for (const auto& rec : r.records) {
        TestCache cache;
        CHECK(rec.score == doctest::Approx(ib_score(p.data, structure_from_index(3, rec.index), cache).total));
        CHECK(rec.score <= r.max_score);
    }
    CHECK(r.records[r.argmax_index].score == r.max_score);

    std::ostringstream out;
    write_landscape_table(r, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "structure_index\tscore\thamming");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 8);

    auto big = make_random_problem(6, 1.0, 1000, 3);
    auto rb = landscape(big.data, big.model.structure);
    CHECK(rb.records.size() == 32768);
    CHECK(rb.hill_climb.score.total == doctest::Approx(rb.max_score).epsilon(1e-12));
    CHECK(rb.hill_climb_rank == 0);
    CHECK(rb.spearman < 0.0);
}

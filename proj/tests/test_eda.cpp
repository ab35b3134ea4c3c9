#include <cmath>

#include "doctest.h"
#include "ibmap/eda.hpp"
#include "ibmap/rng.hpp"

using namespace ibmap;
using namespace ibmap::eda;

namespace {

Individual bits(const std::string& s) {
    Individual out;
    for (char c : s) out.push_back(c == '1' ? 1 : 0);
    return out;
}

}  // namespace

TEST_CASE("onemax") {
    CHECK(onemax(bits("111110011111")) == 10);
    CHECK(onemax(Individual(8, 0)) == 0);
    CHECK(onemax(Individual(13, 1)) == 13);
}

TEST_CASE("royal road") {
    CHECK(royal_road(bits("111110011111"), 4) == 8);
    CHECK(royal_road(Individual(12, 1), 4) == 12);
    CHECK(royal_road(bits("011111111110"), 4) == 4);
    CHECK_THROWS(royal_road(Individual(10, 1), 4));
    Rng rng(1);
    for (int t = 0; t < 1000; ++t) {
        Individual x(1 + rng.below(40));
        for (auto& g : x) g = static_cast<std::uint8_t>(rng.below(2));
        CHECK(royal_road(x, 1) == onemax(x));
    }
}

TEST_CASE("configuration validation") {
    EdaConfig ok;
    CHECK_NOTHROW(ok.validate());
    EdaConfig bad = ok;
    bad.fitness = FitnessKind::royal_road;
    bad.n = 15;
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.selection = 0.0;
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.elitism = 1.5;
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.population_size = 0;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("mutual information") {
    std::vector<Individual> pop{bits("00"), bits("11"), bits("00"), bits("11")};
    CHECK(mutual_information(pop, 0, 1) == doctest::Approx(std::log(2.0)));
    std::vector<Individual> flat{bits("01"), bits("11"), bits("00"), bits("10")};
    CHECK(mutual_information(flat, 0, 1) == doctest::Approx(0.0));
}

TEST_CASE("mi learner finds the copied gene") {
    int exact = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(substream(seed, "mi"));
        std::vector<Individual> pop(200, Individual(3));
        for (auto& ind : pop) {
            ind[0] = ind[1] = static_cast<std::uint8_t>(rng.below(2));
            ind[2] = static_cast<std::uint8_t>(rng.below(2));
        }
        auto g = mi_structure(pop, 3, 1);
        if (g.edges() == std::vector<Edge>{{0, 1}}) ++exact;
        CHECK(mi_structure(pop, 3, 0).num_edges() == 0);
        CHECK(mi_structure(pop, 3, 1) == g);
    }
    CHECK(exact >= 9);
}

TEST_CASE("offspring shape and smoothing") {
    Rng rng(4);
    std::vector<Individual> pop(30, Individual(9));
    for (auto& ind : pop)
        for (auto& g : ind) g = static_cast<std::uint8_t>(rng.below(2));
    Structure chain(9);
    for (Node x = 0; x + 1 < 9; ++x) chain.add_edge(x, x + 1);
    auto kids = structure_gibbs_offspring(pop, chain, 17, 5);
    CHECK(kids.size() == 17);
    for (const auto& k : kids) {
        CHECK(k.size() == 9);
        for (auto g : k) CHECK(g <= 1);
    }
    CHECK(structure_gibbs_offspring(pop, chain, 17, 5) == kids);

    const std::size_t d = 20;
    const std::size_t n = 10;
    std::vector<Individual> ones(d, Individual(n, 1));
    Structure ring(n);
    for (Node x = 0; x < n; ++x) ring.add_edge(x, static_cast<Node>((x + 1) % n));
    auto sample = structure_gibbs_offspring(ones, ring, 2000, 6);
    std::size_t all_ones = 0;
    for (const auto& k : sample) all_ones += std::ranges::all_of(k, [](auto g) { return g == 1; });
    CHECK(static_cast<double>(all_ones) / 2000.0 >= std::pow(double(d) / double(d + 2), double(n)));
}

TEST_CASE("empty structure samples the smoothed marginal") {
    std::vector<Individual> pop(40, Individual(2, 0));
    for (std::size_t i = 0; i < 30; ++i) pop[i][0] = 1;
    auto kids = structure_gibbs_offspring(pop, Structure(2), 20000, 7);
    double ones0 = 0, ones1 = 0;
    for (const auto& k : kids) {
        ones0 += k[0];
        ones1 += k[1];
    }
    CHECK(ones0 / 20000 == doctest::Approx(31.0 / 42.0).epsilon(0.03));
    CHECK(ones1 / 20000 == doctest::Approx(1.0 / 42.0).epsilon(0.3));
}

TEST_CASE("evaluation counting") {
    EdaConfig cfg;
    cfg.max_generations = 0;
    cfg.seed = 3;
    auto r = moa_run(cfg);
    CHECK_FALSE(r.success);
    CHECK(r.fitness_evaluations == cfg.population_size);

    cfg.max_generations = 1000;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        cfg.seed = seed;
        auto run = moa_run(cfg);
        CHECK(run.success);
        CHECK(run.fitness_evaluations == cfg.population_size * (run.generations + 1));
        CHECK(run.best_trace.size() == run.generations + 1);
        CHECK(run.best_trace.back() == 15);
        CHECK(moa_run(cfg).fitness_evaluations == run.fitness_evaluations);
    }
}

TEST_CASE("zeromax mirrors onemax") {
    EdaConfig cfg;
    double on = 0, off = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        cfg.seed = seed;
        cfg.fitness = FitnessKind::onemax;
        auto a = moa_run(cfg);
        cfg.fitness = FitnessKind::zeromax;
        auto b = moa_run(cfg);
        CHECK(a.success);
        CHECK(b.success);
        on += static_cast<double>(a.fitness_evaluations);
        off += static_cast<double>(b.fitness_evaluations);
    }
    CHECK(off < 2.0 * on);
    CHECK(on < 2.0 * off);
    CHECK(evaluate(cfg, bits("000000000000000")) == 15);
}

TEST_CASE("critical population search") {
    EdaConfig cfg;
    cfg.n = 8;
    cfg.seed = 11;
    std::vector<std::size_t> ladder{20, 50, 100};
    auto r = critical_population_search(cfg, ladder, 4, 2);
    REQUIRE(r.found);
    const auto& last = r.rungs.back();
    CHECK(last.population_size == r.critical_size);
    CHECK(last.successes == 4);
    double mean = 0.0;
    for (const auto& run : last.runs) mean += static_cast<double>(run.fitness_evaluations);
    CHECK(r.mean_evaluations == doctest::Approx(mean / 4.0));
    CHECK(critical_population_search(cfg, ladder, 4, 1).mean_evaluations == r.mean_evaluations);
    CHECK(repetition_seed(1, 0) != repetition_seed(1, 1));
}

TEST_CASE("mi learner in the loop") {
    EdaConfig cfg;
    cfg.learner = LearnerKind::mi;
    cfg.seed = 2;
    auto r = moa_run(cfg);
    CHECK(r.success);
    CHECK(to_string(LearnerKind::mi) == "mi");
    CHECK(to_string(FitnessKind::royal_road) == "royal-road");
}

#include <cmath>

#include "doctest.h"
#include "ibmap/synth.hpp"

using namespace ibmap;

TEST_CASE("random structure edge counts") {
    CHECK(random_structure(20, 2.0, 1).num_edges() == 20);
    CHECK(random_structure(25, 1.0, 1).num_edges() == 12);
    CHECK(random_structure(10, 0.0, 1).num_edges() == 0);
    CHECK(random_structure(20, 2.0, 5) == random_structure(20, 2.0, 5));
    CHECK_FALSE(random_structure(20, 2.0, 5) == random_structure(20, 2.0, 6));
    CHECK_THROWS(random_structure(4, 4.0, 1));
    CHECK_THROWS(random_structure(4, -1.0, 1));
}

TEST_CASE("ising grids") {
    CHECK(ising_structure(2, 2).num_edges() == 4);
    CHECK(ising_structure(1, 7).num_edges() == 6);
    CHECK(ising_structure(10, 10).num_edges() == 180);
    auto g = ising_structure(3, 4);
    CHECK(g.has_edge(0, 4));
    CHECK(g.has_edge(4, 5));
    CHECK_FALSE(g.has_edge(3, 4));
    CHECK_THROWS(ising_structure(1, 1));
}

TEST_CASE("factor log-odds solve") {
    auto f = factor_with_log_odds(0.5, 0.5, 0.5, 1.0);
    CHECK(f.phi[3] == doctest::Approx(1.359141).epsilon(1e-6));
    auto z = factor_with_log_odds(0.2, 0.7, 0.4, 0.0);
    CHECK(z.phi[3] == doctest::Approx(0.7 * 0.4 / 0.2));
    CHECK_THROWS(factor_with_log_odds(0.0, 0.5, 0.5, 1.0));

    auto m = pairwise_model(random_structure(30, 3.0, 2), 1.0, 3);
    CHECK(m.factors.size() == 45);
    for (const auto& [e, phi] : m.factors) {
        CHECK(std::abs(phi.log_odds() - 1.0) < 1e-12);
        for (int i = 0; i < 3; ++i) {
            CHECK(phi.phi[i] > 0.0);
            CHECK(phi.phi[i] <= 1.0);
        }
    }
}

TEST_CASE("isolated node is a fair coin") {
    PairwiseModel m{Structure(1), {}};
    auto d = gibbs_sample(m, 10000, 4);
    double ones = 0;
    for (auto v : d.column(0)) ones += v;
    CHECK(ones / 10000 >= 0.45);
    CHECK(ones / 10000 <= 0.55);
}

TEST_CASE("sample shape") {
    auto p = make_random_problem(7, 2.0, 123, 8);
    CHECK(p.data.num_rows() == 123);
    CHECK(p.data.num_variables() == 7);
    CHECK(p.data.names()[6] == "X6");
    for (Variable v = 0; v < 7; ++v) {
        CHECK(p.data.arity(v) == 2);
        for (auto x : p.data.column(v)) CHECK(x <= 1);
    }
    CHECK_THROWS(gibbs_sample(p.model, 0, 1));
}

TEST_CASE("single edge recovers its log-odds") {
    auto m = pairwise_model(Structure(2, std::vector<Edge>{{0, 1}}), 1.0, 11);
    auto d = gibbs_sample(m, 10000, 12);
    double c[4] = {0, 0, 0, 0};
    for (std::size_t r = 0; r < d.num_rows(); ++r) c[2 * d.at(r, 0) + d.at(r, 1)] += 1;
    const double lo = std::log(c[0] * c[3] / (c[1] * c[2]));
    CHECK(lo >= 0.8);
    CHECK(lo <= 1.2);
}

TEST_CASE("gibbs marginals match exact enumeration") {
    auto p = make_random_problem(8, 2.0, 20000, 21);
    auto joint = exact_joint(p.model);
    double total = 0.0;
    for (double v : joint) total += v;
    CHECK(total == doctest::Approx(1.0));
    for (Node a = 0; a < 8; ++a) {
        double exact = 0.0;
        for (std::size_t s = 0; s < joint.size(); ++s)
            if ((s >> (7 - a)) & 1U) exact += joint[s];
        double empirical = 0.0;
        for (auto v : p.data.column(a)) empirical += v;
        CHECK(std::abs(exact - empirical / 20000.0) < 0.02);
    }
}

TEST_CASE("problems are reproducible by seed") {
    auto a = make_random_problem(12, 2.0, 100, 3);
    auto b = make_random_problem(12, 2.0, 100, 3);
    CHECK(a.data == b.data);
    CHECK(a.model.structure == b.model.structure);
    auto c = make_ising_problem(3, 3, 50, 4);
    CHECK(c.model.structure == ising_structure(3, 3));
    CHECK(c.data.num_variables() == 9);
}

#include <cmath>

#include "doctest.h"
#include "ibmap/ibscore.hpp"
#include "ibmap/synth.hpp"
#include "support.hpp"

using namespace ibmap;

namespace {

double closure_sum_oracle(const Dataset& d, const Structure& g) {
    double total = 0.0;
    for (const auto& a : mb_closure(g)) total += bayesian_ci_test(d, a.x, a.y, a.z).log_p(a.kind);
    return total;
}

}  // namespace

TEST_CASE("closure of the empty graph") {
    auto c = mb_closure(Structure(3));
    CHECK(c.size() == 6);
    for (const auto& a : c) {
        CHECK(a.kind == AssertionKind::independence);
        CHECK(a.z.empty());
    }
}

TEST_CASE("closure of a triangle") {
    auto g = Structure::complete(3);
    auto a = closure_assertion(g, 0, 1);
    auto b = closure_assertion(g, 0, 2);
    CHECK(a == Assertion{0, 1, {2}, AssertionKind::dependence});
    CHECK(b == Assertion{0, 2, {1}, AssertionKind::dependence});
}

TEST_CASE("property: closure size and reconstruction") {
    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 4 + rng.below(12);
        auto g = testing::random_graph(n, 0.3, rng);
        auto c = mb_closure(g);
        CHECK(c.size() == n * (n - 1));
        Structure rebuilt(n);
        for (const auto& a : c) {
            if (a.kind == AssertionKind::dependence) {
                rebuilt.add_edge(a.x, a.y);
                CHECK_FALSE(u_separated(g, a.x, a.y, a.z));
            } else {
                CHECK(u_separated(g, a.x, a.y, a.z));
            }
        }
        CHECK(rebuilt == g);
    }
}

TEST_CASE("sigma on the empty graph is the marginal independence posterior") {
    auto d = testing::independent_binary(4, 300, 12);
    TestCache cache;
    Structure g(4);
    CHECK(sigma_xy(d, g, 1, 3, cache) == bayesian_ci_test(d, 1, 3, {}).log_p_ind);
}

TEST_CASE("flips that keep the conditioning set give complementary sigmas") {
    auto d = testing::independent_binary(4, 300, 13);
    TestCache cache;
    Structure g(4);
    g.add_edge(0, 2);
    auto f = flip_edge(g, 0, 1);
    const double a = sigma_xy(d, g, 0, 1, cache);
    const double b = sigma_xy(d, f, 0, 1, cache);
    CHECK(std::exp(a) + std::exp(b) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("star graph conditions on the other leaf") {
    Structure g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    CHECK(closure_assertion(g, 0, 1).z == std::vector<Variable>{2});
}

TEST_CASE("variable and total scores") {
    auto d2 = testing::independent_binary(2, 200, 14);
    TestCache cache;
    Structure g2(2);
    CHECK(variable_score(d2, g2, 0, cache) == sigma_xy(d2, g2, 0, 1, cache));
    auto s2 = ib_score(d2, g2, cache);
    CHECK(s2.total == sigma_xy(d2, g2, 0, 1, cache) + sigma_xy(d2, g2, 1, 0, cache));

    auto d3 = testing::independent_binary(3, 200, 15);
    TestCache c3;
    Structure g3(3);
    CHECK(variable_score(d3, g3, 0, c3) ==
          doctest::Approx(bayesian_ci_test(d3, 0, 1, {}).log_p_ind + bayesian_ci_test(d3, 0, 2, {}).log_p_ind));

    CHECK_THROWS(ib_score(d3, Structure(4), c3));
}

TEST_CASE("property: scores are log-probabilities and order-free") {
    Rng rng(43);
    auto d = testing::independent_binary(7, 400, 16);
    for (int t = 0; t < 30; ++t) {
        auto g = testing::random_graph(7, 0.3, rng);
        TestCache cache;
        auto s = ib_score(d, g, cache);
        double reversed = 0.0;
        for (std::size_t x = 7; x-- > 0;) {
            CHECK(s.per_variable[x] <= 0.0);
            reversed += s.per_variable[x];
        }
        CHECK(s.total == doctest::Approx(reversed).epsilon(1e-12));
    }
}

TEST_CASE("total matches the closure sum on landscape-sized data") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto p = make_random_problem(6, 1.0, 1000, seed);
        Rng rng(seed);
        for (int t = 0; t < 5; ++t) {
            auto g = testing::random_graph(6, 0.4, rng);
            TestCache cache;
            CHECK(std::abs(ib_score(p.data, g, cache).total - closure_sum_oracle(p.data, g)) < 1e-9);
        }
    }
}

TEST_CASE("incremental rescore agrees with a cold recompute") {
    auto p = make_random_problem(10, 2.0, 500, 77);
    Rng rng(78);
    int agree = 0;
    for (int t = 0; t < 100; ++t) {
        auto g = testing::random_graph(10, rng.uniform() * 0.5, rng);
        const auto x = static_cast<Node>(rng.below(10));
        auto y = static_cast<Node>(rng.below(9));
        if (y >= x) ++y;
        TestCache warm;
        auto s = ib_score(p.data, g, warm);
        auto next = rescore_after_flip(p.data, g, s, x, y, warm);
        TestCache cold;
        auto full = ib_score(p.data, flip_edge(g, x, y), cold);
        if (std::abs(next.total - full.total) < 1e-9) ++agree;
        for (Node w = 0; w < 10; ++w)
            if (w != x && w != y) CHECK(next.per_variable[w] == s.per_variable[w]);
    }
    CHECK(agree == 100);
}

TEST_CASE("flip chains and flip-back restore the score") {
    auto p = make_random_problem(8, 2.0, 400, 5);
    TestCache cache;
    Rng rng(6);
    Structure g(8);
    auto s = ib_score(p.data, g, cache);
    const auto start = s;
    std::vector<Edge> flips;
    for (int t = 0; t < 40; ++t) {
        const auto x = static_cast<Node>(rng.below(8));
        auto y = static_cast<Node>(rng.below(7));
        if (y >= x) ++y;
        s = rescore_after_flip(p.data, g, s, x, y, cache);
        g.toggle_edge(x, y);
        flips.emplace_back(x, y);
        TestCache cold;
        CHECK(std::abs(s.total - ib_score(p.data, g, cold).total) < 1e-9);
    }
    for (auto it = flips.rbegin(); it != flips.rend(); ++it) {
        s = rescore_after_flip(p.data, g, s, it->first, it->second, cache);
        g.toggle_edge(it->first, it->second);
    }
    CHECK(g == Structure(8));
    CHECK(std::abs(s.total - start.total) < 1e-9);
}

TEST_CASE("cached sigma reads without computing") {
    auto d = testing::independent_binary(3, 100, 1);
    TestCache cache;
    Structure g(3);
    CHECK_FALSE(cached_sigma_xy(g, 0, 1, cache).has_value());
    const double v = sigma_xy(d, g, 0, 1, cache);
    const auto computed = cache.tests_computed();
    CHECK(cached_sigma_xy(g, 1, 0, cache).value() == v);
    CHECK(cache.tests_computed() == computed);
}

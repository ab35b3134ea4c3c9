#include "ibmap/synth.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ibmap/rng.hpp"

namespace ibmap {

double PairFactor::log_odds() const {
    return std::log((phi[0] * phi[3]) / (phi[1] * phi[2]));
}

Structure random_structure(std::size_t n, double tau, std::uint64_t seed) {
    if (!(tau >= 0.0)) throw std::invalid_argument("random_structure: tau must be >= 0");
    const auto edges = static_cast<std::size_t>(std::floor(static_cast<double>(n) * tau / 2.0));
    if (edges > num_pairs(n)) {
        throw std::invalid_argument("random_structure: " + std::to_string(edges) +
                                    " edges requested but only " + std::to_string(num_pairs(n)) +
                                    " pairs exist");
    }
    std::vector<Edge> pairs;
    pairs.reserve(num_pairs(n));
    for (Node x = 0; x < n; ++x)
        for (Node y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
    Rng rng(seed);
    rng.shuffle(pairs.begin(), pairs.end());
    pairs.resize(edges);
    return Structure(n, pairs);
}

Structure ising_structure(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0 || rows * cols < 2) {
        throw std::invalid_argument("ising_structure: grid must have at least two cells");
    }
    Structure g(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto v = static_cast<Node>(r * cols + c);
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, static_cast<Node>(v + cols));
        }
    }
    return g;
}

PairFactor factor_with_log_odds(double phi00, double phi01, double phi10, double epsilon) {
    if (!(phi00 > 0 && phi01 > 0 && phi10 > 0)) {
        throw std::invalid_argument("factor_with_log_odds: entries must be positive");
    }
    return {{phi00, phi01, phi10, std::exp(epsilon) * phi01 * phi10 / phi00}};
}

PairwiseModel pairwise_model(const Structure& g, double epsilon, std::uint64_t seed) {
    PairwiseModel m;
    m.structure = g;
    Rng rng(seed);
    for (const auto& e : g.edges()) {
        const double a = rng.uniform_open_closed();
        const double b = rng.uniform_open_closed();
        const double c = rng.uniform_open_closed();
        m.factors.emplace(e, factor_with_log_odds(a, b, c, epsilon));
    }
    return m;
}

namespace {

/// Log-factor table seen from one endpoint: entry [2 * own + other].
struct Incident {
    Node other;
    std::array<double, 4> log_phi;
};

std::vector<std::vector<Incident>> incidence(const PairwiseModel& m) {
    std::vector<std::vector<Incident>> out(m.structure.num_nodes());
    for (const auto& [edge, f] : m.factors) {
        const auto [i, j] = edge;
        Incident from_i{j, {}};
        Incident from_j{i, {}};
        for (Value a = 0; a < 2; ++a) {
            for (Value b = 0; b < 2; ++b) {
                from_i.log_phi[2 * a + b] = std::log(f(a, b));
                from_j.log_phi[2 * b + a] = std::log(f(a, b));
            }
        }
        out[i].push_back(from_i);
        out[j].push_back(from_j);
    }
    return out;
}

}  // namespace

Dataset gibbs_sample(const PairwiseModel& m, std::size_t n_rows, std::uint64_t seed,
                     const GibbsOptions& options) {
    if (n_rows == 0) throw std::invalid_argument("gibbs_sample: n_rows must be >= 1");
    const auto n = m.structure.num_nodes();
    const auto adj = incidence(m);
    Rng rng(seed);

    std::vector<Value> state(n);
    for (auto& v : state) v = static_cast<Value>(rng.below(2));

    auto sweep = [&] {
        for (Node x = 0; x < n; ++x) {
            double log_w0 = 0.0;
            double log_w1 = 0.0;
            for (const auto& inc : adj[x]) {
                const Value other = state[inc.other];
                log_w0 += inc.log_phi[other];
                log_w1 += inc.log_phi[2 + other];
            }
            const double p1 = 1.0 / (1.0 + std::exp(log_w0 - log_w1));
            state[x] = rng.bernoulli(p1) ? 1 : 0;
        }
    };

    for (std::size_t s = 0; s < options.burn_in; ++s) sweep();

    std::vector<std::vector<Value>> columns(n, std::vector<Value>(n_rows));
    for (std::size_t r = 0; r < n_rows; ++r) {
        for (std::size_t s = 0; s <= options.thin; ++s) sweep();
        for (Node x = 0; x < n; ++x) columns[x][r] = state[x];
    }

    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t x = 0; x < n; ++x) names.push_back("X" + std::to_string(x));
    return Dataset(std::move(names), std::vector<Value>(n, 2), std::move(columns));
}

std::vector<double> exact_joint(const PairwiseModel& m) {
    const auto n = m.structure.num_nodes();
    if (n > 20) throw std::invalid_argument("exact_joint: too many nodes to enumerate");
    const std::size_t states = std::size_t{1} << n;
    std::vector<double> p(states);
    double z = 0.0;
    for (std::size_t s = 0; s < states; ++s) {
        auto bit = [&](Node v) { return static_cast<Value>((s >> (n - 1 - v)) & 1U); };
        double w = 1.0;
        for (const auto& [edge, f] : m.factors) w *= f(bit(edge.first), bit(edge.second));
        p[s] = w;
        z += w;
    }
    for (auto& v : p) v /= z;
    return p;
}

namespace {

SyntheticProblem sample_problem(const Structure& g, std::size_t rows, std::uint64_t seed,
                                double epsilon, const GibbsOptions& gibbs) {
    SyntheticProblem p;
    p.model = pairwise_model(g, epsilon, substream(seed, "params"));
    p.data = gibbs_sample(p.model, rows, substream(seed, "sampler"), gibbs);
    return p;
}

}  // namespace

SyntheticProblem make_random_problem(std::size_t n, double tau, std::size_t rows, std::uint64_t seed,
                                     double epsilon, const GibbsOptions& gibbs) {
    return sample_problem(random_structure(n, tau, substream(seed, "structure")), rows, seed,
                          epsilon, gibbs);
}

SyntheticProblem make_ising_problem(std::size_t grid_rows, std::size_t grid_cols, std::size_t rows,
                                    std::uint64_t seed, double epsilon, const GibbsOptions& gibbs) {
    return sample_problem(ising_structure(grid_rows, grid_cols), rows, seed, epsilon, gibbs);
}

}  // namespace ibmap

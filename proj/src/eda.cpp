#include "ibmap/eda.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ibmap/parallel.hpp"
#include "ibmap/rng.hpp"
#include "ibmap/search.hpp"

namespace ibmap::eda {

long onemax(std::span<const std::uint8_t> bits) {
    return static_cast<long>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

long royal_road(std::span<const std::uint8_t> bits, std::size_t gamma) {
    if (gamma == 0 || bits.size() % gamma != 0) {
        throw std::invalid_argument("royal_road: gamma must divide the string length");
    }
    long fitness = 0;
    for (std::size_t start = 0; start < bits.size(); start += gamma) {
        const auto block = bits.subspan(start, gamma);
        if (std::all_of(block.begin(), block.end(), [](auto b) { return b == 1; })) {
            fitness += static_cast<long>(gamma);
        }
    }
    return fitness;
}

void EdaConfig::validate() const {
    if (n == 0) throw std::invalid_argument("eda: n must be positive");
    if (!(selection > 0.0 && selection <= 1.0)) throw std::invalid_argument("eda: selection must be in (0, 1]");
    if (!(elitism > 0.0 && elitism <= 1.0)) throw std::invalid_argument("eda: elitism must be in (0, 1]");
    if (fitness == FitnessKind::royal_road && (gamma == 0 || n % gamma != 0)) {
        throw std::invalid_argument("eda: royal road requires gamma to divide n");
    }
    if (population_size < 2) throw std::invalid_argument("eda: population size must be >= 2");
}

long evaluate(const EdaConfig& cfg, std::span<const std::uint8_t> bits) {
    switch (cfg.fitness) {
        case FitnessKind::onemax: return onemax(bits);
        case FitnessKind::royal_road: return royal_road(bits, cfg.gamma);
        case FitnessKind::zeromax: return static_cast<long>(bits.size()) - onemax(bits);
    }
    return 0;
}

double mutual_information(std::span<const Individual> pop, std::size_t a, std::size_t b) {
    if (pop.empty()) return 0.0;
    std::array<double, 4> joint{};
    for (const auto& ind : pop) joint[2 * ind[a] + ind[b]] += 1.0;
    const double total = static_cast<double>(pop.size());
    const double pa[2] = {(joint[0] + joint[1]) / total, (joint[2] + joint[3]) / total};
    const double pb[2] = {(joint[0] + joint[2]) / total, (joint[1] + joint[3]) / total};
    double mi = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double p = joint[2 * i + j] / total;
            if (p > 0.0) mi += p * std::log(p / (pa[i] * pb[j]));
        }
    }
    return std::max(0.0, mi);
}

Structure mi_structure(std::span<const Individual> pop, std::size_t n, std::size_t k,
                       double threshold) {
    Structure g(n);
    if (k == 0 || n < 2) return g;
    std::vector<double> mi(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            mi[a * n + b] = mi[b * n + a] = mutual_information(pop, a, b);
        }
    }
    for (Node x = 0; x < n; ++x) {
        std::vector<Node> candidates;
        for (Node y = 0; y < n; ++y)
            if (y != x && mi[x * n + y] > threshold) candidates.push_back(y);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](Node a, Node b) { return mi[x * n + a] > mi[x * n + b]; });
        if (candidates.size() > k) candidates.resize(k);
        for (Node y : candidates) g.add_edge(x, y);
    }
    return g;
}

namespace {

struct Tally {
    std::size_t matches = 0;
    std::size_t ones = 0;
};

/// Key of the blanket assignment of one gene: one char per blanket member.
std::string blanket_key(const Individual& ind, const std::vector<Node>& mb) {
    std::string key(mb.size(), '0');
    for (std::size_t i = 0; i < mb.size(); ++i) key[i] = static_cast<char>('0' + ind[mb[i]]);
    return key;
}

}  // namespace

std::vector<Individual> structure_gibbs_offspring(std::span<const Individual> pop,
                                                  const Structure& g, std::size_t count,
                                                  std::uint64_t seed) {
    if (pop.empty()) throw std::invalid_argument("structure_gibbs_offspring: empty population");
    const std::size_t n = g.num_nodes();
    const double size = static_cast<double>(pop.size());

    std::vector<std::vector<Node>> blankets(n);
    std::vector<std::unordered_map<std::string, Tally>> tallies(n);
    std::vector<double> marginal(n);
    for (Node x = 0; x < n; ++x) {
        blankets[x] = blanket(g, x);
        std::size_t ones = 0;
        for (const auto& ind : pop) {
            auto& t = tallies[x][blanket_key(ind, blankets[x])];
            ++t.matches;
            t.ones += ind[x];
            ones += ind[x];
        }
        marginal[x] = (static_cast<double>(ones) + 1.0) / (size + 2.0);
    }

    Rng rng(seed);
    std::vector<Individual> out;
    out.reserve(count);
    std::vector<Node> order(n);
    for (std::size_t i = 0; i < count; ++i) {
        Individual child = pop[rng.below(pop.size())];
        std::iota(order.begin(), order.end(), Node{0});
        rng.shuffle(order.begin(), order.end());
        for (Node x : order) {
            double p1 = marginal[x];
            const auto it = tallies[x].find(blanket_key(child, blankets[x]));
            if (it != tallies[x].end()) {
                p1 = (static_cast<double>(it->second.ones) + 1.0) /
                     (static_cast<double>(it->second.matches) + 2.0);
            }
            child[x] = rng.bernoulli(p1) ? 1 : 0;
        }
        out.push_back(std::move(child));
    }
    return out;
}

Dataset to_dataset(std::span<const Individual> pop, std::size_t n) {
    std::vector<std::vector<Value>> columns(n, std::vector<Value>(pop.size()));
    for (std::size_t r = 0; r < pop.size(); ++r)
        for (std::size_t v = 0; v < n; ++v) columns[v][r] = pop[r][v];
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back("g" + std::to_string(v));
    return Dataset(std::move(names), std::vector<Value>(n, 2), std::move(columns));
}

Structure learn_structure(const EdaConfig& cfg, std::span<const Individual> selected) {
    switch (cfg.learner) {
        case LearnerKind::ibmap_hc: return ibmap_hc(to_dataset(selected, cfg.n)).structure;
        case LearnerKind::mi: return mi_structure(selected, cfg.n, cfg.k, cfg.mi_threshold);
    }
    return Structure(cfg.n);
}

namespace {

std::size_t fraction_of(double f, std::size_t total) {
    const auto v = static_cast<std::size_t>(std::llround(f * static_cast<double>(total)));
    return std::clamp<std::size_t>(v, 1, total);
}

}  // namespace

RunResult moa_run(const EdaConfig& cfg) {
    cfg.validate();
    const std::size_t size = cfg.population_size;
    const std::size_t selected_count = fraction_of(cfg.selection, size);
    const std::size_t elite_count = fraction_of(cfg.elitism, size);
    const long optimum = static_cast<long>(cfg.n);

    Rng rng(substream(cfg.seed, "eda"));
    Population pop;
    pop.individuals.assign(size, Individual(cfg.n));
    for (auto& ind : pop.individuals)
        for (auto& gene : ind) gene = static_cast<std::uint8_t>(rng.below(2));

    RunResult result;
    auto evaluate_all = [&] {
        pop.fitnesses.resize(size);
        for (std::size_t i = 0; i < size; ++i) pop.fitnesses[i] = evaluate(cfg, pop.individuals[i]);
        result.fitness_evaluations += size;
        const long best = *std::max_element(pop.fitnesses.begin(), pop.fitnesses.end());
        result.best_trace.push_back(best);
        return best == optimum;
    };

    if (evaluate_all()) {
        result.success = true;
        return result;
    }
    std::vector<std::size_t> order(size);
    for (std::size_t gen = 1; gen <= cfg.max_generations; ++gen) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto b) { return pop.fitnesses[a] > pop.fitnesses[b]; });

        std::vector<Individual> selected;
        selected.reserve(selected_count);
        for (std::size_t i = 0; i < selected_count; ++i) selected.push_back(pop.individuals[order[i]]);

        const Structure g = learn_structure(cfg, selected);
        auto offspring = structure_gibbs_offspring(selected, g, size - elite_count,
                                                   substream(cfg.seed, "offspring", gen));

        std::vector<Individual> next;
        next.reserve(size);
        for (std::size_t i = 0; i < elite_count; ++i) next.push_back(pop.individuals[order[i]]);
        std::move(offspring.begin(), offspring.end(), std::back_inserter(next));
        pop.individuals = std::move(next);

        result.generations = gen;
        if (evaluate_all()) {
            result.success = true;
            break;
        }
    }
    return result;
}

std::uint64_t repetition_seed(std::uint64_t base, std::size_t rep) {
    return substream(base, "repetition", rep);
}

CriticalResult critical_population_search(const EdaConfig& base, std::span<const std::size_t> ladder,
                                          std::size_t repetitions, std::size_t workers) {
    if (!std::is_sorted(ladder.begin(), ladder.end())) {
        throw std::invalid_argument("critical_population_search: ladder must be ascending");
    }
    CriticalResult out;
    for (const std::size_t size : ladder) {
        RungResult rung;
        rung.population_size = size;
        rung.runs.resize(repetitions);
        parallel_for(
            repetitions,
            [&](std::size_t rep) {
                EdaConfig cfg = base;
                cfg.population_size = size;
                cfg.seed = repetition_seed(base.seed, rep);
                rung.runs[rep] = moa_run(cfg);
            },
            workers);
        rung.successes = static_cast<std::size_t>(std::count_if(
            rung.runs.begin(), rung.runs.end(), [](const RunResult& r) { return r.success; }));
        out.rungs.push_back(rung);
        if (rung.successes == repetitions && repetitions > 0) {
            out.found = true;
            out.critical_size = size;
            double sum = 0.0;
            for (const auto& r : rung.runs) sum += static_cast<double>(r.fitness_evaluations);
            out.mean_evaluations = sum / static_cast<double>(repetitions);
            double sq = 0.0;
            for (const auto& r : rung.runs) {
                const double d = static_cast<double>(r.fitness_evaluations) - out.mean_evaluations;
                sq += d * d;
            }
            out.stddev_evaluations =
                repetitions > 1 ? std::sqrt(sq / static_cast<double>(repetitions - 1)) : 0.0;
            break;
        }
    }
    return out;
}

std::string to_string(FitnessKind kind) {
    switch (kind) {
        case FitnessKind::onemax: return "onemax";
        case FitnessKind::royal_road: return "royal-road";
        case FitnessKind::zeromax: return "zeromax";
    }
    return "?";
}

std::string to_string(LearnerKind kind) {
    return kind == LearnerKind::ibmap_hc ? "ibmap-hc" : "mi";
}

}  // namespace ibmap::eda

#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"

#include "ibmap/baselines.hpp"
#include "ibmap/dataset.hpp"
#include "ibmap/eda.hpp"
#include "ibmap/eval.hpp"
#include "ibmap/io.hpp"
#include "ibmap/parallel.hpp"
#include "ibmap/rng.hpp"
#include "ibmap/search.hpp"
#include "ibmap/synth.hpp"

namespace ibmap::cli {

namespace {

std::string now_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

template <typename T>
void put(nlohmann::json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

void put(nlohmann::json& j, const char* key, const std::string& v) {
    if (!v.empty()) j[key] = v;
}

}  // namespace

nlohmann::json RunRecord::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    put(j, "timestamp", timestamp);
    put(j, "subcommand", subcommand);
    put(j, "seed", seed);
    put(j, "algorithm", algorithm);
    put(j, "n", n);
    put(j, "topology", topology);
    put(j, "D", rows);
    put(j, "hamming", hamming);
    if (f_edges || f_nonedges || f_triplets) {
        nlohmann::json f = nlohmann::json::object();
        put(f, "edges", f_edges);
        put(f, "nonedges", f_nonedges);
        put(f, "triplets", f_triplets);
        j["f_measure"] = f;
    }
    put(j, "accuracy", accuracy);
    put(j, "runtime_ms", runtime_ms);
    put(j, "tests_computed", tests_computed);
    put(j, "cache_hits", cache_hits);
    put(j, "ascents", ascents);
    for (const auto& [k, v] : extra.items()) j[k] = v;
    return j;
}

const std::vector<std::string>& record_columns() {
    static const std::vector<std::string> columns{
        "timestamp", "subcommand", "seed",       "algorithm",      "n",          "topology",
        "D",         "hamming",    "f_edges",    "f_nonedges",     "f_triplets", "accuracy",
        "runtime_ms", "tests_computed", "cache_hits", "ascents"};
    return columns;
}

std::string csv_header() {
    std::string out;
    for (const auto& c : record_columns()) out += (out.empty() ? "" : ",") + c;
    return out;
}

std::string to_csv_row(const RunRecord& r) {
    std::ostringstream s;
    s << std::setprecision(17);
    auto field = [&s](const auto& v) {
        if constexpr (requires { v.has_value(); }) {
            if (v) s << *v;
        } else {
            s << v;
        }
    };
    auto sep = [&s] { s << ','; };
    field(r.timestamp); sep();
    field(r.subcommand); sep();
    field(r.seed); sep();
    field(r.algorithm); sep();
    field(r.n); sep();
    field(r.topology); sep();
    field(r.rows); sep();
    field(r.hamming); sep();
    field(r.f_edges); sep();
    field(r.f_nonedges); sep();
    field(r.f_triplets); sep();
    field(r.accuracy); sep();
    field(r.runtime_ms); sep();
    field(r.tests_computed); sep();
    field(r.cache_hits); sep();
    field(r.ascents);
    return s.str();
}

namespace {

/// Serializes records to a stream as JSON lines or CSV.
class RecordSink {
public:
    RecordSink(std::ostream& fallback, const std::string& path, bool csv) : csv_(csv) {
        if (path.empty()) {
            out_ = &fallback;
        } else {
            const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
            file_.open(path, std::ios::app | std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open '" + path + "' for appending");
            out_ = &file_;
            header_written_ = !fresh;
        }
    }

    void write(const RunRecord& r) {
        std::lock_guard lock(mutex_);
        if (csv_) {
            if (!header_written_) {
                *out_ << csv_header() << '\n';
                header_written_ = true;
            }
            *out_ << to_csv_row(r) << '\n';
        } else {
            *out_ << r.to_json().dump() << '\n';
        }
        out_->flush();
        if (!*out_) throw std::runtime_error("failed to write record");
    }

private:
    bool csv_;
    bool header_written_ = false;
    std::ofstream file_;
    std::ostream* out_ = nullptr;
    std::mutex mutex_;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string tau_topology(double tau) {
    std::ostringstream s;
    s << "tau=" << tau;
    return s.str();
}

struct IsingDims {
    std::size_t rows = 0;
    std::size_t cols = 0;
};

IsingDims parse_grid(const std::string& spec) {
    const auto x = spec.find('x');
    if (x == std::string::npos) throw std::invalid_argument("grid must look like RxC, got '" + spec + "'");
    return {std::stoul(spec.substr(0, x)), std::stoul(spec.substr(x + 1))};
}

enum class Algo { ibmap_hc, gsmn };

Algo parse_algo(const std::string& s) {
    if (s == "ibmap-hc") return Algo::ibmap_hc;
    if (s == "gsmn") return Algo::gsmn;
    throw std::invalid_argument("unknown algorithm '" + s + "' (expected ibmap-hc or gsmn)");
}

std::string algo_name(Algo a) { return a == Algo::ibmap_hc ? "ibmap-hc" : "gsmn"; }

SearchResult learn(Algo algo, const Dataset& d, double alpha, EdgeCombination combine) {
    if (algo == Algo::ibmap_hc) {
        SearchOptions options;
        options.alpha = alpha;
        return ibmap_hc(d, options);
    }
    GsmnOptions options;
    options.alpha = alpha;
    options.combine = combine;
    return gsmn(d, options);
}

void fill_learning(RunRecord& r, const SearchResult& result) {
    r.tests_computed = result.tests_computed;
    r.cache_hits = result.cache_hits;
    r.ascents = result.ascents;
    r.extra["score"] = result.score.total;
    r.extra["edges"] = result.structure.num_edges();
    if (result.status == SearchStatus::iteration_limit) r.extra["status"] = "iteration_limit";
}

void fill_quality(RunRecord& r, const Structure& learned, const Structure& truth,
                  const TripletSample* sample) {
    r.hamming = hamming(learned, truth);
    r.f_edges = f_measure(learned, truth, FMode::edges);
    r.f_nonedges = f_measure(learned, truth, FMode::nonedges);
    if (sample) r.f_triplets = f_measure(learned, truth, FMode::triplets, sample);
}

/// Options shared by all subcommands.
struct Common {
    std::string out;
    bool csv = false;
};

void add_common(CLI::App* sub, Common& c, const char* flag = "--out") {
    sub->add_option(flag, c.out, "Append records to this file instead of stdout");
    sub->add_flag("--csv", c.csv, "Emit CSV instead of JSON lines");
}

std::vector<double> parse_doubles(const std::vector<std::string>& v) {
    std::vector<double> out;
    for (const auto& s : v) out.push_back(std::stod(s));
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Independence-based MAP structure learning of Markov networks"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Sample a synthetic structure and dataset");
    std::size_t gen_n = 20, gen_rows = 1000, burn_in = 100, thin = 9;
    double gen_tau = 2.0, epsilon = 1.0;
    std::uint64_t gen_seed = 0;
    std::string gen_grid, gen_data = "data.csv", gen_structure = "structure.json";
    Common gen_common;
    gen->add_option("--n", gen_n, "Number of variables");
    gen->add_option("--tau", gen_tau, "Average degree");
    gen->add_option("--ising", gen_grid, "Grid RxC instead of a random structure");
    gen->add_option("--rows", gen_rows, "Data points")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "Run seed");
    gen->add_option("--epsilon", epsilon, "Log-odds of every pairwise factor");
    gen->add_option("--burn-in", burn_in, "Discarded Gibbs sweeps");
    gen->add_option("--thin", thin, "Sweeps skipped between rows");
    gen->add_option("--data", gen_data, "Dataset CSV path");
    gen->add_option("--structure", gen_structure, "Structure file path");
    add_common(gen, gen_common);

    // learn
    auto* lrn = app.add_subcommand("learn", "Learn a structure from a CSV dataset");
    std::string algo_s = "ibmap-hc", learn_data, learn_out, learn_truth, combine_s = "either";
    double alpha = 1.0;
    std::size_t learn_rows = 0;
    Common learn_common;
    lrn->add_option("--algo", algo_s, "ibmap-hc or gsmn");
    lrn->add_option("--data", learn_data, "Dataset CSV")->required();
    lrn->add_option("--out", learn_out, "Where to write the learned structure")->required();
    lrn->add_option("--true", learn_truth, "Ground-truth structure for quality metrics");
    lrn->add_option("--rows", learn_rows, "Use only the first N rows (0 = all)");
    lrn->add_option("--alpha", alpha, "Dirichlet hyperparameter of the test")->check(CLI::PositiveNumber);
    lrn->add_option("--combine", combine_s, "GSMN edge rule: either or both");
    add_common(lrn, learn_common, "--records");

    // eval
    auto* evl = app.add_subcommand("eval", "Compare structures and/or measure accuracy on data");
    std::string eval_learned, eval_truth, eval_test;
    std::uint64_t eval_seed = 0;
    std::size_t triplet_total = 0;
    Common eval_common;
    evl->add_option("--learned", eval_learned, "Learned structure file")->required();
    evl->add_option("--true", eval_truth, "Ground-truth structure file");
    evl->add_option("--test-data", eval_test, "Held-out CSV for accuracy");
    evl->add_option("--seed", eval_seed, "Triplet sampling seed");
    evl->add_option("--triplets", triplet_total, "Sampled triplets (0 = 100 * C(n,2))");
    evl->add_option("--alpha", alpha, "Dirichlet hyperparameter of the test");
    add_common(evl, eval_common);

    // landscape
    auto* lsc = app.add_subcommand("landscape", "Score every structure of a small domain");
    std::size_t land_n = 6, land_rows = 1000;
    double land_tau = 1.0;
    std::uint64_t land_seed = 0;
    std::string land_table = "landscape.tsv", land_data, land_truth;
    Common land_common;
    lsc->add_option("--n", land_n, "Number of variables (<= 6)");
    lsc->add_option("--tau", land_tau, "Average degree");
    lsc->add_option("--rows", land_rows, "Data points")->check(CLI::PositiveNumber);
    lsc->add_option("--seed", land_seed, "Run seed");
    lsc->add_option("--epsilon", epsilon, "Log-odds of every pairwise factor");
    lsc->add_option("--data", land_data, "Use this CSV instead of sampling");
    lsc->add_option("--true", land_truth, "Ground truth for --data");
    lsc->add_option("--table", land_table, "Output table (structure_index, score, hamming)");
    add_common(lsc, land_common);

    // eda
    auto* eda_cmd = app.add_subcommand("eda", "Run the MOA optimizer");
    eda::EdaConfig eda_cfg;
    std::string fitness_s = "onemax", learner_s = "ibmap-hc";
    bool critical = false;
    std::vector<std::size_t> ladder = eda::kDefaultLadder;
    std::size_t reps = 10, workers = 0;
    Common eda_common;
    eda_cmd->add_option("--fitness", fitness_s, "onemax, royal-road or zeromax");
    eda_cmd->add_option("--gamma", eda_cfg.gamma, "Royal Road block size");
    eda_cmd->add_option("--learner", learner_s, "ibmap-hc or mi");
    eda_cmd->add_option("--k", eda_cfg.k, "Neighbour cap of the MI learner");
    eda_cmd->add_option("--mi-threshold", eda_cfg.mi_threshold, "MI threshold in nats");
    eda_cmd->add_option("--n", eda_cfg.n, "Genes");
    eda_cmd->add_option("--pop", eda_cfg.population_size, "Population size D");
    eda_cmd->add_option("--max-gens", eda_cfg.max_generations, "Generation limit");
    eda_cmd->add_option("--seed", eda_cfg.seed, "Run seed");
    eda_cmd->add_flag("--critical", critical, "Search the critical population size");
    eda_cmd->add_option("--ladder", ladder, "Population sizes for --critical");
    eda_cmd->add_option("--reps", reps, "Repetitions per population size");
    eda_cmd->add_option("--workers", workers, "Parallel runs (0 = IBMAP_WORKERS or all cores)");
    add_common(eda_cmd, eda_common);

    // bench
    auto* bench = app.add_subcommand("bench", "Quality sweep over n, tau and D");
    std::vector<std::size_t> bench_n{25};
    std::vector<std::string> bench_tau_s{"1", "2"};
    std::vector<std::size_t> bench_rows{100, 400, 1600};
    std::vector<std::string> bench_algos{"ibmap-hc", "gsmn"};
    std::size_t bench_reps = 10, bench_workers = 0;
    std::uint64_t bench_seed = 0;
    bool bench_triplets = false;
    Common bench_common;
    bench->add_option("--n", bench_n, "Domain sizes");
    bench->add_option("--tau", bench_tau_s, "Average degrees");
    bench->add_option("--rows", bench_rows, "Dataset sizes (prefixes of one sample)");
    bench->add_option("--algos", bench_algos, "Algorithms");
    bench->add_option("--reps", bench_reps, "Repetitions per (n, tau)");
    bench->add_option("--seed", bench_seed, "Base seed");
    bench->add_option("--epsilon", epsilon, "Log-odds of every pairwise factor");
    bench->add_option("--workers", bench_workers, "Parallel cells (0 = IBMAP_WORKERS or all cores)");
    bench->add_flag("--triplet-f", bench_triplets, "Also report the triplet F-measure");
    add_common(bench, bench_common);

    std::vector<std::string> argv_storage{"ibmap"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
    }

    try {
        if (gen->parsed()) {
            const auto start = std::chrono::steady_clock::now();
            GibbsOptions gibbs{burn_in, thin};
            SyntheticProblem p;
            RunRecord r;
            if (!gen_grid.empty()) {
                const auto dims = parse_grid(gen_grid);
                p = make_ising_problem(dims.rows, dims.cols, gen_rows, gen_seed, epsilon, gibbs);
                r.topology = "ising=" + gen_grid;
            } else {
                p = make_random_problem(gen_n, gen_tau, gen_rows, gen_seed, epsilon, gibbs);
                r.topology = tau_topology(gen_tau);
            }
            write_csv(p.data, gen_data);
            write_structure(p.model.structure, gen_structure);
            r.timestamp = now_utc();
            r.subcommand = "gen";
            r.seed = gen_seed;
            r.n = p.data.num_variables();
            r.rows = p.data.num_rows();
            r.runtime_ms = elapsed_ms(start);
            r.extra["edges"] = p.model.structure.num_edges();
            r.extra["data"] = gen_data;
            r.extra["structure"] = gen_structure;
            RecordSink(out, gen_common.out, gen_common.csv).write(r);
            return 0;
        }

        if (lrn->parsed()) {
            const auto algo = parse_algo(algo_s);
            if (combine_s != "either" && combine_s != "both") {
                throw std::invalid_argument("--combine must be either or both");
            }
            Dataset d = load_csv(learn_data);
            if (learn_rows) d = d.head(learn_rows);
            const auto start = std::chrono::steady_clock::now();
            const auto result = learn(algo, d, alpha,
                                      combine_s == "both" ? EdgeCombination::both : EdgeCombination::either);
            RunRecord r;
            r.runtime_ms = elapsed_ms(start);
            write_structure(result.structure, learn_out);
            r.timestamp = now_utc();
            r.subcommand = "learn";
            r.algorithm = algo_name(algo);
            r.n = d.num_variables();
            r.rows = d.num_rows();
            fill_learning(r, result);
            if (!learn_truth.empty()) fill_quality(r, result.structure, read_structure(learn_truth), nullptr);
            r.extra["data"] = learn_data;
            r.extra["structure"] = learn_out;
            RecordSink(out, learn_common.out, learn_common.csv).write(r);
            return 0;
        }

        if (evl->parsed()) {
            if (eval_truth.empty() && eval_test.empty()) {
                throw std::invalid_argument("eval needs --true and/or --test-data");
            }
            const auto learned = read_structure(eval_learned);
            const auto n = learned.num_nodes();
            const auto sample = sample_triplets_total(
                n, triplet_total ? triplet_total : default_triplet_total(n), substream(eval_seed, "triplets"));
            RunRecord r;
            r.timestamp = now_utc();
            r.subcommand = "eval";
            r.seed = eval_seed;
            r.n = n;
            if (!eval_truth.empty()) fill_quality(r, learned, read_structure(eval_truth), &sample);
            if (!eval_test.empty()) {
                const auto d = load_csv(eval_test);
                r.rows = d.num_rows();
                r.accuracy = accuracy(d, learned, sample, alpha);
            }
            r.extra["triplets"] = sample.triplets.size();
            RecordSink(out, eval_common.out, eval_common.csv).write(r);
            return 0;
        }

        if (lsc->parsed()) {
            Dataset d;
            Structure truth;
            RunRecord r;
            if (!land_data.empty()) {
                if (land_truth.empty()) throw std::invalid_argument("--data requires --true");
                d = load_csv(land_data);
                truth = read_structure(land_truth);
            } else {
                auto p = make_random_problem(land_n, land_tau, land_rows, land_seed, epsilon);
                d = std::move(p.data);
                truth = p.model.structure;
                r.seed = land_seed;
                r.topology = tau_topology(land_tau);
            }
            const auto start = std::chrono::steady_clock::now();
            const auto report = landscape(d, truth);
            {
                std::ofstream table(land_table, std::ios::binary);
                if (!table) throw std::runtime_error("cannot write '" + land_table + "'");
                write_landscape_table(report, table);
                if (!table) throw std::runtime_error("write failed for '" + land_table + "'");
            }
            r.timestamp = now_utc();
            r.subcommand = "landscape";
            r.algorithm = "ibmap-hc";
            r.n = d.num_variables();
            r.rows = d.num_rows();
            r.runtime_ms = elapsed_ms(start);
            fill_learning(r, report.hill_climb);
            r.hamming = report.hill_climb_hamming;
            r.extra["structures"] = report.records.size();
            r.extra["argmax_index"] = report.argmax_index;
            r.extra["max_score"] = report.max_score;
            r.extra["hc_index"] = report.hill_climb_index;
            r.extra["hc_rank"] = report.hill_climb_rank;
            r.extra["hc_is_global_max"] = report.hill_climb.score.total == report.max_score;
            r.extra["spearman_score_hamming"] = report.spearman;
            r.extra["table"] = land_table;
            RecordSink(out, land_common.out, land_common.csv).write(r);
            return 0;
        }

        if (eda_cmd->parsed()) {
            if (fitness_s == "onemax") eda_cfg.fitness = eda::FitnessKind::onemax;
            else if (fitness_s == "royal-road") eda_cfg.fitness = eda::FitnessKind::royal_road;
            else if (fitness_s == "zeromax") eda_cfg.fitness = eda::FitnessKind::zeromax;
            else throw std::invalid_argument("unknown fitness '" + fitness_s + "'");
            if (learner_s == "ibmap-hc") eda_cfg.learner = eda::LearnerKind::ibmap_hc;
            else if (learner_s == "mi") eda_cfg.learner = eda::LearnerKind::mi;
            else throw std::invalid_argument("unknown learner '" + learner_s + "'");
            eda_cfg.validate();

            RecordSink sink(out, eda_common.out, eda_common.csv);
            auto base_record = [&](std::size_t size, std::uint64_t seed) {
                RunRecord r;
                r.timestamp = now_utc();
                r.subcommand = "eda";
                r.seed = seed;
                r.algorithm = eda::to_string(eda_cfg.learner);
                r.n = eda_cfg.n;
                r.rows = size;
                r.extra["fitness"] = eda::to_string(eda_cfg.fitness);
                r.extra["learner"] = eda::to_string(eda_cfg.learner);
                if (eda_cfg.learner == eda::LearnerKind::mi) r.extra["k"] = eda_cfg.k;
                if (eda_cfg.fitness == eda::FitnessKind::royal_road) r.extra["gamma"] = eda_cfg.gamma;
                return r;
            };
            auto put_run = [](RunRecord& r, const eda::RunResult& run) {
                r.extra["success"] = run.success;
                r.extra["generations"] = run.generations;
                r.extra["f_star"] = run.fitness_evaluations;
            };

            if (!critical) {
                const auto start = std::chrono::steady_clock::now();
                const auto result = eda::moa_run(eda_cfg);
                auto r = base_record(eda_cfg.population_size, eda_cfg.seed);
                r.runtime_ms = elapsed_ms(start);
                put_run(r, result);
                sink.write(r);
                return 0;
            }
            const auto result = eda::critical_population_search(eda_cfg, ladder, reps, workers);
            for (const auto& rung : result.rungs) {
                for (std::size_t rep = 0; rep < rung.runs.size(); ++rep) {
                    auto r = base_record(rung.population_size, eda::repetition_seed(eda_cfg.seed, rep));
                    put_run(r, rung.runs[rep]);
                    sink.write(r);
                }
            }
            auto summary = base_record(result.critical_size, eda_cfg.seed);
            summary.subcommand = "eda-critical";
            summary.extra["found"] = result.found;
            if (result.found) {
                summary.extra["D_star"] = result.critical_size;
                summary.extra["f_star_mean"] = result.mean_evaluations;
                summary.extra["f_star_std"] = result.stddev_evaluations;
            }
            sink.write(summary);
            return 0;
        }

        if (bench->parsed()) {
            const auto taus = parse_doubles(bench_tau_s);
            std::vector<Algo> algos;
            for (const auto& a : bench_algos) algos.push_back(parse_algo(a));
            std::vector<std::size_t> sizes = bench_rows;
            std::sort(sizes.begin(), sizes.end());
            if (sizes.empty() || sizes.front() == 0) throw std::invalid_argument("--rows must be positive");

            struct Cell {
                std::size_t n;
                double tau;
                std::size_t rep;
            };
            std::vector<Cell> cells;
            for (auto n : bench_n)
                for (auto tau : taus)
                    for (std::size_t rep = 0; rep < bench_reps; ++rep) cells.push_back({n, tau, rep});

            std::vector<std::vector<RunRecord>> results(cells.size());
            parallel_for(
                cells.size(),
                [&](std::size_t i) {
                    const auto& cell = cells[i];
                    const std::uint64_t seed = substream(bench_seed, "bench", i);
                    const auto problem = make_random_problem(cell.n, cell.tau, sizes.back(), seed, epsilon);
                    const auto& truth = problem.model.structure;
                    const auto sample = bench_triplets
                        ? std::optional(sample_triplets_total(cell.n, default_triplet_total(cell.n),
                                                              substream(seed, "triplets")))
                        : std::nullopt;
                    for (auto rows : sizes) {
                        const auto d = problem.data.head(rows);
                        for (auto algo : algos) {
                            const auto start = std::chrono::steady_clock::now();
                            const auto result = learn(algo, d, 1.0, EdgeCombination::either);
                            RunRecord r;
                            r.runtime_ms = elapsed_ms(start);
                            r.timestamp = now_utc();
                            r.subcommand = "bench";
                            r.seed = seed;
                            r.algorithm = algo_name(algo);
                            r.n = cell.n;
                            r.topology = tau_topology(cell.tau);
                            r.rows = rows;
                            fill_learning(r, result);
                            fill_quality(r, result.structure, truth, sample ? &*sample : nullptr);
                            results[i].push_back(std::move(r));
                        }
                    }
                },
                bench_workers);
            RecordSink sink(out, bench_common.out, bench_common.csv);
            for (const auto& rs : results)
                for (const auto& r : rs) sink.write(r);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace ibmap::cli

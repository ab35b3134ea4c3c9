#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ibmap::cli {

/// One experiment result row; absent fields are omitted from the output.
struct RunRecord {
    std::string timestamp;
    std::string subcommand;
    std::optional<std::uint64_t> seed;
    std::string algorithm;
    std::optional<std::size_t> n;
    std::string topology;  ///< "tau=<t>" or "ising=<r>x<c>"
    std::optional<std::size_t> rows;
    std::optional<std::size_t> hamming;
    std::optional<double> f_edges;
    std::optional<double> f_nonedges;
    std::optional<double> f_triplets;
    std::optional<double> accuracy;
    std::optional<double> runtime_ms;
    std::optional<std::uint64_t> tests_computed;
    std::optional<std::uint64_t> cache_hits;
    std::optional<std::size_t> ascents;
    nlohmann::json extra = nlohmann::json::object();

    nlohmann::json to_json() const;
};

/// Column order used by CSV export.
const std::vector<std::string>& record_columns();

std::string csv_header();
std::string to_csv_row(const RunRecord& r);

/// Entry point shared by the executable and the tests. Returns the process
/// exit status; diagnostics go to `err`, records to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ibmap::cli

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ibmap {

using Variable = std::uint32_t;
using Value = std::uint32_t;

/// Raised by the CSV loader; carries the 1-based line number of the problem
/// (0 when the error is not tied to a line, e.g. a missing file).
class DatasetError : public std::runtime_error {
public:
    DatasetError(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Immutable column-oriented table of categorical values.
class Dataset {
public:
    Dataset() = default;

    /// Validates that every column has the same length and every value is
    /// below its variable's arity.
    Dataset(std::vector<std::string> names, std::vector<Value> arities,
            std::vector<std::vector<Value>> columns);

    /// Builds a dataset whose arities are inferred as max+1 per column.
    static Dataset from_columns(std::vector<std::string> names,
                                std::vector<std::vector<Value>> columns);

    std::size_t num_variables() const noexcept { return arities_.size(); }
    std::size_t num_rows() const noexcept { return rows_; }

    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Value>& arities() const noexcept { return arities_; }
    Value arity(Variable v) const { return arities_.at(v); }
    std::span<const Value> column(Variable v) const { return columns_.at(v); }
    Value at(std::size_t row, Variable v) const { return columns_.at(v).at(row); }

    /// Dataset restricted to the given rows, in the given order. Arities are kept.
    Dataset select_rows(std::span<const std::size_t> rows) const;

    /// Dataset made of the first `count` rows. Arities are kept.
    Dataset head(std::size_t count) const;

    bool operator==(const Dataset&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<Value> arities_;
    std::vector<std::vector<Value>> columns_;
    std::size_t rows_ = 0;
};

/// Reads a headered, comma-separated file of non-negative integers.
Dataset load_csv(const std::filesystem::path& path);

/// Parses CSV text with the same rules as load_csv.
Dataset parse_csv(const std::string& text);

/// Writes the dataset in the format read by load_csv (LF line endings).
void write_csv(const Dataset& d, std::ostream& out);
void write_csv(const Dataset& d, const std::filesystem::path& path);

/// Per-conditioning-assignment x/y tables. Tables are row-major x_arity * y_arity.
struct ContingencyCounts {
    Value x_arity = 0;
    Value y_arity = 0;
    std::map<std::vector<Value>, std::vector<std::uint64_t>> cells;

    std::uint64_t count(const std::vector<Value>& zkey, Value a, Value b) const;
    std::uint64_t total() const;
};

/// Same information as ContingencyCounts, laid out flat: slice s occupies
/// counts[s * x_arity * y_arity, (s + 1) * x_arity * y_arity). Slices appear
/// in order of first occurrence in the data; only observed slices exist.
struct SliceTables {
    Value x_arity = 0;
    Value y_arity = 0;
    std::size_t num_slices = 0;
    std::vector<std::uint64_t> counts;
    /// Row index of the first occurrence of each slice (identifies its z-assignment).
    std::vector<std::size_t> first_row;

    std::span<const std::uint64_t> slice(std::size_t s) const {
        const std::size_t cells = static_cast<std::size_t>(x_arity) * y_arity;
        return {counts.data() + s * cells, cells};
    }
};

/// Throws std::invalid_argument / std::out_of_range on precondition violations
/// (x == y, x or y in z, any index out of range).
void check_triplet(const Dataset& d, Variable x, Variable y, std::span<const Variable> z);

SliceTables slice_tables(const Dataset& d, Variable x, Variable y, std::span<const Variable> z);

ContingencyCounts contingency_counts(const Dataset& d, Variable x, Variable y,
                                     std::span<const Variable> z);

}  // namespace ibmap

#include "ibmap/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace ibmap {

Dataset::Dataset(std::vector<std::string> names, std::vector<Value> arities,
                 std::vector<std::vector<Value>> columns)
    : names_(std::move(names)), arities_(std::move(arities)), columns_(std::move(columns)) {
    if (names_.size() != arities_.size() || names_.size() != columns_.size()) {
        throw std::invalid_argument("dataset: names, arities and columns differ in length");
    }
    rows_ = columns_.empty() ? 0 : columns_.front().size();
    for (std::size_t v = 0; v < columns_.size(); ++v) {
        if (arities_[v] < 1) {
            throw std::invalid_argument("dataset: arity of '" + names_[v] + "' must be >= 1");
        }
        if (columns_[v].size() != rows_) {
            throw std::invalid_argument("dataset: column '" + names_[v] + "' has wrong length");
        }
        for (Value value : columns_[v]) {
            if (value >= arities_[v]) {
                throw std::invalid_argument("dataset: value out of range in column '" +
                                            names_[v] + "'");
            }
        }
    }
}

Dataset Dataset::from_columns(std::vector<std::string> names,
                              std::vector<std::vector<Value>> columns) {
    std::vector<Value> arities;
    arities.reserve(columns.size());
    for (const auto& column : columns) {
        const auto it = std::max_element(column.begin(), column.end());
        arities.push_back(it == column.end() ? 1 : *it + 1);
    }
    return Dataset(std::move(names), std::move(arities), std::move(columns));
}

Dataset Dataset::select_rows(std::span<const std::size_t> rows) const {
    std::vector<std::vector<Value>> columns(columns_.size());
    for (std::size_t v = 0; v < columns_.size(); ++v) {
        columns[v].reserve(rows.size());
        for (std::size_t r : rows) columns[v].push_back(columns_[v].at(r));
    }
    return Dataset(names_, arities_, std::move(columns));
}

Dataset Dataset::head(std::size_t count) const {
    count = std::min(count, rows_);
    std::vector<std::vector<Value>> columns(columns_.size());
    for (std::size_t v = 0; v < columns_.size(); ++v) {
        columns[v].assign(columns_[v].begin(), columns_[v].begin() + static_cast<std::ptrdiff_t>(count));
    }
    return Dataset(names_, arities_, std::move(columns));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

Dataset parse_csv(const std::string& text) {
    std::vector<std::string_view> lines;
    {
        std::string_view rest(text);
        while (!rest.empty()) {
            const auto nl = rest.find('\n');
            lines.push_back(rest.substr(0, nl));
            if (nl == std::string_view::npos) break;
            rest.remove_prefix(nl + 1);
        }
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw DatasetError("missing header", 1);

    std::vector<std::string> names;
    for (auto token : split(lines.front())) {
        if (token.empty()) throw DatasetError("empty variable name in header", 1);
        names.emplace_back(token);
    }
    if (lines.size() < 2) throw DatasetError("no data rows", 2);

    std::vector<std::vector<Value>> columns(names.size());
    for (auto& c : columns) c.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto tokens = split(lines[i]);
        if (tokens.size() != names.size()) {
            throw DatasetError("expected " + std::to_string(names.size()) + " fields, found " +
                                   std::to_string(tokens.size()),
                               line_no);
        }
        for (std::size_t v = 0; v < tokens.size(); ++v) {
            const auto token = tokens[v];
            if (!token.empty() && token.front() == '-') {
                throw DatasetError("negative value '" + std::string(token) + "'", line_no);
            }
            Value value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
                throw DatasetError("not a non-negative integer: '" + std::string(token) + "'",
                                   line_no);
            }
            columns[v].push_back(value);
        }
    }
    return Dataset::from_columns(std::move(names), std::move(columns));
}

Dataset load_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DatasetError("cannot open '" + path.string() + "'", 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

void write_csv(const Dataset& d, std::ostream& out) {
    const auto& names = d.names();
    for (std::size_t v = 0; v < names.size(); ++v) {
        out << (v ? "," : "") << names[v];
    }
    out << '\n';
    for (std::size_t r = 0; r < d.num_rows(); ++r) {
        for (std::size_t v = 0; v < d.num_variables(); ++v) {
            out << (v ? "," : "") << d.at(r, static_cast<Variable>(v));
        }
        out << '\n';
    }
}

void write_csv(const Dataset& d, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DatasetError("cannot write '" + path.string() + "'", 0);
    write_csv(d, out);
    if (!out) throw DatasetError("write failed for '" + path.string() + "'", 0);
}

std::uint64_t ContingencyCounts::count(const std::vector<Value>& zkey, Value a, Value b) const {
    const auto it = cells.find(zkey);
    if (it == cells.end()) return 0;
    return it->second.at(static_cast<std::size_t>(a) * y_arity + b);
}

std::uint64_t ContingencyCounts::total() const {
    std::uint64_t sum = 0;
    for (const auto& [key, table] : cells) {
        for (auto c : table) sum += c;
    }
    return sum;
}

void check_triplet(const Dataset& d, Variable x, Variable y, std::span<const Variable> z) {
    const auto n = d.num_variables();
    if (x >= n || y >= n) throw std::out_of_range("variable index out of range");
    if (x == y) throw std::invalid_argument("x and y must differ");
    for (Variable w : z) {
        if (w >= n) throw std::out_of_range("conditioning variable out of range");
        if (w == x || w == y) throw std::invalid_argument("x or y appears in the conditioning set");
    }
}

SliceTables slice_tables(const Dataset& d, Variable x, Variable y, std::span<const Variable> z) {
    check_triplet(d, x, y, z);
    const std::size_t rows = d.num_rows();

    // Refine a row partition one conditioning variable at a time; group ids
    // stay dense (< rows) and follow first-occurrence order.
    std::vector<std::uint32_t> group(rows, 0);
    std::size_t num_groups = rows == 0 ? 0 : 1;
    std::vector<std::int64_t> remap;
    for (Variable w : z) {
        const auto column = d.column(w);
        const std::size_t arity = d.arity(w);
        remap.assign(num_groups * arity, -1);
        std::size_t next = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            auto& slot = remap[group[r] * arity + column[r]];
            if (slot < 0) slot = static_cast<std::int64_t>(next++);
            group[r] = static_cast<std::uint32_t>(slot);
        }
        num_groups = next;
    }

    SliceTables out;
    out.x_arity = d.arity(x);
    out.y_arity = d.arity(y);
    out.num_slices = num_groups;
    const std::size_t cells = static_cast<std::size_t>(out.x_arity) * out.y_arity;
    out.counts.assign(num_groups * cells, 0);
    out.first_row.assign(num_groups, rows);
    const auto xs = d.column(x);
    const auto ys = d.column(y);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto g = group[r];
        if (out.first_row[g] == rows) out.first_row[g] = r;
        ++out.counts[g * cells + static_cast<std::size_t>(xs[r]) * out.y_arity + ys[r]];
    }
    return out;
}

ContingencyCounts contingency_counts(const Dataset& d, Variable x, Variable y,
                                     std::span<const Variable> z) {
    const auto tables = slice_tables(d, x, y, z);
    ContingencyCounts out;
    out.x_arity = tables.x_arity;
    out.y_arity = tables.y_arity;
    for (std::size_t s = 0; s < tables.num_slices; ++s) {
        std::vector<Value> key;
        key.reserve(z.size());
        for (Variable w : z) key.push_back(d.at(tables.first_row[s], w));
        const auto table = tables.slice(s);
        out.cells.emplace(std::move(key), std::vector<std::uint64_t>(table.begin(), table.end()));
    }
    return out;
}

}  // namespace ibmap

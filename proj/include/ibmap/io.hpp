#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "ibmap/graph.hpp"

namespace ibmap {

/// {"n": <int>, "edges": [[i, j], ...]} with i < j, sorted.
nlohmann::json structure_to_json(const Structure& g);

/// Accepts edges in either orientation and any order; rejects self-loops and
/// out-of-range nodes with std::runtime_error.
Structure structure_from_json(const nlohmann::json& j);

void write_structure(const Structure& g, const std::filesystem::path& path);
void write_structure(const Structure& g, std::ostream& out);
Structure read_structure(const std::filesystem::path& path);

}  // namespace ibmap

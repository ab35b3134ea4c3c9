#include "ibmap/io.hpp"

#include <fstream>
#include <stdexcept>

namespace ibmap {

nlohmann::json structure_to_json(const Structure& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [x, y] : g.edges()) edges.push_back({x, y});
    return {{"n", g.num_nodes()}, {"edges", std::move(edges)}};
}

Structure structure_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw std::runtime_error("structure file: expected an object with 'n' and 'edges'");
    }
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 0) throw std::runtime_error("structure file: negative 'n'");
    Structure g(static_cast<std::size_t>(n));
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::runtime_error("structure file: edge must be [i, j]");
        const auto x = e[0].get<std::int64_t>();
        const auto y = e[1].get<std::int64_t>();
        if (x < 0 || y < 0 || x >= n || y >= n || x == y) {
            throw std::runtime_error("structure file: invalid edge [" + std::to_string(x) + ", " +
                                     std::to_string(y) + "]");
        }
        g.add_edge(static_cast<Node>(x), static_cast<Node>(y));
    }
    return g;
}

void write_structure(const Structure& g, std::ostream& out) {
    out << structure_to_json(g).dump(2) << '\n';
}

void write_structure(const Structure& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_structure(g, out);
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Structure read_structure(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    try {
        return structure_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("structure file '" + path.string() + "': " + e.what());
    }
}

}  // namespace ibmap

#include "ibmap/graph.hpp"

#include <stdexcept>
#include <string>

namespace ibmap {

NodeSet::NodeSet(std::size_t size, std::span<const Node> members) : NodeSet(size) {
    for (Node v : members) {
        if (v >= size) throw std::out_of_range("node out of range");
        insert(v);
    }
}

std::vector<Node> NodeSet::members() const {
    std::vector<Node> out;
    out.reserve(count());
    for_each([&](Node v) { out.push_back(v); });
    return out;
}

Structure::Structure(std::size_t n, std::size_t max_nodes) {
    if (n > max_nodes) {
        throw std::invalid_argument("structure: " + std::to_string(n) + " nodes exceeds cap of " +
                                    std::to_string(max_nodes));
    }
    rows_.assign(n, NodeSet(n));
}

Structure::Structure(std::size_t n, std::span<const Edge> edges, std::size_t max_nodes)
    : Structure(n, max_nodes) {
    for (const auto& [x, y] : edges) add_edge(x, y);
}

Structure Structure::complete(std::size_t n) {
    Structure g(n);
    for (Node x = 0; x < n; ++x)
        for (Node y = x + 1; y < n; ++y) g.add_edge(x, y);
    return g;
}

void Structure::check_pair(Node x, Node y) const {
    if (x >= rows_.size() || y >= rows_.size()) throw std::out_of_range("node out of range");
    if (x == y) throw std::invalid_argument("self-loops are not allowed");
}

bool Structure::has_edge(Node x, Node y) const {
    check_pair(x, y);
    return rows_[x].contains(y);
}

void Structure::add_edge(Node x, Node y) {
    check_pair(x, y);
    rows_[x].insert(y);
    rows_[y].insert(x);
}

void Structure::remove_edge(Node x, Node y) {
    check_pair(x, y);
    rows_[x].erase(y);
    rows_[y].erase(x);
}

void Structure::toggle_edge(Node x, Node y) {
    check_pair(x, y);
    rows_[x].toggle(y);
    rows_[y].toggle(x);
}

const NodeSet& Structure::blanket(Node x) const {
    if (x >= rows_.size()) throw std::out_of_range("node out of range");
    return rows_[x];
}

std::size_t Structure::num_edges() const {
    std::size_t degree_sum = 0;
    for (const auto& row : rows_) degree_sum += row.count();
    return degree_sum / 2;
}

std::vector<Edge> Structure::edges() const {
    std::vector<Edge> out;
    for (Node x = 0; x < rows_.size(); ++x) {
        rows_[x].for_each([&](Node y) {
            if (x < y) out.emplace_back(x, y);
        });
    }
    return out;
}

Structure flip_edge(const Structure& g, Node x, Node y) {
    Structure out = g;
    out.toggle_edge(x, y);
    return out;
}

std::vector<Node> blanket(const Structure& g, Node x) { return g.blanket(x).members(); }

bool u_separated(const Structure& g, Node x, Node y, const NodeSet& z) {
    const auto n = g.num_nodes();
    if (x >= n || y >= n) throw std::out_of_range("node out of range");
    if (x == y) throw std::invalid_argument("x and y must differ");
    if (z.size() != n) throw std::invalid_argument("separator universe does not match structure");
    if (z.contains(x) || z.contains(y)) throw std::invalid_argument("x or y in separator");

    std::vector<char> seen(n, 0);
    std::vector<Node> frontier{x};
    seen[x] = 1;
    while (!frontier.empty()) {
        const Node v = frontier.back();
        frontier.pop_back();
        bool reached = false;
        g.blanket(v).for_each([&](Node w) {
            if (reached || seen[w] || z.contains(w)) return;
            if (w == y) {
                reached = true;
                return;
            }
            seen[w] = 1;
            frontier.push_back(w);
        });
        if (reached) return false;
    }
    return true;
}

bool u_separated(const Structure& g, Node x, Node y, std::span<const Node> z) {
    return u_separated(g, x, y, NodeSet(g.num_nodes(), z));
}

std::size_t hamming(const Structure& a, const Structure& b) {
    if (a.num_nodes() != b.num_nodes()) throw std::invalid_argument("hamming: node counts differ");
    std::size_t diff = 0;
    for (Node x = 0; x < a.num_nodes(); ++x) {
        const auto wa = a.blanket(x).words();
        const auto wb = b.blanket(x).words();
        for (std::size_t i = 0; i < wa.size(); ++i) {
            diff += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
        }
    }
    return diff / 2;
}

std::size_t pair_index(std::size_t n, Node x, Node y) {
    if (x > y) std::swap(x, y);
    if (y >= n || x == y) throw std::out_of_range("invalid pair");
    // Pairs (0,1)..(0,n-1), (1,2).. : x*n - x(x+1)/2 precede row x.
    return x * n - (static_cast<std::size_t>(x) * (x + 1)) / 2 + (y - x - 1);
}

Structure structure_from_index(std::size_t n, std::uint64_t index) {
    Structure g(n);
    std::size_t k = 0;
    for (Node x = 0; x < n; ++x) {
        for (Node y = x + 1; y < n; ++y, ++k) {
            if ((index >> k) & 1U) g.add_edge(x, y);
        }
    }
    return g;
}

std::uint64_t structure_index(const Structure& g) {
    const auto n = g.num_nodes();
    if (num_pairs(n) > 63) throw std::invalid_argument("structure too large to index");
    std::uint64_t index = 0;
    for (const auto& [x, y] : g.edges()) index |= std::uint64_t{1} << pair_index(n, x, y);
    return index;
}

StructureEnumeration::StructureEnumeration(std::size_t n) : n_(n) {
    if (n > kMaxEnumerableNodes) {
        throw std::invalid_argument("enumerate_structures: n = " + std::to_string(n) +
                                    " exceeds the limit of " +
                                    std::to_string(kMaxEnumerableNodes));
    }
}

StructureEnumeration enumerate_structures(std::size_t n) { return StructureEnumeration(n); }

}  // namespace ibmap

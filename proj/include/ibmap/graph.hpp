#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ibmap/dataset.hpp"

namespace ibmap {

using Node = Variable;
using Edge = std::pair<Node, Node>;

inline constexpr std::size_t kDefaultMaxNodes = 512;

/// Fixed-universe bitset over nodes [0, size).
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
    NodeSet(std::size_t size, std::span<const Node> members);

    std::size_t size() const noexcept { return size_; }
    bool contains(Node v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(Node v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Node v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void toggle(Node v) { words_[v >> 6] ^= std::uint64_t{1} << (v & 63); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept { return count() == 0; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(static_cast<Node>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    /// Members in ascending order.
    std::vector<Node> members() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool operator==(const NodeSet&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Undirected simple graph over n nodes, stored as symmetric bitset rows.
class Structure {
public:
    Structure() = default;
    /// Empty structure; throws std::invalid_argument if n exceeds max_nodes.
    explicit Structure(std::size_t n, std::size_t max_nodes = kDefaultMaxNodes);
    Structure(std::size_t n, std::span<const Edge> edges, std::size_t max_nodes = kDefaultMaxNodes);

    static Structure complete(std::size_t n);

    std::size_t num_nodes() const noexcept { return rows_.size(); }
    bool has_edge(Node x, Node y) const;
    void add_edge(Node x, Node y);
    void remove_edge(Node x, Node y);
    void toggle_edge(Node x, Node y);

    /// Neighbours of x (its Markov blanket).
    const NodeSet& blanket(Node x) const;

    std::size_t num_edges() const;
    /// Edges as (i, j) with i < j, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Structure&) const = default;

private:
    void check_pair(Node x, Node y) const;
    std::vector<NodeSet> rows_;
};

/// Copy of g with edge (x, y) added if absent, removed if present.
Structure flip_edge(const Structure& g, Node x, Node y);

/// Neighbour list of x, ascending.
std::vector<Node> blanket(const Structure& g, Node x);

/// True iff every path between x and y meets a node of z.
bool u_separated(const Structure& g, Node x, Node y, std::span<const Node> z);
bool u_separated(const Structure& g, Node x, Node y, const NodeSet& z);

/// Number of unordered pairs on which the two edge sets disagree.
std::size_t hamming(const Structure& a, const Structure& b);

/// Number of node pairs, C(n, 2).
constexpr std::size_t num_pairs(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// Position of pair (x, y), x < y, in the lexicographic order of all pairs.
std::size_t pair_index(std::size_t n, Node x, Node y);

inline constexpr std::size_t kMaxEnumerableNodes = 6;

/// Structure whose k-th lexicographic pair is an edge iff bit k of index is set.
Structure structure_from_index(std::size_t n, std::uint64_t index);
std::uint64_t structure_index(const Structure& g);

/// Deterministic enumeration of all 2^C(n,2) structures (n <= 6).
class StructureEnumeration {
public:
    explicit StructureEnumeration(std::size_t n);

    std::uint64_t size() const noexcept { return std::uint64_t{1} << num_pairs(n_); }

    class iterator {
    public:
        using value_type = Structure;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(std::size_t n, std::uint64_t index) : n_(n), index_(index) {}
        Structure operator*() const { return structure_from_index(n_, index_); }
        iterator& operator++() { ++index_; return *this; }
        iterator operator++(int) { auto t = *this; ++index_; return t; }
        bool operator==(const iterator& o) const { return index_ == o.index_; }
        std::uint64_t index() const noexcept { return index_; }

    private:
        std::size_t n_ = 0;
        std::uint64_t index_ = 0;
    };

    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, size()}; }

private:
    std::size_t n_;
};

StructureEnumeration enumerate_structures(std::size_t n);

}  // namespace ibmap

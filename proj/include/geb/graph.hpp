#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace geb {

inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kMaxPairs = kMaxVertices * (kMaxVertices - 1) / 2;

// Position of the unordered pair {i, j}, i < j, in the upper triangle read
// column by column: (0,1), (0,2), (1,2), (0,3), ...  This is also the graph6
// bit order.
constexpr std::size_t pair_index(std::size_t i, std::size_t j) noexcept
{
    return j * (j - 1) / 2 + i;
}

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on 1..64 vertices.
///
/// The upper-triangle bitset is the identity of the graph; per-vertex
/// neighbour masks are kept alongside it for the predicates.  Values are
/// immutable once built.
class Graph {
public:
    using EdgeBits = std::bitset<kMaxPairs>;

    /// Builds from a bitset whose bits past C(n,2) must be clear.
    Graph(std::size_t n, const EdgeBits& bits);

    /// Builds from an edge mask over the first C(n,2) pair indices (n <= 11).
    static Graph from_mask(std::size_t n, std::uint64_t mask);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return bits_.count(); }
    const EdgeBits& edge_bits() const noexcept { return bits_; }

    bool adjacent(std::size_t i, std::size_t j) const noexcept
    {
        return i != j && ((rows_[i] >> j) & 1U);
    }
    std::uint64_t neighbours(std::size_t v) const noexcept { return rows_[v]; }
    std::size_t degree(std::size_t v) const noexcept;

    /// Edges as (i, j) with i < j, ordered by pair index.
    std::vector<Edge> edges() const;

    /// Graph with vertex v moved to position perm[v].
    Graph relabelled(std::span<const std::size_t> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    std::size_t n_;
    EdgeBits bits_;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges);

Graph empty_graph(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t p, std::size_t q);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);
/// Kneser graph K(5,2).
Graph petersen();

std::vector<std::size_t> degree_sequence(const Graph& g);
bool is_regular(const Graph& g);
bool is_connected(const Graph& g);
std::size_t triangle_count(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);
/// True when the graph is K_{p,q} for some p, q >= 1 (no isolated vertices).
bool is_complete_bipartite(const Graph& g);

}  // namespace geb

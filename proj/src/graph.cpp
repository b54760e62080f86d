#include "geb/graph.hpp"

#include "geb/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace geb {

namespace {

void check_order(std::size_t n)
{
    if (n < 1 || n > kMaxVertices)
        throw Error(Errc::NTooLarge, "vertex count " + std::to_string(n) + " outside 1.." +
                                         std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(std::size_t n, const EdgeBits& bits) : n_(n), bits_(bits)
{
    check_order(n);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (bits_[pair_index(i, j)]) {
                rows_[i] |= std::uint64_t{1} << j;
                rows_[j] |= std::uint64_t{1} << i;
            }
        }
    }
    // Bits beyond the triangle would make equal graphs compare unequal.
    EdgeBits triangle;
    triangle.set();
    bits_ &= triangle >> (kMaxPairs - n * (n - 1) / 2);
}

Graph Graph::from_mask(std::size_t n, std::uint64_t mask)
{
    EdgeBits bits;
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::size_t k = 0; k < pairs && k < 64; ++k)
        if ((mask >> k) & 1U)
            bits.set(k);
    return Graph(n, bits);
}

std::size_t Graph::degree(std::size_t v) const noexcept
{
    return static_cast<std::size_t>(std::popcount(rows_[v]));
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t j = 1; j < n_; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (bits_[pair_index(i, j)])
                out.emplace_back(i, j);
    return out;
}

Graph Graph::relabelled(std::span<const std::size_t> perm) const
{
    EdgeBits bits;
    for (auto [i, j] : edges()) {
        auto a = perm[i];
        auto b = perm[j];
        if (a > b)
            std::swap(a, b);
        bits.set(pair_index(a, b));
    }
    return Graph(n_, bits);
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges)
{
    check_order(n);
    Graph::EdgeBits bits;
    for (auto [a, b] : edges) {
        if (a >= n || b >= n)
            throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(a) + "," +
                                                    std::to_string(b) + ") has an endpoint >= " +
                                                    std::to_string(n));
        if (a == b)
            throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(a));
        if (a > b)
            std::swap(a, b);
        bits.set(pair_index(a, b));
    }
    return Graph(n, bits);
}

Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges)
{
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph empty_graph(std::size_t n)
{
    return Graph(n, {});
}

Graph complete(std::size_t n)
{
    check_order(n);
    Graph::EdgeBits bits;
    for (std::size_t k = 0; k < n * (n - 1) / 2; ++k)
        bits.set(k);
    return Graph(n, bits);
}

Graph complete_bipartite(std::size_t p, std::size_t q)
{
    if (p < 1 || q < 1 || p + q > kMaxVertices)
        throw Error(Errc::NTooLarge, "K_{" + std::to_string(p) + "," + std::to_string(q) +
                                         "} needs 1 <= p, q and p + q <= 64");
    Graph::EdgeBits bits;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = p; j < p + q; ++j)
            bits.set(pair_index(i, j));
    return Graph(p + q, bits);
}

Graph cycle(std::size_t n)
{
    if (n < 3)
        throw Error(Errc::CycleTooShort, "cycle needs at least 3 vertices");
    check_order(n);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, e);
}

Graph path(std::size_t n)
{
    check_order(n);
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return from_edge_list(n, e);
}

Graph star(std::size_t leaves)
{
    return complete_bipartite(1, leaves);
}

Graph petersen()
{
    // Outer 5-cycle, inner pentagram, spokes.
    std::vector<Edge> e;
    for (std::size_t i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, 5 + i);
    }
    return from_edge_list(10, e);
}

std::vector<std::size_t> degree_sequence(const Graph& g)
{
    std::vector<std::size_t> d(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
        d[v] = g.degree(v);
    return d;
}

bool is_regular(const Graph& g)
{
    const auto d = degree_sequence(g);
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

bool is_connected(const Graph& g)
{
    const std::size_t n = g.order();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1)
            next |= g.neighbours(static_cast<std::size_t>(std::countr_zero(f)));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

std::size_t triangle_count(const Graph& g)
{
    std::size_t count = 0;
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) {
                // Third vertex above j keeps each triangle counted once.
                const std::uint64_t common = g.neighbours(i) & g.neighbours(j);
                count += static_cast<std::size_t>(std::popcount(j + 1 >= 64 ? 0 : common >> (j + 1)));
            }
    return count;
}

bool is_triangle_free(const Graph& g)
{
    return triangle_count(g) == 0;
}

bool is_bipartite(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        queue.assign(1, s);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const auto v = queue[h];
            for (std::uint64_t nb = g.neighbours(v); nb; nb &= nb - 1) {
                const auto w = static_cast<std::size_t>(std::countr_zero(nb));
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_complete_bipartite(const Graph& g)
{
    const std::size_t n = g.order();
    if (n < 2 || g.edge_count() == 0 || !is_connected(g))
        return false;
    // Connected and bipartite with parts fully joined: every vertex sees the
    // whole opposite part, so m = p * q.
    if (!is_bipartite(g))
        return false;
    std::uint64_t part = 1;
    for (std::uint64_t frontier = 1; frontier;) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(f));
            for (std::uint64_t nb = g.neighbours(v); nb; nb &= nb - 1)
                next |= g.neighbours(static_cast<std::size_t>(std::countr_zero(nb)));
        }
        frontier = next & ~part;
        part |= next;
    }
    const auto p = static_cast<std::size_t>(std::popcount(part));
    return g.edge_count() == p * (n - p);
}

}  // namespace geb

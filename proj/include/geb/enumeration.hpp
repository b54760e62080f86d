#pragma once

#include "geb/graph.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace geb {

inline constexpr std::size_t kMaxCanonicalOrder = 10;
inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// Isomorphism-class key: the lexicographically smallest upper-triangle
/// bitstring (graph6 pair order, first pair most significant) over every
/// labelling that lists vertices by ascending degree.
struct CanonicalForm {
    std::uint8_t n = 0;
    std::uint64_t bits = 0;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

    Graph to_graph() const;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const noexcept
    {
        return std::hash<std::uint64_t>{}(c.bits * 0x9E3779B97F4A7C15ULL ^ c.n);
    }
};

CanonicalForm canonical_form(const Graph& g);

/// One representative per isomorphism class on n vertices, ascending by
/// canonical form.  The 2^C(n,2) mask range is split over `jobs` workers;
/// the result does not depend on the worker count.
std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only, unsigned jobs = 0);

inline std::vector<Graph> enumerate_connected(std::size_t n, unsigned jobs = 0)
{
    return enumerate_graphs(n, true, jobs);
}

}  // namespace geb

#pragma once

#include "geb/graph.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

namespace geb {

// graph6 with the one-byte size field only (n <= 62).
inline constexpr std::size_t kMaxGraph6Order = 62;

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

struct CorpusEntry {
    std::size_t line;
    Graph graph;
};

/// Single-pass reader over a graph6 file, one graph per non-empty line.
///
/// next() returns std::nullopt at end of input and throws LineError for a
/// line that does not decode; the stream stays usable after a throw so the
/// caller may skip the bad line and continue.  A ">>graph6<<" header is
/// accepted on the first line only.
class CorpusStream {
public:
    explicit CorpusStream(std::istream& in) : in_(&in) {}

    std::optional<CorpusEntry> next();

    std::size_t count_so_far() const noexcept { return count_; }
    std::size_t lines_read() const noexcept { return line_; }

private:
    std::istream* in_;
    std::size_t line_ = 0;
    std::size_t count_ = 0;
};

}  // namespace geb

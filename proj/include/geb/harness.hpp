#pragma once

#include "geb/bounds.hpp"
#include "geb/graph.hpp"

#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace geb {

struct Violation {
    std::string graph6;
    std::string check;      // bound name, or a relational check such as "dominance:main>=cor_nice"
    double bound_value = 0.0;
    double energy = 0.0;
    std::vector<double> spectrum;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct EqualityHit {
    std::string graph6;
    std::string bound;
    double slack = 0.0;
    bool complete_bipartite = false;

    friend bool operator==(const EqualityHit&, const EqualityHit&) = default;
};

struct Extreme {
    std::string graph6;
    double slack = 0.0;

    friend bool operator==(const Extreme&, const Extreme&) = default;
};

struct DecodeFailure {
    std::size_t line = 0;
    std::string message;

    friend bool operator==(const DecodeFailure&, const DecodeFailure&) = default;
};

/// Aggregate over a graph stream.  Merging is commutative once finalize()
/// has sorted the lists, so the result does not depend on scheduling.
struct CorpusSummary {
    std::size_t graphs_seen = 0;
    std::size_t graphs_checked = 0;
    std::size_t graphs_skipped = 0;
    std::vector<Violation> violations;
    std::vector<EqualityHit> equality_hits;
    std::map<std::string, Extreme> extremes;   // bound name -> smallest slack
    std::vector<DecodeFailure> decode_failures;

    void merge(CorpusSummary&& other);
    void finalize();

    friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

struct HarnessOptions {
    double tol = kBoundTol;
    double zero_tol = kDefaultZeroTol;
    double eps = 1e-7;
    bool skip_bad = false;
    unsigned jobs = 1;
    std::set<BoundId> bounds;   // verify filter; empty = every proven bound
};

/// Where the graphs come from: the built-in connected enumeration or a
/// graph6 stream.
class GraphSource {
public:
    static GraphSource enumerate(std::size_t n) { return GraphSource(n, nullptr); }
    static GraphSource graph6(std::istream& in) { return GraphSource(0, &in); }

    std::optional<std::size_t> enumerate_order() const
    {
        return in_ ? std::nullopt : std::optional<std::size_t>(n_);
    }
    std::istream* stream() const noexcept { return in_; }

private:
    GraphSource(std::size_t n, std::istream* in) : n_(n), in_(in) {}
    std::size_t n_;
    std::istream* in_;
};

/// Every proven bound, the dominance relations between them and the
/// spectral identities, on every graph.
CorpusSummary run_verify(const GraphSource& source, const HarnessOptions& opt);

/// E >= n / epsilon and E <= 2m / sqrt(lambda1) on every connected graph;
/// disconnected graphs count as skipped.
CorpusSummary run_conjectures(const GraphSource& source, const HarnessOptions& opt);

/// Graphs with |E - bound| <= eps.
CorpusSummary run_equality(const GraphSource& source, BoundId bound, const HarnessOptions& opt);

/// Bounds accepted by run_equality.
bool equality_searchable(BoundId id) noexcept;

/// Per-graph checks used by run_verify; exposed for tests.
std::vector<Violation> verify_graph(const Graph& g, const HarnessOptions& opt);

}  // namespace geb

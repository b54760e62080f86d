#include "geb/enumeration.hpp"

#include "geb/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

namespace geb {

namespace {

// Branch and bound over degree-respecting labellings.  Position p is filled
// with an unused vertex whose degree equals sorted_degree[p]; doing so fixes
// column p of the upper triangle, i.e. the next p bits of the code.
class Canonicaliser {
public:
    explicit Canonicaliser(const Graph& g) : g_(g), n_(g.order())
    {
        std::array<std::size_t, kMaxCanonicalOrder> by_degree{};
        std::iota(by_degree.begin(), by_degree.begin() + static_cast<long>(n_), 0);
        std::stable_sort(by_degree.begin(), by_degree.begin() + static_cast<long>(n_),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
        for (std::size_t p = 0; p < n_; ++p)
            slot_degree_[p] = g.degree(by_degree[p]);
        total_bits_ = n_ * (n_ - 1) / 2;
    }

    std::uint64_t run()
    {
        search(0, 0, 0);
        return best_;
    }

private:
    std::uint64_t column(std::size_t p, std::size_t v) const
    {
        std::uint64_t col = 0;
        const std::uint64_t nb = g_.neighbours(v);
        for (std::size_t q = 0; q < p; ++q)
            col = (col << 1) | ((nb >> order_[q]) & 1U);
        return col;
    }

    void search(std::size_t p, std::uint64_t code, std::uint32_t used)
    {
        if (p == n_) {
            if (!have_best_ || code < best_) {
                best_ = code;
                have_best_ = true;
            }
            return;
        }
        const std::size_t bits_after = total_bits_ - (p + 1) * p / 2;
        for (std::size_t v = 0; v < n_; ++v) {
            if ((used >> v) & 1U || g_.degree(v) != slot_degree_[p])
                continue;
            const std::uint64_t next = (code << p) | column(p, v);
            // best_ may have improved in an earlier sibling, so compare afresh.
            if (have_best_ && next > (best_ >> bits_after))
                continue;
            order_[p] = v;
            search(p + 1, next, used | (std::uint32_t{1} << v));
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t total_bits_ = 0;
    std::array<std::size_t, kMaxCanonicalOrder> slot_degree_{};
    std::array<std::size_t, kMaxCanonicalOrder> order_{};
    std::uint64_t best_ = 0;
    bool have_best_ = false;
};

}  // namespace

Graph CanonicalForm::to_graph() const
{
    const std::size_t pairs = std::size_t{n} * (n - 1) / 2;
    Graph::EdgeBits e;
    for (std::size_t k = 0; k < pairs; ++k)
        if ((bits >> (pairs - 1 - k)) & 1U)
            e.set(k);
    return Graph(n, e);
}

CanonicalForm canonical_form(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw Error(Errc::NTooLargeForCanonicalization,
                    "canonical form supports n <= 10, got " + std::to_string(g.order()));
    return CanonicalForm{static_cast<std::uint8_t>(g.order()), Canonicaliser(g).run()};
}

std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only, unsigned jobs)
{
    if (n < 1 || n > kMaxEnumerationOrder)
        throw Error(Errc::NTooLargeForEnumeration,
                    "built-in enumeration supports 1 <= n <= 7, got " + std::to_string(n));
    if (jobs == 0)
        jobs = std::max(1U, std::thread::hardware_concurrency());

    const std::size_t pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));

    using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;
    std::vector<FormSet> shards(jobs);
    auto work = [&](unsigned shard) {
        const std::uint64_t lo = total * shard / jobs;
        const std::uint64_t hi = total * (shard + 1) / jobs;
        auto& seen = shards[shard];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            const Graph g = Graph::from_mask(n, mask);
            if (connected_only && !is_connected(g))
                continue;
            seen.insert(canonical_form(g));
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned s = 0; s < jobs; ++s)
            pool.emplace_back(work, s);
    }

    FormSet merged = std::move(shards[0]);
    for (std::size_t s = 1; s < shards.size(); ++s)
        merged.insert(shards[s].begin(), shards[s].end());
    std::vector<CanonicalForm> forms(merged.begin(), merged.end());
    std::sort(forms.begin(), forms.end());

    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const auto& f : forms)
        out.push_back(f.to_graph());
    return out;
}

}  // namespace geb

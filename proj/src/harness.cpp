#include "geb/harness.hpp"

#include "geb/enumeration.hpp"
#include "geb/error.hpp"
#include "geb/graph6.hpp"
#include "geb/gruss.hpp"
#include "geb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <tuple>

namespace geb {

namespace {

constexpr std::size_t kBatch = 512;

struct Item {
    Graph graph;
    std::string graph6;
};

using PerGraph = std::function<void(const Item&, CorpusSummary&)>;

void note_extreme(CorpusSummary& s, std::string_view bound, const std::string& g6, double slack)
{
    auto [it, inserted] = s.extremes.try_emplace(std::string(bound), Extreme{g6, slack});
    if (inserted)
        return;
    auto& e = it->second;
    if (slack < e.slack || (slack == e.slack && g6 < e.graph6))
        e = Extreme{g6, slack};
}

void run_batch(const std::vector<Item>& batch, unsigned jobs, const PerGraph& fn,
               CorpusSummary& total)
{
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(batch.size())));
    std::vector<CorpusSummary> local(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    auto work = [&](unsigned w) {
        try {
            for (std::size_t i = w; i < batch.size(); i += jobs)
                fn(batch[i], local[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back(work, w);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    for (auto& l : local)
        total.merge(std::move(l));
}

CorpusSummary drive(const GraphSource& source, const HarnessOptions& opt, const PerGraph& fn)
{
    CorpusSummary total;
    std::vector<Item> batch;
    batch.reserve(kBatch);
    auto flush = [&] {
        if (batch.empty())
            return;
        total.graphs_seen += batch.size();
        run_batch(batch, opt.jobs, fn, total);
        batch.clear();
    };

    if (auto n = source.enumerate_order()) {
        for (auto& g : enumerate_connected(*n, opt.jobs)) {
            auto g6 = write_graph6(g);
            batch.push_back(Item{std::move(g), std::move(g6)});
            if (batch.size() == kBatch)
                flush();
        }
    } else {
        CorpusStream stream(*source.stream());
        for (;;) {
            std::optional<CorpusEntry> entry;
            try {
                entry = stream.next();
            } catch (const LineError& e) {
                if (!opt.skip_bad)
                    throw;
                total.decode_failures.push_back({e.line(), e.what()});
                ++total.graphs_skipped;
                continue;
            }
            if (!entry)
                break;
            auto g6 = write_graph6(entry->graph);
            batch.push_back(Item{std::move(entry->graph), std::move(g6)});
            if (batch.size() == kBatch)
                flush();
        }
    }
    flush();
    total.finalize();
    return total;
}

Violation make_violation(const std::string& g6, std::string check, double value,
                         const BoundReport& r)
{
    return Violation{g6, std::move(check), value, r.energy, r.spectrum.values};
}

std::vector<Violation> check_graph(const Graph& g, const std::string& g6, const BoundReport& r,
                                   const HarnessOptions& opt)
{
    std::vector<Violation> out;
    const double tol = opt.tol;
    auto fail = [&](std::string check, double value) {
        out.push_back(make_violation(g6, std::move(check), value, r));
    };

    for (auto id : kAllBounds) {
        if (is_conjectural(id) || (!opt.bounds.empty() && !opt.bounds.contains(id)))
            continue;
        const auto s = r.slack(id);
        if (s && *s < -tol)
            fail(std::string(bound_name(id)), *r.bound(id));
    }

    // Spectral identities against exact combinatorial counts.
    const auto m = static_cast<double>(r.m);
    const double trace = r.spectrum.power_sum(1);
    if (std::abs(trace) > 1e-8)
        fail("spectral:trace", trace);
    const double p2 = r.spectrum.power_sum(2);
    if (std::abs(p2 - 2.0 * m) > 1e-7)
        fail("spectral:sum_squares=2m", p2);
    const double p3 = r.spectrum.power_sum(3);
    if (std::abs(p3 - 6.0 * static_cast<double>(triangle_count(g))) > 1e-6)
        fail("spectral:sum_cubes=6triangles", p3);
    const double det = r.det_exact.convert_to<double>();
    if (std::abs(r.stats.det - det) > 1e-6 * std::max(1.0, std::abs(det)))
        fail("spectral:eigenproduct=det", r.stats.det);
    if (r.stats.rank != rank_exact(g))
        fail("spectral:rank=exact_rank", static_cast<double>(r.stats.rank));
    if (r.is_connected && r.n > 1 && !(r.spectrum.values[0] - r.spectrum.values[1] > tol))
        fail("spectral:simple_perron_root", r.spectrum.values[0] - r.spectrum.values[1]);

    if (r.m == 0)
        return out;

    const double main = *r.bound(BoundId::Main);
    const double nice = *r.bound(BoundId::CorNice);
    if (auto rank = r.bound(BoundId::RankBound); rank && *rank < main - tol)
        fail("dominance:rank_bound>=main", *rank - main);
    if (main < nice - tol)
        fail("dominance:main>=cor_nice", main - nice);
    if (const double amgm = *r.bound(BoundId::Amgm); amgm > main + tol)
        fail("dominance:amgm<=main", main - amgm);
    if (r.is_triangle_free) {
        const double cap = *r.bound(BoundId::Caporossi);
        if (nice < cap - tol)
            fail("dominance:cor_nice>=caporossi", nice - cap);
    }
    if (r.is_connected && r.is_regular && std::abs(nice - static_cast<double>(r.n)) > tol)
        fail("dominance:regular_cor_nice=n", nice);
    if (r.is_connected) {
        const auto& irr = *r.irregularity;
        if (irr.beta < irr.epsilon - tol)
            fail("irregularity:beta>=epsilon", irr.beta - irr.epsilon);
        if (irr.epsilon < 1.0 - tol)
            fail("irregularity:epsilon>=1", irr.epsilon);
    }

    for (bool restricted : {false, true}) {
        const auto chain = energy_chain(r.spectrum, r.stats, restricted);
        const std::string mode = restricted ? "restricted" : "full";
        if (std::abs(chain.p - (r.energy * r.energy - 2.0 * m)) > 1e-6)
            fail("chain:" + mode + ":P=E^2-2m", chain.p);
        if (!chain.holds(tol))
            fail("chain:" + mode + ":P>=P_lower", chain.p - chain.p_lower);
    }
    return out;
}

}  // namespace

void CorpusSummary::merge(CorpusSummary&& other)
{
    graphs_seen += other.graphs_seen;
    graphs_checked += other.graphs_checked;
    graphs_skipped += other.graphs_skipped;
    std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
    std::move(other.equality_hits.begin(), other.equality_hits.end(),
              std::back_inserter(equality_hits));
    std::move(other.decode_failures.begin(), other.decode_failures.end(),
              std::back_inserter(decode_failures));
    for (auto& [name, e] : other.extremes)
        note_extreme(*this, name, e.graph6, e.slack);
}

void CorpusSummary::finalize()
{
    std::sort(violations.begin(), violations.end(), [](const auto& a, const auto& b) {
        return std::tie(a.graph6, a.check) < std::tie(b.graph6, b.check);
    });
    std::sort(equality_hits.begin(), equality_hits.end(), [](const auto& a, const auto& b) {
        return std::tie(a.graph6, a.bound) < std::tie(b.graph6, b.bound);
    });
    std::sort(decode_failures.begin(), decode_failures.end(),
              [](const auto& a, const auto& b) { return a.line < b.line; });
}

std::vector<Violation> verify_graph(const Graph& g, const HarnessOptions& opt)
{
    const auto r = bound_report(g, opt.zero_tol);
    return check_graph(g, write_graph6(g), r, opt);
}

CorpusSummary run_verify(const GraphSource& source, const HarnessOptions& opt)
{
    return drive(source, opt, [&opt](const Item& item, CorpusSummary& s) {
        const auto r = bound_report(item.graph, opt.zero_tol);
        auto v = check_graph(item.graph, item.graph6, r, opt);
        std::move(v.begin(), v.end(), std::back_inserter(s.violations));
        for (auto id : kAllBounds) {
            if (is_conjectural(id) || (!opt.bounds.empty() && !opt.bounds.contains(id)))
                continue;
            if (auto sl = r.slack(id))
                note_extreme(s, bound_name(id), item.graph6, *sl);
        }
        ++s.graphs_checked;
    });
}

CorpusSummary run_conjectures(const GraphSource& source, const HarnessOptions& opt)
{
    return drive(source, opt, [&opt](const Item& item, CorpusSummary& s) {
        // Both statements need a connected graph with lambda1 > 0, which
        // also rules out the single vertex.
        if (item.graph.edge_count() == 0 || !is_connected(item.graph)) {
            ++s.graphs_skipped;
            return;
        }
        const auto r = bound_report(item.graph, opt.zero_tol);
        for (auto id : {BoundId::Conj1, BoundId::Conj2}) {
            const double sl = *r.slack(id);
            note_extreme(s, bound_name(id), item.graph6, sl);
            if (sl < -opt.tol)
                s.violations.push_back(make_violation(item.graph6, std::string(bound_name(id)),
                                                      *r.bound(id), r));
        }
        ++s.graphs_checked;
    });
}

bool equality_searchable(BoundId id) noexcept
{
    switch (id) {
    case BoundId::CorNice:
    case BoundId::Main:
    case BoundId::RankBound:
    case BoundId::Caporossi:
    case BoundId::McClellandLower:
        return true;
    default:
        return false;
    }
}

CorpusSummary run_equality(const GraphSource& source, BoundId bound, const HarnessOptions& opt)
{
    if (!equality_searchable(bound))
        throw std::invalid_argument("equality search does not support bound " +
                                    std::string(bound_name(bound)));
    return drive(source, opt, [&opt, bound](const Item& item, CorpusSummary& s) {
        const auto r = bound_report(item.graph, opt.zero_tol);
        ++s.graphs_checked;
        const auto sl = r.slack(bound);
        if (!sl)
            return;
        note_extreme(s, bound_name(bound), item.graph6, *sl);
        if (std::abs(*sl) <= opt.eps)
            s.equality_hits.push_back(EqualityHit{item.graph6, std::string(bound_name(bound)), *sl,
                                                  is_complete_bipartite(item.graph)});
    });
}

}  // namespace geb

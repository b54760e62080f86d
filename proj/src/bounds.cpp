#include "geb/bounds.hpp"

#include "geb/error.hpp"

#include <cmath>

namespace geb {

namespace {

void require_edges(double lambda1)
{
    if (!(lambda1 > 0.0))
        throw Error(Errc::EmptyGraph, "bound needs lambda1 > 0 (at least one edge)");
}

constexpr std::array<std::string_view, kBoundCount> kNames{
    "mcclelland_lower", "caporossi", "main", "cor_nice", "amgm",
    "rank_bound", "mcclelland_upper", "conj1", "conj2",
};

}  // namespace

double mcclelland_lower(std::size_t n, std::size_t m, double det_abs)
{
    const auto nd = static_cast<double>(n);
    const double det_term = det_abs > 0.0 ? std::exp((2.0 / nd) * std::log(det_abs)) : 0.0;
    return std::sqrt(2.0 * static_cast<double>(m) + nd * (nd - 1.0) * det_term);
}

double mcclelland_upper(std::size_t n, std::size_t m)
{
    return std::sqrt(2.0 * static_cast<double>(m) * static_cast<double>(n));
}

double caporossi_lower(std::size_t m)
{
    return 2.0 * std::sqrt(static_cast<double>(m));
}

double main_lower(std::size_t n, std::size_t m, double lambda1, double t)
{
    require_edges(lambda1);
    return (2.0 * static_cast<double>(m) + static_cast<double>(n) * lambda1 * t) / (lambda1 + t);
}

double cor_nice_lower(std::size_t m, double lambda1)
{
    require_edges(lambda1);
    return 2.0 * static_cast<double>(m) / lambda1;
}

double amgm_lower(std::size_t n, std::size_t m, double lambda1, double t)
{
    require_edges(lambda1);
    const double s = lambda1 + t;
    return std::sqrt(2.0 * static_cast<double>(m) * static_cast<double>(n)) *
           std::sqrt(4.0 * lambda1 * t / (s * s));
}

double rank_lower(std::size_t m, std::size_t r, double lambda1, double t_nz)
{
    require_edges(lambda1);
    return (2.0 * static_cast<double>(m) + static_cast<double>(r) * lambda1 * t_nz) /
           (lambda1 + t_nz);
}

Irregularity irregularity(const Graph& g, const SpectralStats& stats)
{
    const std::size_t m = g.edge_count();
    if (m == 0)
        throw Error(Errc::EmptyGraph, "irregularity needs at least one edge");
    double sum = 0.0;
    for (auto [i, j] : g.edges())
        sum += std::sqrt(static_cast<double>(g.degree(i) * g.degree(j)));
    const auto n = static_cast<double>(g.order());
    const auto md = static_cast<double>(m);
    return {n * sum / (2.0 * md * md), stats.lambda1 * n / (2.0 * md)};
}

double conj1_lower(std::size_t n, double epsilon)
{
    if (!(epsilon > 0.0))
        throw Error(Errc::EmptyGraph, "conjecture 1 needs epsilon > 0");
    return static_cast<double>(n) / epsilon;
}

double conj2_upper(std::size_t m, double lambda1)
{
    require_edges(lambda1);
    return 2.0 * static_cast<double>(m) / std::sqrt(lambda1);
}

std::string_view bound_name(BoundId id) noexcept
{
    return kNames[static_cast<std::size_t>(id)];
}

std::optional<BoundId> bound_from_name(std::string_view name) noexcept
{
    for (auto id : kAllBounds)
        if (bound_name(id) == name)
            return id;
    return std::nullopt;
}

bool is_upper(BoundId id) noexcept
{
    return id == BoundId::McClellandUpper || id == BoundId::Conj2;
}

bool is_conjectural(BoundId id) noexcept
{
    return id == BoundId::Conj1 || id == BoundId::Conj2;
}

std::optional<double> BoundReport::slack(BoundId id) const
{
    const auto b = bound(id);
    if (!b)
        return std::nullopt;
    return is_upper(id) ? *b - energy : energy - *b;
}

BoundReport bound_report(const Graph& g, double zero_tol)
{
    BoundReport r;
    r.n = g.order();
    r.m = g.edge_count();
    r.spectrum = eigenvalues(g);
    r.stats = spectral_stats(r.spectrum, zero_tol);
    r.det_exact = determinant_exact(g);
    r.energy = r.spectrum.energy;
    r.is_connected = is_connected(g);
    r.is_regular = is_regular(g);
    r.is_triangle_free = is_triangle_free(g);

    auto set = [&r](BoundId id, double v) { r.bounds[static_cast<std::size_t>(id)] = v; };

    // |det| of a 0/1 matrix with n <= 64 is far inside double range.
    const double det_abs = std::abs(r.det_exact.convert_to<double>());
    set(BoundId::McClellandLower, mcclelland_lower(r.n, r.m, det_abs));
    set(BoundId::McClellandUpper, mcclelland_upper(r.n, r.m));
    set(BoundId::Caporossi, caporossi_lower(r.m));

    if (r.m > 0) {
        const auto& st = r.stats;
        set(BoundId::Main, main_lower(r.n, r.m, st.lambda1, st.t));
        set(BoundId::CorNice, cor_nice_lower(r.m, st.lambda1));
        set(BoundId::Amgm, amgm_lower(r.n, r.m, st.lambda1, st.t));
        if (st.t_nz)
            set(BoundId::RankBound, rank_lower(r.m, st.rank, st.lambda1, *st.t_nz));
        r.irregularity = irregularity(g, st);
        if (r.is_connected) {
            set(BoundId::Conj1, conj1_lower(r.n, r.irregularity->epsilon));
            set(BoundId::Conj2, conj2_upper(r.m, st.lambda1));
        }
    }

    for (auto id : kAllBounds) {
        const auto s = r.slack(id);
        if (!s || *s >= -kBoundTol)
            continue;
        (is_conjectural(id) ? r.conjectures_hold : r.proven_bounds_hold) = false;
    }
    return r;
}

}  // namespace geb

#pragma once

#include "geb/graph.hpp"
#include "geb/spectral.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace geb {

// Energy bounds.  Everything with lambda1 in a denominator throws EmptyGraph
// when lambda1 <= 0 (no edges).

double mcclelland_lower(std::size_t n, std::size_t m, double det_abs);
double mcclelland_upper(std::size_t n, std::size_t m);
double caporossi_lower(std::size_t m);
double main_lower(std::size_t n, std::size_t m, double lambda1, double t);
double cor_nice_lower(std::size_t m, double lambda1);
double amgm_lower(std::size_t n, std::size_t m, double lambda1, double t);
double rank_lower(std::size_t m, std::size_t r, double lambda1, double t_nz);

struct Irregularity {
    double epsilon = 1.0;  // n sum_{ij in E} sqrt(d_i d_j) / (2 m^2)
    double beta = 1.0;     // lambda1 n / (2 m)
};

Irregularity irregularity(const Graph& g, const SpectralStats& stats);

// Conjectured bounds for connected graphs.  Callers gate on connectivity.
double conj1_lower(std::size_t n, double epsilon);
double conj2_upper(std::size_t m, double lambda1);

enum class BoundId : std::size_t {
    McClellandLower,
    Caporossi,
    Main,
    CorNice,
    Amgm,
    RankBound,
    McClellandUpper,
    Conj1,
    Conj2,
};

inline constexpr std::size_t kBoundCount = 9;
inline constexpr std::array<BoundId, kBoundCount> kAllBounds{
    BoundId::McClellandLower, BoundId::Caporossi, BoundId::Main,
    BoundId::CorNice,         BoundId::Amgm,      BoundId::RankBound,
    BoundId::McClellandUpper, BoundId::Conj1,     BoundId::Conj2,
};

std::string_view bound_name(BoundId id) noexcept;
std::optional<BoundId> bound_from_name(std::string_view name) noexcept;
bool is_upper(BoundId id) noexcept;
bool is_conjectural(BoundId id) noexcept;

/// Every bound evaluated on one graph.
///
/// A bound is absent when it is undefined for the graph: the lambda1-based
/// bounds need an edge, and the conjectural ones need a connected graph.
struct BoundReport {
    std::size_t n = 0;
    std::size_t m = 0;
    Spectrum spectrum;
    SpectralStats stats;
    BigInt det_exact = 0;
    double energy = 0.0;

    std::array<std::optional<double>, kBoundCount> bounds{};
    std::optional<Irregularity> irregularity;

    bool is_connected = false;
    bool is_regular = false;
    bool is_triangle_free = false;
    bool proven_bounds_hold = true;   // at 1e-9
    bool conjectures_hold = true;     // vacuous when absent

    std::optional<double> bound(BoundId id) const { return bounds[static_cast<std::size_t>(id)]; }

    /// E - bound for lower bounds, bound - E for upper bounds.  Negative
    /// means the bound is violated.
    std::optional<double> slack(BoundId id) const;
};

inline constexpr double kBoundTol = 1e-9;

BoundReport bound_report(const Graph& g, double zero_tol = kDefaultZeroTol);

}  // namespace geb

#pragma once

#include "geb/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace geb {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kDefaultZeroTol = 1e-8;

/// Adjacency eigenvalues sorted descending, with energy = sum of |lambda|.
struct Spectrum {
    std::vector<double> values;
    double energy = 0.0;

    std::size_t size() const noexcept { return values.size(); }
    /// Sum of lambda^k.
    double power_sum(int k) const;
};

struct SpectralStats {
    double lambda1 = 0.0;
    double t = 0.0;                 // min |lambda|
    std::optional<double> t_nz;     // min |lambda| over |lambda| > zero_tol
    std::size_t rank = 0;           // #{|lambda| > zero_tol}
    double det = 0.0;               // product of eigenvalues
    bool is_singular = false;
    double zero_tol = kDefaultZeroTol;
};

/// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
/// Jacobi rotations.  Stops once the off-diagonal Frobenius norm drops
/// below 1e-12 * n; throws ConvergenceFailure after 100 sweeps.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

Spectrum eigenvalues(const Graph& g);

SpectralStats spectral_stats(const Spectrum& spec, double zero_tol = kDefaultZeroTol);

/// Determinant of the 0/1 adjacency matrix by Bareiss fraction-free
/// elimination.  Exact for every n <= 64.
BigInt determinant_exact(const Graph& g);

/// Rank of the adjacency matrix over the rationals, same elimination.
std::size_t rank_exact(const Graph& g);

}  // namespace geb

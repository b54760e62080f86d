#pragma once

#include "geb/spectral.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace geb {

/// A vector of R^n together with entrywise bounds lower <= x_i <= upper.
///
/// R^n carries the normalised inner product <x, y> = (1/n) sum x_i y_i, so
/// mean() is <x, e> for the unit vector e = (1, ..., 1).
class BoundedVector {
public:
    /// Throws EmptyVector for no entries and BoundsViolated when an entry
    /// falls outside [lower, upper] by more than `slack`.
    BoundedVector(std::vector<double> entries, double lower, double upper, double slack = 1e-12);

    /// Bounds taken as the entrywise min and max.
    static BoundedVector tight(std::vector<double> entries);

    std::span<const double> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    double mean() const noexcept { return mean_; }

private:
    std::vector<double> entries_;
    double lower_;
    double upper_;
    double mean_;
};

/// T(x, y) = (1/n) sum x_i y_i - A(x) A(y).
double chebyshev_functional(const BoundedVector& x, const BoundedVector& y);

/// (1/4) (X - x)(Y - y) over the two ranges.
double gruss_bound(const BoundedVector& x, const BoundedVector& y);

/// sqrt((Phi - A(x))(A(x) - phi)(Gamma - A(y))(A(y) - gamma)).
///
/// Factors in [-1e-12, 0) are rounding noise from the means and are clamped
/// to zero; anything lower raises NegativeFactor.
double dragomir_bound(const BoundedVector& x, const BoundedVector& y);

/// The energy identity chain for one graph.
///
/// With x_i = |lambda_i| and y_i = E - |lambda_i|, P = sum x_i y_i equals
/// sum over i != j of |lambda_i||lambda_j|, which is E^2 - 2m.  The discrete
/// Dragomir bound on these vectors gives P >= p_lower.  In restricted mode
/// the zero eigenvalues are dropped, so n becomes the rank and t becomes
/// the smallest nonzero |lambda|.
struct EnergyChain {
    bool restricted = false;
    std::size_t length = 0;     // n, or rank when restricted
    double energy = 0.0;
    double lambda1 = 0.0;
    double t = 0.0;             // t, or t_nz when restricted
    double mean_x = 0.0;        // A(x), which is E / length
    double mean_y = 0.0;        // A(y), which is (length - 1) E / length
    double p = 0.0;
    double chebyshev = 0.0;     // T(x, y)
    double gruss_rhs = 0.0;     // dragomir_bound(x, y)
    double closed_form_rhs = 0.0;  // (lambda1 - E/len)(E/len - t)
    double p_lower = 0.0;       // E^2 + len lambda1 t - (lambda1 + t) E

    bool holds(double tol = 1e-9) const noexcept { return p >= p_lower - tol; }
};

/// Throws EmptyGraph when the spectrum is all zero and ZeroRank when the
/// restricted mode has nothing left.
EnergyChain energy_chain(const Spectrum& spec, const SpectralStats& stats, bool restrict_to_nonzero);

}  // namespace geb

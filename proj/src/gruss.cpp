#include "geb/gruss.hpp"

#include "geb/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace geb {

namespace {

constexpr double kFactorSlack = 1e-12;

void check_pair(const BoundedVector& x, const BoundedVector& y)
{
    if (x.size() != y.size())
        throw Error(Errc::LengthMismatch, "vectors of length " + std::to_string(x.size()) +
                                              " and " + std::to_string(y.size()));
}

double nonnegative(double f)
{
    if (f >= 0.0)
        return f;
    if (f >= -kFactorSlack)
        return 0.0;
    throw Error(Errc::NegativeFactor, "mean lies outside its bounds (factor " +
                                          std::to_string(f) + ")");
}

}  // namespace

BoundedVector::BoundedVector(std::vector<double> entries, double lower, double upper, double slack)
    : entries_(std::move(entries)), lower_(lower), upper_(upper)
{
    if (entries_.empty())
        throw Error(Errc::EmptyVector, "bounded vector needs at least one entry");
    for (double v : entries_)
        if (v < lower_ - slack || v > upper_ + slack)
            throw Error(Errc::BoundsViolated, "entry " + std::to_string(v) + " outside [" +
                                                  std::to_string(lower_) + ", " +
                                                  std::to_string(upper_) + "]");
    mean_ = std::accumulate(entries_.begin(), entries_.end(), 0.0) /
            static_cast<double>(entries_.size());
}

BoundedVector BoundedVector::tight(std::vector<double> entries)
{
    if (entries.empty())
        throw Error(Errc::EmptyVector, "bounded vector needs at least one entry");
    const auto [lo, hi] = std::minmax_element(entries.begin(), entries.end());
    const double l = *lo;
    const double h = *hi;
    return BoundedVector(std::move(entries), l, h);
}

double chebyshev_functional(const BoundedVector& x, const BoundedVector& y)
{
    check_pair(x, y);
    const auto xs = x.entries();
    const auto ys = y.entries();
    const double dot = std::inner_product(xs.begin(), xs.end(), ys.begin(), 0.0);
    return dot / static_cast<double>(x.size()) - x.mean() * y.mean();
}

double gruss_bound(const BoundedVector& x, const BoundedVector& y)
{
    check_pair(x, y);
    return 0.25 * (x.upper() - x.lower()) * (y.upper() - y.lower());
}

double dragomir_bound(const BoundedVector& x, const BoundedVector& y)
{
    check_pair(x, y);
    const double f1 = nonnegative(x.upper() - x.mean());
    const double f2 = nonnegative(x.mean() - x.lower());
    const double f3 = nonnegative(y.upper() - y.mean());
    const double f4 = nonnegative(y.mean() - y.lower());
    return std::sqrt(f1 * f2 * f3 * f4);
}

EnergyChain energy_chain(const Spectrum& spec, const SpectralStats& stats, bool restrict_to_nonzero)
{
    if (stats.lambda1 <= 0.0)
        throw Error(Errc::EmptyGraph, "energy chain needs at least one edge");
    if (restrict_to_nonzero && (stats.rank == 0 || !stats.t_nz))
        throw Error(Errc::ZeroRank, "no nonzero eigenvalues");

    EnergyChain c;
    c.restricted = restrict_to_nonzero;
    c.energy = spec.energy;
    c.lambda1 = stats.lambda1;
    const double e = spec.energy;

    std::vector<double> xs;
    xs.reserve(spec.size());
    for (double v : spec.values)
        if (!restrict_to_nonzero || std::abs(v) > stats.zero_tol)
            xs.push_back(std::abs(v));
    c.length = xs.size();
    c.t = restrict_to_nonzero ? *stats.t_nz : stats.t;

    // lambda1 dominates every |lambda_i| exactly; in floating point the most
    // negative eigenvalue of a bipartite graph can exceed it by an ulp.
    const double top = std::max(stats.lambda1, *std::max_element(xs.begin(), xs.end()));
    std::vector<double> ys(xs.size());
    std::transform(xs.begin(), xs.end(), ys.begin(), [e](double a) { return e - a; });

    const BoundedVector x(std::move(xs), c.t, top);
    const BoundedVector y(std::move(ys), e - top, e - c.t);

    const auto len = static_cast<double>(c.length);
    const auto xe = x.entries();
    const auto ye = y.entries();
    c.p = std::inner_product(xe.begin(), xe.end(), ye.begin(), 0.0);
    c.mean_x = x.mean();
    c.mean_y = y.mean();
    c.chebyshev = chebyshev_functional(x, y);
    c.gruss_rhs = dragomir_bound(x, y);
    c.closed_form_rhs = (c.lambda1 - e / len) * (e / len - c.t);
    c.p_lower = e * e + len * c.lambda1 * c.t - (c.lambda1 + c.t) * e;
    return c;
}

}  // namespace geb

#include "geb/spectral.hpp"

#include "geb/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace geb {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

// Integer matrix reduced in place to row echelon form by Bareiss steps.
// Returns the rank; `sign` collects row-swap parity and `last_pivot` the
// final leading minor (the determinant when rank == n).
struct Echelon {
    std::size_t rank = 0;
    int sign = 1;
    BigInt last_pivot = 1;
};

Echelon bareiss(std::vector<BigInt>& m, std::size_t n)
{
    Echelon out;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && m[pivot * n + col] == 0)
            ++pivot;
        if (pivot == n)
            continue;
        if (pivot != row) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(m[row * n + k], m[pivot * n + k]);
            out.sign = -out.sign;
        }
        const BigInt p = m[row * n + col];
        for (std::size_t i = row + 1; i < n; ++i) {
            for (std::size_t k = col + 1; k < n; ++k)
                m[i * n + k] = (m[i * n + k] * p - m[i * n + col] * m[row * n + k]) / prev;
            m[i * n + col] = 0;
        }
        prev = p;
        ++row;
    }
    out.rank = row;
    out.last_pivot = prev;
    return out;
}

std::vector<BigInt> integer_adjacency(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<BigInt> m(n * n);
    for (auto [i, j] : g.edges()) {
        m[i * n + j] = 1;
        m[j * n + i] = 1;
    }
    return m;
}

}  // namespace

double Spectrum::power_sum(int k) const
{
    double s = 0.0;
    for (double v : values)
        s += std::pow(v, k);
    return s;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n)
{
    const double target = 1e-12 * static_cast<double>(n);
    int sweep = 0;
    while (off_diagonal_norm(a, n) >= target) {
        if (++sweep > kMaxSweeps)
            throw Error(Errc::ConvergenceFailure, "Jacobi did not converge in 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0)
                    continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // Rotation angle zeroing a[p][q]; the smaller root for t keeps
                // the rotation below pi/4.
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = a[i * n + i];
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

Spectrum eigenvalues(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<double> a(n * n, 0.0);
    for (auto [i, j] : g.edges()) {
        a[i * n + j] = 1.0;
        a[j * n + i] = 1.0;
    }
    Spectrum spec;
    spec.values = symmetric_eigenvalues(std::move(a), n);
    for (double v : spec.values)
        spec.energy += std::abs(v);
    return spec;
}

SpectralStats spectral_stats(const Spectrum& spec, double zero_tol)
{
    SpectralStats st;
    st.zero_tol = zero_tol;
    st.lambda1 = spec.values.empty() ? 0.0 : spec.values.front();
    st.t = std::numeric_limits<double>::infinity();
    st.det = 1.0;
    for (double v : spec.values) {
        const double a = std::abs(v);
        st.t = std::min(st.t, a);
        st.det *= v;
        if (a > zero_tol) {
            ++st.rank;
            st.t_nz = st.t_nz ? std::min(*st.t_nz, a) : a;
        }
    }
    st.is_singular = st.rank < spec.values.size();
    // Eigenvalues at or below the zero threshold are zeros that Jacobi left
    // near 1e-15; the bounds see them as exact.
    if (st.is_singular)
        st.t = 0.0;
    return st;
}

BigInt determinant_exact(const Graph& g)
{
    const std::size_t n = g.order();
    auto m = integer_adjacency(g);
    const Echelon e = bareiss(m, n);
    if (e.rank < n)
        return 0;
    return e.sign * e.last_pivot;
}

std::size_t rank_exact(const Graph& g)
{
    auto m = integer_adjacency(g);
    return bareiss(m, g.order()).rank;
}

}  // namespace geb

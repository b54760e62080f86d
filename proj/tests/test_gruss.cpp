#include "geb/enumeration.hpp"
#include "geb/error.hpp"
#include "geb/gruss.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace geb;

namespace {

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

Errc error_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::Io;
}

}  // namespace

TEST_CASE("chebyshev functional")
{
    const BoundedVector c({3, 3, 3}, 3, 3);
    CHECK(chebyshev_functional(c, c) == 0.0);

    const BoundedVector pm({1, -1}, -1, 1);
    CHECK(close(chebyshev_functional(pm, pm), 1.0));

    const BoundedVector up({0, 1, 2}, 0, 2);
    const BoundedVector down({2, 1, 0}, 0, 2);
    CHECK(close(chebyshev_functional(up, down), -2.0 / 3.0));

    CHECK(error_of([&] { chebyshev_functional(up, pm); }) == Errc::LengthMismatch);
    CHECK(error_of([] { BoundedVector({}, 0, 1); }) == Errc::EmptyVector);
    CHECK(error_of([] { BoundedVector({0.5, 2.0}, 0, 1); }) == Errc::BoundsViolated);
}

TEST_CASE("gruss and dragomir bounds")
{
    const BoundedVector pm({1, -1}, -1, 1);
    CHECK(close(gruss_bound(pm, pm), 1.0));
    CHECK(close(dragomir_bound(pm, pm), 1.0));

    const BoundedVector c({2, 2}, 2, 2);
    CHECK(gruss_bound(c, c) == 0.0);
    CHECK(dragomir_bound(c, c) == 0.0);

    const BoundedVector up({0, 1, 2}, 0, 2);
    const BoundedVector down({2, 1, 0}, 0, 2);
    CHECK(close(gruss_bound(up, down), 1.0));
    CHECK(close(dragomir_bound(up, down), 1.0));
    CHECK(std::abs(chebyshev_functional(up, down)) <= dragomir_bound(up, down));
}

TEST_CASE("dragomir clamps rounding noise but rejects real violations")
{
    // Mean a hair above the upper bound: within the 1e-12 clamp.
    const BoundedVector x({1.0 + 5e-13}, 0.0, 1.0);
    CHECK(dragomir_bound(x, x) == 0.0);
    const BoundedVector bad({1.0 + 1e-9}, 0.0, 1.0, 1e-6);
    CHECK(error_of([&] { dragomir_bound(bad, bad); }) == Errc::NegativeFactor);
}

TEST_CASE("randomised: |T| <= dragomir <= gruss")
{
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::size_t> len(1, 50);
    std::uniform_real_distribution<double> entry(-10.0, 10.0);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = len(rng);
        std::vector<double> xs(n), ys(n);
        for (auto& v : xs)
            v = entry(rng);
        for (auto& v : ys)
            v = entry(rng);
        const auto x = BoundedVector::tight(xs);
        const auto y = BoundedVector::tight(ys);
        const double t = std::abs(chebyshev_functional(x, y));
        const double d = dragomir_bound(x, y);
        const double g = gruss_bound(x, y);
        REQUIRE(t <= d + 1e-12);
        REQUIRE(d <= g + 1e-12);
    }
}

TEST_CASE("energy chain fixtures")
{
    SUBCASE("K2")
    {
        const auto s = eigenvalues(complete(2));
        const auto c = energy_chain(s, spectral_stats(s), false);
        CHECK(close(c.p, 2.0, 1e-12));
        CHECK(close(c.p_lower, 2.0, 1e-12));
        CHECK(c.holds());
    }
    SUBCASE("K4")
    {
        const auto s = eigenvalues(complete(4));
        const auto c = energy_chain(s, spectral_stats(s), false);
        CHECK(close(c.p, 24.0, 1e-9));
        CHECK(close(c.p_lower, 24.0, 1e-9));
        CHECK(close(c.gruss_rhs, c.closed_form_rhs, 1e-9));
    }
    SUBCASE("P3 restricted")
    {
        const auto s = eigenvalues(path(3));
        const auto st = spectral_stats(s);
        const auto c = energy_chain(s, st, true);
        CHECK(c.length == 2);
        CHECK(close(c.t, std::sqrt(2.0), 1e-12));
        CHECK(close(c.p, 4.0, 1e-9));
        CHECK(close(c.p_lower, 4.0, 1e-9));
        const auto full = energy_chain(s, st, false);
        CHECK(full.length == 3);
        CHECK(full.t == 0.0);
        CHECK(full.p_lower <= c.p_lower + 1e-12);
    }
    SUBCASE("edgeless graphs are refused")
    {
        const auto s = eigenvalues(empty_graph(3));
        CHECK(error_of([&] { energy_chain(s, spectral_stats(s), false); }) == Errc::EmptyGraph);
        CHECK(error_of([&] { energy_chain(s, spectral_stats(s), true); }) == Errc::EmptyGraph);
    }
    SUBCASE("restricted mode without nonzero eigenvalues")
    {
        auto s = eigenvalues(complete(2));
        auto st = spectral_stats(s, 10.0);  // every eigenvalue counts as zero
        CHECK(error_of([&] { energy_chain(s, st, true); }) == Errc::ZeroRank);
    }
}

TEST_CASE("energy chain identities over every connected graph up to 6 vertices")
{
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const auto& g : enumerate_connected(n)) {
            const auto s = eigenvalues(g);
            const auto st = spectral_stats(s);
            const double m = static_cast<double>(g.edge_count());
            for (bool restricted : {false, true}) {
                const auto c = energy_chain(s, st, restricted);
                CHECK(std::abs(c.p - (s.energy * s.energy - 2.0 * m)) <= 1e-6);
                CHECK(c.p >= c.p_lower - 1e-9);
                CHECK(std::abs(c.chebyshev) <= c.gruss_rhs + 1e-9);
                CHECK(std::abs(c.gruss_rhs - c.closed_form_rhs) <= 1e-9);
                // |T| <= rhs is the same statement as P >= p_lower.
                const double len = static_cast<double>(c.length);
                CHECK(std::abs(len * (c.mean_x * c.mean_y - c.closed_form_rhs) - c.p_lower) <= 1e-9);
            }
            const auto full = energy_chain(s, st, false);
            CHECK(full.mean_x == s.energy / static_cast<double>(n));
            CHECK(std::abs(full.mean_y - static_cast<double>(n - 1) * s.energy / static_cast<double>(n)) <= 1e-12);
        }
    }
}

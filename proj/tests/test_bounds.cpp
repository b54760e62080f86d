#include "geb/bounds.hpp"
#include "geb/enumeration.hpp"
#include "geb/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace geb;

namespace {

bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt6 = std::sqrt(6.0);

}  // namespace

TEST_CASE("mcclelland bounds")
{
    CHECK(close(mcclelland_lower(2, 1, 1.0), 2.0));
    CHECK(close(mcclelland_upper(2, 1), 2.0));
    CHECK(close(mcclelland_lower(3, 2, 0.0), 2.0));
    CHECK(close(mcclelland_upper(3, 2), std::sqrt(12.0)));
    CHECK(close(mcclelland_lower(4, 6, 3.0), std::sqrt(12.0 + 12.0 * std::sqrt(3.0))));
    CHECK(close(mcclelland_lower(4, 6, 3.0), 5.7258, 1e-4));
    CHECK(close(mcclelland_upper(4, 6), std::sqrt(48.0)));
    CHECK(mcclelland_lower(5, 0, 0.0) == 0.0);
}

TEST_CASE("caporossi bound")
{
    CHECK(caporossi_lower(1) == 2.0);
    CHECK(caporossi_lower(4) == 4.0);
    CHECK(close(caporossi_lower(6), 2.0 * kSqrt6));
    CHECK(caporossi_lower(0) == 0.0);
}

TEST_CASE("main lower bound")
{
    CHECK(close(main_lower(4, 6, 3.0, 1.0), 6.0));
    CHECK(close(main_lower(10, 15, 3.0, 1.0), 15.0));
    // t = 0 collapses to 2m / lambda1.
    CHECK(main_lower(5, 6, kSqrt6, 0.0) == cor_nice_lower(6, kSqrt6));
    // Complete graphs: (2m + n(n-1)) / n = 2(n-1).
    for (std::size_t n = 2; n <= 10; ++n)
        CHECK(close(main_lower(n, n * (n - 1) / 2, static_cast<double>(n - 1), 1.0),
                    2.0 * static_cast<double>(n - 1)));
    CHECK_THROWS_AS(main_lower(3, 0, 0.0, 0.0), Error);
}

TEST_CASE("cor_nice lower bound")
{
    for (std::size_t p = 1; p <= 6; ++p)
        for (std::size_t q = p; q <= 6; ++q) {
            const double root = std::sqrt(static_cast<double>(p * q));
            CHECK(close(cor_nice_lower(p * q, root), 2.0 * root));
        }
    // d-regular on n vertices: 2m = nd, lambda1 = d.
    CHECK(close(cor_nice_lower(15, 3.0), 10.0));
    // Triangle-free: lambda1 <= sqrt(m) gives 2m / lambda1 >= 2 sqrt(m).
    CHECK(cor_nice_lower(9, 3.0) >= caporossi_lower(9));
    try {
        cor_nice_lower(0, 0.0);
        FAIL("expected EmptyGraph");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptyGraph);
    }
}

TEST_CASE("amgm lower bound")
{
    CHECK(close(amgm_lower(10, 15, 3.0, 1.0), 15.0));
    CHECK(close(amgm_lower(4, 6, 3.0, 1.0), 6.0));
    CHECK(amgm_lower(3, 2, kSqrt2, 0.0) == 0.0);
}

TEST_CASE("rank lower bound")
{
    CHECK(close(rank_lower(2, 2, kSqrt2, kSqrt2), 2.0 * kSqrt2));
    CHECK(close(rank_lower(6, 2, kSqrt6, kSqrt6), 2.0 * kSqrt6));
    CHECK(rank_lower(6, 4, 3.0, 1.0) == main_lower(4, 6, 3.0, 1.0));
}

TEST_CASE("irregularity measures")
{
    for (const auto& g : {complete(4), cycle(7), petersen()}) {
        const auto irr = irregularity(g, spectral_stats(eigenvalues(g)));
        CHECK(close(irr.epsilon, 1.0));
        CHECK(close(irr.beta, 1.0));
    }
    const auto p3 = irregularity(path(3), spectral_stats(eigenvalues(path(3))));
    CHECK(close(p3.epsilon, 3.0 * kSqrt2 / 4.0));
    CHECK(close(p3.beta, 3.0 * kSqrt2 / 4.0));

    // K_{1,4}: edges all join degree 4 to degree 1; lambda1 = 2.
    const auto st = irregularity(star(4), spectral_stats(eigenvalues(star(4))));
    CHECK(close(st.epsilon, 5.0 * 4.0 * 2.0 / (2.0 * 16.0)));
    CHECK(close(st.epsilon, 1.25));
    CHECK(close(st.beta, 1.25));

    CHECK_THROWS_AS(irregularity(empty_graph(2), spectral_stats(eigenvalues(empty_graph(2)))), Error);
}

TEST_CASE("conjectured bounds")
{
    const auto p3 = bound_report(path(3));
    CHECK(close(*p3.bound(BoundId::Conj1), 2.0 * kSqrt2));
    CHECK(close(*p3.bound(BoundId::Conj1), p3.energy));
    CHECK(close(*p3.bound(BoundId::Conj2), 4.0 / std::pow(2.0, 0.25)));
    CHECK(*p3.bound(BoundId::Conj2) >= p3.energy);

    const auto c5 = bound_report(cycle(5));
    CHECK(close(*c5.bound(BoundId::Conj1), 5.0));
    CHECK(close(*c5.bound(BoundId::Conj2), 10.0 / kSqrt2));
    const double e_c5 = 2.0 + 4.0 * std::abs(std::cos(2.0 * M_PI / 5.0)) +
                        4.0 * std::abs(std::cos(4.0 * M_PI / 5.0));
    CHECK(close(c5.energy, e_c5));
    CHECK(close(c5.energy, 6.472, 1e-3));

    for (const auto& g : {cycle(6), petersen(), complete(5)}) {
        const auto r = bound_report(g);
        CHECK(close(*r.bound(BoundId::Conj1), static_cast<double>(g.order())));
        CHECK(close(*r.bound(BoundId::Conj1), *r.bound(BoundId::CorNice)));
    }
    CHECK(conj2_upper(1, 1.0) == 2.0);
    CHECK_THROWS_AS(conj2_upper(0, 0.0), Error);
}

TEST_CASE("bound report: Petersen")
{
    const auto r = bound_report(petersen());
    CHECK(close(r.energy, 16.0));
    CHECK(close(*r.bound(BoundId::Main), 15.0));
    CHECK(close(*r.bound(BoundId::RankBound), 15.0));
    CHECK(close(*r.bound(BoundId::CorNice), 10.0));
    CHECK(close(*r.bound(BoundId::Amgm), 15.0));
    CHECK(close(*r.bound(BoundId::Caporossi), 2.0 * std::sqrt(15.0)));
    CHECK(close(*r.bound(BoundId::McClellandUpper), std::sqrt(300.0)));
    CHECK(r.det_exact == 48);  // 3 * 1^5 * (-2)^4
    CHECK(r.proven_bounds_hold);
    CHECK(r.conjectures_hold);
    CHECK(close(*r.slack(BoundId::Main), 1.0));
    CHECK(close(*r.slack(BoundId::McClellandUpper), std::sqrt(300.0) - 16.0));
}

TEST_CASE("bound report: K_{2,3}")
{
    const auto r = bound_report(complete_bipartite(2, 3));
    CHECK(close(r.energy, 2.0 * kSqrt6));
    CHECK(close(*r.bound(BoundId::CorNice), 2.0 * kSqrt6));
    CHECK(close(*r.bound(BoundId::RankBound), 2.0 * kSqrt6));
    CHECK(close(*r.bound(BoundId::Main), 2.0 * kSqrt6));
    CHECK(r.stats.rank == 2);
    CHECK(r.is_triangle_free);
}

TEST_CASE("bound report: empty graph")
{
    const auto r = bound_report(empty_graph(3));
    CHECK(r.energy == 0.0);
    CHECK(*r.bound(BoundId::Caporossi) == 0.0);
    CHECK(r.bound(BoundId::McClellandLower));
    CHECK(r.bound(BoundId::McClellandUpper));
    for (auto id : {BoundId::Main, BoundId::CorNice, BoundId::Amgm, BoundId::RankBound,
                    BoundId::Conj1, BoundId::Conj2})
        CHECK_FALSE(r.bound(id));
    CHECK_FALSE(r.irregularity);
    CHECK(r.proven_bounds_hold);
}

TEST_CASE("conjectural fields are absent on disconnected graphs")
{
    const auto r = bound_report(from_edge_list(4, {{0, 1}, {2, 3}}));
    CHECK(r.bound(BoundId::Main));
    CHECK_FALSE(r.bound(BoundId::Conj1));
    CHECK_FALSE(r.bound(BoundId::Conj2));
}

TEST_CASE("bound names")
{
    for (auto id : kAllBounds)
        CHECK(bound_from_name(bound_name(id)) == id);
    CHECK_FALSE(bound_from_name("nope"));
    CHECK(is_upper(BoundId::McClellandUpper));
    CHECK(is_conjectural(BoundId::Conj2));
    CHECK_FALSE(is_conjectural(BoundId::Main));
}

TEST_CASE("bound chain and soundness on every connected graph up to 6 vertices")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& g : enumerate_connected(n)) {
            const auto r = bound_report(g);
            CHECK(r.proven_bounds_hold);
            if (r.m == 0)
                continue;
            const double main = *r.bound(BoundId::Main);
            CHECK(*r.bound(BoundId::RankBound) >= main - 1e-9);
            CHECK(main >= *r.bound(BoundId::CorNice) - 1e-9);
            CHECK(*r.bound(BoundId::Amgm) <= main + 1e-9);
            if (r.is_triangle_free)
                CHECK(*r.bound(BoundId::CorNice) >= *r.bound(BoundId::Caporossi) - 1e-9);
            if (r.is_regular)
                CHECK(close(*r.bound(BoundId::CorNice), static_cast<double>(n)));
            CHECK(r.irregularity->beta >= r.irregularity->epsilon - 1e-9);
            CHECK(r.irregularity->epsilon >= 1.0 - 1e-9);
        }
    }
}

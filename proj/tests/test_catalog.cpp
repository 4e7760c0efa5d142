#include "oracles.hpp"

#include "slb/catalog.hpp"
#include "slb/enumerate.hpp"
#include "slb/error.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace slb;

namespace {

auto binom(int n, int k) -> int
{
    int r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_SUITE("catalog")
{
    TEST_CASE("named graphs")
    {
        const auto p = named_graph("petersen");
        CHECK(p.order() == 10);
        CHECK(p.regular_degree() == 3);
        CHECK(oracle::lambda(p) == doctest::Approx(-2).epsilon(1e-12));
        CHECK(oracle::lambda(named_graph("dodecahedron")) == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-12));
        CHECK(oracle::lambda(named_graph("icosahedron")) == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-12));
        CHECK(named_graph("octahedron") == complete_multipartite({2, 2, 2}));
        CHECK(named_graph("cycle", {5}) == cycle_graph(5));
        CHECK(isomorphic(named_graph("prism", {3}), cartesian_product(complete_graph(3), complete_graph(2))));
        CHECK_THROWS_AS(named_graph("nosuch"), InputError);
        CHECK_THROWS_AS(named_graph("cycle", {2}), InputError);
        CHECK_THROWS_AS(named_graph("cycle"), InputError);
        CHECK_THROWS_AS(named_graph("petersen", {3}), InputError);
        for (const auto& e : catalog_entries())
            CHECK(!e.name.empty());
    }

    TEST_CASE("Shrikhande is SRG(16,6,2,2)")
    {
        const auto g = shrikhande_graph();
        REQUIRE(g.regular_degree() == 6);
        for (int u = 0; u < 16; ++u)
            for (int v = u + 1; v < 16; ++v) {
                int common = 0;
                for (int w = 0; w < 16; ++w)
                    common += g.adjacent(u, w) && g.adjacent(v, w);
                CHECK(common == 2);
            }
        const auto ev = oracle::eigenvalues(g);
        CHECK(oracle::multiplicity(ev, 6) == 1);
        CHECK(oracle::multiplicity(ev, 2) == 6);
        CHECK(oracle::multiplicity(ev, -2) == 9);
        CHECK_FALSE(isomorphic(g, cartesian_product(complete_graph(4), complete_graph(4))));
    }

    TEST_CASE("Johnson and Kneser graphs")
    {
        for (auto [v, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
            const auto j = johnson(v, k);
            CHECK(j.order() == binom(v, k));
            CHECK(j.regular_degree() == k * (v - k));
            const auto ev = oracle::eigenvalues(j);
            CHECK(ev.front() == doctest::Approx(-k).epsilon(1e-10));
            CHECK(oracle::multiplicity(ev, -k) == binom(v, k) - binom(v, k - 1));
            CHECK(kneser(v, k).regular_degree() == binom(v - k, k));
        }
        CHECK(isomorphic(kneser(5, 2), petersen_graph()));
        CHECK(oracle::lambda(kneser(6, 2)) == doctest::Approx(-3).epsilon(1e-10));
        CHECK_THROWS_AS(johnson(3, 2), InputError);
        CHECK_THROWS_AS(kneser(5, 3), InputError);
        const auto s = colex_subsets(4, 2);
        CHECK(s == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
    }

    TEST_CASE("Hamming graphs")
    {
        CHECK(oracle::lambda(hamming({2, 2, 2})) == doctest::Approx(-3).epsilon(1e-10));
        CHECK(hamming({3}) == complete_graph(3));
        CHECK(isomorphic(hamming({2, 3}), prism_graph(3)));
        CHECK(oracle::lambda(hamming({2, 3})) == doctest::Approx(-2).epsilon(1e-10));
        CHECK_THROWS_AS(hamming({1, 3}), InputError);
    }

    TEST_CASE("circulants")
    {
        CHECK(circulant(12, 1) == cycle_graph(12));
        CHECK_THROWS_AS(circulant(10, 5), InputError);
        CHECK_THROWS_AS(circulant(10, 0), InputError);
        for (auto [n, r] : std::vector<std::pair<int, int>>{{10, 2}, {12, 1}, {15, 2}, {21, 3}, {13, 4}}) {
            const auto g = circulant(n, r);
            CHECK(g.regular_degree() == 2 * r);
            const auto closed = circulant_spectrum(n, r);
            const auto ev = oracle::eigenvalues(g);
            REQUIRE(closed.size() == ev.size());
            for (std::size_t i = 0; i < ev.size(); ++i)
                CHECK(closed[i] == doctest::Approx(ev[i]).epsilon(1e-8));
        }
        CHECK(circulant_eigenvalue(12, 1, 6) == doctest::Approx(-2).epsilon(1e-12));
        // lambda <= -1 - 1/sin(3 pi/(2(2r+1))) when l = 3n/(2(2r+1)) is an integer.
        for (auto [n, r] : std::vector<std::pair<int, int>>{{10, 2}, {12, 1}, {30, 2}, {28, 3}, {18, 4}, {30, 7}}) {
            REQUIRE((3 * n) % (2 * (2 * r + 1)) == 0);
            const double bound = -1 - 1 / std::sin(3 * std::numbers::pi / (2 * (2 * r + 1)));
            CHECK(circulant_spectrum(n, r).front() <= bound + 1e-9);
        }
        // The subsequence decreases roughly linearly in r.
        for (auto [n, r] : std::vector<std::pair<int, int>>{{10, 2}, {18, 4}, {30, 7}})
            CHECK(circulant_spectrum(n, r).front() <= -1 - 2 * r * 0.2);
    }

    TEST_CASE("strongly regular parameters")
    {
        const auto p = srg_second_eigenvalues({10, 3, 0, 1});
        CHECK(p.theta_exact == 1);
        CHECK(p.tau_exact == -2);
        const auto s = srg_second_eigenvalues({16, 6, 2, 2});
        CHECK(s.theta_exact == 2);
        CHECK(s.tau_exact == -2);
        const auto c5 = srg_second_eigenvalues({5, 2, 0, 1});
        CHECK_FALSE(c5.theta_exact.has_value());
        CHECK(c5.theta == doctest::Approx((-1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
        CHECK(c5.tau == doctest::Approx((-1 - std::sqrt(5.0)) / 2).epsilon(1e-12));
        for (SrgParams q : {SrgParams{10, 3, 0, 1}, SrgParams{16, 6, 2, 2}, SrgParams{5, 2, 0, 1},
                            SrgParams{9, 4, 1, 2}, SrgParams{27, 10, 1, 5}}) {
            REQUIRE(q.feasible());
            const auto e = srg_second_eigenvalues(q);
            CHECK(e.theta * e.tau == doctest::Approx(-(q.k - q.c)).epsilon(1e-12));
            CHECK(e.theta + e.tau == doctest::Approx(q.a - q.c).epsilon(1e-12));
        }
        CHECK_THROWS_AS(srg_second_eigenvalues({10, 3, 1, 1}), InputError);
    }

    TEST_CASE("cubic coefficients against integer matrix powers")
    {
        const std::vector<std::pair<SrgParams, SimpleGraph>> cases{
            {{10, 3, 0, 1}, petersen_graph()},
            {{5, 2, 0, 1}, cycle_graph(5)},
            {{16, 6, 2, 2}, shrikhande_graph()},
            {{9, 4, 1, 2}, cartesian_product(complete_graph(3), complete_graph(3))},
            {{10, 6, 3, 4}, johnson(5, 2)}};
        for (const auto& [q, g] : cases) {
            const auto c = srg_cubic_coeffs(q);
            const auto a = oracle::int_matrix(g);
            const auto a3 = oracle::multiply(oracle::multiply(a, a), a);
            for (int u = 0; u < g.order(); ++u)
                for (int v = 0; v < g.order(); ++v) {
                    const long want = u == v ? c.t : c.s + (g.adjacent(u, v) ? c.r : 0);
                    CHECK(a3[u][v] == want);
                }
        }
        const auto p = srg_cubic_coeffs({10, 3, 0, 1});
        CHECK((p.r == 3 && p.s == 2 && p.t == 0));
        const auto c = srg_cubic_coeffs({5, 2, 0, 1});
        CHECK((c.r == 2 && c.s == 1 && c.t == 0));
    }
}

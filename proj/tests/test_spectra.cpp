#include "oracles.hpp"

#include "slb/catalog.hpp"
#include "slb/enumerate.hpp"
#include "slb/error.hpp"
#include "slb/spectra.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace slb;

TEST_SUITE("spectra")
{
    TEST_CASE("small spectra")
    {
        const auto k3 = spectrum(complete_graph(3));
        CHECK(k3.values[0] == doctest::Approx(-1));
        CHECK(k3.values[1] == doctest::Approx(-1));
        CHECK(k3.values[2] == doctest::Approx(2));
        const auto p = spectrum(petersen_graph());
        CHECK(p.multiplicity(-2) == 4);
        CHECK(p.multiplicity(1) == 5);
        CHECK(p.multiplicity(3) == 1);
        CHECK(lambda_min(cycle_graph(5)) == doctest::Approx(-(1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
        CHECK(lambda_min(complete_multipartite({3, 3, 2})) == doctest::Approx(-3).epsilon(1e-12));
        CHECK_THROWS_AS(lambda_min(SimpleGraph{}), InputError);
        RealMatrix nonsym(2, 2);
        nonsym(0, 1) = 1;
        CHECK_THROWS_AS(spectrum(nonsym), InputError);
    }

    TEST_CASE("agrees with Eigen, residuals and orthonormality")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            const auto g = random_graph(2 + trial % 12, 0.45, rng);
            const auto s = spectrum(g);
            const auto ref = oracle::eigenvalues(g);
            double top = 0;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                CHECK(s.values[i] == doctest::Approx(ref[i]).epsilon(1e-10));
                top = std::max(top, std::abs(ref[i]));
            }
            CHECK(s.residual <= 1e-8 * (1 + top));
            const std::size_t n = s.values.size();
            for (std::size_t a = 0; a < n; ++a) {
                const auto va = s.vector(a);
                const auto adj = adjacency_matrix(g);
                RealMatrix m(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        m(i, j) = adj(i, j).get_d();
                CHECK(rayleigh_quotient(m, va) == doctest::Approx(s.values[a]).epsilon(1e-8));
                for (std::size_t b = a; b < n; ++b) {
                    const auto vb = s.vector(b);
                    double dot = 0;
                    for (std::size_t i = 0; i < n; ++i)
                        dot += va[i] * vb[i];
                    CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-10);
                }
            }
        }
    }

    TEST_CASE("block diagonal spectra merge")
    {
        const auto a = cycle_graph(5), b = petersen_graph();
        auto merged = spectrum(a).values;
        const auto sb = spectrum(b).values;
        merged.insert(merged.end(), sb.begin(), sb.end());
        std::sort(merged.begin(), merged.end());
        const auto u = spectrum(disjoint_union(a, b)).values;
        for (std::size_t i = 0; i < u.size(); ++i)
            CHECK(u[i] == doctest::Approx(merged[i]).epsilon(1e-10));
    }

    TEST_CASE("connected bipartite spectra are symmetric")
    {
        for (const auto& g : {cycle_graph(6), hamming({2, 2, 2}), complete_multipartite({2, 3}), path_graph(5)}) {
            const auto v = spectrum(g).values;
            for (std::size_t i = 0; i < v.size(); ++i)
                CHECK(std::abs(v[i] + v[v.size() - 1 - i]) < 1e-10);
        }
    }

    TEST_CASE("odd powers of lambda")
    {
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 10; ++trial) {
            const auto g = random_connected_graph(6, 0.5, rng);
            const double l = lambda_min(g);
            for (int k : {3, 5})
                CHECK(lambda_min(power_multigraph(g, k)) == doctest::Approx(std::pow(l, k)).epsilon(1e-6));
        }
    }

    TEST_CASE("rational nullspace")
    {
        CHECK(rational_nullspace(RationalMatrix::identity(4)).empty());
        RationalMatrix ones(1, 5, Rational(1));
        const auto k = rational_nullspace(ones);
        CHECK(k.size() == 4);
        for (const auto& v : k) {
            Rational s = 0;
            for (const auto& x : v)
                s += x;
            CHECK(s == 0);
        }
        CHECK(rational_rank(ones) == 1);
        // rank-nullity on random integer matrices, compared with Eigen's rank.
        std::mt19937_64 rng(4);
        std::uniform_int_distribution<int> d(-2, 2);
        for (int trial = 0; trial < 20; ++trial) {
            RationalMatrix m(4, 6);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 6; ++j)
                    m(i, j) = d(rng) * (i == 3 ? 0 : 1);
            Eigen::FullPivLU<Eigen::MatrixXd> lu(oracle::eigen_matrix(m));
            CHECK(rational_rank(m) == static_cast<std::size_t>(lu.rank()));
            CHECK(rational_nullspace(m).size() == 6 - rational_rank(m));
        }
    }

    TEST_CASE("PSD checks")
    {
        auto p = adjacency_matrix(petersen_graph());
        for (std::size_t i = 0; i < 10; ++i)
            p(i, i) += 2;
        CHECK(psd_check(p).psd);
        CHECK(exact_psd(p).psd);
        CHECK(exact_psd(p).rank == 6);
        auto c = adjacency_matrix(cycle_graph(5));
        for (std::size_t i = 0; i < 5; ++i)
            c(i, i) += ratio(3, 2);
        const auto v = psd_check(c);
        CHECK_FALSE(v.psd);
        CHECK_FALSE(exact_psd(c).psd);
        RealMatrix cd(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                cd(i, j) = Rational(c(i, j) - (i == j ? ratio(3, 2) : Rational(0))).get_d();
        CHECK(rayleigh_quotient(cd, v.witness) < -1.5);
        CHECK(psd_check(RationalMatrix(3, 3)).psd);
        CHECK(exact_psd(RationalMatrix(3, 3)).psd);
    }

    TEST_CASE("exact least eigenvalue")
    {
        CHECK(exact_least_eigenvalue(adjacency_matrix(petersen_graph())) == Rational(-2));
        CHECK_FALSE(exact_least_eigenvalue(adjacency_matrix(cycle_graph(5))).has_value());
        CHECK(exact_least_eigenvalue(special_graph(SpecialKind::LoopGraph, 3).scaled(ratio(1, 3)).adjacency()) ==
              ratio(1, 3));
        CHECK(verify_least_eigenvalue(adjacency_matrix(complete_graph(4)), -1));
        CHECK_FALSE(verify_least_eigenvalue(adjacency_matrix(complete_graph(4)), -2));
        CHECK_FALSE(verify_least_eigenvalue(adjacency_matrix(complete_graph(4)), 0));
    }
}

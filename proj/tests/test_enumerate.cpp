#include "oracles.hpp"

#include "slb/catalog.hpp"
#include "slb/enumerate.hpp"

#include <doctest.h>

#include <random>

using namespace slb;

TEST_SUITE("enumerate")
{
    TEST_CASE("graph counts up to isomorphism")
    {
        const int all[] = {1, 2, 4, 11, 34, 156, 1044};
        const int conn[] = {1, 1, 2, 6, 21, 112, 853};
        for (int n = 1; n <= 7; ++n) {
            CHECK(all_graphs(n).size() == static_cast<std::size_t>(all[n - 1]));
            const auto c = connected_graphs(n);
            CHECK(c.size() == static_cast<std::size_t>(conn[n - 1]));
            for (const auto& g : c)
                CHECK(g.is_connected());
        }
    }

    TEST_CASE("isomorphism")
    {
        CHECK(isomorphic(petersen_graph(), kneser(5, 2)));
        CHECK(isomorphic(prism_graph(3), cycle_graph(6).complement()));
        CHECK_FALSE(isomorphic(prism_graph(3), complete_multipartite({3, 3})));
        CHECK_FALSE(isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
        // random relabelling
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = random_graph(8, 0.4, rng);
            std::vector<Vertex> perm(8);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Edge> edges;
            for (auto [u, v] : g.edges())
                edges.push_back(pair_key(perm[u], perm[v]));
            CHECK(isomorphic(g, build_simple(8, edges)));
        }
        const auto u = unique_up_to_isomorphism({cycle_graph(5), petersen_graph(), kneser(5, 2), cycle_graph(5)});
        CHECK(u.size() == 2);
    }

    TEST_CASE("cycles and triangles")
    {
        CHECK(triangles(complete_graph(5)).size() == 10);
        CHECK(triangles(petersen_graph()).empty());
        CHECK(cycles_of_length(petersen_graph(), 5).size() == 12);
        CHECK(cycles_of_length(dodecahedron_graph(), 5).size() == 12);
        CHECK(cycles_of_length(complete_graph(4), 4).size() == 3);
        for (const auto& c : cycles_of_length(complete_graph(5), 4)) {
            CHECK(c.front() == *std::min_element(c.begin(), c.end()));
            CHECK(c[1] < c.back());
        }
    }

    TEST_CASE("cubic claw-free corpus against an independent generator")
    {
        for (int n = 6; n <= 12; n += 2) {
            const auto lib = cubic_clawfree_graphs(n);
            const auto ref = unique_up_to_isomorphism(oracle::CubicClawfree(n).run());
            CHECK(lib.size() == ref.size());
            for (const auto& g : lib) {
                CHECK(g.regular_degree() == 3);
                CHECK(g.is_connected());
                bool found = false;
                for (const auto& h : ref)
                    found = found || isomorphic(g, h);
                CHECK(found);
            }
        }
    }

    TEST_CASE("random decompositions validate")
    {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 30; ++trial) {
            const auto g = as_weighted(random_graph(3 + trial % 6, 0.5, rng));
            const auto d = random_decomposition(g, rng);
            CHECK(validate(d).ok());
        }
    }
}

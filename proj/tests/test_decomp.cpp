#include "oracles.hpp"

#include "slb/catalog.hpp"
#include "slb/decomp.hpp"
#include "slb/enumerate.hpp"
#include "slb/error.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace slb;

namespace {

const double golden = (1 + std::sqrt(5.0)) / 2;

auto edge_partition(const SimpleGraph& g) -> CliquePartition
{
    CliquePartition k;
    for (auto [u, v] : g.edges())
        k.cliques.push_back({u, v});
    return k;
}

auto multipartite_J(const std::vector<int>& parts) -> CompleteDecomposition
{
    CompleteDecomposition c;
    int n = 0;
    for (int p : parts)
        n += p;
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i)
        all[i] = i;
    c.pieces.push_back({CompleteKind::J, all, 1});
    int start = 0;
    for (int p : parts) {
        std::vector<Vertex> part;
        for (int i = 0; i < p; ++i)
            part.push_back(start + i);
        c.pieces.push_back({CompleteKind::J, part, -1});
        start += p;
    }
    return c;
}

}  // namespace

TEST_SUITE("decomp")
{
    TEST_CASE("validation")
    {
        const auto j4 = special_graph(SpecialKind::LoopedComplete, 4);
        const auto mj2 = special_graph(SpecialKind::LoopedComplete, 2).scaled(-1);
        Decomposition d{as_weighted(complete_multipartite({2, 2})), {{j4, {0, 1, 2, 3}}, {mj2, {0, 1}}, {mj2, {2, 3}}}};
        CHECK(validate(d).ok());

        const auto p = petersen_graph();
        Decomposition cube{as_weighted(p), {}};
        cube.target = power_multigraph(p, 3).as_weighted();
        std::vector<Vertex> all(10);
        for (int i = 0; i < 10; ++i)
            all[i] = i;
        cube.pieces.push_back(make_piece(p, all, 3));
        cube.pieces.push_back(make_piece(complete_graph(10), all, 2));
        CHECK(validate(cube).ok());

        cube.pieces[1] = make_piece(complete_graph(10), all, 1);
        const auto bad = validate(cube);
        CHECK_FALSE(bad.ok());
        CHECK(bad.describe().find("pair {0,1}") != std::string::npos);
        CHECK_THROWS_AS(decomposition_bound(cube), InputError);
    }

    TEST_CASE("piece eigenvalues")
    {
        CHECK(piece_lambda(SpecialKind::LoopedComplete, 5, -1).exact == Rational(-5));
        CHECK(piece_lambda(SpecialKind::Complete, 4, -1).exact == Rational(-3));
        CHECK(piece_lambda(SpecialKind::Complete, 4, 2).exact == Rational(-2));
        CHECK(piece_lambda(SpecialKind::LoopedComplete, 1, 1).exact == Rational(1));
        CHECK(piece_lambda(SpecialKind::LoopedComplete, 3, 1).exact == Rational(0));
        CHECK(piece_lambda(SpecialKind::LoopGraph, 3, -2).exact == Rational(-2));
        const auto c5 = piece_lambda(weighted_from_simple(cycle_graph(5), 2));
        CHECK_FALSE(c5.exact.has_value());
        CHECK(c5.value == doctest::Approx(-2 * golden).epsilon(1e-12));
        // closed forms against Eigen
        for (int n = 1; n <= 6; ++n)
            for (int a : {-3, -1, 2}) {
                for (auto kind : {SpecialKind::LoopGraph, SpecialKind::LoopedComplete, SpecialKind::Complete}) {
                    if (kind == SpecialKind::Complete && n == 1)
                        continue;
                    const auto pl = piece_lambda(kind, n, a);
                    CHECK(pl.exact->get_d() == doctest::Approx(oracle::lambda(special_graph(kind, n).scaled(a))));
                }
            }
    }

    TEST_CASE("decomposition bounds")
    {
        // single piece gives lambda exactly
        const auto h = as_weighted(petersen_graph());
        std::vector<Vertex> all(10);
        for (int i = 0; i < 10; ++i)
            all[i] = i;
        const Decomposition single{h, {{h, all}}};
        CHECK(decomposition_bound(single).exact == Rational(-2));
        const auto cert = equality_certificate(single);
        REQUIRE(cert.has_value());
        CHECK(oracle::certificate_holds(single, cert->numeric_vector, 1e-8));

        // K4 = J4 - I4
        CompleteDecomposition k4;
        k4.pieces.push_back({CompleteKind::J, {0, 1, 2, 3}, 1});
        for (int u = 0; u < 4; ++u)
            k4.pieces.push_back({CompleteKind::J, {u}, -1});
        const auto b = complete_decomposition_bound(k4, as_weighted(complete_graph(4)));
        CHECK(b.value == -1);

        // K_{3,3,2} via J pieces
        CHECK(complete_decomposition_bound(multipartite_J({3, 3, 2}), as_weighted(complete_multipartite({3, 3, 2})))
                  .value == -3);

        // Hamming [2,2] from K2 copies
        const auto q = hamming({2, 2});
        Decomposition hd{as_weighted(q), {}};
        for (auto [u, v] : q.edges())
            hd.pieces.push_back(make_piece(complete_graph(2), {u, v}));
        CHECK(decomposition_bound(hd).exact == Rational(-2));

        // 2*C5 piece
        const Decomposition c5x2{weighted_from_simple(cycle_graph(5), 2),
                                 {{weighted_from_simple(cycle_graph(5), 2), {0, 1, 2, 3, 4}}}};
        CHECK(decomposition_bound(c5x2).value == doctest::Approx(-2 * golden).epsilon(1e-12));
    }

    TEST_CASE("dodecahedron from face cycles of 2G")
    {
        const auto g = dodecahedron_graph();
        const auto faces = cycles_of_length(g, 5);
        CHECK(faces.size() == 12);
        Decomposition d{weighted_from_simple(g, 2), {}};
        for (const auto& f : faces)
            d.pieces.push_back(make_piece(cycle_graph(5), f));
        REQUIRE(validate(d).ok());
        const auto b = decomposition_bound(d);
        CHECK(b.value / 2 == doctest::Approx(-1.5 * golden).epsilon(1e-12));
        CHECK(b.value / 2 <= -std::sqrt(5.0));
        CHECK_FALSE(equality_certificate(d).has_value());
    }

    TEST_CASE("cubic power bounds")
    {
        CHECK(cubic_power_bound(petersen_graph(), {3, 2, 0}).value == doctest::Approx(-2).epsilon(1e-12));
        CHECK(cubic_power_bound(cycle_graph(5), {2, 1, 0}).value == doctest::Approx(-golden).epsilon(1e-12));
        CHECK(cubic_power_bound(shrikhande_graph(), {4, 12, 12}).value == doctest::Approx(-2).epsilon(1e-12));
        CHECK_THROWS_AS(cubic_power_bound(petersen_graph(), {3, 1, 0}), InputError);
        CHECK_THROWS_AS(cubic_power_bound(petersen_graph(), {0, 2, 0}), InputError);
        // smallest root against Eigen's companion-matrix roots
        for (auto [p, q] : std::vector<std::pair<double, double>>{{1, 14}, {-3, 2}, {-4, 0}, {0, -8}, {-7, 6}, {5, -1}}) {
            Eigen::Matrix3d comp;
            comp << 0, 0, -q, 1, 0, -p, 0, 1, 0;
            Eigen::EigenSolver<Eigen::Matrix3d> es(comp);
            double smallest = 1e300;
            for (int i = 0; i < 3; ++i)
                if (std::abs(es.eigenvalues()[i].imag()) < 1e-9)
                    smallest = std::min(smallest, es.eigenvalues()[i].real());
            CHECK(smallest_cubic_root(p, q) == doctest::Approx(smallest).epsilon(1e-9));
        }
    }

    TEST_CASE("equality certificates for complete decompositions")
    {
        for (int n = 1; n <= 4; ++n) {
            const auto h = as_weighted(complete_multipartite({n, n}));
            const auto c = multipartite_J({n, n});
            const auto x = complete_equality_certificate(c, h);
            REQUIRE(x.has_value());
            const auto d = to_decomposition(c, h);
            REQUIRE(equality_certificate(d).has_value());
            CHECK(oracle::certificate_holds(d, equality_certificate(d)->numeric_vector, 1e-8));
        }
        const auto h21 = as_weighted(complete_multipartite({2, 1}));
        CHECK_FALSE(complete_equality_certificate(multipartite_J({2, 1}), h21).has_value());
        CHECK_FALSE(equality_certificate(to_decomposition(multipartite_J({2, 1}), h21)).has_value());
        CHECK(oracle::lambda(h21) == doctest::Approx(-std::sqrt(2.0)));
    }

    TEST_CASE("random decompositions never exceed lambda")
    {
        std::mt19937_64 rng(17);
        int certified = 0;
        for (int trial = 0; trial < 150; ++trial) {
            const auto g = random_connected_graph(3 + trial % 6, 0.5, rng);
            const auto d = random_decomposition(as_weighted(g), rng);
            REQUIRE(validate(d).ok());
            const auto b = decomposition_bound(d);
            CHECK(b.value <= oracle::lambda(g) + 1e-8);
            if (const auto c = equality_certificate(d)) {
                ++certified;
                CHECK(b.value == doctest::Approx(oracle::lambda(g)).epsilon(1e-8));
                CHECK(oracle::certificate_holds(d, c->numeric_vector, 1e-8));
            }
        }
        CHECK(certified > 0);
    }

    TEST_CASE("clique partitions")
    {
        const auto p = petersen_graph();
        const auto ep = edge_partition(p);
        CHECK(validate(ep, p).ok());
        CHECK(clique_partition_bound(ep, p).value == -3);

        const auto oct = octahedron_graph();
        CliquePartition faces{2, triangles(oct)};
        const auto s = clique_partition_stats(faces, oct);
        CHECK(s.r_max == 4);
        CHECK(s.c_min == 3);
        CHECK(clique_partition_bound(faces, oct).value == -2);
        CHECK(clique_equality_certificate(faces, oct).has_value());

        const auto ico = icosahedron_graph();
        CliquePartition ifaces{2, triangles(ico)};
        CHECK(clique_partition_stats(ifaces, ico).r_max == 5);
        CHECK(clique_partition_bound(ifaces, ico).value == ratio(-5, 2));
        CHECK_FALSE(clique_equality_certificate(ifaces, ico).has_value());

        // scaling invariance (K, mu) -> (K + K, 2 mu)
        auto twice = faces;
        twice.mu = 4;
        twice.cliques.insert(twice.cliques.end(), faces.cliques.begin(), faces.cliques.end());
        CHECK(clique_partition_bound(twice, oct).value == clique_partition_bound(faces, oct).value);

        CliquePartition bad{1, {{0, 1}, {1, 2}}};
        CHECK_FALSE(validate(bad, path_graph(4)).ok());
        CliquePartition nonclique{1, {{0, 1, 2}}};
        CHECK_FALSE(validate(nonclique, path_graph(3)).ok());
        CHECK_THROWS_AS(clique_partition_stats(bad, path_graph(4)), InputError);

        const CliquePartition none{1, {}};
        const auto empty = clique_partition_bound(none, empty_graph(3));
        CHECK(empty.degenerate);
        CHECK(empty.value == 0);
    }

    TEST_CASE("clique certificates")
    {
        const auto c4 = clique_equality_certificate(edge_partition(cycle_graph(4)), cycle_graph(4));
        REQUIRE(c4.has_value());
        CHECK(abs((*c4)[0]) == abs((*c4)[1]));
        CHECK((*c4)[0] == -(*c4)[1]);
        CHECK((*c4)[0] == (*c4)[2]);
        CHECK_FALSE(clique_equality_certificate(edge_partition(cycle_graph(5)), cycle_graph(5)).has_value());
    }

    TEST_CASE("essential vertices")
    {
        const auto g = build_simple(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
        const CliquePartition k{1, {{0, 1, 4}, {1, 2}, {2, 3}, {0, 3}}};
        const auto red = essential_vertices(k, g);
        CHECK(red.vertices == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(red.partition.cliques.size() == 4);
        CHECK(isomorphic(red.graph, cycle_graph(4)));
        CHECK(oracle::lambda(g) == doctest::Approx(-2).epsilon(1e-10));

        const auto j = johnson(5, 2);
        CliquePartition jp;
        const auto sets = colex_subsets(5, 2);
        for (int c = 0; c < 5; ++c) {
            std::vector<Vertex> clique;
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (std::count(sets[i].begin(), sets[i].end(), c))
                    clique.push_back(static_cast<Vertex>(i));
            jp.cliques.push_back(clique);
        }
        const auto jr = essential_vertices(jp, j);
        CHECK(jr.vertices.size() == 10);
        CHECK(jr.iterations == 0);

        // triangle with a pendant edge: the pendant clique strips the only max-r vertex
        const auto t = build_simple(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
        const CliquePartition tk{1, {{0, 1, 2}, {0, 3}}};
        const auto tr = essential_vertices(tk, t);
        CHECK(tr.vertices.empty());
        CHECK(tr.iterations == 1);
        CHECK_FALSE(clique_equality_certificate(tk, t).has_value());
    }

    TEST_CASE("triangle-free graphs: edge partition gives -Delta, equality iff regular bipartite")
    {
        for (int n = 2; n <= 7; ++n)
            for (const auto& g : connected_graphs(n)) {
                if (!triangles(g).empty())
                    continue;
                const auto k = edge_partition(g);
                CHECK(clique_partition_bound(k, g).value == -g.max_degree());
                const bool regular_bipartite = g.regular_degree().has_value() && g.is_bipartite();
                CHECK(clique_equality_certificate(k, g).has_value() == regular_bipartite);
            }
    }

    TEST_CASE("line graph bounds")
    {
        CHECK(line_graph_bound(as_multigraph(complete_graph(4))).claw_bound == -2);
        const Multigraph tri(3, {{{0, 1}, 2}, {{1, 2}, 1}, {{0, 2}, 1}});
        const auto b = line_graph_bound(tri);
        CHECK(b.floor == -4);
        CHECK(b.mu == 2);
        CHECK(oracle::lambda(line_graph(tri)) >= b.claw_bound.get_d() - 1e-9);
        CHECK(line_graph_bound(twig_replicate(path_graph(3), {{{0, 1}, 2}})).refined_bound == -2);
        const auto star = twig_replicate(star_graph(3), {{{0, 1}, 3}});
        CHECK(line_graph_bound(star).refined_bound == -3);
        CHECK(oracle::lambda(line_graph(star)) >= -3 - 1e-9);
        const auto claws = claw_decomposition(as_multigraph(complete_graph(4)));
        CHECK(validate(claws).ok());
        CHECK(decomposition_bound(claws).value == doctest::Approx(-2));
    }

    TEST_CASE("partition JSON")
    {
        const CliquePartition k{2, {{0, 1, 2}, {0, 3}}};
        const auto j = to_json(k);
        CHECK(j["mu"] == 2);
        const auto back = partition_from_json(j);
        CHECK(back.mu == 2);
        CHECK(back.cliques == k.cliques);
        CHECK_THROWS_AS(partition_from_json(nlohmann::json::parse("{\"cliques\": [[0]]}")), InputError);
    }
}

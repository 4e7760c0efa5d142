#include "slb/reproduce.hpp"

#include "slb/bounds.hpp"
#include "slb/catalog.hpp"
#include "slb/cliqopt.hpp"
#include "slb/decomp.hpp"
#include "slb/enumerate.hpp"
#include "slb/error.hpp"
#include "slb/graph.hpp"
#include "slb/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

namespace slb {

namespace {

auto fixed12(double v) -> std::string
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    std::string s = buf;
    return s == "-0.000000000000" ? "0.000000000000" : s;
}

class Group {
public:
    Group(std::string id, std::vector<ReproRow>& out) : id_(std::move(id)), out_(out) {}

    auto exact(const std::string& q, const Rational& expected, const Rational& got, const char* prov = "stated")
        -> void
    {
        const Rational d = abs(Rational(expected - got));
        add(q, to_string(expected), to_string(got), d.get_d(), d == 0, prov);
    }
    auto integer(const std::string& q, long expected, long got, const char* prov = "stated") -> void
    {
        add(q, std::to_string(expected), std::to_string(got), std::abs(static_cast<double>(expected - got)),
            expected == got, prov);
    }
    auto real(const std::string& q, double expected, double got, double tol, const char* prov = "stated") -> void
    {
        const double d = std::abs(expected - got);
        add(q, fixed12(expected), fixed12(got), d, d <= tol, prov);
    }
    auto truth(const std::string& q, bool got, const char* prov = "stated") -> void
    {
        add(q, "true", got ? "true" : "false", got ? 0.0 : 1.0, got, prov);
    }
    auto error(const std::string& what) -> void { add("evaluation", "no error", "error: " + what, 1.0, false, "stated"); }

private:
    auto add(const std::string& q, std::string e, std::string c, double d, bool pass, const char* prov) -> void
    {
        out_.push_back(ReproRow{id_, q, std::move(e), std::move(c), d, pass, prov});
    }

    std::string id_;
    std::vector<ReproRow>& out_;
};

struct Context {
    bool perturb_petersen = false;

    auto petersen() const -> SimpleGraph
    {
        auto g = petersen_graph();
        if (!perturb_petersen)
            return g;
        auto edges = g.edges();
        const auto [u, v] = edges.front();
        edges.erase(edges.begin());
        Vertex w = 0;
        while (w == u || g.adjacent(u, w))
            ++w;
        edges.push_back(pair_key(u, w));
        (void)v;
        return build_simple(g.order(), edges);
    }
};

using GroupFn = std::function<void(Group&, const Context&)>;

const double golden = (1 + std::sqrt(5.0)) / 2;

auto exact_lambda(const SimpleGraph& g) -> std::optional<Rational>
{
    return exact_least_eigenvalue(adjacency_matrix(g));
}

auto exact_or_nan(const SimpleGraph& g) -> Rational
{
    auto v = exact_lambda(g);
    if (!v)
        throw CheckFailure("least eigenvalue is not rational");
    return *v;
}

auto all_vertices(int n) -> std::vector<Vertex>
{
    std::vector<Vertex> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

/// Decomposition of mu*G from a clique multiset, each clique as a K piece.
auto clique_pieces(const SimpleGraph& g, int mu, const std::vector<std::vector<Vertex>>& cliques) -> Decomposition
{
    Decomposition d{weighted_from_simple(g, mu), {}};
    for (const auto& c : cliques)
        d.pieces.push_back(Piece{special_graph(SpecialKind::Complete, static_cast<int>(c.size())), c});
    return d;
}

/// Edges covered by a clique multiset: the common multiplicity, or -1 if uneven.
auto uniform_cover(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& cliques) -> int
{
    std::map<Edge, int> cover;
    for (const auto& c : cliques)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                ++cover[pair_key(c[i], c[j])];
    int mu = -1;
    for (auto e : g.edges()) {
        const int m = cover.count(e) ? cover[e] : 0;
        if (mu < 0)
            mu = m;
        else if (m != mu)
            return -1;
    }
    return mu;
}

auto johnson_partition(int v, int k) -> CliquePartition
{
    const auto sets = colex_subsets(v, k);
    CliquePartition p;
    for (const auto& c : colex_subsets(v, k - 1)) {
        std::vector<Vertex> clique;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (std::includes(sets[i].begin(), sets[i].end(), c.begin(), c.end()))
                clique.push_back(static_cast<Vertex>(i));
        p.cliques.push_back(clique);
    }
    return p;
}

auto factorial(long n) -> long
{
    long f = 1;
    for (long i = 2; i <= n; ++i)
        f *= i;
    return f;
}

auto power(long b, long e) -> long
{
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

auto binomial(long n, long k) -> long
{
    return factorial(n) / (factorial(k) * factorial(n - k));
}

auto sorted_close(std::vector<double> a, std::vector<double> b, double tol) -> bool
{
    if (a.size() != b.size())
        return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol)
            return false;
    return true;
}

auto cube_matches(const SimpleGraph& g, long alpha, long beta, long gamma) -> bool
{
    const auto cube = power_multigraph(g, 3);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u; v < g.order(); ++v) {
            const long want = u == v ? gamma : beta + (g.adjacent(u, v) ? alpha : 0);
            if (cube.multiplicity(u, v) != want)
                return false;
        }
    return true;
}

auto groups() -> const std::vector<std::pair<std::string, GroupFn>>&
{
    static const std::vector<std::pair<std::string, GroupFn>> all = {
        {"special-graphs",
         [](Group& g, const Context&) {
             auto lam = [](const WeightedGraph& h) { return *exact_least_eigenvalue(h.adjacency()); };
             g.exact("lambda(J_1)", 1, lam(special_graph(SpecialKind::LoopedComplete, 1)));
             g.exact("lambda(J_4)", 0, lam(special_graph(SpecialKind::LoopedComplete, 4)));
             g.exact("lambda(I_3)", 1, lam(special_graph(SpecialKind::LoopGraph, 3)));
             g.exact("lambda(-I_3)", -1, lam(special_graph(SpecialKind::LoopGraph, 3).scaled(-1)));
             g.exact("lambda(K_3)", -1, lam(special_graph(SpecialKind::Complete, 3)));
             g.exact("lambda(-J_5)", -5, lam(special_graph(SpecialKind::LoopedComplete, 5).scaled(-1)));
             g.exact("lambda(-K_4)", -3, lam(special_graph(SpecialKind::Complete, 4).scaled(-1)));
         }},
        {"c5",
         [](Group& g, const Context&) {
             const auto c5 = cycle_graph(5);
             g.real("lambda(C5)", -golden, lambda_min(c5), 1e-10);
             g.truth("A^3 = A(K5) + 2A(C5)", cube_matches(c5, 2, 1, 0));
             const auto b = cubic_power_bound(c5, {2, 1, 0});
             g.real("cubic power bound", -golden, b.value, 1e-10);
             const auto s = srg_cubic_coeffs({5, 2, 0, 1});
             g.truth("(r,s,t) from (5,2,0,1) = (2,1,0)", s.r == 2 && s.s == 1 && s.t == 0);
             g.truth("no rational least eigenvalue", !exact_lambda(c5).has_value());
             const auto star_c = lambda_star_C(as_weighted(c5)).value;
             g.truth("lambda*_C(C5) < lambda(C5)", star_c.get_d() < lambda_min(c5) - 1e-9);
             CliquePartition edges{1, {}};
             for (auto e : c5.edges())
                 edges.cliques.push_back({e.first, e.second});
             g.truth("no clique-partition certificate", !clique_equality_certificate(edges, c5).has_value());
         }},
        {"petersen",
         [](Group& g, const Context& ctx) {
             const auto p = ctx.petersen();
             g.exact("lambda", -2, exact_or_nan(p));
             const auto s = spectrum(p);
             g.integer("multiplicity of -2", 4, static_cast<long>(s.multiplicity(-2)));
             g.integer("multiplicity of 1", 5, static_cast<long>(s.multiplicity(1)));
             g.integer("multiplicity of 3", 1, static_cast<long>(s.multiplicity(3)));
             const auto e = srg_second_eigenvalues({10, 3, 0, 1});
             g.integer("theta from (10,3,0,1)", 1, e.theta_exact.value_or(-99));
             g.integer("tau from (10,3,0,1)", -2, e.tau_exact.value_or(-99));
             g.truth("A^3 = 3A + 2(J - I)", cube_matches(p, 3, 2, 0));
             const auto c = srg_cubic_coeffs({10, 3, 0, 1});
             g.truth("(r,s,t) from (10,3,0,1) = (3,2,0)", c.r == 3 && c.s == 2 && c.t == 0);
             g.real("cubic power bound", -2, cubic_power_bound(p, {3, 2, 0}).value, 1e-10);
             auto shifted = adjacency_matrix(p);
             for (std::size_t i = 0; i < shifted.rows(); ++i)
                 shifted(i, i) += 2;
             g.truth("A + 2I is PSD (exact)", exact_psd(shifted).psd);
             g.exact("Hoffman -ak/(n-a)", -2, hoffman_upper(p), "derived");
             g.exact("lambda*_K (triangle-free: -Delta)", -3, lambda_star_K(p).value);
         }},
        {"srg-cubic",
         [](Group& g, const Context&) {
             const auto sh = shrikhande_graph();
             const auto c = srg_cubic_coeffs({16, 6, 2, 2});
             g.truth("A^3 = rA + s(J-I) + tI on the Shrikhande graph", cube_matches(sh, c.r, c.s, c.t), "derived");
             const auto b = cubic_power_bound(sh, {Rational(c.r), Rational(c.s), Rational(c.t)});
             g.real("cubic bound equals tau when tau <= c - a", -2, b.value, 1e-10);
             g.real("lambda(Shrikhande)", -2, lambda_min(sh), 1e-10);
         }},
        {"dodecahedron",
         [](Group& g, const Context&) {
             const auto d = dodecahedron_graph();
             g.real("lambda", -std::sqrt(5.0), lambda_min(d), 1e-10);
             const auto faces = cycles_of_length(d, 5);
             Decomposition dec{weighted_from_simple(d, 2), {}};
             for (const auto& f : faces)
                 dec.pieces.push_back(make_piece(cycle_graph(5), f));
             const auto b = decomposition_bound(dec);
             g.real("face-cycle bound on 2G, halved", -3 * (1 + std::sqrt(5.0)) / 4, b.value / 2, 1e-10);
             int through = 0;
             for (const auto& f : faces)
                 through += std::count(f.begin(), f.end(), 0);
             g.integer("face cycles through each vertex", 3, through);
         }},
        {"icosahedron",
         [](Group& g, const Context&) {
             const auto ico = icosahedron_graph();
             g.real("lambda", -std::sqrt(5.0), lambda_min(ico), 1e-10);
             CliquePartition faces{2, triangles(ico)};
             g.integer("face triangles", 20, static_cast<long>(faces.cliques.size()), "derived");
             g.exact("face-triangle bound -Delta/2", ratio(-5, 2), clique_partition_bound(faces, ico).value);
             g.exact("lambda*_K", ratio(-5, 2), lambda_star_K(ico).value, "derived");
             const double n = ico.order(), e = static_cast<double>(ico.size());
             g.truth("-lambda_1/(chi-1) <= -2e/3n", lovasz_upper(ico).chromatic <= -2 * e / (3 * n) + 1e-12);
         }},
        {"octahedron",
         [](Group& g, const Context&) {
             const auto oct = octahedron_graph();
             g.exact("lambda", -2, exact_or_nan(oct));
             CliquePartition faces{2, triangles(oct)};
             g.exact("face-triangle bound", -2, clique_partition_bound(faces, oct).value);
             g.exact("lambda*_K = -k/(omega-1)", -2, lambda_star_K(oct).value, "derived");
             g.exact("-k/(chi-1)", -2, chromatic_uppers(oct).chromatic);
             g.exact("tm bound -d+m/t", -2, tm_lower(oct).value, "derived");
             g.truth("K_{2,2,2} = K_3[K_2^c]", isomorphic(oct, composition(complete_graph(3), empty_graph(2))));
         }},
        {"shrikhande",
         [](Group& g, const Context&) {
             const auto sh = shrikhande_graph();
             const auto s = spectrum(sh);
             g.integer("multiplicity of 6", 1, static_cast<long>(s.multiplicity(6)));
             g.integer("multiplicity of 2", 6, static_cast<long>(s.multiplicity(2)), "derived");
             g.integer("multiplicity of -2", 9, static_cast<long>(s.multiplicity(-2)), "derived");
             g.integer("omega", 3, clique_number(sh));
             g.exact("lambda*_K = -Delta/2", -3, lambda_star_K(sh).value);
         }},
        {"hamming",
         [](Group& g, const Context&) {
             g.exact("lambda(K3 x K3 cartesian)", -2, exact_or_nan(cartesian_product(complete_graph(3), complete_graph(3))));
             g.exact("lambda(Q3)", -3, exact_or_nan(hamming({2, 2, 2})));
             const auto h = hamming({3, 3});
             Decomposition d{as_weighted(h), {}};
             for (int fixed = 0; fixed < 3; ++fixed) {
                 std::vector<Vertex> row, col;
                 for (int x = 0; x < 3; ++x) {
                     row.push_back(fixed * 3 + x);
                     col.push_back(x * 3 + fixed);
                 }
                 d.pieces.push_back(make_piece(complete_graph(3), row));
                 d.pieces.push_back(make_piece(complete_graph(3), col));
             }
             g.real("copy decomposition bound", -2, decomposition_bound(d).value, 1e-12);
             CompleteDecomposition cd;
             const auto q2 = hamming({2, 2});
             for (auto e : q2.edges())
                 cd.pieces.push_back({CompleteKind::K, {e.first, e.second}, 1});
             g.exact("complete decomposition bound, K2 x K2 copies", -2,
                     complete_decomposition_bound(cd, as_weighted(q2)).value);
         }},
        {"multipartite",
         [](Group& g, const Context&) {
             auto decomposition = [](const std::vector<int>& parts) {
                 CompleteDecomposition c;
                 int n = 0;
                 for (int p : parts)
                     n += p;
                 c.pieces.push_back({CompleteKind::J, all_vertices(n), 1});
                 int start = 0;
                 for (int p : parts) {
                     std::vector<Vertex> part;
                     for (int i = 0; i < p; ++i)
                         part.push_back(start + i);
                     c.pieces.push_back({CompleteKind::J, part, -1});
                     start += p;
                 }
                 return c;
             };
             const auto k331 = as_weighted(complete_multipartite({3, 3, 1}));
             g.exact("J-decomposition bound K_{3,3,1}", -3, complete_decomposition_bound(decomposition({3, 3, 1}), k331).value);
             g.exact("lambda(K_{3,3,1}) (n1 = n2)", -3, exact_or_nan(complete_multipartite({3, 3, 1})));
             g.truth("lambda(K_{3,2,1}) > -3 (n1 > n2)", lambda_min(complete_multipartite({3, 2, 1})) > -3 + 1e-9);
             const auto k33 = as_weighted(complete_multipartite({3, 3}));
             g.truth("equality certificate for K_{3,3}",
                     equality_certificate(to_decomposition(decomposition({3, 3}), k33)).has_value());
             const auto k21 = as_weighted(complete_multipartite({2, 1}));
             g.truth("no equality certificate for K_{2,1}",
                     !equality_certificate(to_decomposition(decomposition({2, 1}), k21)).has_value());
             g.truth("lambda*_C(K_{2,2,1}) >= -2", lambda_star_C(as_weighted(complete_multipartite({2, 2, 1}))).value >= -2);
             auto sum = add(add(special_graph(SpecialKind::LoopedComplete, 4),
                                special_graph(SpecialKind::LoopedComplete, 2).scaled(-1), std::vector<Vertex>{0, 1}),
                            special_graph(SpecialKind::LoopedComplete, 2).scaled(-1), std::vector<Vertex>{2, 3});
             g.truth("J4 - J2 - J2 = K_{2,2}", sum == as_weighted(complete_multipartite({2, 2})));
         }},
        {"products",
         [](Group& g, const Context&) {
             const auto p = direct_product(complete_graph(3), complete_graph(4));
             g.exact("lambda(K3 x K4)", -3, exact_or_nan(p));
             auto tri = enumerate_cliques(p, 3);
             std::erase_if(tri, [](const auto& c) { return c.size() != 3; });
             const int mu = uniform_cover(p, tri);
             CliquePartition k{mu, tri};
             const auto chk = deltbnd_check(k, p);
             g.exact("Delta/(c-1) for all 3-cliques", 3, chk.bound);
             g.truth("equality in the Delta/(c-1) bound", chk.tight && chk.ratio == chk.bound);
             CliquePartition k3{1, {{0, 1, 2}}};
             CliquePartition k4{1, {{0, 1, 2, 3}}};
             const auto t = product_tightness(complete_graph(3), k3, complete_graph(4), k4);
             g.exact("-k1 k2/(c1-1)", -3, t.predicted);
             g.truth("lambda and lambda*_K of the product match", t.lambda_matches && t.lambda_star_matches);
         }},
        {"composition",
         [](Group& g, const Context&) {
             const auto c = composition(complete_graph(3), empty_graph(2));
             g.exact("lambda(K3[K2^c]) = -n", -2, exact_or_nan(c));
             const auto c5k3 = composition(cycle_graph(5), complete_graph(3));
             std::vector<double> predicted;
             for (int i = 0; i < 10; ++i)
                 predicted.push_back(-1);
             for (double x : spectrum(cycle_graph(5)).values)
                 predicted.push_back(3 * x + 2);
             g.truth("spectrum of C5[K3] from the factors", sorted_close(spectrum(c5k3).values, predicted, 1e-8));
             const auto c4 = composition(complete_graph(2), empty_graph(2));
             auto v = vertrans_bound(c4);
             g.truth("K2[K2^c] satisfies the transitivity hypotheses", v.has_value());
             if (v)
                 g.exact("K2[K2^c]: -k/(omega-1)", -2, v->value);
         }},
        {"vertex-transitive",
         [](Group& g, const Context&) {
             auto c6 = vertrans_bound(cycle_graph(6));
             g.truth("C6 qualifies", c6.has_value());
             if (c6)
                 g.exact("C6: -k/(omega-1)", -2, c6->value);
             auto kk = vertrans_bound(direct_product(complete_graph(3), complete_graph(3)));
             g.truth("K3 x K3 qualifies", kk.has_value());
             if (kk)
                 g.exact("K3 x K3: -(n-1)", -2, kk->value);
             g.exact("chi_f(C5) = n/alpha", ratio(5, 2), fractional_chromatic(cycle_graph(5)), "derived");
         }},
        {"line-graphs",
         [](Group& g, const Context&) {
             const auto k4 = complete_graph(4);
             const auto b = line_graph_bound(as_multigraph(k4));
             g.exact("simple G: claw bound", -2, b.claw_bound);
             g.real("lambda(L(K4))", -2, lambda_min(line_graph(k4)), 1e-10, "derived");
             std::map<Edge, std::int64_t> twice;
             for (auto e : k4.edges())
                 twice[e] = 2;
             const Multigraph k4x2(4, twice);
             g.real("lambda(L(2 K4)) = 2 lambda(L(K4))", 2 * lambda_min(line_graph(k4)), lambda_min(line_graph(k4x2)),
                    1e-10);
             const Multigraph tri(3, {{{0, 1}, 2}, {{1, 2}, 1}, {{0, 2}, 1}});
             const auto tb = line_graph_bound(tri);
             g.exact("doubled edge: -2 mu", -4, tb.floor);
             g.truth("doubled edge: lambda >= claw bound", lambda_min(line_graph(tri)) >= tb.claw_bound.get_d() - 1e-9);
             const auto p3 = twig_replicate(path_graph(3), {{{0, 1}, 2}});
             g.exact("twig P3, end edge x2: min{-2,-mu}", -2, line_graph_bound(p3).refined_bound);
             const auto star = twig_replicate(star_graph(3), {{{0, 1}, 3}});
             g.exact("twig K_{1,3}, one twig x3: min{-2,-mu}", -3, line_graph_bound(star).refined_bound);
             CliquePartition claws{1, {}};
             const auto lg = line_graph(k4);
             for (const auto& piece : claw_decomposition(as_multigraph(k4)).pieces)
                 claws.cliques.push_back(piece.embedding);
             const auto st = clique_partition_stats(claws, lg);
             g.truth("every edge vertex in exactly two claw cliques",
                     std::all_of(st.r.begin(), st.r.end(), [](int r) { return r == 2; }));
         }},
        {"johnson",
         [](Group& g, const Context&) {
             for (auto [v, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}}) {
                 const auto j = johnson(v, k);
                 const std::string tag = "J(" + std::to_string(v) + "," + std::to_string(k) + ")";
                 g.exact("lambda " + tag, -k, exact_or_nan(j));
                 g.integer("multiplicity " + tag, binomial(v, k) - binomial(v, k - 1),
                           static_cast<long>(spectrum(j).multiplicity(-k)));
                 const auto part = johnson_partition(v, k);
                 const auto st = clique_partition_stats(part, j);
                 g.truth("r_S = k for all S, " + tag,
                         std::all_of(st.r.begin(), st.r.end(), [k = k](int r) { return r == k; }));
                 g.truth("clique certificate exists, " + tag, clique_equality_certificate(part, j).has_value());
             }
             const auto j52 = johnson(5, 2);
             const auto n = incidence_matrix(johnson_partition(5, 2), j52.order()).transpose();
             g.integer("kernel dimension of N^T, J(5,2)", 5, static_cast<long>(rational_nullspace(n).size()));
         }},
        {"kneser",
         [](Group& g, const Context&) {
             const int v = 6, k = 2, m = 3;
             const auto kn = kneser(v, k);
             g.exact("lambda = -C(mk-k-1,k-1)", -binomial(m * k - k - 1, k - 1), exact_or_nan(kn));
             auto cliques = enumerate_cliques(kn, m);
             std::erase_if(cliques, [&](const auto& c) { return static_cast<int>(c.size()) != m; });
             const int mu = uniform_cover(kn, cliques);
             const long mu_formula = factorial(m * k - 2 * k) / (power(factorial(k), m - 2) * factorial(m - 2));
             const long r_formula = factorial(m * k - k) / (power(factorial(k), m - 1) * factorial(m - 1));
             g.integer("mu", mu_formula, mu);
             CliquePartition part{mu, cliques};
             const auto st = clique_partition_stats(part, kn);
             g.truth("r_u = (mk-k)!/((k!)^(m-1)(m-1)!) for all u",
                     std::all_of(st.r.begin(), st.r.end(), [&](int r) { return r == r_formula; }));
             g.integer("omega", m, clique_number(kn));
             g.exact("chi_f = v/k", ratio(v, k), fractional_chromatic(kn));
             g.exact("lambda*_K", -3, lambda_star_K(kn).value);
             g.truth("clique certificate exists", clique_equality_certificate(part, kn).has_value());
         }},
        {"essential",
         [](Group& g, const Context&) {
             // C4 on u=0, a=1, v=2, b=3 with the edge ua replaced by the triangle u a w (w = 4)
             const auto gr = build_simple(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
             CliquePartition k{1, {{0, 1, 4}, {1, 2}, {2, 3}, {0, 3}}};
             const auto red = essential_vertices(k, gr);
             g.truth("V* = V(C4)", red.vertices == std::vector<Vertex>{0, 1, 2, 3});
             bool edges_only = red.partition.cliques.size() == 4;
             for (const auto& c : red.partition.cliques)
                 edges_only = edges_only && c.size() == 2;
             g.truth("K* = E(C4)", edges_only && isomorphic(red.graph, cycle_graph(4)));
             g.exact("lambda(G*) = -r(K*)/mu", -2, exact_or_nan(red.graph));
             g.real("lambda(G)", -2, lambda_min(gr), 1e-10);
         }},
        {"bipartite-remark",
         [](Group& g, const Context&) {
             const auto c6 = cycle_graph(6);
             g.exact("lambda*_K(C6) = -Delta", -2, lambda_star_K(c6).value);
             g.exact("lambda(C6)", -2, exact_or_nan(c6));
             CliquePartition c4{1, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
             g.truth("C4 edge partition certificate", clique_equality_certificate(c4, cycle_graph(4)).has_value());
         }},
        {"alon-sudakov",
         [](Group& g, const Context& ctx) {
             g.exact("C5", ratio(-29, 15), alon_sudakov_lower(cycle_graph(5)), "derived");
             g.exact("Petersen", ratio(-89, 30), alon_sudakov_lower(ctx.petersen()), "derived");
             g.truth("Trevisan bound on Petersen <= -2", trevisan_lower(ctx.petersen()).get_d() <= -2 + 1e-12,
                     "derived");
         }},
        {"circulants",
         [](Group& g, const Context&) {
             bool claw_free = true;
             for (int n = 5; n <= 21; ++n)
                 for (int r = 1; 2 * r < n; ++r)
                     claw_free = claw_free && is_K1k_free(circulant(n, r), 3).free;
             g.truth("C_{n,r} claw-free, n <= 21", claw_free);
             for (auto [n, r] : std::vector<std::pair<int, int>>{{12, 1}, {10, 2}, {30, 2}, {28, 3}}) {
                 const double bound = -1 - 1 / std::sin(3 * std::numbers::pi / (2 * (2 * r + 1)));
                 g.truth("lambda(C_{" + std::to_string(n) + "," + std::to_string(r) + "}) <= -1-1/sin(3pi/(2(2r+1)))",
                         lambda_min(circulant(n, r)) <= bound + 1e-9);
             }
         }},
        {"claw-free",
         [](Group& g, const Context&) {
             g.exact("t(3,3)", 1, turan_t(3, 3), "derived");
             g.exact("cubic claw-free -d+t(d,k)/(d-1)", ratio(-5, 2), aab_lower(prism_graph(3), 3));
             g.real("theta", -2.272, cubic_clawfree_theta(), 5e-4);
             const double th = cubic_clawfree_theta();
             g.real("theta^3 + theta + 14", 0, th * th * th + th + 14, 1e-12, "derived");
             bool all = true;
             for (int n = 6; n <= 12; n += 2)
                 for (const auto& h : cubic_clawfree_graphs(n))
                     all = all && cubic_clawfree_check(h).lambda >= th - 1e-9;
             g.truth("lambda >= theta on connected cubic claw-free graphs, n <= 12", all);
         }},
    };
    return all;
}

}  // namespace

auto reproduce_ids() -> std::vector<std::string>
{
    std::vector<std::string> ids;
    for (const auto& [id, fn] : groups())
        ids.push_back(id);
    return ids;
}

auto reproduce(const ReproOptions& opts) -> std::vector<ReproRow>
{
    const Context ctx{opts.perturb_petersen};
    std::vector<const std::pair<std::string, GroupFn>*> selected;
    for (const auto& entry : groups())
        if (opts.filter.empty() || entry.first.find(opts.filter) != std::string::npos)
            selected.push_back(&entry);

    std::vector<std::vector<ReproRow>> results(selected.size());
    auto run = [&](std::size_t i) {
        Group g(selected[i]->first, results[i]);
        try {
            selected[i]->second(g, ctx);
        }
        catch (const std::exception& ex) {
            g.error(ex.what());
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(selected.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i)
            run(i);
    }
    else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next++) < selected.size();)
                    run(i);
            });
        for (auto& th : pool)
            th.join();
    }
    std::vector<ReproRow> rows;
    for (auto& r : results)
        rows.insert(rows.end(), r.begin(), r.end());
    return rows;
}

auto to_json(const std::vector<ReproRow>& rows) -> nlohmann::json
{
    auto arr = nlohmann::json::array();
    std::size_t failed = 0;
    for (const auto& r : rows) {
        failed += !r.pass;
        arr.push_back({{"id", r.id},
                       {"quantity", r.quantity},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"diff", fixed12(r.diff)},
                       {"pass", r.pass},
                       {"provenance", r.provenance}});
    }
    return {{"rows", arr}, {"total", rows.size()}, {"failed", failed}};
}

auto format_table(const std::vector<ReproRow>& rows) -> std::string
{
    std::ostringstream out;
    char line[512];
    std::snprintf(line, sizeof line, "%-18s %-62s %-18s %-18s %-5s %s\n", "example", "quantity", "expected",
                  "computed", "pass", "source");
    out << line;
    std::size_t failed = 0;
    for (const auto& r : rows) {
        failed += !r.pass;
        std::snprintf(line, sizeof line, "%-18s %-62s %-18s %-18s %-5s %s\n", r.id.c_str(), r.quantity.c_str(),
                      r.expected.c_str(), r.computed.c_str(), r.pass ? "ok" : "FAIL", r.provenance.c_str());
        out << line;
    }
    out << rows.size() - failed << "/" << rows.size() << " rows pass\n";
    return out.str();
}

}  // namespace slb

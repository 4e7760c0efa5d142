#include "slb/bounds.hpp"

#include "slb/cliqopt.hpp"
#include "slb/decomp.hpp"
#include "slb/error.hpp"
#include "slb/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace slb {

namespace {

auto require_regular(const SimpleGraph& g, const char* who) -> int
{
    auto k = g.regular_degree();
    if (!k)
        throw InputError(std::string(who) + ": graph is not regular");
    return *k;
}

auto require_edges(const SimpleGraph& g, const char* who) -> void
{
    if (g.size() == 0)
        throw InputError(std::string(who) + ": graph has no edges");
}

}  // namespace

auto diameter(const SimpleGraph& g) -> int
{
    const int n = g.order();
    int best = 0;
    for (Vertex s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::deque<Vertex> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbour_list(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        for (int d : dist) {
            if (d < 0)
                throw InputError("diameter: graph is disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

auto hoffman_upper(const SimpleGraph& g) -> Rational
{
    const int k = require_regular(g, "hoffman_upper");
    require_edges(g, "hoffman_upper");
    const int a = independence_number(g);
    return ratio(-a * k, g.order() - a);
}

auto chromatic_uppers(const SimpleGraph& g) -> ChromaticUppers
{
    const int k = require_regular(g, "chromatic_uppers");
    require_edges(g, "chromatic_uppers");
    ChromaticUppers c;
    c.hoffman = hoffman_upper(g);
    c.chi_f = fractional_chromatic(g);
    c.chi = chromatic_number(g);
    c.fractional = -k / (c.chi_f - 1);
    c.chromatic = ratio(-k, c.chi - 1);
    if (!(c.hoffman <= c.fractional && c.fractional <= c.chromatic))
        throw CheckFailure("chromatic_uppers: chain -ak/(n-a) <= -k/(chi_f-1) <= -k/(chi-1) fails");
    return c;
}

auto lovasz_upper(const SimpleGraph& g) -> LovaszUpper
{
    require_edges(g, "lovasz_upper");
    const double top = lambda_max(g);
    LovaszUpper out;
    out.fractional = -top / Rational(fractional_chromatic(g) - 1).get_d();
    out.chromatic = -top / (chromatic_number(g) - 1);
    return out;
}

auto alon_sudakov_lower(const SimpleGraph& g) -> Rational
{
    if (!g.is_connected() || g.is_bipartite())
        throw InputError("alon_sudakov_lower: needs a connected nonbipartite graph");
    const int d = diameter(g);
    return Rational(-g.max_degree()) + Rational(1, (d + 1) * g.order());
}

auto bipartiteness_ratio(const SimpleGraph& g) -> BipartitenessRatio
{
    const int n = g.order();
    if (n > 14)
        throw InputError("bipartiteness_ratio: at most 14 vertices supported");
    require_edges(g, "bipartiteness_ratio");
    // side: 0 outside S, 1 in L, 2 in R
    std::vector<int> side(n, 0);
    std::vector<std::vector<Vertex>> earlier(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbour_list(v))
            if (u < v)
                earlier[v].push_back(u);

    long best_num = -1, best_den = 1;
    std::vector<int> best_side;
    std::function<void(int, long, long, bool)> go = [&](int v, long num, long den, bool any_left) {
        if (v == n) {
            if (den > 0 && (best_num < 0 || num * best_den < best_num * den)) {
                best_num = num;
                best_den = den;
                best_side = side;
            }
            return;
        }
        for (int s = 0; s < 3; ++s) {
            // L and R are interchangeable: the first vertex of S goes to L
            if (s == 2 && !any_left)
                continue;
            long add = 0;
            for (Vertex u : earlier[v]) {
                const int t = side[u];
                if (s == 0)
                    add += t != 0 ? 1 : 0;
                else if (t == 0)
                    add += 1;
                else if (t == s)
                    add += 2;
            }
            side[v] = s;
            go(v + 1, num + add, den + (s ? g.degree(v) : 0), any_left || s == 1);
        }
        side[v] = 0;
    };
    go(0, 0, 0, false);
    BipartitenessRatio out;
    out.beta = ratio(best_num, best_den);
    out.beta.canonicalize();
    for (Vertex v = 0; v < n; ++v) {
        if (best_side[v] == 1)
            out.left.push_back(v);
        else if (best_side[v] == 2)
            out.right.push_back(v);
    }
    return out;
}

auto trevisan_lower(const SimpleGraph& g) -> Rational
{
    const int d = require_regular(g, "trevisan_lower");
    const Rational beta = bipartiteness_ratio(g).beta;
    return Rational(-d) + beta * beta / d;
}

auto triangle_stats(const SimpleGraph& g) -> TriangleStats
{
    TriangleStats s;
    s.per_vertex.assign(static_cast<std::size_t>(g.order()), 0);
    int twice_at_vertex_sum = 0;
    for (auto [u, v] : g.edges()) {
        const int common = static_cast<int>((g.neighbours(u) & g.neighbours(v)).count());
        s.t = std::max(s.t, common);
        s.per_vertex[u] += common;
        s.per_vertex[v] += common;
        twice_at_vertex_sum += common;
    }
    for (auto& x : s.per_vertex)
        x /= 2;  // each triangle at u is seen from both of its edges at u
    s.total = twice_at_vertex_sum / 3;
    s.m = s.per_vertex.empty() ? 0 : *std::min_element(s.per_vertex.begin(), s.per_vertex.end());
    return s;
}

auto tm_lower(const SimpleGraph& g) -> TmBound
{
    const int d = require_regular(g, "tm_lower");
    if (!g.is_connected())
        throw InputError("tm_lower: graph is disconnected");
    const auto s = triangle_stats(g);
    TmBound b;
    if (s.t == 0) {
        b.value = -d;
        b.vacuous = true;
        return b;
    }
    b.value = Rational(-d) + ratio(s.m, s.t);
    b.value.canonicalize();
    return b;
}

auto is_K1k_free(const SimpleGraph& g, int k) -> StarCheck
{
    if (k < 3)
        throw InputError("is_K1k_free: k must be at least 3");
    StarCheck out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) < k)
            continue;
        const auto nb = g.neighbour_list(v);
        const auto mis = maximum_independent_set(g.induced(nb));
        if (static_cast<int>(mis.size()) >= k) {
            out.free = false;
            out.witness.push_back(v);
            for (int i = 0; i < k; ++i)
                out.witness.push_back(nb[mis[i]]);
            return out;
        }
    }
    return out;
}

auto aab_lower(const SimpleGraph& g, int k) -> Rational
{
    const int d = require_regular(g, "aab_lower");
    if (!g.is_connected())
        throw InputError("aab_lower: graph is disconnected");
    if (d < k)
        throw InputError("aab_lower: needs d >= k");
    if (!is_K1k_free(g, k).free)
        throw InputError("aab_lower: graph contains an induced K_{1," + std::to_string(k) + "}");
    return Rational(-d) + ratio(turan_t(d, k), d - 1);
}

auto cubic_clawfree_theta() -> double
{
    return smallest_cubic_root(1.0, 14.0);
}

auto cubic_clawfree_check(const SimpleGraph& g) -> CubicClawfreeReport
{
    const int n = g.order();
    if (n < 6 || !g.is_connected() || g.regular_degree() != 3)
        throw InputError("cubic_clawfree_check: needs a connected cubic graph on at least 6 vertices");
    if (!is_K1k_free(g, 3).free)
        throw InputError("cubic_clawfree_check: graph has a claw");

    CubicClawfreeReport rep;
    rep.theta = cubic_clawfree_theta();
    rep.lambda = lambda_min(g);
    for (Vertex v = 0; v < n; ++v) {
        const auto nb = g.neighbour_list(v);
        const auto inner = g.induced(nb).size();
        if (inner == 1)
            ++rep.triangle_plus_edge;
        else if (inner == 2)
            ++rep.path;
        else
            throw CheckFailure("cubic_clawfree_check: vertex " + std::to_string(v)
                               + " has a neighbourhood that is neither K1 u K2 nor K_{1,2}");
    }

    for (auto [u, v] : g.edges()) {
        const auto common = g.neighbours(u) & g.neighbours(v);
        if (common.count() != 2)
            continue;
        Diamond d{};
        d.u = u;
        d.v = v;
        d.a = static_cast<Vertex>(common.find_first());
        d.b = static_cast<Vertex>(common.find_next(d.a));
        if (g.adjacent(d.a, d.b))
            throw CheckFailure("cubic_clawfree_check: K4 inside a cubic graph on n >= 6 vertices");
        rep.diamonds.push_back(d);
        rep.middle_edges.push_back({u, v});
    }
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < rep.diamonds.size(); ++i) {
        const auto& d = rep.diamonds[i];
        for (Vertex x : {d.a, d.b, d.u, d.v}) {
            if (owner[x] >= 0)
                rep.diamonds_disjoint = false;
            owner[x] = static_cast<int>(i);
        }
    }
    if (!rep.diamonds_disjoint)
        throw CheckFailure("cubic_clawfree_check: two diamonds share a vertex");
    if ((rep.path == 0) != rep.diamonds.empty())
        throw CheckFailure("cubic_clawfree_check: K_{1,2} neighbourhoods and diamonds disagree");

    // Cliques: both triangles of each diamond, every other triangle, and the
    // edges left uncovered.
    std::vector<std::vector<Vertex>> cliques;
    std::set<std::vector<Vertex>> diamond_triangles;
    for (const auto& d : rep.diamonds)
        for (Vertex x : {d.a, d.b}) {
            std::vector<Vertex> t{x, d.u, d.v};
            std::sort(t.begin(), t.end());
            diamond_triangles.insert(t);
            cliques.push_back(t);
        }
    std::set<Edge> covered;
    for (auto [u, v] : g.edges()) {
        const auto common = g.neighbours(u) & g.neighbours(v);
        for (auto w = common.find_first(); w != VertexSet::npos; w = common.find_next(w)) {
            const auto x = static_cast<Vertex>(w);
            if (x < v)
                continue;  // list each triangle u < v < x once
            std::vector<Vertex> t{u, v, x};
            if (!diamond_triangles.count(t))
                cliques.push_back(t);
        }
    }
    for (const auto& c : cliques)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                covered.insert(pair_key(c[i], c[j]));
    for (auto e : g.edges())
        if (!covered.count(e))
            cliques.push_back({e.first, e.second});

    std::vector<std::vector<int>> mmt(n, std::vector<int>(n, 0));
    for (const auto& c : cliques)
        for (Vertex x : c)
            for (Vertex y : c)
                ++mmt[x][y];
    std::set<Edge> middle(rep.middle_edges.begin(), rep.middle_edges.end());
    rep.identity_holds = true;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            const int expected = (x == y ? 2 : 0) + (g.adjacent(x, y) ? 1 : 0)
                                 + (x != y && middle.count(pair_key(x, y)) ? 1 : 0);
            if (mmt[x][y] != expected)
                rep.identity_holds = false;
        }
    if (!rep.identity_holds)
        throw CheckFailure("cubic_clawfree_check: incidence identity fails");
    if (rep.lambda < rep.theta - 1e-9)
        throw CheckFailure("cubic_clawfree_check: lambda below theta");
    if (rep.diamonds.empty() && rep.lambda < -2 - 1e-9)
        throw CheckFailure("cubic_clawfree_check: diamond-free graph with lambda < -2");
    return rep;
}

auto deltbnd_check(const CliquePartition& k, const SimpleGraph& g) -> DeltaBoundCheck
{
    const auto s = clique_partition_stats(k, g);
    if (k.cliques.empty())
        throw InputError("deltbnd_check: partition is empty");
    const int n = g.order();
    const int c = s.c_min;
    const int delta = g.max_degree();
    DeltaBoundCheck out;
    out.ratio = ratio(s.r_max, k.mu);
    out.ratio.canonicalize();
    out.bound = ratio(delta, c - 1);
    out.bound.canonicalize();
    out.e.assign(n, 0);
    std::vector<bool> only_c(n, true), c_or_next(n, true);
    for (const auto& cl : k.cliques) {
        const int order = static_cast<int>(cl.size());
        for (Vertex v : cl) {
            if (order == c)
                ++out.e[v];
            else
                only_c[v] = false;
            if (order != c && order != c + 1)
                c_or_next[v] = false;
        }
    }
    for (Vertex u = 0; u < n; ++u)
        if (g.degree(u) == delta && only_c[u])
            out.tight = true;
    if (out.ratio > out.bound)
        throw CheckFailure("deltbnd_check: r/mu exceeds Delta/(c-1)");
    if (out.tight != (out.ratio == out.bound))
        throw CheckFailure("deltbnd_check: equality condition disagrees with the computed ratio");
    for (Vertex u = 0; u < n; ++u) {
        Rational v(k.mu * g.degree(u) + out.e[u], c);
        v.canonicalize();
        if (s.r[u] > v)
            throw CheckFailure("deltbnd_check: r_u exceeds (mu d_u + e_u)/c at vertex " + std::to_string(u));
        const bool eq = s.r[u] == v;
        if (eq != c_or_next[u])
            throw CheckFailure("deltbnd_check: small-clique equality condition disagrees at vertex "
                               + std::to_string(u));
        out.small_clique.push_back(v);
        out.small_clique_tight.push_back(eq);
    }
    return out;
}

auto product_tightness(const SimpleGraph& g1, const CliquePartition& k1, const SimpleGraph& g2,
                       const CliquePartition& k2) -> ProductTightness
{
    auto uniform = [](const SimpleGraph& g, const CliquePartition& k, const char* which) {
        const int deg = require_regular(g, "product_tightness");
        const auto s = clique_partition_stats(k, g);
        for (const auto& c : k.cliques)
            if (static_cast<int>(c.size()) != s.c_min)
                throw InputError(std::string("product_tightness: partition of ") + which
                                 + " has cliques of different orders");
        const Rational attained = ratio(-s.r_max, k.mu);
        if (std::abs(lambda_min(g) - attained.get_d()) > 1e-8)
            throw InputError(std::string("product_tightness: partition of ") + which
                             + " does not attain lambda");
        return std::pair{deg, s.c_min};
    };
    auto [d1, c1] = uniform(g1, k1, "G1");
    auto [d2, c2] = uniform(g2, k2, "G2");
    ProductTightness out;
    out.predicted = ratio(-d1 * d2, std::min(c1, c2) - 1);
    out.predicted.canonicalize();
    const auto prod = direct_product(g1, g2);
    out.lambda = lambda_min(prod);
    out.lambda_matches = std::abs(out.lambda - out.predicted.get_d()) <= 1e-8;
    if (prod.order() <= 24 && prod.size() > 0) {
        out.lambda_star_K = lambda_star_K(prod).value;
        out.lambda_star_matches = *out.lambda_star_K == out.predicted;
    }
    return out;
}

namespace {

/// Extends a partial vertex map to an automorphism by backtracking.
auto extend_automorphism(const SimpleGraph& g, std::vector<int>& map, std::vector<bool>& used, Vertex next) -> bool
{
    const int n = g.order();
    while (next < n && map[next] >= 0)
        ++next;
    if (next == n)
        return true;
    for (Vertex w = 0; w < n; ++w) {
        if (used[w] || g.degree(w) != g.degree(next))
            continue;
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            if (map[u] >= 0)
                ok = g.adjacent(u, next) == g.adjacent(map[u], w);
        if (!ok)
            continue;
        map[next] = w;
        used[w] = true;
        if (extend_automorphism(g, map, used, next + 1))
            return true;
        map[next] = -1;
        used[w] = false;
    }
    return false;
}

auto automorphism_with(const SimpleGraph& g, const std::vector<std::pair<Vertex, Vertex>>& fixed) -> bool
{
    const int n = g.order();
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    for (auto [x, y] : fixed) {
        if (map[x] >= 0 || used[y] || g.degree(x) != g.degree(y))
            return false;
        map[x] = y;
        used[y] = true;
    }
    for (auto [x, y] : fixed)
        for (auto [x2, y2] : fixed)
            if (g.adjacent(x, x2) != g.adjacent(y, y2))
                return false;
    return extend_automorphism(g, map, used, 0);
}

auto check_small(const SimpleGraph& g, const char* who) -> void
{
    if (g.order() > 10)
        throw InputError(std::string(who) + ": automorphism search is limited to 10 vertices");
}

}  // namespace

auto is_vertex_transitive(const SimpleGraph& g) -> bool
{
    check_small(g, "is_vertex_transitive");
    for (Vertex v = 1; v < g.order(); ++v)
        if (!automorphism_with(g, {{0, v}}))
            return false;
    return true;
}

auto is_edge_transitive(const SimpleGraph& g) -> bool
{
    check_small(g, "is_edge_transitive");
    const auto edges = g.edges();
    if (edges.empty())
        return true;
    const auto [a, b] = edges.front();
    for (auto [x, y] : edges)
        if (!automorphism_with(g, {{a, x}, {b, y}}) && !automorphism_with(g, {{a, y}, {b, x}}))
            return false;
    return true;
}

auto vertrans_bound(const SimpleGraph& g, bool assume_transitive) -> std::optional<VertransResult>
{
    const int n = g.order();
    if (n == 0)
        throw InputError("vertrans_bound: empty graph");
    VertransResult out;
    if (!assume_transitive) {
        if (!is_vertex_transitive(g) || !is_edge_transitive(g))
            return std::nullopt;
    }
    else
        out.conditional = true;
    const int omega = clique_number(g);
    if (independence_number(g) * omega != n)
        return std::nullopt;
    if (g.size() == 0) {
        out.value = 0;
        return out;
    }
    const int k = require_regular(g, "vertrans_bound");
    out.value = ratio(-k, omega - 1);
    out.value.canonicalize();
    return out;
}

// ---- report -----------------------------------------------------------------

auto BoundReport::violations(double tol) const -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto& e : entries) {
        const bool bad = e.kind == BoundKind::Lower   ? e.value > lambda + tol
                         : e.kind == BoundKind::Upper ? e.value < lambda - tol
                                                      : std::abs(e.value - lambda) > tol;
        if (bad) {
            std::ostringstream s;
            s.precision(12);
            s << graph << ": " << e.name << " = " << e.value << " vs lambda = " << lambda;
            out.push_back(s.str());
        }
    }
    return out;
}

namespace {

auto exact_entry(std::string name, BoundKind kind, const Rational& v, std::string note = {}) -> BoundEntry
{
    return BoundEntry{std::move(name), kind, v.get_d(), v, std::move(note)};
}

}  // namespace

auto bound_report(const SimpleGraph& g, const std::string& id, const ReportOptions& opts) -> BoundReport
{
    BoundReport rep;
    rep.graph = id;
    rep.lambda = lambda_min(g);
    const int n = g.order();
    const bool edges = g.size() > 0;
    const bool connected = g.is_connected();
    const auto regular = g.regular_degree();

    rep.entries.push_back(exact_entry("edge partition -Delta", BoundKind::Lower, Rational(-g.max_degree())));
    if (connected && !g.is_bipartite())
        rep.entries.push_back(exact_entry("Alon-Sudakov", BoundKind::Lower, alon_sudakov_lower(g)));
    if (regular && edges && n <= 14) {
        auto beta = bipartiteness_ratio(g).beta;
        rep.entries.push_back(
            exact_entry("Trevisan", BoundKind::Lower, Rational(-*regular) + beta * beta / *regular,
                        "beta = " + to_string(beta)));
    }
    if (regular && connected && edges) {
        auto tm = tm_lower(g);
        rep.entries.push_back(exact_entry("triangles -d+m/t", BoundKind::Lower, tm.value, tm.vacuous ? "vacuous" : ""));
        for (int k = 3; k <= *regular; ++k)
            if (is_K1k_free(g, k).free) {
                rep.entries.push_back(exact_entry("K_{1,k}-free -d+t(d,k)/(d-1)", BoundKind::Lower, aab_lower(g, k),
                                                  "k = " + std::to_string(k)));
                break;
            }
        if (*regular == 3 && n >= 6 && is_K1k_free(g, 3).free)
            rep.entries.push_back(BoundEntry{"cubic claw-free theta", BoundKind::Lower, cubic_clawfree_check(g).theta,
                                             std::nullopt, "smallest root of x^3+x+14"});
    }
    if (opts.partition) {
        auto b = clique_partition_bound(*opts.partition, g);
        rep.entries.push_back(exact_entry("clique partition -r/mu", BoundKind::Lower, b.value,
                                          b.degenerate ? "empty partition" : ""));
    }
    if (opts.lp && edges && n <= 24) {
        auto k = lambda_star_K(g);
        rep.entries.push_back(exact_entry("lambda*_K", BoundKind::Lower, k.value, "mu = " + std::to_string(k.mu)));
    }
    if (opts.lp && n <= 12) {
        auto c = lambda_star_C(as_weighted(g));
        std::string note = "mu = " + std::to_string(c.mu);
        if (!exact_least_eigenvalue(adjacency_matrix(g)))
            note += "; irrational lambda => strict";
        rep.entries.push_back(exact_entry("lambda*_C", BoundKind::Lower, c.value, note));
    }
    if (regular && edges && n <= 24) {
        auto c = chromatic_uppers(g);
        rep.entries.push_back(exact_entry("Hoffman", BoundKind::Upper, c.hoffman));
        rep.entries.push_back(exact_entry("-k/(chi_f-1)", BoundKind::Upper, c.fractional, "chi_f = " + to_string(c.chi_f)));
        rep.entries.push_back(exact_entry("-k/(chi-1)", BoundKind::Upper, c.chromatic, "chi = " + std::to_string(c.chi)));
    }
    if (edges && n <= 24) {
        auto l = lovasz_upper(g);
        rep.entries.push_back(BoundEntry{"Lovasz -lambda_1/(chi_f-1)", BoundKind::Upper, l.fractional, std::nullopt, ""});
        rep.entries.push_back(BoundEntry{"Lovasz -lambda_1/(chi-1)", BoundKind::Upper, l.chromatic, std::nullopt, ""});
    }
    if (n <= 10) {
        if (auto v = vertrans_bound(g))
            rep.entries.push_back(exact_entry("transitive -k/(omega-1)", BoundKind::Exact, v->value));
    }
    return rep;
}

namespace {

auto kind_name(BoundKind k) -> const char*
{
    switch (k) {
    case BoundKind::Lower:
        return "lower";
    case BoundKind::Upper:
        return "upper";
    case BoundKind::Exact:
        return "exact";
    }
    return "?";
}

auto fixed12(double v) -> std::string
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    std::string s = buf;
    return s == "-0.000000000000" ? "0.000000000000" : s;
}

}  // namespace

auto to_json(const BoundReport& r) -> nlohmann::json
{
    nlohmann::json j;
    j["graph"] = r.graph;
    j["lambda"] = fixed12(r.lambda);
    auto arr = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json x{{"name", e.name}, {"kind", kind_name(e.kind)}, {"value", fixed12(e.value)},
                         {"tight", std::abs(e.value - r.lambda) <= 1e-8}};
        if (e.exact)
            x["exact"] = to_string(*e.exact);
        if (!e.note.empty())
            x["note"] = e.note;
        arr.push_back(x);
    }
    j["bounds"] = arr;
    return j;
}

auto format_table(const BoundReport& r) -> std::string
{
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-32s %-6s %18s %12s %-5s  %s\n", "bound", "kind", "value", "exact", "tight",
                  "note");
    out << r.graph << ": lambda = " << fixed12(r.lambda) << "\n" << line;
    for (const auto& e : r.entries) {
        std::snprintf(line, sizeof line, "%-32s %-6s %18s %12s %-5s  %s\n", e.name.c_str(), kind_name(e.kind),
                      fixed12(e.value).c_str(), e.exact ? to_string(*e.exact).c_str() : "-",
                      std::abs(e.value - r.lambda) <= 1e-8 ? "yes" : "no", e.note.c_str());
        out << line;
    }
    return out.str();
}

}  // namespace slb

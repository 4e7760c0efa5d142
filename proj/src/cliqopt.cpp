#include "slb/cliqopt.hpp"

#include "slb/error.hpp"
#include "slb/lp.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace slb {

namespace {

auto masks32(const SimpleGraph& g, int cap, const char* who) -> std::vector<std::uint32_t>
{
    if (g.order() > cap)
        throw InputError(std::string(who) + ": at most " + std::to_string(cap) + " vertices supported, got "
                         + std::to_string(g.order()));
    std::vector<std::uint32_t> m;
    for (auto x : g.masks())
        m.push_back(static_cast<std::uint32_t>(x));
    return m;
}

auto mask_vertices(std::uint32_t mask) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (; mask; mask &= mask - 1)
        out.push_back(std::countr_zero(mask));
    return out;
}

auto max_clique_mask(const std::vector<std::uint32_t>& adj) -> std::uint32_t
{
    std::uint32_t best = 0;
    std::function<void(std::uint32_t, std::uint32_t)> grow = [&](std::uint32_t r, std::uint32_t p) {
        if (std::popcount(r) + std::popcount(p) <= std::popcount(best))
            return;
        if (p == 0) {
            best = r;
            return;
        }
        const int v = std::countr_zero(p);
        grow(r | (1u << v), p & adj[v]);
        grow(r, p & ~(1u << v));
    };
    const std::uint32_t all = adj.size() == 32 ? ~0u : (1u << adj.size()) - 1;
    grow(0, all);
    return best;
}

auto complement_masks(const std::vector<std::uint32_t>& adj) -> std::vector<std::uint32_t>
{
    const auto n = adj.size();
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> out(n);
    for (std::size_t v = 0; v < n; ++v)
        out[v] = all & ~adj[v] & ~(1u << v);
    return out;
}

auto maximal_cliques_of(const std::vector<std::uint32_t>& adj) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> out;
    std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> bk = [&](std::uint32_t r, std::uint32_t p,
                                                                              std::uint32_t x) {
        if (p == 0 && x == 0) {
            out.push_back(r);
            return;
        }
        // pivot: vertex of p | x with most neighbours in p
        const std::uint32_t px = p | x;
        int pivot = std::countr_zero(px);
        int most = -1;
        for (std::uint32_t s = px; s; s &= s - 1) {
            const int u = std::countr_zero(s);
            const int c = std::popcount(p & adj[u]);
            if (c > most) {
                most = c;
                pivot = u;
            }
        }
        for (std::uint32_t s = p & ~adj[pivot]; s; s &= s - 1) {
            const int v = std::countr_zero(s);
            const std::uint32_t bit = 1u << v;
            bk(r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    const auto n = adj.size();
    if (n == 0)
        return out;
    bk(0, n == 32 ? ~0u : (1u << n) - 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

auto to_int(const Integer& z, const char* what) -> int
{
    if (!z.fits_sint_p())
        throw CheckFailure(std::string(what) + " does not fit in an int");
    return static_cast<int>(z.get_si());
}

}  // namespace

auto enumerate_cliques(const SimpleGraph& g, int min_size) -> std::vector<std::vector<Vertex>>
{
    const auto adj = masks32(g, 24, "enumerate_cliques");
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> current;
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t candidates) {
        if (static_cast<int>(current.size()) >= min_size)
            out.push_back(current);
        for (std::uint32_t s = candidates; s; s &= s - 1) {
            const int v = std::countr_zero(s);
            current.push_back(v);
            // only later vertices, so each clique is generated once
            extend(candidates & adj[v] & ~((2u << v) - 1));
            current.pop_back();
        }
    };
    const int n = g.order();
    extend(n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

auto maximal_cliques(const SimpleGraph& g) -> std::vector<std::uint32_t>
{
    return maximal_cliques_of(masks32(g, 32, "maximal_cliques"));
}

auto clique_number(const SimpleGraph& g) -> int
{
    return std::popcount(max_clique_mask(masks32(g, 32, "clique_number")));
}

auto maximum_independent_set(const SimpleGraph& g) -> std::vector<Vertex>
{
    return mask_vertices(max_clique_mask(complement_masks(masks32(g, 32, "independence_number"))));
}

auto independence_number(const SimpleGraph& g) -> int
{
    return static_cast<int>(maximum_independent_set(g).size());
}

auto fractional_chromatic(const SimpleGraph& g) -> Rational
{
    const auto adj = masks32(g, 24, "fractional_chromatic");
    if (g.order() == 0)
        return 0;
    const auto sets = maximal_cliques_of(complement_masks(adj));
    RationalLP lp(LpSense::Minimize);
    for (std::size_t k = 0; k < sets.size(); ++k)
        lp.add_variable(1);
    for (Vertex v = 0; v < g.order(); ++v) {
        LpRow row;
        row.type = RowType::GreaterEq;
        row.rhs = 1;
        for (std::size_t k = 0; k < sets.size(); ++k)
            if (sets[k] >> v & 1u)
                row.coeffs.emplace_back(k, Rational(1));
        lp.add_row(std::move(row));
    }
    auto sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw CheckFailure("fractional chromatic LP is " + to_string(sol.status));
    if (auto why = check_optimality(lp, sol); !why.empty())
        throw CheckFailure("fractional chromatic LP: " + why);
    return sol.objective;
}

auto chromatic_number(const SimpleGraph& g) -> int
{
    const auto adj = masks32(g, 24, "chromatic_number");
    const int n = g.order();
    if (n == 0)
        return 0;
    const int lower = std::popcount(max_clique_mask(adj));
    std::vector<int> colour(n, -1);
    int best = n;

    std::function<void(int, int)> search = [&](int coloured, int used) {
        if (used >= best || best == lower)
            return;
        if (coloured == n) {
            best = used;
            return;
        }
        // DSATUR: most distinct neighbour colours, ties by uncoloured degree
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0)
                continue;
            std::uint32_t seen = 0;
            int deg = 0;
            for (std::uint32_t s = adj[v]; s; s &= s - 1) {
                const int u = std::countr_zero(s);
                if (colour[u] >= 0)
                    seen |= 1u << colour[u];
                else
                    ++deg;
            }
            const int sat = std::popcount(seen);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::uint32_t blocked = 0;
        for (std::uint32_t s = adj[pick]; s; s &= s - 1) {
            const int u = std::countr_zero(s);
            if (colour[u] >= 0)
                blocked |= 1u << colour[u];
        }
        for (int c = 0; c < used; ++c) {
            if (blocked >> c & 1u)
                continue;
            colour[pick] = c;
            search(coloured + 1, used);
            colour[pick] = -1;
        }
        if (used + 1 < best) {
            colour[pick] = used;
            search(coloured + 1, used + 1);
            colour[pick] = -1;
        }
    };
    search(0, 0);
    return best;
}

auto turan_t(int d, int k) -> std::int64_t
{
    if (k < 3 || d < k)
        throw InputError("turan_t: need d >= k >= 3");
    const std::int64_t parts = k - 1, q = d / parts, rem = d % parts;
    auto pairs = [](std::int64_t s) { return s * (s - 1) / 2; };
    return rem * pairs(q + 1) + (parts - rem) * pairs(q);
}

auto lambda_star_K(const SimpleGraph& g) -> LambdaStarResult
{
    if (g.size() == 0)
        throw InputError("lambda_star_K: graph has no edges");
    const auto cliques = enumerate_cliques(g, 2);
    const auto n = static_cast<std::size_t>(g.order());

    RationalLP model(LpSense::Minimize);
    for (std::size_t k = 0; k < cliques.size(); ++k)
        model.add_variable(0);
    const auto t = model.add_variable(1);
    std::map<Edge, std::size_t> edge_row;
    std::vector<LpRow> rows;
    for (auto e : g.edges()) {
        edge_row[e] = rows.size();
        rows.push_back(LpRow{{}, RowType::Equal, 1});
    }
    std::vector<LpRow> vertex_rows(n, LpRow{{}, RowType::LessEq, 0});
    for (std::size_t k = 0; k < cliques.size(); ++k) {
        const auto& c = cliques[k];
        for (std::size_t a = 0; a < c.size(); ++a) {
            vertex_rows[c[a]].coeffs.emplace_back(k, Rational(1));
            for (std::size_t b = a + 1; b < c.size(); ++b)
                rows[edge_row[pair_key(c[a], c[b])]].coeffs.emplace_back(k, Rational(1));
        }
    }
    for (auto& r : rows)
        model.add_row(std::move(r));
    for (auto& r : vertex_rows) {
        if (r.coeffs.empty())
            continue;
        r.coeffs.emplace_back(t, Rational(-1));
        model.add_row(std::move(r));
    }

    auto sol = solve(model);
    if (sol.status != LpStatus::Optimal)
        throw CheckFailure("lambda*_K LP is " + to_string(sol.status));
    if (auto why = check_optimality(model, sol); !why.empty())
        throw CheckFailure("lambda*_K LP: " + why);

    LambdaStarResult out;
    out.value = -sol.objective;
    out.warm_start_used = sol.warm_start_used;
    out.mu = to_int(denominator_lcm(sol.x), "mu");
    out.partition.mu = out.mu;
    for (std::size_t k = 0; k < cliques.size(); ++k) {
        const Rational times = sol.x[k] * out.mu;
        if (times.get_den() != 1)
            throw CheckFailure("lambda*_K: non-integral multiplicity after scaling");
        for (long i = 0; i < times.get_num().get_si(); ++i)
            out.partition.cliques.push_back(cliques[k]);
    }
    auto bound = clique_partition_bound(out.partition, g);
    if (bound.value != out.value)
        throw CheckFailure("lambda*_K: certificate gives " + to_string(bound.value) + ", LP gives "
                           + to_string(out.value));
    for (int r : clique_partition_stats(out.partition, g).r)
        out.per_vertex.emplace_back(r);
    return out;
}

auto lambda_star_C(const WeightedGraph& h) -> LambdaStarResult
{
    const int n = h.order();
    if (n < 1 || n > 12)
        throw InputError("lambda_star_C: need 1 <= n <= 12, got " + std::to_string(n));

    struct Column {
        std::uint32_t set;
        CompleteKind kind;
        int sign;
        Rational lambda;
    };
    std::vector<Column> cols;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const int size = std::popcount(s);
        if (size >= 2) {
            cols.push_back({s, CompleteKind::K, 1, Rational(-1)});
            cols.push_back({s, CompleteKind::K, -1, Rational(-(size - 1))});
        }
        cols.push_back({s, CompleteKind::J, 1, Rational(size == 1 ? 1 : 0)});
        cols.push_back({s, CompleteKind::J, -1, Rational(-size)});
    }

    RationalLP lp(LpSense::Maximize);
    for (std::size_t k = 0; k < cols.size(); ++k)
        lp.add_variable(0);
    const auto lambda = lp.add_variable(1, true);

    std::vector<std::vector<std::size_t>> pair_row(n, std::vector<std::size_t>(n));
    std::vector<LpRow> rows;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            pair_row[u][v] = rows.size();
            rows.push_back(LpRow{{}, RowType::Equal, h.weight(u, v)});
        }
    std::vector<LpRow> vertex_rows(n, LpRow{{}, RowType::GreaterEq, 0});
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const auto members = mask_vertices(cols[k].set);
        const Rational sign = cols[k].sign;
        for (std::size_t a = 0; a < members.size(); ++a) {
            if (cols[k].lambda != 0)
                vertex_rows[members[a]].coeffs.emplace_back(k, cols[k].lambda);
            if (cols[k].kind == CompleteKind::J)
                rows[pair_row[members[a]][members[a]]].coeffs.emplace_back(k, sign);
            for (std::size_t b = a + 1; b < members.size(); ++b)
                rows[pair_row[members[a]][members[b]]].coeffs.emplace_back(k, sign);
        }
    }
    for (auto& r : rows)
        lp.add_row(std::move(r));
    for (auto& r : vertex_rows) {
        r.coeffs.emplace_back(lambda, Rational(-1));
        lp.add_row(std::move(r));
    }

    auto sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw CheckFailure("lambda*_C LP is " + to_string(sol.status));
    if (auto why = check_optimality(lp, sol); !why.empty())
        throw CheckFailure("lambda*_C LP: " + why);

    LambdaStarResult out;
    out.value = sol.objective;
    out.warm_start_used = sol.warm_start_used;
    std::vector<Rational> z(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(cols.size()));
    out.mu = to_int(denominator_lcm(z), "mu");
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (sgn(z[k]) != 0)
            out.decomposition.pieces.push_back(
                CompletePiece{cols[k].kind, mask_vertices(cols[k].set), cols[k].sign * z[k] * out.mu});
    const auto target = h.scaled(out.mu);
    auto bound = complete_decomposition_bound(out.decomposition, target);
    if (bound.value != out.value * out.mu)
        throw CheckFailure("lambda*_C: certificate gives " + to_string(bound.value / out.mu) + ", LP gives "
                           + to_string(out.value));
    out.per_vertex = bound.per_vertex;
    return out;
}

auto to_json(const LambdaStarResult& r, bool complete) -> nlohmann::json
{
    nlohmann::json j;
    j["value"] = to_string(r.value);
    j["mu"] = r.mu;
    if (complete) {
        auto pieces = nlohmann::json::array();
        for (const auto& p : r.decomposition.pieces)
            pieces.push_back({{"kind", p.kind == CompleteKind::K ? "K" : "J"},
                              {"vertices", p.vertices},
                              {"coefficient", to_string(p.coefficient)}});
        j["pieces"] = pieces;
    }
    else
        j["cliques"] = r.partition.cliques;
    return j;
}

}  // namespace slb

#include "slb/enumerate.hpp"

#include "slb/error.hpp"
#include "slb/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace slb {

auto cycles_of_length(const SimpleGraph& g, int length) -> std::vector<std::vector<Vertex>>
{
    if (length < 3)
        throw InputError("cycles_of_length: length must be at least 3");
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path;
    std::vector<bool> on_path(g.order(), false);
    std::function<void(Vertex)> walk = [&](Vertex start) {
        const Vertex last = path.back();
        if (static_cast<int>(path.size()) == length) {
            if (g.adjacent(last, start) && path[1] < path.back())
                out.push_back(path);
            return;
        }
        for (Vertex w : g.neighbour_list(last)) {
            if (w <= start || on_path[w])
                continue;
            on_path[w] = true;
            path.push_back(w);
            walk(start);
            path.pop_back();
            on_path[w] = false;
        }
    };
    for (Vertex s = 0; s < g.order(); ++s) {
        path = {s};
        on_path[s] = true;
        walk(s);
        on_path[s] = false;
    }
    return out;
}

auto triangles(const SimpleGraph& g) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> out;
    for (auto [u, v] : g.edges())
        for (Vertex w : g.neighbour_list(v))
            if (w > v && g.adjacent(u, w))
                out.push_back({u, v, w});
    return out;
}

namespace {

/// Colour refinement starting from degrees; returns stable colours.
auto refine(const SimpleGraph& g) -> std::vector<int>
{
    const int n = g.order();
    std::vector<int> colour(n);
    for (Vertex v = 0; v < n; ++v)
        colour[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (Vertex w : g.neighbour_list(v))
                nb.push_back(colour[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {colour[v], std::move(nb)};
            ids.emplace(sig[v], 0);
        }
        int next = 0;
        for (auto& kv : ids)
            kv.second = next++;
        std::vector<int> fresh(n);
        for (Vertex v = 0; v < n; ++v)
            fresh[v] = ids[sig[v]];
        const bool stable = std::set<int>(fresh.begin(), fresh.end()).size()
                            == std::set<int>(colour.begin(), colour.end()).size();
        colour = std::move(fresh);
        if (stable)
            break;
    }
    return colour;
}

/// Refinement colours are only comparable across graphs through their
/// signatures, so both graphs are refined jointly on their disjoint union.
auto joint_colours(const SimpleGraph& a, const SimpleGraph& b) -> std::pair<std::vector<int>, std::vector<int>>
{
    const auto u = disjoint_union(a, b);
    const auto c = refine(u);
    return {std::vector<int>(c.begin(), c.begin() + a.order()), std::vector<int>(c.begin() + a.order(), c.end())};
}

auto invariant(const SimpleGraph& g) -> std::string
{
    std::string key = std::to_string(g.order()) + ":" + std::to_string(g.size()) + ":";
    std::vector<int> deg;
    for (Vertex v = 0; v < g.order(); ++v)
        deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    for (int d : deg)
        key += std::to_string(d) + ",";
    if (g.order() > 0)
        for (double x : spectrum(g).values) {
            const long r = std::lround(x * 1e6);
            key += std::to_string(r == 0 ? 0 : r) + ";";
        }
    return key;
}

}  // namespace

auto isomorphic(const SimpleGraph& a, const SimpleGraph& b) -> bool
{
    const int n = a.order();
    if (n != b.order() || a.size() != b.size())
        return false;
    auto [ca, cb] = joint_colours(a, b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    // Map vertices of a in order of rarest colour class first.
    std::map<int, int> class_size;
    for (int c : ca)
        ++class_size[c];
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v)
        order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex x, Vertex y) { return class_size[ca[x]] < class_size[ca[y]]; });
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> go = [&](int i) {
        if (i == n)
            return true;
        const Vertex v = order[i];
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || cb[w] != ca[v])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = a.adjacent(order[j], v) == b.adjacent(map[order[j]], w);
            if (!ok)
                continue;
            map[v] = w;
            used[w] = true;
            if (go(i + 1))
                return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    return go(0);
}

auto unique_up_to_isomorphism(const std::vector<SimpleGraph>& graphs) -> std::vector<SimpleGraph>
{
    std::map<std::string, std::vector<std::size_t>> buckets;
    std::vector<SimpleGraph> out;
    for (const auto& g : graphs) {
        auto& bucket = buckets[invariant(g)];
        bool seen = false;
        for (std::size_t idx : bucket)
            if (isomorphic(out[idx], g)) {
                seen = true;
                break;
            }
        if (!seen) {
            bucket.push_back(out.size());
            out.push_back(g);
        }
    }
    return out;
}

auto all_graphs(int n) -> std::vector<SimpleGraph>
{
    if (n < 0 || n > 7)
        throw InputError("all_graphs: 0 <= n <= 7 supported");
    std::vector<SimpleGraph> level{build_simple(0, {})};
    for (int m = 1; m <= n; ++m) {
        std::vector<SimpleGraph> next;
        for (const auto& g : level) {
            const auto base = g.edges();
            for (unsigned nb = 0; nb < (1u << (m - 1)); ++nb) {
                auto edges = base;
                for (int u = 0; u < m - 1; ++u)
                    if (nb >> u & 1u)
                        edges.push_back({u, m - 1});
                next.push_back(build_simple(m, edges));
            }
        }
        level = unique_up_to_isomorphism(next);
    }
    return level;
}

auto connected_graphs(int n) -> std::vector<SimpleGraph>
{
    std::vector<SimpleGraph> out;
    for (auto& g : all_graphs(n))
        if (g.is_connected())
            out.push_back(std::move(g));
    return out;
}

auto cubic_clawfree_graphs(int n) -> std::vector<SimpleGraph>
{
    if (n < 6 || n > 12 || n % 2)
        throw InputError("cubic_clawfree_graphs: n must be even with 6 <= n <= 12");
    std::vector<SimpleGraph> found;
    // 3 * lone triangles + 4 * diamonds = n
    for (int d = 0; 4 * d <= n; ++d) {
        if ((n - 4 * d) % 3)
            continue;
        const int t = (n - 4 * d) / 3;
        std::vector<Edge> internal;
        std::vector<Vertex> ports;
        std::vector<int> unit;
        int next = 0, unit_id = 0;
        for (int i = 0; i < t; ++i, ++unit_id) {
            const Vertex a = next++, b = next++, c = next++;
            internal.insert(internal.end(), {{a, b}, {b, c}, {a, c}});
            for (Vertex x : {a, b, c}) {
                ports.push_back(x);
                unit.push_back(unit_id);
            }
        }
        for (int i = 0; i < d; ++i, ++unit_id) {
            // a, b of degree 2 inside the diamond; u v is the middle edge
            const Vertex a = next++, b = next++, u = next++, v = next++;
            internal.insert(internal.end(), {{u, v}, {a, u}, {a, v}, {b, u}, {b, v}});
            for (Vertex x : {a, b}) {
                ports.push_back(x);
                unit.push_back(unit_id);
            }
        }
        const std::size_t p = ports.size();
        std::vector<bool> used(p, false);
        std::vector<Edge> matching;
        std::function<void()> match = [&]() {
            std::size_t i = 0;
            while (i < p && used[i])
                ++i;
            if (i == p) {
                auto edges = internal;
                edges.insert(edges.end(), matching.begin(), matching.end());
                auto g = build_simple(n, edges);
                if (g.size() == static_cast<std::size_t>(3 * n / 2) && g.regular_degree() == 3 && g.is_connected())
                    found.push_back(std::move(g));
                return;
            }
            used[i] = true;
            for (std::size_t j = i + 1; j < p; ++j) {
                if (used[j] || unit[i] == unit[j])
                    continue;
                used[j] = true;
                matching.push_back({ports[i], ports[j]});
                match();
                matching.pop_back();
                used[j] = false;
            }
            used[i] = false;
        };
        match();
    }
    return unique_up_to_isomorphism(found);
}

auto random_graph(int n, double p, std::mt19937_64& rng) -> SimpleGraph
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return build_simple(n, edges);
}

auto random_connected_graph(int n, double p, std::mt19937_64& rng) -> SimpleGraph
{
    for (;;) {
        auto g = random_graph(n, p, rng);
        if (g.is_connected())
            return g;
    }
}

namespace {

auto random_subset(int n, int min_size, std::mt19937_64& rng) -> std::vector<Vertex>
{
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v)
        all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    const int size = std::uniform_int_distribution<int>(min_size, n)(rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

auto random_coefficient(std::mt19937_64& rng) -> Rational
{
    static const int nums[] = {-3, -2, -1, 1, 1, 2, 3};
    const int num = nums[std::uniform_int_distribution<int>(0, 6)(rng)];
    const int den = std::uniform_int_distribution<int>(1, 3)(rng);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

auto random_decomposition(const WeightedGraph& target, std::mt19937_64& rng) -> Decomposition
{
    const int n = target.order();
    Decomposition d{target, {}};
    std::map<Edge, Rational> sum;
    const int extra = n >= 2 ? std::uniform_int_distribution<int>(0, 3)(rng) : 0;
    for (int i = 0; i < extra; ++i) {
        const auto subset = random_subset(n, 2, rng);
        const int m = static_cast<int>(subset.size());
        const Rational c = random_coefficient(rng);
        WeightedGraph piece;
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
            piece = special_graph(SpecialKind::Complete, m).scaled(c);
            break;
        case 1:
            piece = special_graph(SpecialKind::LoopedComplete, m).scaled(c);
            break;
        default:
            piece = weighted_from_simple(random_graph(m, 0.5, rng), c);
            break;
        }
        for (const auto& [key, w] : piece.weights())
            sum[pair_key(subset[key.first], subset[key.second])] += w;
        d.pieces.push_back(Piece{piece, subset});
    }
    // remainder = target - pieces so far
    std::map<Edge, Rational> rest = target.weights();
    for (const auto& [key, w] : sum)
        rest[key] -= w;
    std::erase_if(rest, [](const auto& kv) { return kv.second == 0; });
    if (rest.empty())
        return d;
    if (std::bernoulli_distribution(0.5)(rng)) {
        d.pieces.push_back(Piece{WeightedGraph(n, rest), [&] {
                                     std::vector<Vertex> all(n);
                                     for (Vertex v = 0; v < n; ++v)
                                         all[v] = v;
                                     return all;
                                 }()});
    }
    else {
        for (const auto& [key, w] : rest) {
            if (key.first == key.second)
                d.pieces.push_back(Piece{WeightedGraph(1, {{{0, 0}, w}}), {key.first}});
            else
                d.pieces.push_back(Piece{WeightedGraph(2, {{{0, 1}, w}}), {key.first, key.second}});
        }
    }
    return d;
}

}  // namespace slb

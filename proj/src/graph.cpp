#include "slb/graph.hpp"

#include "slb/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace slb {

namespace {

auto check_vertex(Vertex u, int n, const char* what) -> void
{
    if (u < 0 || u >= n)
        throw InputError(std::string(what) + ": vertex " + std::to_string(u) + " out of range for order "
                         + std::to_string(n));
}

auto checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) -> std::int64_t
{
    std::int64_t prod = 0, sum = 0;
    if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum))
        throw InputError("power_multigraph: walk count overflows 64 bits");
    return sum;
}

}  // namespace

// ---- SimpleGraph ----------------------------------------------------------

auto build_simple(int n, std::span<const Edge> edges) -> SimpleGraph
{
    if (n < 0)
        throw InputError("build_simple: negative order");
    SimpleGraph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges) {
        check_vertex(u, n, "build_simple");
        check_vertex(v, n, "build_simple");
        if (u == v)
            throw InputError("build_simple: loop at vertex " + std::to_string(u));
        if (!g.adj_[u].test(v))
            ++g.edge_count_;
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

auto SimpleGraph::neighbour_list(Vertex u) const -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (auto v = adj_[u].find_first(); v != VertexSet::npos; v = adj_[u].find_next(v))
        out.push_back(static_cast<Vertex>(v));
    return out;
}

auto SimpleGraph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<Vertex>(v));
    return out;
}

auto SimpleGraph::max_degree() const -> int
{
    int d = 0;
    for (Vertex u = 0; u < n_; ++u)
        d = std::max(d, degree(u));
    return d;
}

auto SimpleGraph::min_degree() const -> int
{
    if (n_ == 0)
        return 0;
    int d = std::numeric_limits<int>::max();
    for (Vertex u = 0; u < n_; ++u)
        d = std::min(d, degree(u));
    return d;
}

auto SimpleGraph::regular_degree() const -> std::optional<int>
{
    if (n_ == 0 || min_degree() != max_degree())
        return std::nullopt;
    return max_degree();
}

auto SimpleGraph::is_connected() const -> bool
{
    if (n_ == 0)
        return true;
    VertexSet seen(static_cast<std::size_t>(n_));
    std::vector<Vertex> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        VertexSet fresh = adj_[u] - seen;
        for (auto v = fresh.find_first(); v != VertexSet::npos; v = fresh.find_next(v)) {
            seen.set(v);
            stack.push_back(static_cast<Vertex>(v));
        }
    }
    return seen.all();
}

auto SimpleGraph::is_bipartite() const -> bool
{
    std::vector<int> side(static_cast<std::size_t>(n_), -1);
    for (Vertex s = 0; s < n_; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : neighbour_list(u)) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    q.push(v);
                }
                else if (side[v] == side[u])
                    return false;
            }
        }
    }
    return true;
}

auto SimpleGraph::complement() const -> SimpleGraph
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adjacent(u, v))
                e.emplace_back(u, v);
    return build_simple(n_, e);
}

auto SimpleGraph::induced(std::span<const Vertex> vertices) const -> SimpleGraph
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i], n_, "induced");
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return build_simple(static_cast<int>(vertices.size()), e);
}

auto SimpleGraph::masks() const -> std::vector<std::uint64_t>
{
    if (n_ > 64)
        throw InputError("masks: order above 64");
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n_), 0);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbour_list(u))
            out[u] |= std::uint64_t{1} << v;
    return out;
}

// ---- WeightedGraph --------------------------------------------------------

WeightedGraph::WeightedGraph(int n, std::map<Edge, Rational> weights, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels))
{
    if (n < 0)
        throw InputError("WeightedGraph: negative order");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n))
        throw InputError("WeightedGraph: label count does not match order");
    for (auto& [key, w] : weights) {
        check_vertex(key.first, n, "WeightedGraph");
        check_vertex(key.second, n, "WeightedGraph");
        if (w == 0)
            continue;
        w_[pair_key(key.first, key.second)] += w;
    }
    std::erase_if(w_, [](const auto& kv) { return kv.second == 0; });
}

auto WeightedGraph::weight(Vertex u, Vertex v) const -> Rational
{
    auto it = w_.find(pair_key(u, v));
    return it == w_.end() ? Rational(0) : it->second;
}

auto WeightedGraph::has_loops() const -> bool
{
    return std::any_of(w_.begin(), w_.end(), [](const auto& kv) { return kv.first.first == kv.first.second; });
}

auto WeightedGraph::adjacency() const -> RationalMatrix
{
    RationalMatrix a(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
    for (const auto& [key, w] : w_) {
        a(key.first, key.second) = w;
        a(key.second, key.first) = w;
    }
    return a;
}

auto WeightedGraph::scaled(const Rational& c) const -> WeightedGraph
{
    std::map<Edge, Rational> w;
    if (c != 0)
        for (const auto& [key, x] : w_)
            w.emplace(key, x * c);
    return WeightedGraph(n_, std::move(w), labels_);
}

auto WeightedGraph::as_simple() const -> std::optional<SimpleGraph>
{
    std::vector<Edge> e;
    for (const auto& [key, w] : w_) {
        if (key.first == key.second || w != 1)
            return std::nullopt;
        e.push_back(key);
    }
    return build_simple(n_, e);
}

// ---- Multigraph -----------------------------------------------------------

Multigraph::Multigraph(int n, std::map<Edge, std::int64_t> mult) : n_(n)
{
    if (n < 0)
        throw InputError("Multigraph: negative order");
    for (auto [key, m] : mult) {
        check_vertex(key.first, n, "Multigraph");
        check_vertex(key.second, n, "Multigraph");
        if (m < 0)
            throw InputError("Multigraph: negative multiplicity");
        if (m > 0)
            mult_[pair_key(key.first, key.second)] += m;
    }
}

auto Multigraph::multiplicity(Vertex u, Vertex v) const -> std::int64_t
{
    auto it = mult_.find(pair_key(u, v));
    return it == mult_.end() ? 0 : it->second;
}

auto Multigraph::loopless() const -> bool
{
    return std::none_of(mult_.begin(), mult_.end(), [](const auto& kv) { return kv.first.first == kv.first.second; });
}

auto Multigraph::max_multiplicity() const -> std::int64_t
{
    std::int64_t m = 0;
    for (const auto& [key, x] : mult_)
        if (key.first != key.second)
            m = std::max(m, x);
    return m;
}

auto Multigraph::as_weighted() const -> WeightedGraph
{
    std::map<Edge, Rational> w;
    for (const auto& [key, x] : mult_)
        w.emplace(key, Rational(static_cast<long>(x)));
    return WeightedGraph(n_, std::move(w));
}

// ---- constructors and arithmetic ------------------------------------------

auto weighted_from_simple(const SimpleGraph& g, const Rational& c) -> WeightedGraph
{
    std::map<Edge, Rational> w;
    if (c != 0)
        for (auto e : g.edges())
            w.emplace(e, c);
    return WeightedGraph(g.order(), std::move(w));
}

auto as_multigraph(const SimpleGraph& g) -> Multigraph
{
    std::map<Edge, std::int64_t> m;
    for (auto e : g.edges())
        m.emplace(e, 1);
    return Multigraph(g.order(), std::move(m));
}

auto special_graph(SpecialKind kind, int n) -> WeightedGraph
{
    if (n < 1)
        throw InputError("special_graph: order must be positive");
    if (kind == SpecialKind::Complete && n == 1)
        throw InputError("special_graph: K_1 has no edges and is not used");
    std::map<Edge, Rational> w;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v) {
            bool loop = u == v;
            if ((kind == SpecialKind::LoopGraph && loop) || kind == SpecialKind::LoopedComplete
                || (kind == SpecialKind::Complete && !loop))
                w.emplace(Edge{u, v}, 1);
        }
    return WeightedGraph(n, std::move(w));
}

auto add(const WeightedGraph& base, const WeightedGraph& piece, std::span<const Vertex> embedding)
    -> WeightedGraph
{
    if (embedding.size() != static_cast<std::size_t>(piece.order()))
        throw InputError("add: embedding size does not match piece order");
    std::set<Vertex> image;
    for (Vertex v : embedding) {
        check_vertex(v, base.order(), "add");
        if (!image.insert(v).second)
            throw InputError("add: embedding is not injective");
    }
    std::map<Edge, Rational> w = base.weights();
    for (const auto& [key, x] : piece.weights())
        w[pair_key(embedding[key.first], embedding[key.second])] += x;
    return WeightedGraph(base.order(), std::move(w), base.labels());
}

auto add(const WeightedGraph& a, const WeightedGraph& b) -> WeightedGraph
{
    if (a.order() != b.order())
        throw InputError("add: orders differ and no embedding given");
    std::vector<Vertex> id(static_cast<std::size_t>(b.order()));
    for (Vertex v = 0; v < b.order(); ++v)
        id[v] = v;
    return add(a, b, id);
}

auto power_multigraph(const SimpleGraph& g, int k) -> Multigraph
{
    if (k < 1)
        throw InputError("power_multigraph: exponent must be positive");
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::int64_t> a(n * n, 0);
    for (auto [u, v] : g.edges())
        a[u * n + v] = a[v * n + u] = 1;
    std::vector<std::int64_t> p = a;
    for (int step = 1; step < k; ++step) {
        std::vector<std::int64_t> next(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i * n + l] == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[i * n + j] = checked_mul_add(next[i * n + j], a[i * n + l], p[l * n + j]);
            }
        p = std::move(next);
    }
    std::map<Edge, std::int64_t> m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (p[i * n + j] != 0)
                m.emplace(Edge{static_cast<Vertex>(i), static_cast<Vertex>(j)}, p[i * n + j]);
    return Multigraph(g.order(), std::move(m));
}

auto cartesian_product(const SimpleGraph& g1, const SimpleGraph& g2) -> SimpleGraph
{
    const int n1 = g1.order(), n2 = g2.order();
    std::vector<Edge> e;
    for (Vertex u = 0; u < n1; ++u)
        for (auto [x, y] : g2.edges())
            e.emplace_back(u * n2 + x, u * n2 + y);
    for (auto [u, v] : g1.edges())
        for (Vertex x = 0; x < n2; ++x)
            e.emplace_back(u * n2 + x, v * n2 + x);
    return build_simple(n1 * n2, e);
}

auto direct_product(const SimpleGraph& g1, const SimpleGraph& g2) -> SimpleGraph
{
    const int n2 = g2.order();
    std::vector<Edge> e;
    for (auto [u, v] : g1.edges())
        for (auto [x, y] : g2.edges()) {
            e.emplace_back(u * n2 + x, v * n2 + y);
            e.emplace_back(u * n2 + y, v * n2 + x);
        }
    return build_simple(g1.order() * n2, e);
}

auto composition(const SimpleGraph& g1, const SimpleGraph& g2) -> SimpleGraph
{
    const int n2 = g2.order();
    std::vector<Edge> e;
    for (auto [u, v] : g1.edges())
        for (Vertex x = 0; x < n2; ++x)
            for (Vertex y = 0; y < n2; ++y)
                e.emplace_back(u * n2 + x, v * n2 + y);
    for (Vertex u = 0; u < g1.order(); ++u)
        for (auto [x, y] : g2.edges())
            e.emplace_back(u * n2 + x, u * n2 + y);
    return build_simple(g1.order() * n2, e);
}

auto disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) -> SimpleGraph
{
    std::vector<Edge> e = g1.edges();
    for (auto [x, y] : g2.edges())
        e.emplace_back(x + g1.order(), y + g1.order());
    return build_simple(g1.order() + g2.order(), e);
}

auto line_graph_vertices(const Multigraph& g) -> std::vector<Edge>
{
    if (!g.loopless())
        throw InputError("line_graph: multigraph has loops (convert them with loops_to_pendants)");
    std::vector<Edge> out;
    for (const auto& [key, m] : g.multiplicities())
        for (std::int64_t i = 0; i < m; ++i)
            out.push_back(key);
    return out;
}

auto line_graph(const Multigraph& g) -> SimpleGraph
{
    auto verts = line_graph_vertices(g);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            auto [a, b] = verts[i];
            auto [c, d] = verts[j];
            int common = (a == c) + (a == d) + (b == c) + (b == d);
            if (common == 1)
                e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    return build_simple(static_cast<int>(verts.size()), e);
}

auto loops_to_pendants(const Multigraph& g) -> Multigraph
{
    std::map<Edge, std::int64_t> m;
    int next = g.order();
    for (const auto& [key, x] : g.multiplicities()) {
        if (key.first != key.second) {
            m.emplace(key, x);
            continue;
        }
        for (std::int64_t i = 0; i < x; ++i)
            m.emplace(Edge{key.first, next++}, 1);
    }
    return Multigraph(next, std::move(m));
}

auto twig_replicate(const SimpleGraph& g, const std::map<Edge, std::int64_t>& mult) -> Multigraph
{
    std::map<Edge, std::int64_t> m;
    for (auto e : g.edges())
        m.emplace(e, 1);
    for (const auto& [raw, x] : mult) {
        auto key = pair_key(raw.first, raw.second);
        check_vertex(key.first, g.order(), "twig_replicate");
        check_vertex(key.second, g.order(), "twig_replicate");
        if (!g.adjacent(key.first, key.second))
            throw InputError("twig_replicate: pair is not an edge");
        if (x < 1)
            throw InputError("twig_replicate: multiplicity must be positive");
        if (x > 1 && g.degree(key.first) != 1 && g.degree(key.second) != 1)
            throw InputError("twig_replicate: edge " + std::to_string(key.first) + "-" + std::to_string(key.second)
                             + " is not a twig");
        m[key] = x;
    }
    return Multigraph(g.order(), std::move(m));
}

auto adjacency_matrix(const SimpleGraph& g) -> RationalMatrix
{
    const auto n = static_cast<std::size_t>(g.order());
    RationalMatrix a(n, n);
    for (auto [u, v] : g.edges())
        a(u, v) = a(v, u) = 1;
    return a;
}

auto adjacency_matrix(const Multigraph& g) -> RationalMatrix
{
    return g.as_weighted().adjacency();
}

}  // namespace slb

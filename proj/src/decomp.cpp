#include "slb/decomp.hpp"

#include "slb/error.hpp"
#include "slb/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace slb {

using nlohmann::json;

auto ValidationReport::describe() const -> std::string
{
    std::ostringstream out;
    for (const auto& m : mismatches)
        out << "pair {" << m.pair.first << "," << m.pair.second << "}: expected " << to_string(m.expected)
            << ", pieces sum to " << to_string(m.actual) << "\n";
    for (const auto& p : problems)
        out << p << "\n";
    return out.str();
}

auto make_piece(const SimpleGraph& g, std::vector<Vertex> embedding, const Rational& c) -> Piece
{
    if (embedding.size() != static_cast<std::size_t>(g.order()))
        throw InputError("make_piece: embedding size does not match graph order");
    return Piece{weighted_from_simple(g, c), std::move(embedding)};
}

namespace {

auto compare_weights(const std::map<Edge, Rational>& expected, const std::map<Edge, Rational>& actual,
                     ValidationReport& report) -> void
{
    std::set<Edge> keys;
    for (const auto& kv : expected)
        keys.insert(kv.first);
    for (const auto& kv : actual)
        keys.insert(kv.first);
    for (auto key : keys) {
        auto e = expected.find(key);
        auto a = actual.find(key);
        Rational ev = e == expected.end() ? Rational(0) : e->second;
        Rational av = a == actual.end() ? Rational(0) : a->second;
        if (ev != av)
            report.mismatches.push_back({key, ev, av});
    }
}

auto check_embedding(const std::vector<Vertex>& emb, int n, std::size_t expected_size, const std::string& who,
                     ValidationReport& report) -> bool
{
    if (emb.size() != expected_size) {
        report.problems.push_back(who + ": embedding size " + std::to_string(emb.size()) + " does not match order "
                                  + std::to_string(expected_size));
        return false;
    }
    std::set<Vertex> seen;
    for (Vertex v : emb) {
        if (v < 0 || v >= n) {
            report.problems.push_back(who + ": vertex " + std::to_string(v) + " out of range");
            return false;
        }
        if (!seen.insert(v).second) {
            report.problems.push_back(who + ": vertex " + std::to_string(v) + " repeated");
            return false;
        }
    }
    return true;
}

auto require_valid(const ValidationReport& r, const char* who) -> void
{
    if (!r.ok())
        throw InputError(std::string(who) + ": invalid input\n" + r.describe());
}

}  // namespace

auto validate(const Decomposition& d) -> ValidationReport
{
    ValidationReport report;
    std::map<Edge, Rational> sum;
    for (std::size_t j = 0; j < d.pieces.size(); ++j) {
        const auto& p = d.pieces[j];
        if (!check_embedding(p.embedding, d.target.order(), static_cast<std::size_t>(p.graph.order()),
                             "piece " + std::to_string(j), report))
            continue;
        for (const auto& [key, w] : p.graph.weights())
            sum[pair_key(p.embedding[key.first], p.embedding[key.second])] += w;
    }
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    compare_weights(d.target.weights(), sum, report);
    return report;
}

auto piece_lambda(SpecialKind kind, int order, const Rational& a) -> PieceLambda
{
    if (order < 1)
        throw InputError("piece_lambda: order must be positive");
    Rational value = 0;
    switch (kind) {
    case SpecialKind::LoopGraph:
        value = a;
        break;
    case SpecialKind::LoopedComplete:
        if (order == 1)
            value = a;
        else
            value = a > 0 ? Rational(0) : a * order;
        break;
    case SpecialKind::Complete:
        if (order < 2)
            throw InputError("piece_lambda: K_1 is not a valid piece");
        value = a > 0 ? Rational(-a) : Rational(a * (order - 1));
        break;
    }
    return PieceLambda{value.get_d(), value};
}

auto piece_lambda(const WeightedGraph& piece) -> PieceLambda
{
    const int n = piece.order();
    if (n == 0)
        throw InputError("piece_lambda: piece has no vertices");
    const auto& w = piece.weights();
    if (w.empty())
        return PieceLambda{0.0, Rational(0)};

    // Recognise a*I_n, a*J_n and a*K_n.
    std::optional<Rational> diag, off;
    bool uniform = true;
    std::size_t loops = 0, others = 0;
    for (const auto& [key, x] : w) {
        auto& slot = key.first == key.second ? diag : off;
        (key.first == key.second ? loops : others)++;
        if (!slot)
            slot = x;
        else if (*slot != x)
            uniform = false;
    }
    const auto all_pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (uniform) {
        const bool full_diag = loops == static_cast<std::size_t>(n);
        const bool full_off = others == all_pairs;
        if (full_diag && others == 0)
            return piece_lambda(SpecialKind::LoopGraph, n, *diag);
        if (full_diag && full_off && (n == 1 || *diag == *off))
            return piece_lambda(SpecialKind::LoopedComplete, n, *diag);
        if (loops == 0 && full_off && n >= 2)
            return piece_lambda(SpecialKind::Complete, n, *off);
    }

    const auto a = piece.adjacency();
    PieceLambda out;
    out.value = spectrum(a).smallest();
    out.exact = exact_least_eigenvalue(a);
    if (out.exact)
        out.value = out.exact->get_d();
    return out;
}

auto decomposition_bound(const Decomposition& d) -> DecompositionBound
{
    require_valid(validate(d), "decomposition_bound");
    const auto n = static_cast<std::size_t>(d.target.order());
    DecompositionBound out;
    out.per_vertex.assign(n, 0.0);
    std::vector<Rational> exact(n, Rational(0));
    bool all_exact = true;
    for (const auto& p : d.pieces) {
        auto pl = piece_lambda(p.graph);
        out.piece_lambdas.push_back(pl);
        all_exact = all_exact && pl.exact.has_value();
        for (Vertex v : p.embedding) {
            out.per_vertex[v] += pl.value;
            if (pl.exact)
                exact[v] += *pl.exact;
        }
    }
    if (n == 0)
        return out;
    if (all_exact) {
        Rational best = *std::min_element(exact.begin(), exact.end());
        out.exact = best;
        out.value = best.get_d();
        for (std::size_t u = 0; u < n; ++u)
            out.per_vertex[u] = exact[u].get_d();
    }
    else
        out.value = *std::min_element(out.per_vertex.begin(), out.per_vertex.end());
    return out;
}

namespace {

constexpr double numeric_kernel_tol = 1e-8;

auto embedded_adjacency(const Piece& p, std::size_t n) -> RationalMatrix
{
    RationalMatrix m(n, n);
    for (const auto& [key, w] : p.graph.weights()) {
        m(p.embedding[key.first], p.embedding[key.second]) = w;
        m(p.embedding[key.second], p.embedding[key.first]) = w;
    }
    return m;
}

/// Checks the two equality conditions on x: x vanishes on vertices whose
/// lambda(D_u) exceeds the bound, and each restriction x_j is zero or an
/// eigenvector of its piece for lambda(H^j).
template <class T, class Zero>
auto equality_conditions_hold(const Decomposition& d, const std::vector<bool>& strict, const std::vector<T>& lambdas,
                              const std::vector<T>& x, Zero is_zero) -> bool
{
    for (std::size_t u = 0; u < x.size(); ++u)
        if (strict[u] && !is_zero(x[u]))
            return false;
    for (std::size_t j = 0; j < d.pieces.size(); ++j) {
        const auto& p = d.pieces[j];
        const auto m = p.embedding.size();
        std::vector<T> r(m, T(0));
        for (std::size_t i = 0; i < m; ++i)
            r[i] -= lambdas[j] * x[p.embedding[i]];
        for (const auto& [key, w] : p.graph.weights()) {
            T wt;
            if constexpr (std::is_same_v<T, Rational>)
                wt = w;
            else
                wt = w.get_d();
            r[key.first] += wt * x[p.embedding[key.second]];
            if (key.first != key.second)
                r[key.second] += wt * x[p.embedding[key.first]];
        }
        for (const auto& v : r)
            if (!is_zero(v))
                return false;
    }
    return true;
}

auto unit(std::vector<double> v) -> std::vector<double>
{
    double s = 0;
    for (double x : v)
        s += x * x;
    s = std::sqrt(s);
    for (double& x : v)
        x /= s;
    return v;
}

}  // namespace

auto equality_certificate(const Decomposition& d) -> std::optional<Certificate>
{
    const auto b = decomposition_bound(d);
    const auto n = static_cast<std::size_t>(d.target.order());
    if (n == 0)
        return std::nullopt;

    if (b.exact) {
        const Rational r = -*b.exact;
        RationalMatrix p(n, n);
        for (std::size_t j = 0; j < d.pieces.size(); ++j) {
            p = p + embedded_adjacency(d.pieces[j], n);
            for (Vertex v : d.pieces[j].embedding)
                p(v, v) -= *b.piece_lambdas[j].exact;
        }
        // rI - R, with R = diag(-lambda(D_u))
        std::vector<Rational> du(n, Rational(0));
        for (std::size_t j = 0; j < d.pieces.size(); ++j)
            for (Vertex v : d.pieces[j].embedding)
                du[v] += *b.piece_lambdas[j].exact;
        for (std::size_t u = 0; u < n; ++u)
            p(u, u) += r + du[u];

        auto kernel = rational_nullspace(p);
        if (kernel.empty())
            return std::nullopt;
        Certificate c;
        c.exact = true;
        c.exact_vector = kernel.front();
        c.kernel_dimension = kernel.size();
        std::vector<double> xd;
        for (const auto& q : c.exact_vector)
            xd.push_back(q.get_d());
        c.numeric_vector = unit(std::move(xd));
        std::vector<bool> strict(n);
        for (std::size_t u = 0; u < n; ++u)
            strict[u] = du[u] > *b.exact;
        std::vector<Rational> lambdas;
        for (const auto& pl : b.piece_lambdas)
            lambdas.push_back(*pl.exact);
        if (!equality_conditions_hold(d, strict, lambdas, c.exact_vector, [](const Rational& q) { return q == 0; }))
            throw CheckFailure("equality_certificate: exact kernel vector violates the equality conditions");
        return c;
    }

    const double r = -b.value;
    RealMatrix p(n, n);
    for (std::size_t j = 0; j < d.pieces.size(); ++j) {
        p = p + to_real(embedded_adjacency(d.pieces[j], n));
        for (Vertex v : d.pieces[j].embedding)
            p(v, v) -= b.piece_lambdas[j].value;
    }
    for (std::size_t u = 0; u < n; ++u)
        p(u, u) += r + b.per_vertex[u];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            p(i, j) = p(j, i) = 0.5 * (p(i, j) + p(j, i));
    const auto s = spectrum(p);
    std::size_t dim = 0;
    for (double v : s.values)
        if (std::abs(v) <= numeric_kernel_tol)
            ++dim;
    if (dim == 0)
        return std::nullopt;
    std::size_t first = 0;
    while (std::abs(s.values[first]) > numeric_kernel_tol)
        ++first;
    Certificate c;
    c.exact = false;
    c.kernel_dimension = dim;
    c.numeric_vector = s.vector(first);
    std::vector<bool> strict(n);
    for (std::size_t u = 0; u < n; ++u)
        strict[u] = b.per_vertex[u] > b.value + numeric_kernel_tol;
    std::vector<double> lambdas;
    for (const auto& pl : b.piece_lambdas)
        lambdas.push_back(pl.value);
    if (!equality_conditions_hold(d, strict, lambdas, c.numeric_vector,
                                  [](double v) { return std::abs(v) <= 1e-7; }))
        throw CheckFailure("equality_certificate: numeric kernel vector violates the equality conditions");
    return c;
}

auto smallest_cubic_root(double p, double q) -> double
{
    auto f = [&](double x) { return (x * x + p) * x + q; };
    auto df = [&](double x) { return 3 * x * x + p; };
    const double bound = 1 + std::abs(p) + std::abs(q);
    double lo = -bound, hi = bound;
    if (p < 0) {
        const double m = std::sqrt(-p / 3);
        if (f(-m) >= 0)
            hi = -m;
        else
            lo = m;
    }
    // f is increasing on [lo, hi] with f(lo) <= 0 <= f(hi).
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double slope = df(x);
        if (slope == 0)
            break;
        const double next = x - f(x) / slope;
        if (std::abs(f(next)) >= std::abs(f(x)))
            break;
        x = next;
    }
    return x;
}

auto cubic_power_bound(const SimpleGraph& g, const CubicPowerDecomposition& d3) -> CubicPowerBound
{
    if (d3.alpha <= 0)
        throw InputError("cubic_power_bound: alpha must be positive so that lambda(alpha G) = alpha lambda(G)");
    const int n = g.order();
    if (n < 2)
        throw InputError("cubic_power_bound: need at least two vertices");
    const auto cube = power_multigraph(g, 3);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v) {
            Rational expected = u == v ? d3.gamma : d3.beta + (g.adjacent(u, v) ? d3.alpha : Rational(0));
            if (Rational(static_cast<long>(cube.multiplicity(u, v))) != expected)
                throw InputError("cubic_power_bound: A^3 entry (" + std::to_string(u) + "," + std::to_string(v)
                                 + ") is " + std::to_string(cube.multiplicity(u, v)) + ", decomposition gives "
                                 + to_string(expected));
        }
    CubicPowerBound out;
    out.c = 0;
    if (d3.beta != 0)
        out.c += *piece_lambda(SpecialKind::Complete, n, d3.beta).exact;
    if (d3.gamma != 0)
        out.c += *piece_lambda(SpecialKind::LoopGraph, n, d3.gamma).exact;
    out.value = smallest_cubic_root(-d3.alpha.get_d(), -out.c.get_d());
    return out;
}

// ---- complete graph decompositions ----------------------------------------

namespace {

auto add_complete_piece(std::map<Edge, Rational>& w, const CompletePiece& p) -> void
{
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (p.kind == CompleteKind::J)
            w[pair_key(p.vertices[i], p.vertices[i])] += p.coefficient;
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
            w[pair_key(p.vertices[i], p.vertices[j])] += p.coefficient;
    }
}

auto complete_piece_lambda(const CompletePiece& p) -> Rational
{
    return *piece_lambda(p.kind == CompleteKind::K ? SpecialKind::Complete : SpecialKind::LoopedComplete,
                         static_cast<int>(p.vertices.size()), p.coefficient)
                .exact;
}

}  // namespace

auto validate(const CompleteDecomposition& c, const WeightedGraph& target) -> ValidationReport
{
    ValidationReport report;
    std::map<Edge, Rational> sum;
    for (std::size_t j = 0; j < c.pieces.size(); ++j) {
        const auto& p = c.pieces[j];
        const std::string who = "piece " + std::to_string(j);
        const std::size_t min_order = p.kind == CompleteKind::K ? 2 : 1;
        if (p.vertices.size() < min_order) {
            report.problems.push_back(who + ": too few vertices");
            continue;
        }
        if (p.coefficient == 0) {
            report.problems.push_back(who + ": zero coefficient");
            continue;
        }
        if (!check_embedding(p.vertices, target.order(), p.vertices.size(), who, report))
            continue;
        add_complete_piece(sum, p);
    }
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    compare_weights(target.weights(), sum, report);
    return report;
}

auto to_decomposition(const CompleteDecomposition& c, const WeightedGraph& target) -> Decomposition
{
    Decomposition d{target, {}};
    for (const auto& p : c.pieces) {
        const int m = static_cast<int>(p.vertices.size());
        auto kind = p.kind == CompleteKind::K ? SpecialKind::Complete : SpecialKind::LoopedComplete;
        d.pieces.push_back(Piece{special_graph(kind, m).scaled(p.coefficient), p.vertices});
    }
    return d;
}

auto complete_decomposition_bound(const CompleteDecomposition& c, const WeightedGraph& target) -> CompleteBound
{
    require_valid(validate(c, target), "complete_decomposition_bound");
    CompleteBound out;
    out.per_vertex.assign(static_cast<std::size_t>(target.order()), Rational(0));
    for (const auto& p : c.pieces) {
        Rational l = complete_piece_lambda(p);
        for (Vertex v : p.vertices)
            out.per_vertex[v] += l;
    }
    out.value = out.per_vertex.empty() ? Rational(0)
                                       : *std::min_element(out.per_vertex.begin(), out.per_vertex.end());
    return out;
}

auto complete_equality_certificate(const CompleteDecomposition& c, const WeightedGraph& target)
    -> std::optional<std::vector<Rational>>
{
    const auto b = complete_decomposition_bound(c, target);
    const auto n = static_cast<std::size_t>(target.order());
    if (n == 0)
        return std::nullopt;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t u = 0; u < n; ++u)
        if (b.per_vertex[u] > b.value) {
            std::vector<Rational> row(n, Rational(0));
            row[u] = 1;
            rows.push_back(std::move(row));
        }
    for (const auto& p : c.pieces) {
        if (p.coefficient < 0) {
            for (std::size_t i = 1; i < p.vertices.size(); ++i) {
                std::vector<Rational> row(n, Rational(0));
                row[p.vertices[i]] = 1;
                row[p.vertices[0]] = -1;
                rows.push_back(std::move(row));
            }
        }
        else if (p.vertices.size() > 1) {
            std::vector<Rational> row(n, Rational(0));
            for (Vertex v : p.vertices)
                row[v] = 1;
            rows.push_back(std::move(row));
        }
    }
    RationalMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = rows[i][j];
    auto kernel = rational_nullspace(m);
    if (kernel.empty())
        return std::nullopt;
    return kernel.front();
}

// ---- clique partitions ------------------------------------------------------

auto validate(const CliquePartition& k, const SimpleGraph& g) -> ValidationReport
{
    ValidationReport report;
    if (k.mu < 1)
        report.problems.push_back("mu must be a positive integer");
    std::map<Edge, int> cover;
    for (std::size_t j = 0; j < k.cliques.size(); ++j) {
        const auto& c = k.cliques[j];
        const std::string who = "clique " + std::to_string(j);
        if (c.size() < 2) {
            report.problems.push_back(who + ": cliques need at least two vertices");
            continue;
        }
        if (!check_embedding(c, g.order(), c.size(), who, report))
            continue;
        bool is_clique = true;
        for (std::size_t a = 0; a < c.size() && is_clique; ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                if (!g.adjacent(c[a], c[b])) {
                    report.problems.push_back(who + ": " + std::to_string(c[a]) + " and " + std::to_string(c[b])
                                              + " are not adjacent");
                    is_clique = false;
                    break;
                }
        if (!is_clique)
            continue;
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                ++cover[pair_key(c[a], c[b])];
    }
    for (auto e : g.edges()) {
        int times = cover.count(e) ? cover[e] : 0;
        if (times != k.mu)
            report.problems.push_back("edge {" + std::to_string(e.first) + "," + std::to_string(e.second)
                                      + "} covered " + std::to_string(times) + " times, expected "
                                      + std::to_string(k.mu));
    }
    return report;
}

auto clique_partition_stats(const CliquePartition& k, const SimpleGraph& g) -> CliqueStats
{
    require_valid(validate(k, g), "clique partition");
    CliqueStats s;
    s.r.assign(static_cast<std::size_t>(g.order()), 0);
    for (const auto& c : k.cliques) {
        for (Vertex v : c)
            ++s.r[v];
        const int order = static_cast<int>(c.size());
        s.c_min = s.c_min == 0 ? order : std::min(s.c_min, order);
    }
    for (int x : s.r)
        s.r_max = std::max(s.r_max, x);
    return s;
}

auto clique_partition_bound(const CliquePartition& k, const SimpleGraph& g) -> CliqueBound
{
    auto s = clique_partition_stats(k, g);
    CliqueBound b;
    b.degenerate = k.cliques.empty();
    b.value = ratio(-s.r_max, k.mu);
    b.value.canonicalize();
    return b;
}

auto incidence_matrix(const CliquePartition& k, int n) -> RationalMatrix
{
    RationalMatrix m(static_cast<std::size_t>(n), k.cliques.size());
    for (std::size_t j = 0; j < k.cliques.size(); ++j)
        for (Vertex v : k.cliques[j])
            m(v, j) = 1;
    return m;
}

auto clique_equality_certificate(const CliquePartition& k, const SimpleGraph& g)
    -> std::optional<std::vector<Rational>>
{
    auto s = clique_partition_stats(k, g);
    const auto n = static_cast<std::size_t>(g.order());
    if (n == 0)
        return std::nullopt;
    std::size_t low = 0;
    for (int x : s.r)
        low += x < s.r_max;
    RationalMatrix m(k.cliques.size() + low, n);
    std::size_t row = 0;
    for (const auto& c : k.cliques) {
        for (Vertex v : c)
            m(row, v) = 1;
        ++row;
    }
    for (std::size_t u = 0; u < n; ++u)
        if (s.r[u] < s.r_max)
            m(row++, u) = 1;
    auto kernel = rational_nullspace(m);
    if (kernel.empty())
        return std::nullopt;
    return kernel.front();
}

auto essential_vertices(const CliquePartition& k, const SimpleGraph& g) -> EssentialReduction
{
    auto s = clique_partition_stats(k, g);
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<bool> in(n, false);
    for (std::size_t u = 0; u < n; ++u)
        in[u] = s.r[u] == s.r_max;

    EssentialReduction out;
    for (;;) {
        std::vector<Vertex> drop;
        for (const auto& c : k.cliques) {
            Vertex only = -1;
            int hits = 0;
            for (Vertex v : c)
                if (in[v]) {
                    ++hits;
                    only = v;
                }
            if (hits == 1)
                drop.push_back(only);
        }
        if (drop.empty())
            break;
        ++out.iterations;
        for (Vertex v : drop)
            in[v] = false;
    }

    std::vector<int> index(n, -1);
    for (std::size_t u = 0; u < n; ++u)
        if (in[u]) {
            index[u] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(static_cast<Vertex>(u));
        }
    out.graph = g.induced(out.vertices);
    out.partition.mu = k.mu;
    for (const auto& c : k.cliques) {
        std::vector<Vertex> restricted;
        for (Vertex v : c)
            if (in[v])
                restricted.push_back(index[v]);
        if (restricted.empty())
            continue;
        if (restricted.size() == 1)
            throw CheckFailure("essential_vertices: fixed point has a clique meeting V* in one vertex");
        out.partition.cliques.push_back(std::move(restricted));
    }
    if (!out.vertices.empty()) {
        auto rs = clique_partition_stats(out.partition, out.graph);
        for (int x : rs.r)
            if (x != s.r_max)
                throw CheckFailure("essential_vertices: r_u(K*) differs from r(K) on V*");
    }
    return out;
}

// ---- line graphs of multigraphs -------------------------------------------

namespace {

struct ClawParts {
    std::vector<std::int64_t> max_part;  ///< per vertex of the multigraph
    std::vector<int> part_count;
};

auto claw_parts(const Multigraph& g) -> ClawParts
{
    if (!g.loopless())
        throw InputError("line_graph_bound: multigraph has loops (convert them with loops_to_pendants)");
    ClawParts c;
    c.max_part.assign(static_cast<std::size_t>(g.order()), 0);
    c.part_count.assign(static_cast<std::size_t>(g.order()), 0);
    for (const auto& [key, m] : g.multiplicities())
        for (Vertex w : {key.first, key.second}) {
            c.max_part[w] = std::max(c.max_part[w], m);
            ++c.part_count[w];
        }
    return c;
}

}  // namespace

auto line_graph_bound(const Multigraph& g) -> LineGraphBound
{
    const auto parts = claw_parts(g);
    LineGraphBound out;
    out.mu = g.max_multiplicity();
    out.floor = Rational(-2 * out.mu);
    bool any = false;
    for (const auto& [key, m] : g.multiplicities()) {
        Rational claw = 0, refined = 0;
        for (Vertex w : {key.first, key.second})
            if (parts.part_count[w] >= 2) {
                claw -= parts.max_part[w];
                refined -= m;
            }
        if (!any || claw < out.claw_bound)
            out.claw_bound = claw;
        if (!any || refined < out.refined_bound)
            out.refined_bound = refined;
        any = true;
    }
    return out;
}

auto claw_decomposition(const Multigraph& g) -> Decomposition
{
    const auto parts = claw_parts(g);
    const auto verts = line_graph_vertices(g);
    const auto lg = line_graph(g);
    Decomposition d{as_weighted(lg), {}};
    for (Vertex u = 0; u < g.order(); ++u) {
        if (parts.part_count[u] < 2)
            continue;
        std::vector<Vertex> incident;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (verts[i].first == u || verts[i].second == u)
                incident.push_back(static_cast<Vertex>(i));
        d.pieces.push_back(make_piece(lg.induced(incident), incident));
    }
    return d;
}

// ---- JSON -----------------------------------------------------------------

auto to_json(const CliquePartition& k) -> json
{
    return {{"mu", k.mu}, {"cliques", k.cliques}};
}

auto partition_from_json(const json& j) -> CliquePartition
{
    try {
        CliquePartition k;
        k.mu = j.at("mu").get<int>();
        k.cliques = j.at("cliques").get<std::vector<std::vector<Vertex>>>();
        return k;
    }
    catch (const json::exception& ex) {
        throw InputError(std::string("partition JSON: ") + ex.what());
    }
}

auto read_partition_file(const std::string& path) -> CliquePartition
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return partition_from_json(json::parse(in));
    }
    catch (const json::parse_error& ex) {
        throw InputError(std::string("partition JSON: ") + ex.what());
    }
}

}  // namespace slb

#pragma once

// Immutable graph values: simple graphs (bitset rows), weighted graphs with
// exact rational weights (loops allowed), and multigraphs. Product graphs
// index the vertex (u, v) as u * n2 + v.

#include "slb/matrix.hpp"
#include "slb/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace slb {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<>;

/// Unordered pair key with first <= second.
inline auto pair_key(Vertex u, Vertex v) -> Edge { return u <= v ? Edge{u, v} : Edge{v, u}; }

class SimpleGraph {
public:
    SimpleGraph() = default;

    auto order() const -> int { return n_; }
    auto size() const -> std::size_t { return edge_count_; }

    auto adjacent(Vertex u, Vertex v) const -> bool { return adj_[u].test(v); }
    auto neighbours(Vertex u) const -> const VertexSet& { return adj_[u]; }
    auto neighbour_list(Vertex u) const -> std::vector<Vertex>;
    auto degree(Vertex u) const -> int { return static_cast<int>(adj_[u].count()); }

    /// Sorted (u < v) edge list.
    auto edges() const -> std::vector<Edge>;

    auto max_degree() const -> int;
    auto min_degree() const -> int;
    /// Common degree when every vertex has the same degree.
    auto regular_degree() const -> std::optional<int>;
    auto is_connected() const -> bool;
    auto is_bipartite() const -> bool;

    auto complement() const -> SimpleGraph;
    /// Induced subgraph; vertex i of the result is vertices[i].
    auto induced(std::span<const Vertex> vertices) const -> SimpleGraph;

    /// Adjacency rows as 64-bit masks; requires order() <= 64.
    auto masks() const -> std::vector<std::uint64_t>;

    friend auto operator==(const SimpleGraph& a, const SimpleGraph& b) -> bool
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    friend auto build_simple(int n, std::span<const Edge> edges) -> SimpleGraph;

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

/// Deduplicates the edge list. Throws InputError on out-of-range endpoints or loops.
auto build_simple(int n, std::span<const Edge> edges) -> SimpleGraph;
inline auto build_simple(int n, std::initializer_list<Edge> edges) -> SimpleGraph
{
    return build_simple(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Graph on n vertices with a rational weight on each unordered pair (u = v is
/// a loop). Zero weights are never stored.
class WeightedGraph {
public:
    explicit WeightedGraph(int n = 0) : n_(n) {}
    /// Throws InputError for out-of-range pairs or mismatched label count.
    WeightedGraph(int n, std::map<Edge, Rational> weights, std::vector<std::string> labels = {});

    auto order() const -> int { return n_; }
    auto weight(Vertex u, Vertex v) const -> Rational;
    auto weights() const -> const std::map<Edge, Rational>& { return w_; }
    auto labels() const -> const std::vector<std::string>& { return labels_; }
    auto has_loops() const -> bool;

    auto adjacency() const -> RationalMatrix;
    auto scaled(const Rational& c) const -> WeightedGraph;

    /// The simple graph with these edges, if every weight is 1 and there are no loops.
    auto as_simple() const -> std::optional<SimpleGraph>;

    friend auto operator==(const WeightedGraph& a, const WeightedGraph& b) -> bool
    {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    int n_ = 0;
    std::map<Edge, Rational> w_;
    std::vector<std::string> labels_;
};

/// Multigraph with nonnegative integer multiplicities (loops allowed).
class Multigraph {
public:
    explicit Multigraph(int n = 0) : n_(n) {}
    /// Throws InputError for out-of-range pairs or negative multiplicities.
    Multigraph(int n, std::map<Edge, std::int64_t> mult);

    auto order() const -> int { return n_; }
    auto multiplicity(Vertex u, Vertex v) const -> std::int64_t;
    auto multiplicities() const -> const std::map<Edge, std::int64_t>& { return mult_; }
    auto loopless() const -> bool;
    /// Largest multiplicity over non-loop pairs (0 when there are none).
    auto max_multiplicity() const -> std::int64_t;
    auto as_weighted() const -> WeightedGraph;

    friend auto operator==(const Multigraph&, const Multigraph&) -> bool = default;

private:
    int n_ = 0;
    std::map<Edge, std::int64_t> mult_;
};

auto weighted_from_simple(const SimpleGraph& g, const Rational& c) -> WeightedGraph;
inline auto as_weighted(const SimpleGraph& g) -> WeightedGraph { return weighted_from_simple(g, 1); }
auto as_multigraph(const SimpleGraph& g) -> Multigraph;

enum class SpecialKind { LoopGraph, LoopedComplete, Complete };

/// I_n, J_n or K_n. K_1 is rejected; n must be positive.
auto special_graph(SpecialKind kind, int n) -> WeightedGraph;

/// base + piece, where piece vertex i maps to base vertex embedding[i].
/// Throws InputError if the embedding is not injective or out of range.
auto add(const WeightedGraph& base, const WeightedGraph& piece, std::span<const Vertex> embedding)
    -> WeightedGraph;
/// Pointwise sum of two graphs on the same vertex set.
auto add(const WeightedGraph& a, const WeightedGraph& b) -> WeightedGraph;

/// G^(k): multiplicity of uv is the number of uv-walks of length k; the
/// diagonal of A^k is kept as loop multiplicities. Throws on int64 overflow.
auto power_multigraph(const SimpleGraph& g, int k) -> Multigraph;

auto cartesian_product(const SimpleGraph& g1, const SimpleGraph& g2) -> SimpleGraph;
auto direct_product(const SimpleGraph& g1, const SimpleGraph& g2) -> SimpleGraph;
/// Lexicographic product g1[g2].
auto composition(const SimpleGraph& g1, const SimpleGraph& g2) -> SimpleGraph;
auto disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) -> SimpleGraph;

/// Edge instances of a loopless multigraph in line-graph vertex order: pairs
/// in increasing order, each repeated by its multiplicity.
auto line_graph_vertices(const Multigraph& g) -> std::vector<Edge>;
/// Two edge instances are adjacent iff they share exactly one end vertex.
/// Throws InputError when the multigraph has loops.
auto line_graph(const Multigraph& g) -> SimpleGraph;
inline auto line_graph(const SimpleGraph& g) -> SimpleGraph { return line_graph(as_multigraph(g)); }

/// Replaces every loop instance at u by an edge from u to a fresh pendant vertex.
/// The line graph is unchanged by this.
auto loops_to_pendants(const Multigraph& g) -> Multigraph;

/// Multigraph from g with the given edge multiplicities. Only twigs (edges
/// with an end vertex of degree 1) may get multiplicity above 1.
auto twig_replicate(const SimpleGraph& g, const std::map<Edge, std::int64_t>& mult) -> Multigraph;

auto adjacency_matrix(const SimpleGraph& g) -> RationalMatrix;
auto adjacency_matrix(const Multigraph& g) -> RationalMatrix;
inline auto adjacency_matrix(const WeightedGraph& g) -> RationalMatrix { return g.adjacency(); }

}  // namespace slb

#pragma once

// Graph corpora: small connected graphs up to isomorphism, cubic claw-free
// graphs, cycles of a given length, and random graphs and decompositions.

#include "slb/decomp.hpp"
#include "slb/graph.hpp"

#include <random>
#include <vector>

namespace slb {

/// All cycles of the given length (>= 3), each listed once: it starts at its
/// smallest vertex and its second vertex is smaller than its last.
auto cycles_of_length(const SimpleGraph& g, int length) -> std::vector<std::vector<Vertex>>;

auto triangles(const SimpleGraph& g) -> std::vector<std::vector<Vertex>>;

/// Backtracking isomorphism test (vertex colours refined by degrees).
auto isomorphic(const SimpleGraph& a, const SimpleGraph& b) -> bool;

/// Keeps one representative of each isomorphism class, in first-seen order.
auto unique_up_to_isomorphism(const std::vector<SimpleGraph>& graphs) -> std::vector<SimpleGraph>;

/// Every graph on n vertices up to isomorphism (n <= 7), by one-vertex extension.
auto all_graphs(int n) -> std::vector<SimpleGraph>;
auto connected_graphs(int n) -> std::vector<SimpleGraph>;

/// Connected cubic claw-free graphs on n vertices (n even, 6 <= n <= 12), up
/// to isomorphism. Each such graph splits into lone triangles and diamonds
/// joined by a perfect matching of their degree-2 ports; all matchings are tried.
auto cubic_clawfree_graphs(int n) -> std::vector<SimpleGraph>;

auto random_graph(int n, double p, std::mt19937_64& rng) -> SimpleGraph;
/// Resamples until connected.
auto random_connected_graph(int n, double p, std::mt19937_64& rng) -> SimpleGraph;

/// A random decomposition of the given target: random scaled subgraph pieces,
/// K/J pieces, and a remainder that makes the weights add up exactly.
auto random_decomposition(const WeightedGraph& target, std::mt19937_64& rng) -> Decomposition;

}  // namespace slb

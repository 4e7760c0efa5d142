#pragma once

// Clique enumeration and the LP-optimal clique-partition and complete-graph
// decomposition bounds, plus the classical graph invariants they rely on.

#include "slb/decomp.hpp"
#include "slb/graph.hpp"
#include "slb/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace slb {

/// All cliques with at least min_size vertices, each sorted ascending; the
/// list is ordered by size, then lexicographically. Requires n <= 24.
auto enumerate_cliques(const SimpleGraph& g, int min_size = 2) -> std::vector<std::vector<Vertex>>;

/// Maximal cliques (Bron-Kerbosch with pivoting) as bit masks, n <= 32.
auto maximal_cliques(const SimpleGraph& g) -> std::vector<std::uint32_t>;

struct LambdaStarResult {
    Rational value;
    int mu = 1;
    /// lambda*_K: the clique partition of mu*G (cliques repeated by multiplicity).
    CliquePartition partition;
    /// lambda*_C: the decomposition of mu*H (coefficients are integers).
    CompleteDecomposition decomposition;
    /// r_u for lambda*_K, lambda(C_u) of the scaled decomposition for lambda*_C.
    std::vector<Rational> per_vertex;
    bool warm_start_used = false;
};

/// Best clique-partition bound -max r(K)/mu, attained by an exact LP solve.
/// The returned partition is re-validated and -r/mu re-checked against value.
auto lambda_star_K(const SimpleGraph& g) -> LambdaStarResult;

/// Best complete-graph decomposition bound over signed K_S and J_S pieces.
/// Requires n <= 12.
auto lambda_star_C(const WeightedGraph& h) -> LambdaStarResult;

auto clique_number(const SimpleGraph& g) -> int;
auto independence_number(const SimpleGraph& g) -> int;
/// A maximum independent set, ascending.
auto maximum_independent_set(const SimpleGraph& g) -> std::vector<Vertex>;

/// Exact fractional chromatic number over maximal independent sets; n <= 24.
auto fractional_chromatic(const SimpleGraph& g) -> Rational;

/// Exact chromatic number by DSATUR branch and bound; n <= 24.
auto chromatic_number(const SimpleGraph& g) -> int;

/// Edges of the graph on d vertices split into k-1 near-equal cliques.
auto turan_t(int d, int k) -> std::int64_t;

auto to_json(const LambdaStarResult& r, bool complete) -> nlohmann::json;

}  // namespace slb

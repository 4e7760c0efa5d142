#pragma once

// Weighted decompositions and their eigenvalue bound, complete-graph
// decompositions, clique partitions of mu*G, and the essential-vertex reduction.

#include "slb/graph.hpp"
#include "slb/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace slb {

/// A weighted graph living on a vertex subset of the target: piece vertex i
/// is target vertex embedding[i].
struct Piece {
    WeightedGraph graph;
    std::vector<Vertex> embedding;
};

/// Target H together with pieces whose embedded weights sum to H.
struct Decomposition {
    WeightedGraph target;
    std::vector<Piece> pieces;
};

/// Piece c*G[subset] for a simple graph on |subset| vertices.
auto make_piece(const SimpleGraph& g, std::vector<Vertex> embedding, const Rational& c = 1) -> Piece;

struct PairMismatch {
    Edge pair;
    Rational expected;
    Rational actual;
};

struct ValidationReport {
    std::vector<PairMismatch> mismatches;
    std::vector<std::string> problems;

    auto ok() const -> bool { return mismatches.empty() && problems.empty(); }
    auto describe() const -> std::string;
};

auto validate(const Decomposition& d) -> ValidationReport;

/// Least eigenvalue of a piece, exact when known in closed form or when the
/// eigensolver's value is certified rational.
struct PieceLambda {
    double value = 0.0;
    std::optional<Rational> exact;
};

/// Closed forms for a*I_n, a*J_n, a*K_n (K requires n >= 2).
auto piece_lambda(SpecialKind kind, int order, const Rational& coefficient) -> PieceLambda;
/// Recognises scaled I/J/K pieces; otherwise eigensolver plus rational certification.
auto piece_lambda(const WeightedGraph& piece) -> PieceLambda;

struct DecompositionBound {
    double value = 0.0;                   ///< min_u lambda(D_u)
    std::optional<Rational> exact;        ///< set when every piece lambda is exact
    std::vector<double> per_vertex;       ///< lambda(D_u); 0 for vertices in no piece
    std::vector<PieceLambda> piece_lambdas;
};

/// min over u of the sum of least eigenvalues of the pieces containing u.
/// Throws InputError if the decomposition does not validate.
auto decomposition_bound(const Decomposition& d) -> DecompositionBound;

struct Certificate {
    bool exact = false;
    std::vector<Rational> exact_vector;   ///< when exact
    std::vector<double> numeric_vector;   ///< unit vector; filled in both modes
    std::size_t kernel_dimension = 0;
};

/// Nonzero x with P x = 0 for P = sum_j (M_j - lambda(H^j) E_j) + (rI - R); it
/// exists iff the decomposition bound equals lambda(H). Exact kernel when every
/// piece lambda is rational, otherwise a numeric kernel (tolerance 1e-8).
/// Both equality conditions are re-checked on the returned vector.
auto equality_certificate(const Decomposition& d) -> std::optional<Certificate>;

/// Coefficients of a decomposition of G^(3) as alpha*G + beta*K_n + gamma*I_n.
struct CubicPowerDecomposition {
    Rational alpha, beta, gamma;
};

struct CubicPowerBound {
    double value = 0.0;  ///< smallest real root of z^3 - alpha z - c
    Rational c;          ///< lambda(beta K_n) + lambda(gamma I_n)
};

/// Requires alpha > 0 and an exact match with A(G)^3 (loops matched by gamma I).
auto cubic_power_bound(const SimpleGraph& g, const CubicPowerDecomposition& d3) -> CubicPowerBound;

/// Smallest real root of x^3 + p x + q (bracketing, bisection, Newton polish).
auto smallest_cubic_root(double p, double q) -> double;

// ---- complete graph decompositions ----------------------------------------

enum class CompleteKind { K, J };

struct CompletePiece {
    CompleteKind kind = CompleteKind::K;
    std::vector<Vertex> vertices;
    Rational coefficient;
};

struct CompleteDecomposition {
    std::vector<CompletePiece> pieces;
};

auto validate(const CompleteDecomposition& c, const WeightedGraph& target) -> ValidationReport;
auto to_decomposition(const CompleteDecomposition& c, const WeightedGraph& target) -> Decomposition;

struct CompleteBound {
    Rational value;
    std::vector<Rational> per_vertex;
};

auto complete_decomposition_bound(const CompleteDecomposition& c, const WeightedGraph& target) -> CompleteBound;

/// Nonzero x vanishing where lambda(C_u) > lambda(C), constant on every
/// negatively weighted piece, and summing to zero on every positively weighted
/// piece of order > 1. Exact.
auto complete_equality_certificate(const CompleteDecomposition& c, const WeightedGraph& target)
    -> std::optional<std::vector<Rational>>;

// ---- clique partitions ------------------------------------------------------

/// Multiset of cliques covering every edge of G exactly mu times.
struct CliquePartition {
    int mu = 1;
    std::vector<std::vector<Vertex>> cliques;
};

auto validate(const CliquePartition& k, const SimpleGraph& g) -> ValidationReport;

struct CliqueStats {
    std::vector<int> r;   ///< r_u: number of cliques containing u
    int r_max = 0;
    int c_min = 0;        ///< smallest clique order (0 for the empty partition)
};

/// Throws InputError for an invalid partition.
auto clique_partition_stats(const CliquePartition& k, const SimpleGraph& g) -> CliqueStats;

struct CliqueBound {
    Rational value;         ///< -r / mu
    bool degenerate = false;  ///< edgeless graph, empty partition: value 0
};

auto clique_partition_bound(const CliquePartition& k, const SimpleGraph& g) -> CliqueBound;

/// Vertex-clique incidence matrix N (n x |cliques|).
auto incidence_matrix(const CliquePartition& k, int n) -> RationalMatrix;

/// Nonzero x with N^T x = 0 and x_u = 0 whenever r_u < r. Exact.
auto clique_equality_certificate(const CliquePartition& k, const SimpleGraph& g)
    -> std::optional<std::vector<Rational>>;

struct EssentialReduction {
    std::vector<Vertex> vertices;  ///< V*, ascending
    CliquePartition partition;     ///< K*: nonempty restrictions, in G* numbering, multiplicity kept
    SimpleGraph graph;             ///< G* = G[V*]
    int iterations = 0;
};

/// Starts from {u : r_u = r} and repeatedly deletes every vertex v for which
/// some clique meets the current set exactly in {v}.
auto essential_vertices(const CliquePartition& k, const SimpleGraph& g) -> EssentialReduction;

/// Per-vertex part structure of the claw pieces T(u) of a loopless multigraph's
/// line graph, and the resulting bounds.
struct LineGraphBound {
    Rational claw_bound;     ///< min over edges uv of lambda(T(u)) + lambda(T(v)), lambda(T) >= -max part
    Rational refined_bound;  ///< T(u) split further into J and -J pieces (twig refinement)
    Rational floor;          ///< -2 mu
    std::int64_t mu = 0;
};

auto line_graph_bound(const Multigraph& g) -> LineGraphBound;
/// The claw decomposition {T(u)} of L(g) as explicit pieces.
auto claw_decomposition(const Multigraph& g) -> Decomposition;

auto to_json(const CliquePartition& k) -> nlohmann::json;
auto partition_from_json(const nlohmann::json& j) -> CliquePartition;
auto read_partition_file(const std::string& path) -> CliquePartition;

}  // namespace slb

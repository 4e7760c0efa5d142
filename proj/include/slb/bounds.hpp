#pragma once

// Closed-form upper and lower bounds on the least eigenvalue, with the side
// computations they need, and the aggregated per-graph report.

#include "slb/decomp.hpp"
#include "slb/graph.hpp"
#include "slb/rational.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace slb {

/// Largest BFS distance; throws InputError for disconnected graphs.
auto diameter(const SimpleGraph& g) -> int;

/// -alpha k / (n - alpha) for a k-regular graph with at least one edge.
auto hoffman_upper(const SimpleGraph& g) -> Rational;

struct ChromaticUppers {
    Rational hoffman;      ///< -alpha k/(n - alpha)
    Rational fractional;   ///< -k/(chi_f - 1)
    Rational chromatic;    ///< -k/(chi - 1)
    Rational chi_f;
    int chi = 0;
};

/// The chain hoffman <= fractional <= chromatic, re-checked (CheckFailure).
auto chromatic_uppers(const SimpleGraph& g) -> ChromaticUppers;

struct LovaszUpper {
    double fractional = 0;  ///< -lambda_1/(chi_f - 1)
    double chromatic = 0;   ///< -lambda_1/(chi - 1)
};

auto lovasz_upper(const SimpleGraph& g) -> LovaszUpper;

/// -Delta + 1/((D+1) n) for connected nonbipartite graphs.
auto alon_sudakov_lower(const SimpleGraph& g) -> Rational;

struct BipartitenessRatio {
    Rational beta;
    std::vector<Vertex> left, right;  ///< minimising S = left u right
};

/// Exhaustive over all (S, L, R); n <= 14 and at least one edge.
auto bipartiteness_ratio(const SimpleGraph& g) -> BipartitenessRatio;

/// -d + beta^2/d for d-regular graphs.
auto trevisan_lower(const SimpleGraph& g) -> Rational;

struct TriangleStats {
    int m = 0;  ///< fewest triangles at a vertex
    int t = 0;  ///< most triangles on an edge
    int total = 0;
    std::vector<int> per_vertex;
};

auto triangle_stats(const SimpleGraph& g) -> TriangleStats;

struct TmBound {
    Rational value;
    bool vacuous = false;  ///< triangle-free: value is -d
};

/// -d + m/t for connected d-regular graphs.
auto tm_lower(const SimpleGraph& g) -> TmBound;

struct StarCheck {
    bool free = true;
    std::vector<Vertex> witness;  ///< centre, then k independent neighbours
};

auto is_K1k_free(const SimpleGraph& g, int k) -> StarCheck;

/// -d + t(d,k)/(d-1) for connected d-regular K_{1,k}-free graphs, d >= k >= 3.
auto aab_lower(const SimpleGraph& g, int k) -> Rational;

/// Smallest root of x^3 + x + 14.
auto cubic_clawfree_theta() -> double;

struct Diamond {
    Vertex a, b;  ///< the two degree-2 vertices of K4 - e
    Vertex u, v;  ///< the middle edge
};

struct CubicClawfreeReport {
    double lambda = 0;
    double theta = 0;
    int triangle_plus_edge = 0;  ///< vertices whose neighbourhood is K1 u K2
    int path = 0;                ///< vertices whose neighbourhood is K_{1,2}
    std::vector<Diamond> diamonds;
    std::vector<Edge> middle_edges;
    bool diamonds_disjoint = true;
    bool identity_holds = false;  ///< NN^T = A + 2I, or MM^T = A + 2I + B with diamonds
};

/// Requires a connected cubic claw-free graph on n >= 6 vertices. Throws
/// CheckFailure if any structural claim or lambda >= theta fails.
auto cubic_clawfree_check(const SimpleGraph& g) -> CubicClawfreeReport;

struct DeltaBoundCheck {
    Rational ratio;                    ///< r(K)/mu
    Rational bound;                    ///< Delta/(c - 1)
    bool tight = false;                ///< some max-degree vertex sees only order-c cliques
    std::vector<int> e;                ///< order-c cliques at each vertex
    std::vector<Rational> small_clique;  ///< (mu d_u + e_u)/c
    std::vector<bool> small_clique_tight;
};

auto deltbnd_check(const CliquePartition& k, const SimpleGraph& g) -> DeltaBoundCheck;

struct ProductTightness {
    Rational predicted;  ///< -k1 k2/(c1 - 1) with c1 <= c2
    double lambda = 0;
    std::optional<Rational> lambda_star_K;  ///< when the product has at most 24 vertices
    bool lambda_matches = false;
    bool lambda_star_matches = false;
};

/// G1, G2 regular with uniform-order partitions attaining lambda(G_i).
auto product_tightness(const SimpleGraph& g1, const CliquePartition& k1, const SimpleGraph& g2,
                       const CliquePartition& k2) -> ProductTightness;

/// Automorphism search: true iff the automorphism group is transitive on
/// vertices (resp. edges). Exhaustive backtracking; n <= 10.
auto is_vertex_transitive(const SimpleGraph& g) -> bool;
auto is_edge_transitive(const SimpleGraph& g) -> bool;

struct VertransResult {
    Rational value;            ///< -k/(omega - 1), or 0 without edges
    bool conditional = false;  ///< transitivity asserted by the caller, not checked
};

/// nullopt when alpha*omega != n or transitivity fails. For n > 10 the caller
/// must assert transitivity, otherwise InputError.
auto vertrans_bound(const SimpleGraph& g, bool assume_transitive = false) -> std::optional<VertransResult>;

enum class BoundKind { Lower, Upper, Exact };

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::Lower;
    double value = 0;
    std::optional<Rational> exact;
    std::string note;
};

struct BoundReport {
    std::string graph;
    double lambda = 0;
    std::vector<BoundEntry> entries;

    /// Entries on the wrong side of lambda by more than tol.
    auto violations(double tol = 1e-8) const -> std::vector<std::string>;
};

struct ReportOptions {
    const CliquePartition* partition = nullptr;
    bool lp = false;
};

auto bound_report(const SimpleGraph& g, const std::string& id, const ReportOptions& opts = {}) -> BoundReport;
auto to_json(const BoundReport& r) -> nlohmann::json;
auto format_table(const BoundReport& r) -> std::string;

}  // namespace slb

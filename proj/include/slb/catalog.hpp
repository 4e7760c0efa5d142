#pragma once

// Named graphs, subset graphs, circulants and strongly regular parameter algebra.

#include "slb/graph.hpp"
#include "slb/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slb {

struct CatalogEntry {
    std::string name;
    std::string params;  ///< parameter schema, e.g. "n>=3"
    std::string description;
};

/// Every name accepted by named_graph, in a stable order.
auto catalog_entries() -> const std::vector<CatalogEntry>&;

/// Builds a named graph: cycle n, path n, complete n, complete_multipartite
/// n1 n2 ..., petersen, dodecahedron, icosahedron, octahedron, shrikhande,
/// prism n, plus johnson v k, kneser v k, hamming q1 q2 ..., circulant n r.
/// Throws InputError on an unknown name or bad parameters.
auto named_graph(const std::string& name, const std::vector<int>& params = {}) -> SimpleGraph;

auto cycle_graph(int n) -> SimpleGraph;
auto path_graph(int n) -> SimpleGraph;
auto complete_graph(int n) -> SimpleGraph;
auto empty_graph(int n) -> SimpleGraph;
auto complete_multipartite(const std::vector<int>& parts) -> SimpleGraph;
auto star_graph(int leaves) -> SimpleGraph;
auto petersen_graph() -> SimpleGraph;
auto dodecahedron_graph() -> SimpleGraph;
auto icosahedron_graph() -> SimpleGraph;
auto octahedron_graph() -> SimpleGraph;
/// Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
auto shrikhande_graph() -> SimpleGraph;
auto prism_graph(int n) -> SimpleGraph;

/// k-subsets of {0..v-1} listed in colex order (the vertex numbering of
/// johnson and kneser).
auto colex_subsets(int v, int k) -> std::vector<std::vector<int>>;
auto johnson(int v, int k) -> SimpleGraph;
auto kneser(int v, int k) -> SimpleGraph;
auto hamming(const std::vector<int>& orders) -> SimpleGraph;

/// C_{n,r}: Cayley graph of Z_n with connection set {±1, ..., ±r}; 1 <= r < n/2.
auto circulant(int n, int r) -> SimpleGraph;
/// Closed-form eigenvalue for character ell: 2r at ell = 0, otherwise
/// -1 + sin((2r+1) pi ell / n) / sin(pi ell / n).
auto circulant_eigenvalue(int n, int r, int ell) -> double;
/// All n closed-form eigenvalues, ascending.
auto circulant_spectrum(int n, int r) -> std::vector<double>;

struct SrgParams {
    int n = 0, k = 0, a = 0, c = 0;
    /// k(k - a - 1) = (n - k - 1) c
    auto feasible() const -> bool { return k * (k - a - 1) == (n - k - 1) * c; }
};

struct SrgEigenvalues {
    double theta = 0.0;  ///< the root >= 0
    double tau = 0.0;    ///< the root <= 0
    /// Set when the discriminant is a perfect square (both roots integers).
    std::optional<int> theta_exact;
    std::optional<int> tau_exact;
};

/// Roots of x^2 - (a-c)x - (k-c) = 0. Throws InputError for infeasible parameters.
auto srg_second_eigenvalues(const SrgParams& p) -> SrgEigenvalues;

struct SrgCubic {
    long r = 0, s = 0, t = 0;  ///< A^3 = rA + s(J - I) + tI
};

/// Multiplies A^2 = kI + aA + c(J - I - A) by A inside the algebra spanned by
/// {I, A, J} (AJ = kJ, J^2 = nJ) and reads off r, s, t.
auto srg_cubic_coeffs(const SrgParams& p) -> SrgCubic;

}  // namespace slb

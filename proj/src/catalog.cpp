#include "slb/catalog.hpp"

#include "slb/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace slb {

namespace {

auto need(bool ok, const std::string& msg) -> void
{
    if (!ok)
        throw InputError(msg);
}

auto popcount_ok(unsigned x, int k) -> bool { return std::popcount(x) == k; }

}  // namespace

auto cycle_graph(int n) -> SimpleGraph
{
    need(n >= 3, "cycle: n must be at least 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return build_simple(n, e);
}

auto path_graph(int n) -> SimpleGraph
{
    need(n >= 1, "path: n must be positive");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return build_simple(n, e);
}

auto complete_graph(int n) -> SimpleGraph
{
    need(n >= 1, "complete: n must be positive");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return build_simple(n, e);
}

auto empty_graph(int n) -> SimpleGraph
{
    need(n >= 0, "empty: n must be nonnegative");
    return build_simple(n, {});
}

auto complete_multipartite(const std::vector<int>& parts) -> SimpleGraph
{
    need(!parts.empty(), "complete_multipartite: no parts");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        need(parts[p] >= 1, "complete_multipartite: part sizes must be positive");
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    }
    std::vector<Edge> e;
    const int n = static_cast<int>(part_of.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j])
                e.emplace_back(i, j);
    return build_simple(n, e);
}

auto star_graph(int leaves) -> SimpleGraph
{
    need(leaves >= 1, "star: need at least one leaf");
    return complete_multipartite({1, leaves});
}

auto petersen_graph() -> SimpleGraph { return kneser(5, 2); }

auto dodecahedron_graph() -> SimpleGraph
{
    // Generalized Petersen graph GP(10, 2): outer 10-cycle, spokes, inner step-2 cycle.
    std::vector<Edge> e;
    for (int i = 0; i < 10; ++i) {
        e.emplace_back(i, (i + 1) % 10);
        e.emplace_back(i, 10 + i);
        e.emplace_back(10 + i, 10 + (i + 2) % 10);
    }
    return build_simple(20, e);
}

auto icosahedron_graph() -> SimpleGraph
{
    // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        const int up = 1 + i, up_next = 1 + (i + 1) % 5;
        const int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
        e.emplace_back(0, up);
        e.emplace_back(up, up_next);
        e.emplace_back(up, lo);
        e.emplace_back(up, lo_next);
        e.emplace_back(lo, lo_next);
        e.emplace_back(lo, 11);
    }
    return build_simple(12, e);
}

auto octahedron_graph() -> SimpleGraph { return complete_multipartite({2, 2, 2}); }

auto shrikhande_graph() -> SimpleGraph
{
    std::vector<Edge> e;
    const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (const auto& s : steps)
                e.emplace_back(4 * i + j, 4 * ((i + s[0]) % 4) + (j + s[1]) % 4);
    return build_simple(16, e);
}

auto prism_graph(int n) -> SimpleGraph { return cartesian_product(cycle_graph(n), complete_graph(2)); }

auto colex_subsets(int v, int k) -> std::vector<std::vector<int>>
{
    need(v >= 0 && k >= 0 && k <= v && v < 31, "colex_subsets: bad parameters");
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << v); ++m)
        if (popcount_ok(m, k))
            masks.push_back(m);
    // Colex order on k-subsets coincides with numeric order of their bitmasks.
    std::vector<std::vector<int>> out;
    for (unsigned m : masks) {
        std::vector<int> s;
        for (int i = 0; i < v; ++i)
            if (m >> i & 1u)
                s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

auto subset_graph(int v, int k, int wanted_intersection) -> SimpleGraph
{
    auto subsets = colex_subsets(v, k);
    std::vector<unsigned> masks;
    for (const auto& s : subsets) {
        unsigned m = 0;
        for (int x : s)
            m |= 1u << x;
        masks.push_back(m);
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (std::popcount(masks[i] & masks[j]) == wanted_intersection)
                e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return build_simple(static_cast<int>(masks.size()), e);
}

}  // namespace

auto johnson(int v, int k) -> SimpleGraph
{
    need(k >= 1 && v >= 2 * k, "johnson: need v >= 2k >= 2");
    return subset_graph(v, k, k - 1);
}

auto kneser(int v, int k) -> SimpleGraph
{
    need(k >= 1 && v >= 2 * k, "kneser: need v >= 2k >= 2");
    return subset_graph(v, k, 0);
}

auto hamming(const std::vector<int>& orders) -> SimpleGraph
{
    need(!orders.empty(), "hamming: no factors");
    SimpleGraph g = complete_graph(1);
    for (int q : orders) {
        need(q >= 2, "hamming: every factor order must be at least 2");
        g = cartesian_product(g, complete_graph(q));
    }
    return g;
}

auto circulant(int n, int r) -> SimpleGraph
{
    need(r >= 1 && 2 * r < n, "circulant: need 1 <= r < n/2");
    std::vector<Edge> e;
    for (int x = 0; x < n; ++x)
        for (int s = 1; s <= r; ++s)
            e.emplace_back(x, (x + s) % n);
    return build_simple(n, e);
}

auto circulant_eigenvalue(int n, int r, int ell) -> double
{
    need(r >= 1 && 2 * r < n, "circulant: need 1 <= r < n/2");
    need(ell >= 0 && ell < n, "circulant_eigenvalue: ell out of range");
    if (ell == 0)
        return 2.0 * r;
    const double x = std::numbers::pi * ell / n;
    return -1.0 + std::sin((2 * r + 1) * x) / std::sin(x);
}

auto circulant_spectrum(int n, int r) -> std::vector<double>
{
    std::vector<double> out;
    for (int ell = 0; ell < n; ++ell)
        out.push_back(circulant_eigenvalue(n, r, ell));
    std::sort(out.begin(), out.end());
    return out;
}

auto srg_second_eigenvalues(const SrgParams& p) -> SrgEigenvalues
{
    need(p.feasible(), "srg: parameters violate k(k-a-1) = (n-k-1)c");
    const long b = p.a - p.c;           // x^2 - b x - d = 0
    const long d = p.k - p.c;
    const long disc = b * b + 4 * d;
    need(disc >= 0, "srg: negative discriminant");
    SrgEigenvalues out;
    const double root = std::sqrt(static_cast<double>(disc));
    out.theta = (static_cast<double>(b) + root) / 2;
    out.tau = (static_cast<double>(b) - root) / 2;
    long s = std::lround(root);
    if (s * s == disc && (b + s) % 2 == 0) {
        out.theta_exact = static_cast<int>((b + s) / 2);
        out.tau_exact = static_cast<int>((b - s) / 2);
        out.theta = *out.theta_exact;
        out.tau = *out.tau_exact;
    }
    return out;
}

namespace {

/// x*I + y*A + z*J
struct SrgAlgebraElement {
    long i = 0, a = 0, j = 0;
};

/// Product in the algebra spanned by I, A, J of an SRG: A^2 = (k-c)I + (a-c)A + cJ,
/// AJ = JA = kJ, J^2 = nJ.
auto multiply(const SrgAlgebraElement& x, const SrgAlgebraElement& y, const SrgParams& p) -> SrgAlgebraElement
{
    SrgAlgebraElement out;
    out.i += x.i * y.i;
    out.a += x.i * y.a + x.a * y.i;
    out.j += x.i * y.j + x.j * y.i;
    // A * A
    const long aa = x.a * y.a;
    out.i += aa * (p.k - p.c);
    out.a += aa * (p.a - p.c);
    out.j += aa * p.c;
    // A * J and J * A
    out.j += (x.a * y.j + x.j * y.a) * p.k;
    // J * J
    out.j += x.j * y.j * p.n;
    return out;
}

}  // namespace

auto srg_cubic_coeffs(const SrgParams& p) -> SrgCubic
{
    need(p.feasible(), "srg: parameters violate k(k-a-1) = (n-k-1)c");
    const SrgAlgebraElement a{0, 1, 0};
    const auto cube = multiply(multiply(a, a, p), a, p);
    // cube.i I + cube.a A + cube.j J = r A + s (J - I) + t I
    SrgCubic out;
    out.r = cube.a;
    out.s = cube.j;
    out.t = cube.i + cube.j;
    return out;
}

auto catalog_entries() -> const std::vector<CatalogEntry>&
{
    static const std::vector<CatalogEntry> entries = {
        {"cycle", "n>=3", "cycle C_n"},
        {"path", "n>=1", "path P_n on n vertices"},
        {"complete", "n>=1", "complete graph K_n"},
        {"complete_multipartite", "n1 n2 ...", "complete multipartite K_{n1,...,nm}"},
        {"petersen", "", "Petersen graph, SRG(10,3,0,1)"},
        {"dodecahedron", "", "dodecahedral graph (GP(10,2))"},
        {"icosahedron", "", "icosahedral graph"},
        {"octahedron", "", "octahedral graph K_{2,2,2}"},
        {"shrikhande", "", "Shrikhande graph, SRG(16,6,2,2), Cayley graph of Z4xZ4"},
        {"prism", "n>=3", "prism C_n x K_2"},
        {"johnson", "v k (v>=2k>=2)", "Johnson graph J(v,k), colex vertex order"},
        {"kneser", "v k (v>=2k>=2)", "Kneser graph Kn(v,k), colex vertex order"},
        {"hamming", "q1 q2 ... (each >=2)", "Cartesian product of complete graphs"},
        {"circulant", "n r (1<=r<n/2)", "C_{n,r}: Cayley graph of Z_n, connection set {±1..±r}"},
    };
    return entries;
}

auto named_graph(const std::string& name, const std::vector<int>& params) -> SimpleGraph
{
    auto arity = [&](std::size_t k) {
        need(params.size() == k, name + ": expected " + std::to_string(k) + " parameter(s)");
    };
    if (name == "cycle") { arity(1); return cycle_graph(params[0]); }
    if (name == "path") { arity(1); return path_graph(params[0]); }
    if (name == "complete") { arity(1); return complete_graph(params[0]); }
    if (name == "complete_multipartite") return complete_multipartite(params);
    if (name == "petersen") { arity(0); return petersen_graph(); }
    if (name == "dodecahedron") { arity(0); return dodecahedron_graph(); }
    if (name == "icosahedron") { arity(0); return icosahedron_graph(); }
    if (name == "octahedron") { arity(0); return octahedron_graph(); }
    if (name == "shrikhande") { arity(0); return shrikhande_graph(); }
    if (name == "prism") { arity(1); return prism_graph(params[0]); }
    if (name == "johnson") { arity(2); return johnson(params[0], params[1]); }
    if (name == "kneser") { arity(2); return kneser(params[0], params[1]); }
    if (name == "hamming") return hamming(params);
    if (name == "circulant") { arity(2); return circulant(params[0], params[1]); }
    throw InputError("unknown graph name '" + name + "'");
}

}  // namespace slb

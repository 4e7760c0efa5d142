#pragma once

#include "slb/graph.hpp"
#include "slb/matrix.hpp"
#include "slb/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace slb {

inline constexpr std::size_t max_spectrum_order = 2048;

/// Eigen-decomposition of a real symmetric matrix. values are ascending and
/// column k of vectors is a unit eigenvector for values[k].
struct Spectrum {
    std::vector<double> values;
    RealMatrix vectors;
    /// max_k ||A v_k - values[k] v_k||_inf, measured against the input matrix.
    double residual = 0.0;

    auto smallest() const -> double { return values.front(); }
    auto largest() const -> double { return values.back(); }
    auto vector(std::size_t k) const -> std::vector<double>;
    /// Number of eigenvalues within tol of value.
    auto multiplicity(double value, double tol = 1e-8) const -> std::size_t;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 * ||A||_F. Throws InputError for non-symmetric or oversized input.
auto spectrum(const RealMatrix& a) -> Spectrum;
auto spectrum(const RationalMatrix& a) -> Spectrum;
auto spectrum(const SimpleGraph& g) -> Spectrum;
auto spectrum(const WeightedGraph& g) -> Spectrum;
auto spectrum(const Multigraph& g) -> Spectrum;

/// Smallest adjacency eigenvalue; throws InputError for the empty graph.
auto lambda_min(const SimpleGraph& g) -> double;
auto lambda_min(const WeightedGraph& g) -> double;
auto lambda_min(const Multigraph& g) -> double;
auto lambda_max(const SimpleGraph& g) -> double;

auto rayleigh_quotient(const RealMatrix& a, std::span<const double> x) -> double;

/// Exact kernel basis by Gauss-Jordan elimination over the rationals; each
/// basis vector is scaled to a primitive integer vector. Empty iff the kernel is trivial.
auto rational_nullspace(const RationalMatrix& m) -> std::vector<std::vector<Rational>>;
auto rational_rank(const RationalMatrix& m) -> std::size_t;

struct PsdVerdict {
    bool psd = true;
    double min_eigenvalue = 0.0;
    /// Unit eigenvector of the most negative eigenvalue when not PSD.
    std::vector<double> witness;
};

/// Floating PSD test: psd iff the least eigenvalue is >= -tol.
auto psd_check(const RationalMatrix& p, double tol = 1e-10) -> PsdVerdict;

struct LdltVerdict {
    bool psd = true;
    std::size_t rank = 0;
};

/// Exact PSD decision by rational LDL^T with symmetric (diagonal) pivoting.
auto exact_psd(const RationalMatrix& p) -> LdltVerdict;

/// True iff value is exactly the least eigenvalue of a: a - value*I is PSD and singular.
auto verify_least_eigenvalue(const RationalMatrix& a, const Rational& value) -> bool;

/// The least eigenvalue when it is rational, certified by verify_least_eigenvalue.
/// If d is the lcm of the entry denominators, d*a is an integer matrix whose
/// rational eigenvalues are integers, so the only candidate is round(d*lambda)/d.
auto exact_least_eigenvalue(const RationalMatrix& a) -> std::optional<Rational>;

}  // namespace slb

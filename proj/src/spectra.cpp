#include "slb/spectra.hpp"

#include "slb/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slb {

auto Spectrum::vector(std::size_t k) const -> std::vector<double>
{
    std::vector<double> v(vectors.rows());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = vectors(i, k);
    return v;
}

auto Spectrum::multiplicity(double value, double tol) const -> std::size_t
{
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [&](double x) { return std::abs(x - value) <= tol; }));
}

namespace {

auto frobenius(const RealMatrix& a) -> double
{
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

auto off_diagonal_norm(const RealMatrix& a) -> double
{
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            s += 2 * a(i, j) * a(i, j);
    return std::sqrt(s);
}

constexpr int max_sweeps = 100;

}  // namespace

auto spectrum(const RealMatrix& input) -> Spectrum
{
    if (!input.is_square())
        throw InputError("spectrum: matrix is not square");
    const std::size_t n = input.rows();
    if (n > max_spectrum_order)
        throw InputError("spectrum: order " + std::to_string(n) + " exceeds " + std::to_string(max_spectrum_order));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (input(i, j) != input(j, i))
                throw InputError("spectrum: matrix is not symmetric");

    RealMatrix a = input;
    RealMatrix v = RealMatrix::identity(n);
    const double norm = frobenius(a);
    const double target = 1e-12 * norm;

    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }
    if (off_diagonal_norm(a) > target)
        throw CheckFailure("spectrum: Jacobi iteration did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    Spectrum out;
    out.values.resize(n);
    out.vectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i)
            out.vectors(i, k) = v(i, order[k]);
    }

    double max_abs = 0;
    for (double x : out.values)
        max_abs = std::max(max_abs, std::abs(x));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            double r = -out.values[k] * out.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j)
                r += input(i, j) * out.vectors(j, k);
            out.residual = std::max(out.residual, std::abs(r));
        }
    if (out.residual > 1e-8 * (1 + max_abs))
        throw CheckFailure("spectrum: eigenpair residual " + std::to_string(out.residual) + " too large");
    return out;
}

auto spectrum(const RationalMatrix& a) -> Spectrum
{
    if (!a.is_symmetric())
        throw InputError("spectrum: matrix is not symmetric");
    return spectrum(to_real(a));
}

auto spectrum(const SimpleGraph& g) -> Spectrum { return spectrum(adjacency_matrix(g)); }
auto spectrum(const WeightedGraph& g) -> Spectrum { return spectrum(g.adjacency()); }
auto spectrum(const Multigraph& g) -> Spectrum { return spectrum(adjacency_matrix(g)); }

namespace {

template <class G>
auto checked_lambda_min(const G& g) -> double
{
    if (g.order() == 0)
        throw InputError("lambda_min: graph has no vertices");
    return spectrum(g).smallest();
}

}  // namespace

auto lambda_min(const SimpleGraph& g) -> double { return checked_lambda_min(g); }
auto lambda_min(const WeightedGraph& g) -> double { return checked_lambda_min(g); }
auto lambda_min(const Multigraph& g) -> double { return checked_lambda_min(g); }

auto lambda_max(const SimpleGraph& g) -> double
{
    if (g.order() == 0)
        throw InputError("lambda_max: graph has no vertices");
    return spectrum(g).largest();
}

auto rayleigh_quotient(const RealMatrix& a, std::span<const double> x) -> double
{
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        den += x[i] * x[i];
        for (std::size_t j = 0; j < x.size(); ++j)
            num += x[i] * a(i, j) * x[j];
    }
    return num / den;
}

namespace {

/// Reduced row echelon form in place; returns pivot columns.
auto rref(RationalMatrix& m) -> std::vector<std::size_t>
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(row, j) != 0)
                    m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

auto rational_nullspace(const RationalMatrix& input) -> std::vector<std::vector<Rational>>
{
    RationalMatrix m = input;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> x(m.cols(), Rational(0));
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -m(r, free);
        basis.push_back(primitive_integer_vector(x));
    }
    return basis;
}

auto rational_rank(const RationalMatrix& input) -> std::size_t
{
    RationalMatrix m = input;
    return rref(m).size();
}

auto psd_check(const RationalMatrix& p, double tol) -> PsdVerdict
{
    PsdVerdict out;
    if (p.rows() == 0)
        return out;
    auto s = spectrum(p);
    out.min_eigenvalue = s.smallest();
    out.psd = s.smallest() >= -tol;
    if (!out.psd)
        out.witness = s.vector(0);
    return out;
}

auto exact_psd(const RationalMatrix& input) -> LdltVerdict
{
    if (!input.is_symmetric())
        throw InputError("exact_psd: matrix is not symmetric");
    RationalMatrix m = input;
    const std::size_t n = m.rows();
    std::vector<bool> active(n, true);
    LdltVerdict out;
    for (;;) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i])
                continue;
            if (m(i, i) < 0) {
                out.psd = false;
                return out;
            }
            if (m(i, i) == 0) {
                for (std::size_t j = 0; j < n; ++j)
                    if (active[j] && m(i, j) != 0) {
                        out.psd = false;
                        return out;
                    }
                active[i] = false;
                continue;
            }
            if (pivot == n)
                pivot = i;
        }
        if (pivot == n)
            return out;
        active[pivot] = false;
        ++out.rank;
        const Rational d = m(pivot, pivot);
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || m(i, pivot) == 0)
                continue;
            Rational f = m(i, pivot) / d;
            for (std::size_t j = 0; j < n; ++j)
                if (active[j] && m(pivot, j) != 0)
                    m(i, j) -= f * m(pivot, j);
        }
    }
}

auto verify_least_eigenvalue(const RationalMatrix& a, const Rational& value) -> bool
{
    RationalMatrix b = a;
    for (std::size_t i = 0; i < b.rows(); ++i)
        b(i, i) -= value;
    auto v = exact_psd(b);
    return v.psd && v.rank < b.rows();
}

auto exact_least_eigenvalue(const RationalMatrix& a) -> std::optional<Rational>
{
    if (a.rows() == 0)
        return std::nullopt;
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                entries.push_back(a(i, j));
    const Integer d = denominator_lcm(entries);
    const double lambda = spectrum(a).smallest();
    const double scaled = lambda * d.get_d();
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-6 * (1 + std::abs(scaled)))
        return std::nullopt;
    Rational candidate(Integer(static_cast<long>(rounded)), d);
    candidate.canonicalize();
    if (!verify_least_eigenvalue(a, candidate))
        return std::nullopt;
    return candidate;
}

}  // namespace slb

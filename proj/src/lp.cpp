#include "slb/lp.hpp"

#include "slb/error.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <random>

namespace slb {

auto to_string(LpStatus s) -> std::string
{
    switch (s) {
    case LpStatus::Optimal:
        return "optimal";
    case LpStatus::Infeasible:
        return "infeasible";
    case LpStatus::Unbounded:
        return "unbounded";
    }
    return "?";
}

auto RationalLP::add_variable(const Rational& c, bool free) -> std::size_t
{
    cost_.push_back(c);
    free_.push_back(free);
    return cost_.size() - 1;
}

auto RationalLP::add_row(LpRow row) -> std::size_t
{
    for (const auto& [j, a] : row.coeffs)
        if (j >= cost_.size())
            throw InputError("LP row refers to unknown variable " + std::to_string(j));
    rows_.push_back(std::move(row));
    return rows_.size() - 1;
}

namespace {

// Standard form: minimise c'x' subject to A'x' = b', x' >= 0, b' >= 0.
struct StandardForm {
    std::size_t m = 0, n = 0;
    std::vector<std::vector<Rational>> a;  // m x n
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<int> row_sign;           // +1 or -1 (rows negated to make b' >= 0)
    std::vector<std::size_t> plus, minus;  // user variable -> column (minus = npos if not free)
    std::vector<std::optional<std::size_t>> slack_of_row;
};

constexpr auto npos = std::numeric_limits<std::size_t>::max();

auto standard_form(const RationalLP& lp) -> StandardForm
{
    StandardForm s;
    s.m = lp.row_count();
    const Rational flip = lp.sense() == LpSense::Maximize ? -1 : 1;
    for (std::size_t j = 0; j < lp.variable_count(); ++j) {
        s.plus.push_back(s.n++);
        s.c.push_back(flip * lp.objective()[j]);
        if (lp.is_free(j)) {
            s.minus.push_back(s.n++);
            s.c.push_back(-flip * lp.objective()[j]);
        }
        else
            s.minus.push_back(npos);
    }
    s.slack_of_row.resize(s.m);
    for (std::size_t i = 0; i < s.m; ++i)
        if (lp.rows()[i].type != RowType::Equal) {
            s.slack_of_row[i] = s.n++;
            s.c.push_back(0);
        }
    s.a.assign(s.m, std::vector<Rational>(s.n, Rational(0)));
    s.b.resize(s.m);
    s.row_sign.resize(s.m);
    for (std::size_t i = 0; i < s.m; ++i) {
        const auto& row = lp.rows()[i];
        for (const auto& [j, v] : row.coeffs) {
            s.a[i][s.plus[j]] += v;
            if (s.minus[j] != npos)
                s.a[i][s.minus[j]] -= v;
        }
        if (s.slack_of_row[i])
            s.a[i][*s.slack_of_row[i]] = row.type == RowType::LessEq ? 1 : -1;
        s.row_sign[i] = row.rhs < 0 ? -1 : 1;
        s.b[i] = row.rhs;
        if (s.row_sign[i] < 0) {
            s.b[i] = -s.b[i];
            for (auto& v : s.a[i])
                v = -v;
        }
    }
    return s;
}

template <class T>
struct Arith;

template <>
struct Arith<double> {
    static constexpr double eps = 1e-9;
    static auto from(const Rational& q) -> double { return q.get_d(); }
    static auto pos(double x) -> bool { return x > eps; }
    static auto neg(double x) -> bool { return x < -eps; }
    static auto zero(double x) -> bool { return std::abs(x) <= eps; }
};

template <>
struct Arith<Rational> {
    static auto from(const Rational& q) -> Rational { return q; }
    static auto pos(const Rational& x) -> bool { return sgn(x) > 0; }
    static auto neg(const Rational& x) -> bool { return sgn(x) < 0; }
    static auto zero(const Rational& x) -> bool { return sgn(x) == 0; }
};

enum class PhaseResult { Optimal, Unbounded, IterationLimit };

/// Dense tableau over the standard form plus one artificial column per row.
template <class T>
class Tableau {
public:
    using A = Arith<T>;

    explicit Tableau(const StandardForm& s) : m_(s.m), n_(s.n), cols_(s.n + s.m)
    {
        a_.assign(m_, std::vector<T>(cols_ + 1, T(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j)
                if (sgn(s.a[i][j]) != 0)
                    a_[i][j] = A::from(s.a[i][j]);
            a_[i][n_ + i] = T(1);
            a_[i][cols_] = A::from(s.b[i]);
            basis_[i] = n_ + i;
        }
    }

    auto basis() const -> const std::vector<std::size_t>& { return basis_; }
    auto rhs(std::size_t i) const -> const T& { return a_[i][cols_]; }
    auto rhs_ref(std::size_t i) -> T& { return a_[i][cols_]; }
    auto entry(std::size_t i, std::size_t j) const -> const T& { return a_[i][j]; }
    auto pivots() const -> std::size_t { return pivots_; }

    auto pivot(std::size_t r, std::size_t c) -> void
    {
        ++pivots_;
        auto& pr = a_[r];
        const T inv = T(1) / pr[c];
        for (auto& v : pr)
            if (!is_exact_zero(v))
                v *= inv;
        pr[c] = T(1);
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || is_exact_zero(a_[i][c]))
                continue;
            const T f = a_[i][c];
            auto& row = a_[i];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (!is_exact_zero(pr[j]))
                    row[j] -= f * pr[j];
            row[c] = T(0);
        }
        if (!d_.empty() && !is_exact_zero(d_[c])) {
            const T f = d_[c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (!is_exact_zero(pr[j]))
                    d_[j] -= f * pr[j];
            d_[c] = T(0);
        }
        basis_[r] = c;
    }

    /// Minimises cost over the current basis. Artificial columns never enter.
    auto run(const std::vector<T>& cost, bool bland, std::size_t limit) -> PhaseResult
    {
        d_.assign(cols_ + 1, T(0));
        for (std::size_t j = 0; j < cols_; ++j)
            d_[j] = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
            const T cb = cost[basis_[i]];
            if (is_exact_zero(cb))
                continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (!is_exact_zero(a_[i][j]))
                    d_[j] -= cb * a_[i][j];
        }
        for (std::size_t it = 0; it < limit; ++it) {
            const bool use_bland = bland || it > 50 * (m_ + 1);
            std::size_t enter = npos;
            for (std::size_t j = 0; j < n_; ++j) {
                if (!A::neg(d_[j]))
                    continue;
                if (use_bland) {
                    enter = j;
                    break;
                }
                if (enter == npos || d_[j] < d_[enter])
                    enter = j;
            }
            if (enter == npos)
                return PhaseResult::Optimal;
            std::size_t leave = npos;
            if constexpr (std::is_same_v<T, Rational>) {
                T best{};
                for (std::size_t i = 0; i < m_; ++i) {
                    if (!A::pos(a_[i][enter]))
                        continue;
                    T ratio = a_[i][cols_] / a_[i][enter];
                    if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                        leave = i;
                        best = ratio;
                    }
                }
            }
            else {
                // Harris: among rows whose ratio is within tolerance of the minimum, take the largest pivot.
                double bound = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < m_; ++i)
                    if (A::pos(a_[i][enter]))
                        bound = std::min(bound, (a_[i][cols_] + A::eps) / a_[i][enter]);
                for (std::size_t i = 0; i < m_; ++i) {
                    if (!A::pos(a_[i][enter]) || a_[i][cols_] / a_[i][enter] > bound)
                        continue;
                    if (leave == npos || a_[i][enter] > a_[leave][enter])
                        leave = i;
                }
            }
            if (leave == npos)
                return PhaseResult::Unbounded;
            pivot(leave, enter);
        }
        return PhaseResult::IterationLimit;
    }

    auto objective_value(const std::vector<T>& cost) const -> T
    {
        T z = T(0);
        for (std::size_t i = 0; i < m_; ++i)
            z += cost[basis_[i]] * a_[i][cols_];
        return z;
    }

    /// Pivots out basic artificials wherever a structural column allows it.
    auto drive_out_artificials() -> void
    {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_)
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!A::zero(a_[i][j])) {
                    pivot(i, j);
                    break;
                }
        }
    }

    /// Tries to make the given structural columns basic.
    auto install(const std::vector<std::size_t>& wanted) -> void
    {
        for (std::size_t c : wanted) {
            if (c >= n_)
                continue;
            for (std::size_t i = 0; i < m_; ++i)
                if (basis_[i] >= n_ && !A::zero(a_[i][c])) {
                    pivot(i, c);
                    break;
                }
        }
    }

    auto cols() const -> std::size_t { return cols_; }

private:
    static auto is_exact_zero(const T& v) -> bool
    {
        if constexpr (std::is_same_v<T, Rational>)
            return sgn(v) == 0;
        else
            return v == 0.0;
    }

    std::size_t m_, n_, cols_;
    std::vector<std::vector<T>> a_;
    std::vector<T> d_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

struct ExactBasisCheck {
    bool optimal = false;
    std::vector<Rational> xb;  // basic values, per row
    std::vector<Rational> y;   // duals of the standard form
};

/// Solves B x = rhs (or B^T x = rhs) by Gaussian elimination.
auto solve_square(std::vector<std::vector<Rational>> b, std::vector<Rational> rhs) -> std::optional<std::vector<Rational>>
{
    const std::size_t m = rhs.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t p = col;
        while (p < m && sgn(b[p][col]) == 0)
            ++p;
        if (p == m)
            return std::nullopt;
        std::swap(b[p], b[col]);
        std::swap(rhs[p], rhs[col]);
        const Rational inv = 1 / b[col][col];
        for (std::size_t i = 0; i < m; ++i) {
            if (i == col || sgn(b[i][col]) == 0)
                continue;
            const Rational f = b[i][col] * inv;
            for (std::size_t j = col; j < m; ++j)
                if (sgn(b[col][j]) != 0)
                    b[i][j] -= f * b[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        rhs[i] /= b[i][i];
    return rhs;
}

auto column(const StandardForm& s, std::size_t c, std::size_t i) -> Rational
{
    if (c < s.n)
        return s.a[i][c];
    return c - s.n == i ? Rational(1) : Rational(0);
}

auto check_basis(const StandardForm& s, const std::vector<std::size_t>& basis) -> ExactBasisCheck
{
    ExactBasisCheck out;
    const std::size_t m = s.m;
    std::vector<std::vector<Rational>> b(m, std::vector<Rational>(m)), bt(m, std::vector<Rational>(m));
    std::vector<Rational> cb(m);
    for (std::size_t k = 0; k < m; ++k) {
        cb[k] = basis[k] < s.n ? s.c[basis[k]] : Rational(0);
        for (std::size_t i = 0; i < m; ++i) {
            b[i][k] = column(s, basis[k], i);
            bt[k][i] = b[i][k];
        }
    }
    auto xb = solve_square(b, s.b);
    if (!xb)
        return out;
    for (std::size_t k = 0; k < m; ++k)
        if (sgn((*xb)[k]) < 0 || (basis[k] >= s.n && sgn((*xb)[k]) != 0))
            return out;
    auto y = solve_square(bt, cb);
    if (!y)
        return out;
    for (std::size_t j = 0; j < s.n; ++j) {
        Rational d = s.c[j];
        for (std::size_t i = 0; i < m; ++i)
            if (sgn(s.a[i][j]) != 0)
                d -= (*y)[i] * s.a[i][j];
        if (sgn(d) < 0)
            return out;
    }
    out.optimal = true;
    out.xb = std::move(*xb);
    out.y = std::move(*y);
    return out;
}

auto assemble(const RationalLP& lp, const StandardForm& s, const std::vector<std::size_t>& basis,
              const ExactBasisCheck& chk) -> LpSolution
{
    LpSolution sol;
    sol.status = LpStatus::Optimal;
    std::vector<Rational> xs(s.n, Rational(0));
    for (std::size_t k = 0; k < s.m; ++k)
        if (basis[k] < s.n)
            xs[basis[k]] = chk.xb[k];
    sol.x.resize(lp.variable_count());
    for (std::size_t j = 0; j < lp.variable_count(); ++j) {
        sol.x[j] = xs[s.plus[j]];
        if (s.minus[j] != npos)
            sol.x[j] -= xs[s.minus[j]];
    }
    Rational z = 0;
    for (std::size_t j = 0; j < s.n; ++j)
        z += s.c[j] * xs[j];
    const int flip = lp.sense() == LpSense::Maximize ? -1 : 1;
    sol.objective = flip * z;
    sol.dual.resize(s.m);
    for (std::size_t i = 0; i < s.m; ++i)
        sol.dual[i] = flip * s.row_sign[i] * chk.y[i];
    return sol;
}

template <class T>
auto costs(const StandardForm& s, bool phase_one) -> std::vector<T>
{
    std::vector<T> c(s.n + s.m, T(0));
    for (std::size_t j = 0; j < s.n; ++j)
        c[j] = phase_one ? T(0) : Arith<T>::from(s.c[j]);
    if (phase_one)
        for (std::size_t i = 0; i < s.m; ++i)
            c[s.n + i] = T(1);
    return c;
}

/// Exact two-phase Bland simplex, optionally starting from a suggested basis.
auto exact_simplex(const RationalLP& lp, const StandardForm& s, const std::vector<std::size_t>* hint) -> LpSolution
{
    const auto unlimited = std::numeric_limits<std::size_t>::max();
    Tableau<Rational> t(s);
    if (hint) {
        t.install(*hint);
        bool feasible = true;
        for (std::size_t i = 0; i < s.m; ++i)
            feasible = feasible && sgn(t.rhs(i)) >= 0;
        if (!feasible)
            t = Tableau<Rational>(s);
    }
    const auto c1 = costs<Rational>(s, true);
    t.run(c1, true, unlimited);
    if (sgn(t.objective_value(c1)) > 0) {
        LpSolution sol;
        sol.status = LpStatus::Infeasible;
        sol.exact_pivots = t.pivots();
        return sol;
    }
    t.drive_out_artificials();
    if (t.run(costs<Rational>(s, false), true, unlimited) == PhaseResult::Unbounded) {
        LpSolution sol;
        sol.status = LpStatus::Unbounded;
        sol.exact_pivots = t.pivots();
        return sol;
    }
    auto chk = check_basis(s, t.basis());
    if (!chk.optimal)
        throw CheckFailure("exact simplex terminated with a basis that fails the optimality check");
    auto sol = assemble(lp, s, t.basis(), chk);
    sol.exact_pivots = t.pivots();
    return sol;
}

}  // namespace

auto solve_exact(const RationalLP& lp) -> LpSolution
{
    return exact_simplex(lp, standard_form(lp), nullptr);
}

auto solve(const RationalLP& lp) -> LpSolution
{
    const auto s = standard_form(lp);
    // The float pass only proposes a basis, so its right-hand side is
    // perturbed to keep degenerate problems from stalling.
    Tableau<double> t(s);
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> jitter(1e-7, 2e-7);
    for (std::size_t i = 0; i < s.m; ++i)
        t.rhs_ref(i) += jitter(rng);
    const std::size_t limit = 100 * (s.m + s.n + 10);
    const auto c1 = costs<double>(s, true);
    bool usable = t.run(c1, false, limit) == PhaseResult::Optimal && t.objective_value(c1) < 1e-6;
    if (usable) {
        t.drive_out_artificials();
        usable = t.run(costs<double>(s, false), false, limit) == PhaseResult::Optimal;
    }
    if (usable) {
        auto chk = check_basis(s, t.basis());
        if (chk.optimal) {
            auto sol = assemble(lp, s, t.basis(), chk);
            sol.warm_start_used = true;
            return sol;
        }
        return exact_simplex(lp, s, &t.basis());
    }
    return exact_simplex(lp, s, nullptr);
}

auto check_optimality(const RationalLP& lp, const LpSolution& sol) -> std::string
{
    if (sol.status != LpStatus::Optimal)
        return "not optimal";
    const bool max = lp.sense() == LpSense::Maximize;
    if (sol.x.size() != lp.variable_count() || sol.dual.size() != lp.row_count())
        return "dimension mismatch";
    for (std::size_t j = 0; j < lp.variable_count(); ++j)
        if (!lp.is_free(j) && sol.x[j] < 0)
            return "variable " + std::to_string(j) + " negative";
    Rational dual_obj = 0;
    std::vector<Rational> aty(lp.variable_count(), Rational(0));
    for (std::size_t i = 0; i < lp.row_count(); ++i) {
        const auto& row = lp.rows()[i];
        Rational lhs = 0;
        for (const auto& [j, a] : row.coeffs) {
            lhs += a * sol.x[j];
            aty[j] += a * sol.dual[i];
        }
        const bool ok = row.type == RowType::Equal ? lhs == row.rhs
                        : row.type == RowType::LessEq ? lhs <= row.rhs
                                                      : lhs >= row.rhs;
        if (!ok)
            return "row " + std::to_string(i) + " violated";
        // Dual sign: for a maximisation, <= rows carry y >= 0 and >= rows y <= 0.
        const int want = row.type == RowType::Equal ? 0 : ((row.type == RowType::LessEq) == max ? 1 : -1);
        if (want * sgn(sol.dual[i]) < 0)
            return "dual " + std::to_string(i) + " has the wrong sign";
        dual_obj += row.rhs * sol.dual[i];
    }
    Rational primal_obj = 0;
    for (std::size_t j = 0; j < lp.variable_count(); ++j) {
        primal_obj += lp.objective()[j] * sol.x[j];
        const Rational slack = aty[j] - lp.objective()[j];
        if (lp.is_free(j) ? sgn(slack) != 0 : (max ? sgn(slack) < 0 : sgn(slack) > 0))
            return "dual constraint " + std::to_string(j) + " violated";
    }
    if (primal_obj != sol.objective)
        return "reported objective does not match x";
    if (primal_obj != dual_obj)
        return "primal and dual objectives differ";
    return {};
}

}  // namespace slb

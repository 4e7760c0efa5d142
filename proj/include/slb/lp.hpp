#pragma once

// Linear programs with exact rational data. Solved by a floating-point simplex
// whose final basis is then verified (or repaired) in exact arithmetic.

#include "slb/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace slb {

enum class LpSense { Maximize, Minimize };
enum class RowType { LessEq, Equal, GreaterEq };
enum class LpStatus { Optimal, Infeasible, Unbounded };

auto to_string(LpStatus s) -> std::string;

struct LpRow {
    std::vector<std::pair<std::size_t, Rational>> coeffs;  ///< (variable, coefficient)
    RowType type = RowType::Equal;
    Rational rhs;
};

class RationalLP {
public:
    explicit RationalLP(LpSense sense) : sense_(sense) {}

    /// Adds a variable with objective coefficient c; nonnegative unless free.
    auto add_variable(const Rational& c, bool free = false) -> std::size_t;
    auto add_row(LpRow row) -> std::size_t;

    auto sense() const -> LpSense { return sense_; }
    auto variable_count() const -> std::size_t { return cost_.size(); }
    auto row_count() const -> std::size_t { return rows_.size(); }
    auto objective() const -> const std::vector<Rational>& { return cost_; }
    auto is_free(std::size_t j) const -> bool { return free_[j]; }
    auto rows() const -> const std::vector<LpRow>& { return rows_; }

private:
    LpSense sense_;
    std::vector<Rational> cost_;
    std::vector<bool> free_;
    std::vector<LpRow> rows_;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x;     ///< one value per variable
    std::vector<Rational> dual;  ///< per row; objective == sum rhs_i * dual_i at optimum
    bool warm_start_used = false;  ///< floating basis accepted without exact pivoting
    std::size_t exact_pivots = 0;
};

/// Solves exactly. Optimality is certified by primal feasibility of the basic
/// solution and nonnegative reduced costs, both checked in rational arithmetic.
auto solve(const RationalLP& lp) -> LpSolution;

/// Same, but skips the floating warm start (pure exact Bland simplex).
auto solve_exact(const RationalLP& lp) -> LpSolution;

/// Independent check of an optimal solution: feasibility, and dual
/// feasibility with equal objective values. Returns an empty string if fine.
auto check_optimality(const RationalLP& lp, const LpSolution& s) -> std::string;

}  // namespace slb

// Copyright 2026 The twoprover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twoprover/lp.h"

#include <cstddef>

#include "twoprover/errors.h"

namespace twoprover {

void LinearProgram::AddConstraint(const std::vector<std::pair<int, Rational>>& terms,
                                  Relation relation, const Rational& rhs) {
  LinearConstraint row;
  row.coefficients.assign(num_variables, Rational(0));
  for (const auto& [var, coef] : terms) {
    if (var < 0 || var >= num_variables) {
      throw DimensionError("constraint references variable " + std::to_string(var) +
                           " of " + std::to_string(num_variables));
    }
    row.coefficients[var] += coef;
  }
  row.relation = relation;
  row.rhs = rhs;
  constraints.push_back(std::move(row));
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// Tableau rows 0..m-1 are constraints, row m is the reduced-cost row
// d_j = c_B B^-1 A_j - c_j. The last column holds right-hand sides; the
// reduced-cost row's last entry is the current objective value.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows + 1) * (cols + 1)) {}

  Rational& At(int r, int c) { return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  const Rational& At(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c];
  }
  Rational& Rhs(int r) { return At(r, cols_); }
  Rational& Cost(int c) { return At(rows_, c); }

  void Pivot(int pr, int pc) {
    Rational inv = 1 / At(pr, pc);
    nonzero_.clear();
    for (int c = 0; c <= cols_; ++c) {
      Rational& v = At(pr, c);
      if (v != 0) {
        v *= inv;
        nonzero_.push_back(c);
      }
    }
    Rational factor;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      if (At(r, pc) == 0) continue;
      factor = At(r, pc);
      for (int c : nonzero_) At(r, c) -= factor * At(pr, c);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
  std::vector<int> nonzero_;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Bland's rule: lowest-index improving column, lowest-index leaving basic
// variable among ratio-test ties.
PhaseResult RunSimplex(Tableau& t, std::vector<int>& basis,
                       const std::vector<bool>& may_enter, int& pivots) {
  const int m = t.rows();
  Rational best, ratio;
  while (true) {
    int pc = -1;
    for (int c = 0; c < t.cols(); ++c) {
      if (may_enter[c] && t.Cost(c) < 0) {
        pc = c;
        break;
      }
    }
    if (pc < 0) return PhaseResult::kOptimal;
    int pr = -1;
    for (int r = 0; r < m; ++r) {
      const Rational& a = t.At(r, pc);
      if (a <= 0) continue;
      ratio = t.Rhs(r) / a;
      if (pr < 0 || ratio < best || (ratio == best && basis[r] < basis[pr])) {
        pr = r;
        best = ratio;
      }
    }
    if (pr < 0) return PhaseResult::kUnbounded;
    t.Pivot(pr, pc);
    basis[pr] = pc;
    ++pivots;
  }
}

}  // namespace

LpSolution SolveLp(const LinearProgram& lp, const SizeLimits& limits) {
  const int n = lp.num_variables;
  const int m = static_cast<int>(lp.constraints.size());
  if (n < 0 || static_cast<int>(lp.objective.size()) != n) {
    throw DimensionError("objective length does not match the variable count");
  }
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(lp.constraints[i].coefficients.size()) != n) {
      throw DimensionError("constraint " + std::to_string(i) + " has " +
                           std::to_string(lp.constraints[i].coefficients.size()) +
                           " coefficients, expected " + std::to_string(n));
    }
  }
  if (static_cast<std::uint64_t>(n) > limits.lp_max_variables ||
      static_cast<std::uint64_t>(m) > limits.lp_max_constraints) {
    throw SizeGuardError("LP with " + std::to_string(n) + " variables and " +
                         std::to_string(m) + " constraints exceeds the size guard (" +
                         std::to_string(limits.lp_max_variables) + " variables, " +
                         std::to_string(limits.lp_max_constraints) +
                         " constraints; override with TWOPROVER_LP_MAX_VARIABLES / "
                         "TWOPROVER_LP_MAX_CONSTRAINTS)");
  }

  // Normalize every row to a nonnegative right-hand side.
  std::vector<bool> flipped(m, false);
  std::vector<Relation> relation(m);
  int extra = 0;
  for (int i = 0; i < m; ++i) {
    relation[i] = lp.constraints[i].relation;
    if (lp.constraints[i].rhs < 0) {
      flipped[i] = true;
      if (relation[i] == Relation::kLessEqual) {
        relation[i] = Relation::kGreaterEqual;
      } else if (relation[i] == Relation::kGreaterEqual) {
        relation[i] = Relation::kLessEqual;
      }
    }
    extra += relation[i] == Relation::kGreaterEqual ? 2 : 1;
  }

  const int cols = n + extra;
  Tableau t(m, cols);
  std::vector<int> basis(m);
  std::vector<int> unit_column(m);  // column equal to e_i in the initial tableau
  std::vector<bool> artificial(cols, false);
  int next = n;
  for (int i = 0; i < m; ++i) {
    const LinearConstraint& row = lp.constraints[i];
    for (int j = 0; j < n; ++j) {
      if (row.coefficients[j] != 0) {
        t.At(i, j) = flipped[i] ? Rational(-row.coefficients[j]) : row.coefficients[j];
      }
    }
    t.Rhs(i) = flipped[i] ? Rational(-row.rhs) : row.rhs;
    switch (relation[i]) {
      case Relation::kLessEqual:
        t.At(i, next) = 1;
        unit_column[i] = next++;
        break;
      case Relation::kGreaterEqual:
        t.At(i, next++) = -1;
        t.At(i, next) = 1;
        artificial[next] = true;
        unit_column[i] = next++;
        break;
      case Relation::kEqual:
        t.At(i, next) = 1;
        artificial[next] = true;
        unit_column[i] = next++;
        break;
    }
    basis[i] = unit_column[i];
  }

  LpSolution solution;

  // Phase 1: maximize -sum(artificials).
  bool any_artificial = false;
  for (int i = 0; i < m; ++i) {
    if (!artificial[basis[i]]) continue;
    any_artificial = true;
    for (int c = 0; c <= cols; ++c) {
      if (c == cols || !artificial[c]) t.At(m, c) -= t.At(i, c);
    }
  }
  if (any_artificial) {
    std::vector<bool> may_enter(cols, true);
    RunSimplex(t, basis, may_enter, solution.pivots);
    if (t.Rhs(m) != 0) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis where possible; rows
    // without a usable pivot are redundant and keep their artificial at 0.
    for (int i = 0; i < m; ++i) {
      if (!artificial[basis[i]]) continue;
      for (int c = 0; c < cols; ++c) {
        if (!artificial[c] && t.At(i, c) != 0) {
          t.Pivot(i, c);
          basis[i] = c;
          ++solution.pivots;
          break;
        }
      }
    }
  }

  // Phase 2 reduced costs from scratch.
  for (int c = 0; c <= cols; ++c) t.At(m, c) = 0;
  for (int j = 0; j < n; ++j) t.Cost(j) = -lp.objective[j];
  for (int i = 0; i < m; ++i) {
    int b = basis[i];
    if (b >= n || lp.objective[b] == 0) continue;
    const Rational& cb = lp.objective[b];
    for (int c = 0; c <= cols; ++c) {
      if (t.At(i, c) != 0) t.At(m, c) += cb * t.At(i, c);
    }
  }
  std::vector<bool> may_enter(cols);
  for (int c = 0; c < cols; ++c) may_enter[c] = !artificial[c];
  if (RunSimplex(t, basis, may_enter, solution.pivots) == PhaseResult::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.value = t.Rhs(m);
  solution.primal.assign(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) solution.primal[basis[i]] = t.Rhs(i);
  }
  solution.dual.resize(m);
  for (int i = 0; i < m; ++i) {
    const Rational& y = t.Cost(unit_column[i]);
    solution.dual[i] = flipped[i] ? Rational(-y) : y;
  }
  return solution;
}

OptimalityCheck VerifyOptimality(const LinearProgram& lp, const LpSolution& s) {
  OptimalityCheck check;
  auto fail = [&check](std::string msg) {
    check.ok = false;
    check.failure = std::move(msg);
    return check;
  };
  const int n = lp.num_variables;
  const int m = static_cast<int>(lp.constraints.size());
  if (s.status != LpStatus::kOptimal) return fail("solution is not optimal");
  if (static_cast<int>(s.primal.size()) != n || static_cast<int>(s.dual.size()) != m) {
    return fail("certificate has the wrong shape");
  }
  Rational primal_value;
  for (int j = 0; j < n; ++j) {
    if (s.primal[j] < 0) return fail("x[" + std::to_string(j) + "] is negative");
    primal_value += lp.objective[j] * s.primal[j];
  }
  if (primal_value != s.value) return fail("objective at x differs from the value");
  Rational dual_value;
  std::vector<Rational> aty(n);
  for (int i = 0; i < m; ++i) {
    const LinearConstraint& row = lp.constraints[i];
    Rational lhs;
    for (int j = 0; j < n; ++j) {
      if (row.coefficients[j] == 0) continue;
      lhs += row.coefficients[j] * s.primal[j];
      aty[j] += row.coefficients[j] * s.dual[i];
    }
    const std::string tag = "row " + std::to_string(i);
    switch (row.relation) {
      case Relation::kLessEqual:
        if (lhs > row.rhs) return fail(tag + " violated");
        if (s.dual[i] < 0) return fail(tag + " has a negative multiplier");
        break;
      case Relation::kGreaterEqual:
        if (lhs < row.rhs) return fail(tag + " violated");
        if (s.dual[i] > 0) return fail(tag + " has a positive multiplier");
        break;
      case Relation::kEqual:
        if (lhs != row.rhs) return fail(tag + " violated");
        break;
    }
    dual_value += row.rhs * s.dual[i];
  }
  for (int j = 0; j < n; ++j) {
    if (aty[j] < lp.objective[j]) {
      return fail("dual constraint " + std::to_string(j) + " violated");
    }
  }
  if (dual_value != primal_value) return fail("duality gap is nonzero");
  return check;
}

}  // namespace twoprover

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

#ifndef TWOPROVER_LP_H_
#define TWOPROVER_LP_H_

// Exact rational linear programming.
//
//   maximize    c . x
//   subject to  A_i . x  (<=, =, >=)  b_i   for every row i
//               x >= 0
//
// Solved by a dense two-phase tableau simplex with Bland's rule. Every
// number is an mpq_class, so the returned point is exactly feasible and the
// dual certificate closes the duality gap exactly.

#include <string>
#include <vector>

#include "twoprover/limits.h"
#include "twoprover/scalar.h"

namespace twoprover {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;  // length = num_variables
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

struct LinearProgram {
  int num_variables = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;

  explicit LinearProgram(int n = 0) : num_variables(n), objective(n) {}

  // Appends a row given as sparse (variable, coefficient) terms.
  void AddConstraint(const std::vector<std::pair<int, Rational>>& terms,
                     Relation relation, const Rational& rhs);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;               // optimal objective (kOptimal only)
  std::vector<Rational> primal; // x
  // y, one per constraint: y >= 0 on <= rows, y <= 0 on >= rows, free on
  // equalities; A^T y >= c and b . y = c . x certify optimality.
  std::vector<Rational> dual;
  int pivots = 0;
};

// Throws DimensionError on malformed rows and SizeGuardError when the LP is
// larger than the configured limits.
LpSolution SolveLp(const LinearProgram& lp, const SizeLimits& limits = DefaultLimits());

struct OptimalityCheck {
  bool ok = true;
  std::string failure;  // first failed condition, empty when ok
};

// Exact re-check of primal feasibility, dual feasibility and zero gap.
OptimalityCheck VerifyOptimality(const LinearProgram& lp, const LpSolution& solution);

}  // namespace twoprover

#endif  // TWOPROVER_LP_H_

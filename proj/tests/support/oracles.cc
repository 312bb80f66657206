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

#include "oracles.h"

#include <algorithm>
#include <functional>

namespace twoprover::oracle {
namespace {

// Calls visit(tuple) for every tuple in {0..base-1}^length.
void ForEachTuple(int length, int base, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> t(length, 0);
  while (true) {
    visit(t);
    int i = length - 1;
    while (i >= 0 && ++t[i] == base) t[i--] = 0;
    if (i < 0) return;
  }
}

}  // namespace

Rational ClassicalByPairs(const TwoProverGame<Rational>& g) {
  Rational best = 0;
  ForEachTuple(g.q1_count, g.a1_count, [&](const std::vector<int>& f1) {
    ForEachTuple(g.q2_count, g.a2_count, [&](const std::vector<int>& f2) {
      Rational total = 0;
      for (int i = 0; i < g.q1_count; ++i) {
        for (int j = 0; j < g.q2_count; ++j) total += g.Pi(i, j) * g.Accept(i, j, f1[i], f2[j]);
      }
      best = std::max(best, total);
    });
  });
  return best;
}

Rational MultiRoundByTables(const MultiRoundGame<Rational>& g) {
  // One letter per question prefix of every length, listed round by round.
  std::vector<std::vector<int>> prefixes;
  for (int k = 1; k <= g.rounds; ++k) {
    ForEachTuple(k, g.q_count, [&](const std::vector<int>& p) { prefixes.push_back(p); });
  }
  auto slot = [&](const std::vector<int>& q, int k) {
    std::size_t offset = 0;
    for (int j = 1; j < k; ++j) offset += IntPow(g.q_count, j);
    std::vector<int> prefix(q.begin(), q.begin() + k);
    return offset + EncodeTuple(prefix, g.q_count);
  };
  Rational best = 0;
  ForEachTuple(static_cast<int>(prefixes.size()), g.a_count, [&](const std::vector<int>& f) {
    Rational total = 0;
    for (std::int64_t qc = 0; qc < g.QuestionTuples(); ++qc) {
      if (g.pi[qc] == 0) continue;
      const std::vector<int> q = DecodeTuple(qc, g.q_count, g.rounds);
      std::vector<int> a(g.rounds);
      for (int k = 1; k <= g.rounds; ++k) a[k - 1] = f[slot(q, k)];
      total += g.pi[qc] * g.Accept(qc, EncodeTuple(a, g.a_count));
    }
    best = std::max(best, total);
  });
  return best;
}

Rational PcpByProofs(const PcpGame<Rational>& g) {
  Rational best = 0;
  ForEachTuple(g.positions, g.alphabet, [&](const std::vector<int>& proof) {
    Rational total = 0;
    for (std::size_t t = 0; t < g.triples.size(); ++t) {
      const Triple& q = g.triples[t];
      const int code = (proof[q[0]] * g.alphabet + proof[q[1]]) * g.alphabet + proof[q[2]];
      total += g.pi[t] * g.Accept(t, code);
    }
    best = std::max(best, total);
  });
  return best;
}

Rational OneInThreeByAssignments(const OneInThreeFormula& f) {
  int best = 0;
  ForEachTuple(f.num_variables, 2, [&](const std::vector<int>& x) {
    int satisfied = 0;
    for (const auto& clause : f.clauses) {
      int true_literals = 0;
      for (const Literal& l : clause) true_literals += (x[l.variable] == 1) == l.positive;
      satisfied += true_literals == 1;
    }
    best = std::max(best, satisfied);
  });
  Rational out(best, static_cast<long>(f.clauses.size()));
  out.canonicalize();
  return out;
}

std::optional<Rational> LpByVertices(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<Rational>& b,
                                     const std::vector<Rational>& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  // Rows 0..m-1 are A x <= b, rows m..m+n-1 are -x_j <= 0.
  auto row = [&](int r) {
    std::vector<Rational> out(n);
    if (r < m) return a[r];
    out[r - m] = -1;
    return out;
  };
  auto rhs = [&](int r) { return r < m ? b[r] : Rational(0); };
  std::optional<Rational> best;
  std::vector<int> chosen(n);
  std::function<void(int, int)> pick = [&](int start, int depth) {
    if (depth == n) {
      // Solve the n x n system by Gauss-Jordan elimination.
      std::vector<std::vector<Rational>> mat(n);
      for (int i = 0; i < n; ++i) {
        mat[i] = row(chosen[i]);
        mat[i].push_back(rhs(chosen[i]));
      }
      for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i) {
          if (mat[i][col] != 0) {
            piv = i;
            break;
          }
        }
        if (piv < 0) return;
        std::swap(mat[piv], mat[col]);
        for (int i = 0; i < n; ++i) {
          if (i == col || mat[i][col] == 0) continue;
          const Rational f = mat[i][col] / mat[col][col];
          for (int j = col; j <= n; ++j) mat[i][j] -= f * mat[col][j];
        }
      }
      std::vector<Rational> x(n);
      for (int i = 0; i < n; ++i) x[i] = mat[i][n] / mat[i][i];
      for (int r = 0; r < m + n; ++r) {
        const std::vector<Rational> coeff = row(r);
        Rational lhs = 0;
        for (int j = 0; j < n; ++j) lhs += coeff[j] * x[j];
        if (lhs > rhs(r)) return;
      }
      Rational value = 0;
      for (int j = 0; j < n; ++j) value += c[j] * x[j];
      if (!best || value > *best) best = value;
      return;
    }
    for (int r = start; r < m + n; ++r) {
      chosen[depth] = r;
      pick(r + 1, depth + 1);
    }
  };
  pick(0, 0);
  return best;
}

double DenseExpectation(const Vector& state, const Matrix& m, const Matrix& n) {
  const Eigen::Index d1 = m.rows();
  const Eigen::Index d2 = n.rows();
  Matrix op(d1 * d2, d1 * d2);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d1; ++j) {
      op.block(i * d2, j * d2, d2, d2) = m(i, j) * n;
    }
  }
  return state.dot(op * state).real();
}

}  // namespace twoprover::oracle

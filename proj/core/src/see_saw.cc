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

// Alternating maximization over projective strategies. The state is kept as
// its d1 x d2 amplitude matrix C, so <Psi| M (x) N |Psi> = Tr(C^* M C N^T).

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "twoprover/errors.h"
#include "twoprover/parallel.h"
#include "twoprover/values.h"

namespace twoprover {
namespace {

// A projective measurement as an orthonormal basis with one label per column.
struct Labeled {
  Matrix basis;
  std::vector<int> labels;
};

std::vector<Matrix> Operators(const Labeled& m, int outcomes) {
  const int d = static_cast<int>(m.basis.rows());
  std::vector<Matrix> ops(outcomes, Matrix::Zero(d, d));
  for (int c = 0; c < d; ++c) {
    ops[m.labels[c]] += m.basis.col(c) * m.basis.col(c).adjoint();
  }
  return ops;
}

constexpr int kMeasurementPasses = 50;

// Raises sum_a Tr(P^a B^a) by re-splitting the span of every label pair
// along the positive eigenspace of B^a - B^b.
double Score(const Labeled& m, const std::vector<Matrix>& b) {
  double total = 0;
  for (int c = 0; c < static_cast<int>(m.labels.size()); ++c) {
    total += m.basis.col(c).dot(b[m.labels[c]] * m.basis.col(c)).real();
  }
  return total;
}

void PairwisePass(Labeled& m, const std::vector<Matrix>& b) {
  const int outcomes = static_cast<int>(b.size());
  for (int x = 0; x < outcomes; ++x) {
    for (int y = x + 1; y < outcomes; ++y) {
      std::vector<int> cols;
      for (int c = 0; c < static_cast<int>(m.labels.size()); ++c) {
        if (m.labels[c] == x || m.labels[c] == y) cols.push_back(c);
      }
      if (cols.empty()) continue;
      Matrix v(m.basis.rows(), static_cast<Eigen::Index>(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k) v.col(k) = m.basis.col(cols[k]);
      Matrix h = v.adjoint() * (b[x] - b[y]) * v;
      h = (h + h.adjoint()) / 2.0;
      Eigen::SelfAdjointEigenSolver<Matrix> es(h);
      Matrix rotated = v * es.eigenvectors();
      for (std::size_t k = 0; k < cols.size(); ++k) {
        m.basis.col(cols[k]) = rotated.col(k);
        m.labels[cols[k]] = es.eigenvalues()(k) >= 0 ? x : y;
      }
    }
  }
}

// Repeats pairwise passes until they stop paying off.
void ImproveMeasurement(Labeled& m, const std::vector<Matrix>& b) {
  double current = Score(m, b);
  for (int pass = 0; pass < kMeasurementPasses; ++pass) {
    PairwisePass(m, b);
    const double next = Score(m, b);
    if (next - current < 1e-13) break;
    current = next;
  }
}

struct Problem {
  const TwoProverGame<double>* game;
  int d1;
  int d2;
};

struct Point {
  Matrix c;  // d1 x d2 amplitudes
  std::vector<Labeled> p1;
  std::vector<Labeled> p2;
};

double Objective(const Problem& pr, const Point& pt) {
  const auto& g = *pr.game;
  std::vector<std::vector<Matrix>> m(g.q1_count), n(g.q2_count);
  for (int i = 0; i < g.q1_count; ++i) m[i] = Operators(pt.p1[i], g.a1_count);
  for (int j = 0; j < g.q2_count; ++j) n[j] = Operators(pt.p2[j], g.a2_count);
  double total = 0;
  for (int i = 0; i < g.q1_count; ++i) {
    for (int j = 0; j < g.q2_count; ++j) {
      const double p = g.Pi(i, j);
      if (p == 0) continue;
      for (int x = 0; x < g.a1_count; ++x) {
        Matrix left = pt.c.adjoint() * m[i][x] * pt.c;
        for (int y = 0; y < g.a2_count; ++y) {
          const double r = g.Accept(i, j, x, y);
          if (r == 0) continue;
          total += p * r * (left.array() * n[j][y].array()).sum().real();
        }
      }
    }
  }
  return total;
}

double StateStep(const Problem& pr, Point& pt) {
  const auto& g = *pr.game;
  const int dim = pr.d1 * pr.d2;
  std::vector<std::vector<Matrix>> m(g.q1_count), n(g.q2_count);
  for (int i = 0; i < g.q1_count; ++i) m[i] = Operators(pt.p1[i], g.a1_count);
  for (int j = 0; j < g.q2_count; ++j) n[j] = Operators(pt.p2[j], g.a2_count);
  Matrix w = Matrix::Zero(dim, dim);
  for (int i = 0; i < g.q1_count; ++i) {
    for (int j = 0; j < g.q2_count; ++j) {
      const double p = g.Pi(i, j);
      if (p == 0) continue;
      for (int x = 0; x < g.a1_count; ++x) {
        Matrix right = Matrix::Zero(pr.d2, pr.d2);
        for (int y = 0; y < g.a2_count; ++y) {
          const double r = g.Accept(i, j, x, y);
          if (r != 0) right += (p * r) * n[j][y];
        }
        if (right.isZero(0)) continue;
        w += Kron(m[i][x], right);
      }
    }
  }
  w = (w + w.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(w);
  Vector top = es.eigenvectors().col(dim - 1);
  for (int a = 0; a < pr.d1; ++a) {
    for (int b = 0; b < pr.d2; ++b) pt.c(a, b) = top(a * pr.d2 + b);
  }
  return Objective(pr, pt);
}

double FirstProverStep(const Problem& pr, Point& pt) {
  const auto& g = *pr.game;
  std::vector<std::vector<Matrix>> n(g.q2_count);
  for (int j = 0; j < g.q2_count; ++j) n[j] = Operators(pt.p2[j], g.a2_count);
  for (int i = 0; i < g.q1_count; ++i) {
    std::vector<Matrix> b(g.a1_count, Matrix::Zero(pr.d1, pr.d1));
    for (int j = 0; j < g.q2_count; ++j) {
      const double p = g.Pi(i, j);
      if (p == 0) continue;
      for (int y = 0; y < g.a2_count; ++y) {
        Matrix core = pt.c * n[j][y].transpose() * pt.c.adjoint();
        for (int x = 0; x < g.a1_count; ++x) {
          const double r = g.Accept(i, j, x, y);
          if (r != 0) b[x] += (p * r) * core;
        }
      }
    }
    ImproveMeasurement(pt.p1[i], b);
  }
  return Objective(pr, pt);
}

double SecondProverStep(const Problem& pr, Point& pt) {
  const auto& g = *pr.game;
  std::vector<std::vector<Matrix>> m(g.q1_count);
  for (int i = 0; i < g.q1_count; ++i) m[i] = Operators(pt.p1[i], g.a1_count);
  for (int j = 0; j < g.q2_count; ++j) {
    std::vector<Matrix> b(g.a2_count, Matrix::Zero(pr.d2, pr.d2));
    for (int i = 0; i < g.q1_count; ++i) {
      const double p = g.Pi(i, j);
      if (p == 0) continue;
      for (int x = 0; x < g.a1_count; ++x) {
        Matrix core = (pt.c.adjoint() * m[i][x] * pt.c).transpose();
        for (int y = 0; y < g.a2_count; ++y) {
          const double r = g.Accept(i, j, x, y);
          if (r != 0) b[y] += (p * r) * core;
        }
      }
    }
    ImproveMeasurement(pt.p2[j], b);
  }
  return Objective(pr, pt);
}

Point RandomPoint(const Problem& pr, std::mt19937_64& rng) {
  const auto& g = *pr.game;
  Point pt;
  Vector psi = RandomState(pr.d1 * pr.d2, rng);
  pt.c = Matrix(pr.d1, pr.d2);
  for (int a = 0; a < pr.d1; ++a) {
    for (int b = 0; b < pr.d2; ++b) pt.c(a, b) = psi(a * pr.d2 + b);
  }
  auto draw = [&rng](int d, int outcomes) {
    // Spread the labels as evenly as possible, in random order.
    Labeled m{RandomUnitary(d, rng), std::vector<int>(d)};
    for (int c = 0; c < d; ++c) m.labels[c] = c % outcomes;
    std::shuffle(m.labels.begin(), m.labels.end(), rng);
    return m;
  };
  for (int i = 0; i < g.q1_count; ++i) pt.p1.push_back(draw(pr.d1, g.a1_count));
  for (int j = 0; j < g.q2_count; ++j) pt.p2.push_back(draw(pr.d2, g.a2_count));
  return pt;
}

Point DeterministicPoint(const Problem& pr, const DeterministicBipartiteStrategy& det) {
  Point pt;
  pt.c = Matrix::Zero(pr.d1, pr.d2);
  pt.c(0, 0) = 1;
  for (int answer : det.answers1) {
    pt.p1.push_back({Matrix::Identity(pr.d1, pr.d1), std::vector<int>(pr.d1, answer)});
  }
  for (int answer : det.answers2) {
    pt.p2.push_back({Matrix::Identity(pr.d2, pr.d2), std::vector<int>(pr.d2, answer)});
  }
  return pt;
}

struct RestartOutcome {
  Point point;
  double value = 0;
  std::vector<double> trace;
};

RestartOutcome Climb(const Problem& pr, Point start, const SeeSawOptions& options) {
  RestartOutcome out;
  out.point = std::move(start);
  double current = Objective(pr, out.point);
  for (int it = 0; it < options.max_iterations; ++it) {
    const double before = current;
    out.trace.push_back(StateStep(pr, out.point));
    out.trace.push_back(FirstProverStep(pr, out.point));
    current = SecondProverStep(pr, out.point);
    out.trace.push_back(current);
    if (current - before < options.tolerance) break;
  }
  out.value = current;
  return out;
}

QuantumStrategy ToStrategy(const Problem& pr, const Point& pt) {
  const auto& g = *pr.game;
  QuantumStrategy s;
  s.dim1 = pr.d1;
  s.dim2 = pr.d2;
  s.state = Vector(pr.d1 * pr.d2);
  for (int a = 0; a < pr.d1; ++a) {
    for (int b = 0; b < pr.d2; ++b) s.state(a * pr.d2 + b) = pt.c(a, b);
  }
  s.state.normalize();
  for (const Labeled& m : pt.p1) s.prover1.push_back(ProjectiveFromBasis(m.basis, m.labels, g.a1_count));
  for (const Labeled& m : pt.p2) s.prover2.push_back(ProjectiveFromBasis(m.basis, m.labels, g.a2_count));
  return s;
}

}  // namespace

ValueResult<double, SeeSawWitness> EntangledLowerBound(const TwoProverGame<double>& game,
                                                       const SeeSawOptions& options) {
  RequireValid(game, "game");
  if (options.dim1 < 1 || options.dim2 < 1) throw PreconditionError("local dimensions must be positive");
  if (options.restarts < 1) throw PreconditionError("at least one restart is required");
  if (options.max_iterations < 0) throw PreconditionError("max_iterations must be nonnegative");
  CheckTableSize(SaturatingProduct({static_cast<std::uint64_t>(options.dim1) * options.dim2,
                                    static_cast<std::uint64_t>(options.dim1) * options.dim2}),
                 "see-saw state operator");
  Problem pr{&game, options.dim1, options.dim2};

  bool warm = false;
  DeterministicBipartiteStrategy det;
  if (options.classical_warm_start) {
    try {
      det = ClassicalValue(game).witness;
      warm = true;
    } catch (const SizeGuardError&) {
      warm = false;
    }
  }

  std::function<RestartOutcome(int)> run = [&](int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    Point start = (restart == 0 && warm) ? DeterministicPoint(pr, det) : RandomPoint(pr, rng);
    return Climb(pr, std::move(start), options);
  };
  std::vector<RestartOutcome> outcomes = ParallelMap(options.restarts, run, options.threads);

  ValueResult<double, SeeSawWitness> result;
  result.method = "see-saw";
  result.exact = false;
  int best = 0;
  for (int r = 0; r < options.restarts; ++r) {
    result.witness.restart_values.push_back(outcomes[r].value);
    if (outcomes[r].value > outcomes[best].value) best = r;
  }
  result.witness.best_restart = best;
  result.witness.trace = outcomes[best].trace;
  result.witness.strategy = ToStrategy(pr, outcomes[best].point);
  result.value = EvalQuantum(game, result.witness.strategy);
  return result;
}

ValueResult<double, SeeSawWitness> EntangledLowerBound(const TwoProverGame<Rational>& game,
                                                       const SeeSawOptions& options) {
  return EntangledLowerBound(ToFloat(game), options);
}

}  // namespace twoprover

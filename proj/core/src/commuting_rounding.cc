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

#include "twoprover/commuting_rounding.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "twoprover/errors.h"
#include "twoprover/limits.h"

namespace twoprover {
namespace {

constexpr double kSymmetryTolerance = 1e-9;

Vector Stack(const std::vector<Vector>& blocks) {
  Eigen::Index n = 0;
  for (const Vector& b : blocks) n += b.size();
  Vector out(n);
  Eigen::Index at = 0;
  for (const Vector& b : blocks) {
    out.segment(at, b.size()) = b;
    at += b.size();
  }
  return out;
}

double Expect(const Vector& psi, const Matrix& op) { return psi.dot(op * psi).real(); }

std::string PositionName(int q) { return std::to_string(q); }

std::string TripleName(const Triple& t) {
  return "t=" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

// Coordinate marginals of the second prover's pair answers, lifted.
class SecondProverMarginals {
 public:
  SecondProverMarginals(const DummyOracularization& o, const QuantumStrategy& s)
      : o_(o), s_(s), id1_(Matrix::Identity(s.dim1, s.dim1)) {}

  // N^a_{q | q q~}: the coordinate of pair {q, q~} that answers q, or the
  // average of both coordinates when q = q~.
  Matrix At(int q, int q_tilde, int a) const {
    const int j = o_.PairQuestion(q, q_tilde);
    if (j < 0) throw PreconditionError("pair question outside the support");
    const int alphabet = o_.alphabet;
    const Povm& n = s_.prover2[j];
    Matrix first = Matrix::Zero(s_.dim2, s_.dim2);
    Matrix second = Matrix::Zero(s_.dim2, s_.dim2);
    for (int c = 0; c < alphabet; ++c) {
      first += n.elements[a * alphabet + c];
      second += n.elements[c * alphabet + a];
    }
    Matrix local;
    if (q < q_tilde) {
      local = first;
    } else if (q > q_tilde) {
      local = second;
    } else {
      local = (first + second) / 2.0;
    }
    return Kron(id1_, local);
  }

 private:
  const DummyOracularization& o_;
  const QuantumStrategy& s_;
  Matrix id1_;
};

}  // namespace

ComRoundingTables ComDecompose(const PcpGame<Rational>& g, const DummyOracularization& o,
                               const QuantumStrategy& s) {
  ValidationReport report = Validate(s);
  if (!report.ok()) throw PreconditionError("invalid strategy: " + report.Summary());
  if (!s.projective()) {
    throw PreconditionError("the rounding requires projective measurements on both sides");
  }
  if (static_cast<int>(s.prover1.size()) != o.game.q1_count ||
      static_cast<int>(s.prover2.size()) != o.game.q2_count) {
    throw DimensionError("strategy question counts do not match the oracularized game");
  }
  for (const Povm& p : s.prover1) {
    if (p.outcomes() != o.game.a1_count) throw DimensionError("first-prover outcome count");
  }
  for (const Povm& p : s.prover2) {
    if (p.outcomes() != o.game.a2_count) throw DimensionError("second-prover outcome count");
  }
  const int alphabet = g.alphabet;
  for (std::size_t j = 0; j < o.q2_pairs.size(); ++j) {
    if (o.q2_pairs[j].first != o.q2_pairs[j].second) continue;
    for (int a = 0; a < alphabet; ++a) {
      for (int b = 0; b < alphabet; ++b) {
        if (a == b) continue;
        const Matrix& e = s.prover2[j].elements[a * alphabet + b];
        if (e.cwiseAbs().maxCoeff() > kSymmetryTolerance) {
          throw PreconditionError(
              "second prover gives distinct letters on an equal pair; symmetrize first");
        }
      }
    }
  }

  ComRoundingTables t;
  t.positions = g.positions;
  t.alphabet = alphabet;
  t.dim = s.dim1 * s.dim2;
  t.state = s.state;
  const int n = g.positions;
  for (const Rational& p : o.position_marginal) t.position_weight.push_back(p.get_d());
  for (int q = 0; q < n; ++q) {
    if (o.position_marginal[q] > 0) t.order.push_back(q);
  }
  std::stable_sort(t.order.begin(), t.order.end(), [&](int a, int b) {
    return o.position_marginal[a] > o.position_marginal[b];
  });
  t.rank_of.assign(n, -1);
  for (int r = 0; r < t.queried(); ++r) t.rank_of[t.order[r]] = r;

  const Matrix id2 = Matrix::Identity(s.dim2, s.dim2);
  auto lift1 = [&](const Matrix& m) { return Kron(m, id2); };
  const int a3 = g.AnswerTriples();
  auto letter = [alphabet](int code, int slot) {
    for (int k = 2; k > slot; --k) code /= alphabet;
    return code % alphabet;
  };

  // First-prover operators per supported triple.
  std::vector<std::vector<Matrix>> m_full(o.q1_triples.size());
  for (std::size_t i = 0; i < o.q1_triples.size(); ++i) {
    const std::size_t tri = o.q1_triples[i];
    t.triples.push_back(g.triples[tri]);
    t.triple_weight.push_back(g.pi[tri].get_d());
    std::vector<double> dist(a3);
    for (int c = 0; c < a3; ++c) {
      m_full[i].push_back(lift1(s.prover1[i].elements[c]));
      dist[c] = Expect(s.state, m_full[i][c]);
    }
    t.triple_answer.push_back(dist);
  }
  auto slot_marginal = [&](std::size_t i, int slot, int a) {
    Matrix out = Matrix::Zero(t.dim, t.dim);
    for (int c = 0; c < a3; ++c) {
      if (letter(c, slot) == a) out += m_full[i][c];
    }
    return out;
  };

  SecondProverMarginals n_coord(o, s);
  t.m_bar.assign(n, {});
  t.n_bar.assign(n, {});
  t.x.assign(n, {});
  t.y.assign(n, {});
  for (int q : t.order) {
    const double pq = t.position_weight[q];
    for (int a = 0; a < alphabet; ++a) {
      Matrix mb = Matrix::Zero(t.dim, t.dim);
      for (std::size_t i = 0; i < t.triples.size(); ++i) {
        for (int slot = 0; slot < 3; ++slot) {
          if (t.triples[i][slot] == q) mb += (t.triple_weight[i] / (3 * pq)) * slot_marginal(i, slot, a);
        }
      }
      Matrix nb = Matrix::Zero(t.dim, t.dim);
      for (int qt : t.order) nb += t.position_weight[qt] * n_coord.At(q, qt, a);
      t.m_bar[q].push_back(mb);
      t.n_bar[q].push_back(nb);
      t.x[q].push_back(PsdSqrt(mb));
      t.y[q].push_back(PsdSqrt(nb));
    }
  }

  // Failure probabilities.
  double cons_pass = 0;
  for (int q : t.order) {
    for (int a = 0; a < alphabet; ++a) {
      cons_pass += t.position_weight[q] * Expect(s.state, t.m_bar[q][a] * t.n_bar[q][a]);
    }
  }
  t.eps_cons = 1 - cons_pass;
  double sim_pass = 0;
  double pass = 0;
  for (std::size_t i = 0; i < t.triples.size(); ++i) {
    const std::size_t tri = o.q1_triples[i];
    for (int c = 0; c < a3; ++c) {
      const double r = g.Accept(tri, c).get_d();
      if (r == 0) continue;
      sim_pass += t.triple_weight[i] * r * t.triple_answer[i][c];
      for (int slot = 0; slot < 3; ++slot) {
        const int q = t.triples[i][slot];
        pass += t.triple_weight[i] * r / 3 *
                Expect(s.state, m_full[i][c] * t.n_bar[q][letter(c, slot)]);
      }
    }
  }
  t.eps_sim = 1 - sim_pass;
  t.eps = 1 - pass;

  // Distances.
  auto x_vec = [&](int q) {
    std::vector<Vector> blocks;
    for (int a = 0; a < alphabet; ++a) blocks.push_back(t.x[q][a] * s.state);
    return Stack(blocks);
  };
  auto y_vec = [&](int q) {
    std::vector<Vector> blocks;
    for (int a = 0; a < alphabet; ++a) blocks.push_back(t.y[q][a] * s.state);
    return Stack(blocks);
  };
  std::vector<Vector> xv(n), yv(n);
  for (int q : t.order) {
    xv[q] = x_vec(q);
    yv[q] = y_vec(q);
  }
  t.d1.assign(n, 0.0);
  t.d2.assign(n, std::vector<double>(n, 0.0));
  t.d4.assign(n, std::vector<double>(n, 0.0));
  for (int q : t.order) {
    t.d1[q] = PureStateTraceDistance(xv[q], yv[q]);
    for (int qt : t.order) {
      std::vector<Vector> blocks;
      for (int a = 0; a < alphabet; ++a) blocks.push_back(n_coord.At(q, qt, a) * s.state);
      t.d2[q][qt] = PureStateTraceDistance(xv[q], Stack(blocks));
    }
  }
  for (int q1 : t.order) {
    for (int q2 : t.order) {
      std::vector<Vector> fwd, bwd;
      for (int a1 = 0; a1 < alphabet; ++a1) {
        for (int a2 = 0; a2 < alphabet; ++a2) {
          fwd.push_back(t.x[q2][a2] * (t.x[q1][a1] * s.state));
          bwd.push_back(t.x[q1][a1] * (t.x[q2][a2] * s.state));
        }
      }
      t.d4[q1][q2] = PureStateTraceDistance(Stack(fwd), Stack(bwd));
    }
  }
  t.d3.resize(t.triples.size());
  for (std::size_t i = 0; i < t.triples.size(); ++i) {
    for (int slot = 0; slot < 3; ++slot) {
      std::vector<Vector> blocks;
      for (int a = 0; a < alphabet; ++a) blocks.push_back(slot_marginal(i, slot, a) * s.state);
      t.d3[i][slot] = PureStateTraceDistance(Stack(blocks), yv[t.triples[i][slot]]);
    }
  }
  return t;
}

RoundedProof RoundCommuting(const ComRoundingTables& t) {
  const int a = t.alphabet;
  CheckTableSize(SaturatingPower(a, t.positions), "proof distribution");
  RoundedProof out;
  out.theta = PcpProofDistribution<double>::Zero(t.positions, a);
  out.raw.assign(out.theta.probabilities.size(), 0.0);
  std::vector<std::int64_t> place(t.positions);
  for (int q = 0; q < t.positions; ++q) place[q] = IntPow(a, t.positions - 1 - q);
  std::function<void(int, const Vector&, std::int64_t)> walk = [&](int rank, const Vector& v,
                                                                   std::int64_t code) {
    if (rank == t.queried()) {
      out.raw[code] = v.squaredNorm();
      return;
    }
    const int q = t.order[rank];
    for (int letter = 0; letter < a; ++letter) {
      walk(rank + 1, t.x[q][letter] * v, code + letter * place[q]);
    }
  };
  walk(0, t.state, 0);
  const double total = std::accumulate(out.raw.begin(), out.raw.end(), 0.0);
  out.deficit = 1 - total;
  for (std::size_t c = 0; c < out.raw.size(); ++c) out.theta.probabilities[c] = out.raw[c] / total;
  return out;
}

double TripleDistanceBound(const ComRoundingTables& t, std::size_t i) {
  double d = 0;
  for (int slot = 0; slot < 3; ++slot) {
    const int q = t.triples[i][slot];
    for (int r = 0; r < t.rank_of[q]; ++r) {
      const int earlier = t.order[r];
      d += 2 * t.d1[earlier] + t.d4[q][earlier];
    }
    d += t.d1[q] + t.d3[i][slot];
  }
  return d;
}

LemmaDistanceValues LemmaDistance(const Povm& m, const Povm& n, const Vector& phi) {
  if (m.outcomes() != n.outcomes()) throw DimensionError("POVMs need the same outcome set");
  for (const Povm* p : {&m, &n}) {
    ValidationReport r = Validate(*p);
    if (!r.ok()) throw PreconditionError("invalid POVM: " + r.Summary());
    if (p->dim() != phi.size()) throw DimensionError("POVM and state dimensions differ");
  }
  if (std::abs(phi.norm() - 1) > 1e-8) throw PreconditionError("state is not a unit vector");
  for (const Matrix& a : m.elements) {
    for (const Matrix& b : n.elements) {
      if ((a * b - b * a).cwiseAbs().maxCoeff() > 1e-9) {
        throw PreconditionError("the two measurements do not commute");
      }
    }
  }
  std::vector<Vector> psi, xi;
  double agree = 0;
  for (int a = 0; a < m.outcomes(); ++a) {
    psi.push_back(PsdSqrt(m.elements[a]) * phi);
    xi.push_back(PsdSqrt(n.elements[a]) * phi);
    agree += Expect(phi, m.elements[a] * n.elements[a]);
  }
  const Vector sp = Stack(psi);
  const Vector sx = Stack(xi);
  LemmaDistanceValues v;
  const double dist = PureStateTraceDistance(sp, sx);
  v.d_squared = dist * dist;
  v.middle = 2 * (1 - sp.dot(sx).real());
  v.two_p = 2 * (1 - agree);
  return v;
}

LemmaDistanceValues LemmaDistanceBipartite(const Povm& m, const Povm& n, const Vector& phi) {
  Povm ml, nl;
  const Matrix i1 = Matrix::Identity(m.dim(), m.dim());
  const Matrix i2 = Matrix::Identity(n.dim(), n.dim());
  for (const Matrix& e : m.elements) ml.elements.push_back(Kron(e, i2));
  for (const Matrix& e : n.elements) nl.elements.push_back(Kron(i1, e));
  ml.projective = m.projective;
  nl.projective = n.projective;
  return LemmaDistance(ml, nl, phi);
}

SelectionValues ClaimSelection(const ComRoundingTables& t, const std::vector<int>& seq, int i) {
  const int m = static_cast<int>(seq.size());
  if (i < 1 || i > m) throw DimensionError("selection index out of range");
  for (int q : seq) {
    if (q < 0 || q >= t.positions || t.rank_of[q] < 0) {
      throw DimensionError("selection positions must be queried positions");
    }
  }
  CheckTableSize(SaturatingPower(t.alphabet, m), "selection enumeration");
  // Application orders (first applied first).
  std::vector<int> moved;
  moved.push_back(i - 1);
  for (int k = 0; k < m; ++k) {
    if (k != i - 1) moved.push_back(k);
  }
  const std::int64_t total = IntPow(t.alphabet, m);
  SelectionValues v;
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<int> z = DecodeTuple(code, t.alphabet, m);
    Vector a = t.state;
    for (int k = 0; k < m; ++k) a = t.x[seq[k]][z[k]] * a;
    Vector b = t.state;
    for (int k : moved) b = t.x[seq[k]][z[k]] * b;
    v.lhs += std::abs(a.squaredNorm() - b.squaredNorm());
  }
  v.lhs /= 2;
  for (int j = 0; j < i - 1; ++j) v.rhs += 2 * t.d1[seq[j]] + t.d4[seq[i - 1]][seq[j]];
  return v;
}

InequalityReport VerifyComClaims(const PcpGame<Rational>& g, const DummyOracularization& o,
                                 const QuantumStrategy& s, const ComRoundingTables& t,
                                 const RoundedProof& rounded, const Rational& w,
                                 const std::string& label) {
  InequalityReport rep;
  const double tol = kRoundingTolerance;
  const std::string pre = label.empty() ? "" : label + " ";
  const double wd = w.get_d();

  // Averages over positions, pairs and triples.
  double e1 = 0, e2 = 0, e3 = 0, e4 = 0;
  for (int q : t.order) {
    e1 += t.position_weight[q] * t.d1[q] * t.d1[q];
    for (int qt : t.order) {
      const double pp = t.position_weight[q] * t.position_weight[qt];
      e2 += pp * t.d2[q][qt] * t.d2[q][qt];
      e4 += pp * t.d4[q][qt] * t.d4[q][qt];
    }
  }
  for (std::size_t i = 0; i < t.triples.size(); ++i) {
    for (int slot = 0; slot < 3; ++slot) e3 += t.triple_weight[i] / 3 * t.d3[i][slot] * t.d3[i][slot];
  }
  rep.AddFloat("bound-d1", pre + "E[d1^2]", e1, 2 * t.eps_cons, tol);
  rep.AddFloat("bound-d2", pre + "E[d2^2]", e2, 2 * t.eps_cons, tol);
  rep.AddFloat("bound-d3", pre + "E[d3^2]", e3, 2 * t.eps_cons, tol);
  rep.AddFloat("bound-d4", pre + "E[d4^2]", e4, 32 * t.eps_cons, tol);

  // Lemma chain for each averaged pair M-bar, N-bar.
  for (int q : t.order) {
    Povm mb{t.m_bar[q], false};
    Povm nb{t.n_bar[q], false};
    LemmaDistanceValues v = LemmaDistance(mb, nb, t.state);
    const std::string inst = pre + "q=" + PositionName(q);
    rep.AddFloat("distance-first", inst, v.d_squared, v.middle, 1e-8);
    rep.AddFloat("distance-second", inst, v.middle, v.two_p, 1e-8);
  }

  // Per-triple statistical difference against d(t).
  const int a3 = g.AnswerTriples();
  std::vector<std::int64_t> place(t.positions);
  for (int q = 0; q < t.positions; ++q) place[q] = IntPow(t.alphabet, t.positions - 1 - q);
  double mean_d = 0;
  for (std::size_t i = 0; i < t.triples.size(); ++i) {
    std::vector<double> induced(a3, 0.0);
    for (std::size_t code = 0; code < rounded.raw.size(); ++code) {
      int c = 0;
      for (int slot = 0; slot < 3; ++slot) {
        c = c * t.alphabet + static_cast<int>((code / place[t.triples[i][slot]]) % t.alphabet);
      }
      induced[c] += rounded.raw[code];
    }
    const double d = TripleDistanceBound(t, i);
    mean_d += t.triple_weight[i] * d;
    rep.AddFloat("triple-distance", pre + TripleName(t.triples[i]),
                 StatisticalDifference(induced, t.triple_answer[i]), d, tol);
  }
  const int qn = t.queried();
  rep.AddFloat("aggregate-lower", pre + "1 - w - eps_sim", 1 - wd - t.eps_sim, mean_d, tol);
  rep.AddFloat("aggregate-upper", pre + "E[d(t)]", mean_d,
               15 * std::sqrt(2.0) * qn * std::sqrt(std::max(t.eps_cons, 0.0)), tol);
  const double c = 1 / std::pow(1 + 15 * std::sqrt(2.0), 2);
  rep.AddFloat("soundness", pre + "c (1 - w)^2 / Q^2", c * (1 - wd) * (1 - wd) / (qn * qn), t.eps, tol);
  rep.AddFloat("cons-below-eps", pre + "eps_cons", t.eps_cons, t.eps, tol);
  rep.AddFloat("sim-below-eps", pre + "eps_sim", t.eps_sim, t.eps, tol);
  rep.AddFloat("rounded-below-value", pre + "eval(theta)", EvalPcp(ToFloat(g), rounded.theta), wd, tol);
  rep.AddFloat("rounding-deficit", pre + "|1 - sum theta|", std::abs(rounded.deficit), 0, tol);

  // Cross-evaluation of the failure probabilities.
  auto identity = [&](const std::string& name, double x, double y) {
    rep.AddFloat(name, pre + "|difference|", std::abs(x - y), 0, 1e-9);
  };
  identity("identity-eps", t.eps, 1 - EvalQuantum(o.game, s));
  identity("identity-eps-cons", t.eps_cons, 1 - EvalQuantum(o.consistency_only, s));
  identity("identity-eps-sim", t.eps_sim, 1 - EvalQuantum(o.simulation_only, s));
  return rep;
}

}  // namespace twoprover

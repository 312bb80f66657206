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

#include "twoprover/quantum.h"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "twoprover/errors.h"

namespace twoprover {

namespace {

double MaxAbs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::string Fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

// Tr(C^dag M C N^T) where C is the d1 x d2 amplitude matrix.
Complex Expectation(const Matrix& c, const Matrix& m, const Matrix& n) {
  return (c.conjugate().cwiseProduct(m * c * n.transpose())).sum();
}

Matrix AmplitudeMatrix(const QuantumStrategy& s) {
  Matrix c(s.dim1, s.dim2);
  for (int i = 0; i < s.dim1; ++i) {
    for (int j = 0; j < s.dim2; ++j) c(i, j) = s.state[i * s.dim2 + j];
  }
  return c;
}

}  // namespace

ValidationReport Validate(const Povm& povm, double tol) {
  ValidationReport report;
  auto& v = report.violations;
  if (povm.elements.empty()) {
    v.push_back("POVM has no outcomes");
    return report;
  }
  const int d = povm.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (int a = 0; a < povm.outcomes(); ++a) {
    const Matrix& e = povm.elements[a];
    if (e.rows() != d || e.cols() != d) {
      v.push_back("POVM element " + std::to_string(a) + " has the wrong dimension");
      return report;
    }
    if (MaxAbs(e - e.adjoint()) > kHermitianTolerance) {
      v.push_back("POVM element " + std::to_string(a) + " is not Hermitian");
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(e, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -tol) {
      v.push_back("POVM element " + std::to_string(a) + " has eigenvalue " +
                  Fmt(eig.eigenvalues().minCoeff()));
    }
    if (povm.projective && MaxAbs(e * e - e) > tol) {
      v.push_back("POVM element " + std::to_string(a) + " is not a projector");
    }
    sum += e;
  }
  if (MaxAbs(sum - Matrix::Identity(d, d)) > tol) {
    v.push_back("POVM elements do not sum to the identity");
  }
  return report;
}

bool QuantumStrategy::projective() const {
  for (const Povm& p : prover1) {
    if (!p.projective) return false;
  }
  for (const Povm& p : prover2) {
    if (!p.projective) return false;
  }
  return true;
}

ValidationReport Validate(const QuantumStrategy& s) {
  ValidationReport report;
  auto& v = report.violations;
  if (s.dim1 <= 0 || s.dim2 <= 0) {
    v.push_back("dimensions must be positive");
    return report;
  }
  if (s.state.size() != static_cast<Eigen::Index>(s.dim1) * s.dim2) {
    v.push_back("state has length " + std::to_string(s.state.size()) + ", expected " +
                std::to_string(s.dim1 * s.dim2));
    return report;
  }
  if (std::abs(s.state.norm() - 1.0) > kStateNormTolerance) {
    v.push_back("state norm is " + Fmt(s.state.norm()));
  }
  auto check = [&v](const std::vector<Povm>& povms, int dim, const char* who) {
    for (std::size_t q = 0; q < povms.size(); ++q) {
      if (povms[q].dim() != dim) {
        v.push_back(std::string(who) + " question " + std::to_string(q) +
                    ": measurement has the wrong dimension");
        continue;
      }
      ValidationReport r = Validate(povms[q]);
      for (const std::string& msg : r.violations) {
        v.push_back(std::string(who) + " question " + std::to_string(q) + ": " + msg);
      }
    }
  };
  check(s.prover1, s.dim1, "prover 1");
  check(s.prover2, s.dim2, "prover 2");
  return report;
}

std::vector<double> JointDistribution(const QuantumStrategy& s, int q1, int q2) {
  if (q1 < 0 || q1 >= static_cast<int>(s.prover1.size()) || q2 < 0 ||
      q2 >= static_cast<int>(s.prover2.size())) {
    throw DimensionError("question pair out of range for the quantum strategy");
  }
  const Povm& m = s.prover1[q1];
  const Povm& n = s.prover2[q2];
  if (m.dim() != s.dim1 || n.dim() != s.dim2 ||
      s.state.size() != static_cast<Eigen::Index>(s.dim1) * s.dim2) {
    throw DimensionError("measurement dimensions do not match the state");
  }
  Matrix c = AmplitudeMatrix(s);
  std::vector<double> p(static_cast<std::size_t>(m.outcomes()) * n.outcomes());
  for (int a1 = 0; a1 < m.outcomes(); ++a1) {
    Matrix mc = m.elements[a1] * c;
    for (int a2 = 0; a2 < n.outcomes(); ++a2) {
      p[a1 * n.outcomes() + a2] =
          (c.conjugate().cwiseProduct(mc * n.elements[a2].transpose())).sum().real();
    }
  }
  return p;
}

template <Scalar S>
BipartiteStrategy<double> ToBipartiteStrategy(const QuantumStrategy& s,
                                              const TwoProverGame<S>& g) {
  if (static_cast<int>(s.prover1.size()) != g.q1_count ||
      static_cast<int>(s.prover2.size()) != g.q2_count) {
    throw DimensionError("quantum strategy question counts do not match the game");
  }
  for (const Povm& p : s.prover1) {
    if (p.outcomes() != g.a1_count) throw DimensionError("prover 1 outcome count mismatch");
  }
  for (const Povm& p : s.prover2) {
    if (p.outcomes() != g.a2_count) throw DimensionError("prover 2 outcome count mismatch");
  }
  auto table = BipartiteStrategy<double>::Zero(g.q1_count, g.q2_count, g.a1_count, g.a2_count);
  for (int i = 0; i < g.q1_count; ++i) {
    for (int j = 0; j < g.q2_count; ++j) {
      std::vector<double> p = JointDistribution(s, i, j);
      std::copy(p.begin(), p.end(), table.table.begin() + table.Index(i, j, 0, 0));
    }
  }
  return table;
}

template BipartiteStrategy<double> ToBipartiteStrategy(const QuantumStrategy&,
                                                       const TwoProverGame<Rational>&);
template BipartiteStrategy<double> ToBipartiteStrategy(const QuantumStrategy&,
                                                       const TwoProverGame<double>&);

double EvalQuantum(const TwoProverGame<double>& g, const QuantumStrategy& s) {
  if (static_cast<int>(s.prover1.size()) != g.q1_count ||
      static_cast<int>(s.prover2.size()) != g.q2_count) {
    throw DimensionError("quantum strategy question counts do not match the game");
  }
  Matrix c = AmplitudeMatrix(s);
  double total = 0.0;
  for (int i = 0; i < g.q1_count; ++i) {
    for (int j = 0; j < g.q2_count; ++j) {
      const double p = g.Pi(i, j);
      if (p == 0.0) continue;
      for (int a1 = 0; a1 < g.a1_count; ++a1) {
        for (int a2 = 0; a2 < g.a2_count; ++a2) {
          const double r = g.Accept(i, j, a1, a2);
          if (r == 0.0) continue;
          total += p * r *
                   Expectation(c, s.prover1[i].elements[a1], s.prover2[j].elements[a2]).real();
        }
      }
    }
  }
  return total;
}

double EvalQuantum(const TwoProverGame<Rational>& g, const QuantumStrategy& s) {
  return EvalQuantum(ToFloat(g), s);
}

Matrix PsdSqrt(const Matrix& op) {
  if (op.rows() != op.cols()) throw DimensionError("square root of a non-square matrix");
  Matrix h = (op + op.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  Eigen::VectorXd values = eig.eigenvalues();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] < -kPovmTolerance) {
      throw PreconditionError("matrix is not positive semidefinite (eigenvalue " +
                              Fmt(values[i]) + ")");
    }
    values[i] = values[i] < 0 ? 0.0 : std::sqrt(values[i]);
  }
  return eig.eigenvectors() * values.cast<Complex>().asDiagonal() *
         eig.eigenvectors().adjoint();
}

double PureStateTraceDistance(const Vector& phi, const Vector& psi) {
  if (phi.size() != psi.size()) throw DimensionError("states have different dimensions");
  if (std::abs(phi.norm() - 1.0) > 1e-8 || std::abs(psi.norm() - 1.0) > 1e-8) {
    throw PreconditionError("trace distance of non-unit vectors (norms " + Fmt(phi.norm()) +
                            ", " + Fmt(psi.norm()) + ")");
  }
  // sqrt(1 - |<phi|psi>|^2) is the norm of the part of psi orthogonal to
  // phi; computing it directly avoids cancellation for nearby states.
  const Vector a = phi / phi.norm();
  const Vector b = psi / psi.norm();
  return std::min(1.0, (b - a.dot(b) * a).norm());
}

Matrix Kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

QuantumStrategy SymmetrizeSecondProver(const QuantumStrategy& s,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       int alphabet) {
  if (pairs.size() != s.prover2.size()) {
    throw DimensionError("pair list does not match the second prover's questions");
  }
  for (const Povm& p : s.prover2) {
    if (p.outcomes() != alphabet * alphabet) {
      throw DimensionError("second prover answers must be letter pairs");
    }
  }
  QuantumStrategy out;
  out.dim1 = 2 * s.dim1;
  out.dim2 = 2 * s.dim2;
  out.state = Vector::Zero(static_cast<Eigen::Index>(out.dim1) * out.dim2);
  const double amp = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < s.dim1; ++i) {
    for (int j = 0; j < s.dim2; ++j) {
      for (int e = 0; e < 2; ++e) {
        out.state[(i * 2 + e) * out.dim2 + (j * 2 + e)] = s.state[i * s.dim2 + j] * amp;
      }
    }
  }
  const Matrix id2 = Matrix::Identity(2, 2);
  Matrix p0 = Matrix::Zero(2, 2);
  Matrix p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  for (const Povm& m : s.prover1) {
    Povm next;
    next.projective = m.projective;
    for (const Matrix& e : m.elements) next.elements.push_back(Kron(e, id2));
    out.prover1.push_back(std::move(next));
  }
  for (std::size_t q = 0; q < s.prover2.size(); ++q) {
    const Povm& n = s.prover2[q];
    Povm next;
    next.projective = n.projective;
    if (pairs[q].first != pairs[q].second) {
      for (const Matrix& e : n.elements) next.elements.push_back(Kron(e, id2));
    } else {
      const int d = s.dim2;
      for (int b1 = 0; b1 < alphabet; ++b1) {
        for (int b2 = 0; b2 < alphabet; ++b2) {
          if (b1 != b2) {
            next.elements.push_back(Matrix::Zero(2 * d, 2 * d));
            continue;
          }
          Matrix first = Matrix::Zero(d, d);
          Matrix second = Matrix::Zero(d, d);
          for (int c = 0; c < alphabet; ++c) {
            first += n.elements[b1 * alphabet + c];
            second += n.elements[c * alphabet + b1];
          }
          next.elements.push_back(Kron(first, p0) + Kron(second, p1));
        }
      }
    }
    out.prover2.push_back(std::move(next));
  }
  return out;
}

QuantumStrategy FromDeterministic(const DeterministicBipartiteStrategy& det, int a1_count,
                                  int a2_count) {
  QuantumStrategy s;
  s.state = Vector::Ones(1);
  auto point = [](int answer, int outcomes) {
    if (answer < 0 || answer >= outcomes) throw DimensionError("answer out of range");
    Povm p;
    p.projective = true;
    for (int a = 0; a < outcomes; ++a) {
      p.elements.push_back(Matrix::Constant(1, 1, a == answer ? 1.0 : 0.0));
    }
    return p;
  };
  for (int a : det.answers1) s.prover1.push_back(point(a, a1_count));
  for (int a : det.answers2) s.prover2.push_back(point(a, a2_count));
  return s;
}

Matrix RandomUnitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  // Fix column phases with R's diagonal so the distribution is Haar.
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    double mag = std::abs(r(i, i));
    if (mag > 0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

Povm RandomPovm(int dim, int outcomes, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Matrix> g;
  Matrix total = Matrix::Zero(dim, dim);
  for (int a = 0; a < outcomes; ++a) {
    Matrix b(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) b(i, j) = Complex(normal(rng), normal(rng));
    }
    g.push_back(b * b.adjoint());
    total += g.back();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(total);
  Matrix inv_sqrt = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                    es.eigenvectors().adjoint();
  Povm p;
  for (const Matrix& e : g) {
    Matrix m = inv_sqrt * e * inv_sqrt;
    p.elements.push_back((m + m.adjoint()) / 2.0);
  }
  return p;
}

Vector RandomState(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

Povm ProjectiveFromBasis(const Matrix& basis, const std::vector<int>& labels, int outcomes) {
  const int d = static_cast<int>(basis.rows());
  Povm p;
  p.projective = true;
  p.elements.assign(outcomes, Matrix::Zero(d, d));
  for (int c = 0; c < static_cast<int>(basis.cols()); ++c) {
    p.elements[labels[c]] += basis.col(c) * basis.col(c).adjoint();
  }
  return p;
}

QuantumStrategy RandomProjectiveStrategy(int dim1, int dim2, int q1_count, int a1_count,
                                         int q2_count, int a2_count, std::mt19937_64& rng) {
  QuantumStrategy s;
  s.dim1 = dim1;
  s.dim2 = dim2;
  s.state = RandomState(dim1 * dim2, rng);
  auto measurement = [&rng](int dim, int outcomes) {
    Matrix u = RandomUnitary(dim, rng);
    std::uniform_int_distribution<int> label(0, outcomes - 1);
    std::vector<int> labels(dim);
    for (int& l : labels) l = label(rng);
    return ProjectiveFromBasis(u, labels, outcomes);
  };
  for (int q = 0; q < q1_count; ++q) s.prover1.push_back(measurement(dim1, a1_count));
  for (int q = 0; q < q2_count; ++q) s.prover2.push_back(measurement(dim2, a2_count));
  return s;
}

}  // namespace twoprover

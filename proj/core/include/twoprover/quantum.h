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

#ifndef TWOPROVER_QUANTUM_H_
#define TWOPROVER_QUANTUM_H_

// Finite-dimensional entangled strategies.
//
// The shared state lives in C^{d1} (x) C^{d2}; amplitude (i, j) is stored at
// index i * d2 + j. Prover 1 measures M (x) I and prover 2 measures I (x) N.

#include <complex>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "twoprover/game.h"

namespace twoprover {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kPovmTolerance = 1e-9;
inline constexpr double kStateNormTolerance = 1e-10;

struct Povm {
  std::vector<Matrix> elements;  // one per outcome
  bool projective = false;

  int outcomes() const { return static_cast<int>(elements.size()); }
  int dim() const { return elements.empty() ? 0 : static_cast<int>(elements[0].rows()); }
};

// Hermiticity, PSD (min eigenvalue >= -tol), completeness and, when flagged,
// idempotence; all within `tol`.
ValidationReport Validate(const Povm& povm, double tol = kPovmTolerance);

struct QuantumStrategy {
  int dim1 = 1;
  int dim2 = 1;
  Vector state;
  std::vector<Povm> prover1;  // per q1
  std::vector<Povm> prover2;  // per q2

  bool projective() const;
};

ValidationReport Validate(const QuantumStrategy& strategy);

// p(a1, a2) = <Psi| M_{q1}^{a1} (x) N_{q2}^{a2} |Psi>, index a1 * A2 + a2.
std::vector<double> JointDistribution(const QuantumStrategy& strategy, int q1, int q2);

// The induced correlation table for a game with matching question and answer
// counts.
template <Scalar S>
BipartiteStrategy<double> ToBipartiteStrategy(const QuantumStrategy& strategy,
                                              const TwoProverGame<S>& game);

// Winning probability of a quantum strategy.
double EvalQuantum(const TwoProverGame<Rational>& game, const QuantumStrategy& strategy);
double EvalQuantum(const TwoProverGame<double>& game, const QuantumStrategy& strategy);

// Square root of a PSD matrix. Eigenvalues in [-1e-9, 0) are treated as 0;
// anything lower throws PreconditionError.
Matrix PsdSqrt(const Matrix& op);

// sqrt(1 - |<phi|psi>|^2). Throws PreconditionError for non-unit inputs
// (tolerance 1e-8) and DimensionError for mismatched lengths.
double PureStateTraceDistance(const Vector& phi, const Vector& psi);

// Operators on the joint space.
Matrix Kron(const Matrix& a, const Matrix& b);

// Adds a maximally entangled qubit pair to the strategy. On a sorted pair
// question (q, q) the new second prover measures the old PVM and then copies
// coordinate e of the old answer into both coordinates, where e is his half
// of the new pair; other questions are unchanged. pairs[j] is the pair
// asked as question j and `alphabet` the letter count (answers are b1*A+b2).
QuantumStrategy SymmetrizeSecondProver(const QuantumStrategy& strategy,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       int alphabet);

// One-dimensional strategy reproducing a deterministic one.
QuantumStrategy FromDeterministic(const DeterministicBipartiteStrategy& strategy,
                                  int a1_count, int a2_count);

// Haar-like random projective strategy: a normalized complex Gaussian state
// and, per question, a random unitary basis with independently drawn outcome
// labels per basis vector.
QuantumStrategy RandomProjectiveStrategy(int dim1, int dim2, int q1_count, int a1_count,
                                         int q2_count, int a2_count, std::mt19937_64& rng);

Matrix RandomUnitary(int dim, std::mt19937_64& rng);

// Generic (non-projective) POVM: random PSD elements G_a rescaled by
// S^(-1/2) G_a S^(-1/2) with S = sum_a G_a.
Povm RandomPovm(int dim, int outcomes, std::mt19937_64& rng);
Vector RandomState(int dim, std::mt19937_64& rng);

// Projective measurement from an orthonormal basis (columns) and one outcome
// label per column.
Povm ProjectiveFromBasis(const Matrix& basis, const std::vector<int>& labels, int outcomes);

}  // namespace twoprover

#endif  // TWOPROVER_QUANTUM_H_

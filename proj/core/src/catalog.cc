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

#include "twoprover/catalog.h"

#include <cmath>

#include "twoprover/errors.h"

namespace twoprover {
namespace {

Matrix Pauli(char name) {
  Matrix m = Matrix::Zero(2, 2);
  switch (name) {
    case 'I':
      m(0, 0) = m(1, 1) = 1;
      break;
    case 'X':
      m(0, 1) = m(1, 0) = 1;
      break;
    case 'Y':
      m(0, 1) = Complex(0, -1);
      m(1, 0) = Complex(0, 1);
      break;
    case 'Z':
      m(0, 0) = 1;
      m(1, 1) = -1;
      break;
  }
  return m;
}

// Projector onto the (-1)^bit eigenspace of an involution.
Matrix EigenProjector(const Matrix& observable, int bit) {
  const Matrix id = Matrix::Identity(observable.rows(), observable.cols());
  return (id + (bit ? -1.0 : 1.0) * observable) / 2.0;
}

Povm TwoOutcome(const Matrix& observable) {
  return {{EigenProjector(observable, 0), EigenProjector(observable, 1)}, true};
}

// Cell (r, c) of the Pauli square. Rows multiply to +I, columns to -I.
Matrix SquareObservable(int r, int c) {
  static const char* kCells[3][3] = {{"XI", "IX", "XX"}, {"IZ", "ZI", "ZZ"}, {"XZ", "ZX", "YY"}};
  const char* cell = kCells[r][c];
  Matrix m = Kron(Pauli(cell[0]), Pauli(cell[1]));
  if (r == 2 && c < 2) m = -m;
  return m;
}

}  // namespace

TwoProverGame<Rational> Chsh() {
  auto g = TwoProverGame<Rational>::Zero(2, 2, 2, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      g.Pi(x, y) = Rational(1, 4);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          if ((a ^ b) == (x & y)) g.Accept(x, y, a, b) = 1;
        }
      }
    }
  }
  return g;
}

BipartiteStrategy<Rational> PrBox() {
  auto s = BipartiteStrategy<Rational>::Zero(2, 2, 2, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) s(x, y, a, a ^ (x & y)) = Rational(1, 2);
    }
  }
  return s;
}

QuantumStrategy ChshQuantumStrategy() {
  QuantumStrategy s;
  s.dim1 = s.dim2 = 2;
  s.state = Vector::Zero(4);
  s.state(0) = s.state(3) = 1.0 / std::sqrt(2.0);
  const Matrix z = Pauli('Z');
  const Matrix x = Pauli('X');
  s.prover1 = {TwoOutcome(z), TwoOutcome(x)};
  s.prover2 = {TwoOutcome((z + x) / std::sqrt(2.0)), TwoOutcome((z - x) / std::sqrt(2.0))};
  return s;
}

int MagicSquareBit(bool row_side, int answer, int cell) {
  const int b0 = answer >> 1;
  const int b1 = answer & 1;
  if (cell == 0) return b0;
  if (cell == 1) return b1;
  return row_side ? (b0 ^ b1) : (1 ^ b0 ^ b1);
}

TwoProverGame<Rational> MagicSquare() {
  auto g = TwoProverGame<Rational>::Zero(3, 3, 4, 4);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      g.Pi(r, c) = Rational(1, 9);
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          if (MagicSquareBit(true, a, c) == MagicSquareBit(false, b, r)) g.Accept(r, c, a, b) = 1;
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    g.labels.questions1.push_back("row" + std::to_string(i));
    g.labels.questions2.push_back("col" + std::to_string(i));
  }
  for (int a = 0; a < 4; ++a) {
    std::string row, col;
    for (int cell = 0; cell < 3; ++cell) {
      row += static_cast<char>('0' + MagicSquareBit(true, a, cell));
      col += static_cast<char>('0' + MagicSquareBit(false, a, cell));
    }
    g.labels.answers1.push_back(row);
    g.labels.answers2.push_back(col);
  }
  return g;
}

QuantumStrategy MagicSquareStrategy() {
  QuantumStrategy s;
  s.dim1 = s.dim2 = 4;
  s.state = Vector::Zero(16);
  for (int i = 0; i < 4; ++i) s.state(i * 4 + i) = 0.5;
  // With sum_i |ii>/2, <A (x) B^T> = Tr(A B)/4, so prover 2 measures the
  // transposed observables.
  for (int side = 0; side < 2; ++side) {
    for (int k = 0; k < 3; ++k) {
      Povm povm;
      povm.projective = true;
      for (int answer = 0; answer < 4; ++answer) {
        Matrix p = Matrix::Identity(4, 4);
        for (int cell = 0; cell < 3; ++cell) {
          Matrix o = side == 0 ? SquareObservable(k, cell) : Matrix(SquareObservable(cell, k).transpose());
          p = p * EigenProjector(o, MagicSquareBit(side == 0, answer, cell));
        }
        povm.elements.push_back(p);
      }
      (side == 0 ? s.prover1 : s.prover2).push_back(std::move(povm));
    }
  }
  return s;
}

OneInThreeFormula TinyOneInThreeFormula() {
  OneInThreeFormula f;
  f.num_variables = 4;
  for (int skip = 3; skip >= 0; --skip) {
    std::array<Literal, 3> clause;
    int k = 0;
    for (int v = 0; v < 4; ++v) {
      if (v != skip) clause[k++] = {v, true};
    }
    f.clauses.push_back(clause);
  }
  return f;
}

PcpGame<Rational> TinyOneInThree() { return PcpFrom1In3(TinyOneInThreeFormula()).game; }

MultiRoundGame<Rational> EchoGame(int q_count, int rounds) {
  auto g = MultiRoundGame<Rational>::Zero(q_count, q_count, rounds);
  const Rational p(1, static_cast<unsigned long>(g.QuestionTuples()));
  for (std::int64_t q = 0; q < g.QuestionTuples(); ++q) {
    g.pi[q] = p;
    g.Accept(q, q) = 1;
  }
  return g;
}

std::vector<std::string> CatalogNames() { return {"chsh", "magic-square", "tiny-1in3"}; }

AnyGame CatalogGame(const std::string& name) {
  if (name == "chsh") return Chsh();
  if (name == "magic-square") return MagicSquare();
  if (name == "tiny-1in3") return TinyOneInThree();
  throw PreconditionError("unknown catalog game '" + name + "' (chsh, magic-square, tiny-1in3)");
}

}  // namespace twoprover

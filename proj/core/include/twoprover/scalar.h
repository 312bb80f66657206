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

#ifndef TWOPROVER_SCALAR_H_
#define TWOPROVER_SCALAR_H_

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

namespace twoprover {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

enum class ScalarMode { kRational, kFloat };

// Every probability table is parameterized by its scalar type, so mixing
// rational and float tables is a compile-time error rather than a silent
// conversion.
template <typename S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, double>;

template <Scalar S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarMode kMode = ScalarMode::kRational;
  static constexpr bool kExact = true;
  static Rational FromRational(const Rational& r) { return r; }
  static double ToDouble(const Rational& r) { return r.get_d(); }
  // Slack allowed when checking that a distribution sums to one.
  static Rational NormalizationTolerance() { return Rational(0); }
};

template <>
struct ScalarTraits<double> {
  static constexpr ScalarMode kMode = ScalarMode::kFloat;
  static constexpr bool kExact = false;
  static double FromRational(const Rational& r) { return r.get_d(); }
  static double ToDouble(double r) { return r; }
  static double NormalizationTolerance() { return 1e-12; }
};

inline Rational Abs(const Rational& r) { return abs(r); }
inline double Abs(double r) { return std::fabs(r); }

// Parses "p/q", a signed integer, or a decimal such as "0.25" or "1.5e-3".
// Decimals are converted exactly (0.1 is 1/10). Throws ParseError(0, ...)
// on malformed text or a zero denominator.
Rational ParseRational(std::string_view text);

// "p/q", or just "p" when the denominator is one.
std::string ToString(const Rational& r);
std::string ToString(double r);

inline const char* ScalarModeName(ScalarMode mode) {
  return mode == ScalarMode::kRational ? "rational" : "float";
}

}  // namespace twoprover

#endif  // TWOPROVER_SCALAR_H_

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

#include "twoprover/scalar.h"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "twoprover/errors.h"

namespace twoprover {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!AllDigits(digits)) {
    throw ParseError(0, "malformed number '" + std::string(whole) + "'");
  }
  mpz_class value(std::string(digits), 10);
  return negative ? mpz_class(-value) : value;
}

Rational ParseDecimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    mpz_class exp = ParseInteger(text.substr(e + 1), text);
    if (!exp.fits_slong_p() || abs(exp) > 1000) {
      throw ParseError(0, "exponent out of range in '" + std::string(text) + "'");
    }
    exponent = exp.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(mantissa);
  } else {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw ParseError(0, "malformed number '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  }
  if (!AllDigits(digits)) {
    throw ParseError(0, "malformed number '" + std::string(text) + "'");
  }
  mpz_class numerator(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational result = exponent >= 0 ? Rational(numerator * scale)
                                  : Rational(numerator, scale);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError(0, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(text.substr(0, slash), text);
    mpz_class den = ParseInteger(text.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) {
    return ParseDecimal(text);
  }
  return Rational(ParseInteger(text, text));
}

std::string ToString(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

std::string ToString(double r) {
  std::ostringstream out;
  out << std::setprecision(12) << r;
  return out.str();
}

}  // namespace twoprover

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

#ifndef TWOPROVER_REPORT_H_
#define TWOPROVER_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "twoprover/scalar.h"

namespace twoprover {

// One checked inequality lhs <= rhs (+ tolerance in float mode).
struct InequalityRecord {
  std::string check;     // short name of the inequality
  std::string instance;  // which index / sample it was evaluated at
  std::optional<Rational> lhs_exact;
  std::optional<Rational> rhs_exact;
  double lhs = 0;
  double rhs = 0;
  double tolerance = 0;
  bool holds = true;

  bool exact() const { return lhs_exact.has_value(); }
  double slack() const { return rhs + tolerance - lhs; }
  std::string LhsText() const;
  std::string RhsText() const;
};

class InequalityReport {
 public:
  InequalityReport() = default;
  explicit InequalityReport(std::string suite) : suite_(std::move(suite)) {}

  void AddExact(std::string check, std::string instance, const Rational& lhs, const Rational& rhs);
  void AddFloat(std::string check, std::string instance, double lhs, double rhs, double tolerance);
  void Append(const InequalityReport& other);

  // Adds delta to every left-hand side and re-evaluates. Used by harnesses
  // that confirm violations are detected.
  void Perturb(double delta);

  const std::string& suite() const { return suite_; }
  const std::vector<InequalityRecord>& records() const { return records_; }
  bool AllHold() const;
  int Violations() const;

  struct CheckSummary {
    std::string check;
    int count = 0;
    int violations = 0;
    const InequalityRecord* tightest = nullptr;  // smallest slack
  };
  std::vector<CheckSummary> Summaries() const;

  // One row per check (count, violations, tightest lhs/rhs), or one row per
  // record with `details`.
  std::string Table(bool details) const;

 private:
  std::string suite_;
  std::vector<InequalityRecord> records_;
};

}  // namespace twoprover

#endif  // TWOPROVER_REPORT_H_

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

#include "twoprover/report.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace twoprover {

std::string InequalityRecord::LhsText() const {
  return lhs_exact ? ToString(*lhs_exact) : ToString(lhs);
}

std::string InequalityRecord::RhsText() const {
  return rhs_exact ? ToString(*rhs_exact) : ToString(rhs);
}

void InequalityReport::AddExact(std::string check, std::string instance, const Rational& lhs,
                                const Rational& rhs) {
  InequalityRecord r;
  r.check = std::move(check);
  r.instance = std::move(instance);
  r.lhs_exact = lhs;
  r.rhs_exact = rhs;
  r.lhs = lhs.get_d();
  r.rhs = rhs.get_d();
  r.holds = lhs <= rhs;
  records_.push_back(std::move(r));
}

void InequalityReport::AddFloat(std::string check, std::string instance, double lhs, double rhs,
                                double tolerance) {
  InequalityRecord r;
  r.check = std::move(check);
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.holds = lhs <= rhs + tolerance;
  records_.push_back(std::move(r));
}

void InequalityReport::Append(const InequalityReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

void InequalityReport::Perturb(double delta) {
  for (InequalityRecord& r : records_) {
    r.lhs += delta;
    if (r.lhs_exact) {
      *r.lhs_exact += Rational(delta);
      r.holds = *r.lhs_exact <= *r.rhs_exact;
    } else {
      r.holds = r.lhs <= r.rhs + r.tolerance;
    }
  }
}

bool InequalityReport::AllHold() const { return Violations() == 0; }

int InequalityReport::Violations() const {
  return static_cast<int>(
      std::count_if(records_.begin(), records_.end(), [](const auto& r) { return !r.holds; }));
}

std::vector<InequalityReport::CheckSummary> InequalityReport::Summaries() const {
  std::vector<CheckSummary> out;
  std::map<std::string, std::size_t> slot;
  for (const InequalityRecord& r : records_) {
    auto [it, fresh] = slot.emplace(r.check, out.size());
    if (fresh) out.push_back({r.check});
    CheckSummary& s = out[it->second];
    ++s.count;
    if (!r.holds) ++s.violations;
    if (!s.tightest || r.slack() < s.tightest->slack()) s.tightest = &r;
  }
  return out;
}

namespace {

// Left-aligned columns, each two wider than its longest cell.
void WriteColumns(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

}  // namespace

std::string InequalityReport::Table(bool details) const {
  std::ostringstream out;
  std::vector<std::vector<std::string>> rows;
  if (details) {
    rows.push_back({"check", "instance", "lhs", "rhs", "status"});
    for (const InequalityRecord& r : records_) {
      rows.push_back({r.check, r.instance, r.LhsText(), r.RhsText(), r.holds ? "ok" : "VIOLATED"});
    }
  } else {
    rows.push_back({"check", "count", "violated", "tightest instance", "lhs", "rhs"});
    for (const CheckSummary& s : Summaries()) {
      rows.push_back({s.check, std::to_string(s.count), std::to_string(s.violations),
                      s.tightest->instance, s.tightest->LhsText(), s.tightest->RhsText()});
    }
  }
  WriteColumns(rows, out);
  const std::string total = std::to_string(records_.size());
  out << std::to_string(records_.size() - Violations()) << '/' << total << " inequalities hold";
  if (!AllHold()) out << ", " << Violations() << " violated";
  out << '\n';
  return out.str();
}

}  // namespace twoprover

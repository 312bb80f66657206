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

#ifndef TWOPROVER_LIMITS_H_
#define TWOPROVER_LIMITS_H_

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace twoprover {

// Size guards for dense tables and the exact LP. Everything in this library
// is desk scale; the guards turn accidental exponential blow-up into a clear
// SizeGuardError instead of an out-of-memory kill.
//
// Environment overrides (positive integers):
//   TWOPROVER_MAX_TABLE_ENTRIES     default 10000000
//   TWOPROVER_LP_MAX_VARIABLES      default 5000
//   TWOPROVER_LP_MAX_CONSTRAINTS    default 20000
struct SizeLimits {
  std::uint64_t max_table_entries = 10'000'000;
  std::uint64_t lp_max_variables = 5000;
  std::uint64_t lp_max_constraints = 20000;

  static SizeLimits FromEnvironment();
};

// Limits read from the environment on first use.
const SizeLimits& DefaultLimits();

// Product of `factors`, saturating at UINT64_MAX.
std::uint64_t SaturatingProduct(std::initializer_list<std::uint64_t> factors);

// base^exponent, saturating at UINT64_MAX.
std::uint64_t SaturatingPower(std::uint64_t base, std::uint64_t exponent);

// Throws SizeGuardError naming `what` when entries > limits.max_table_entries.
void CheckTableSize(std::uint64_t entries, std::string_view what,
                    const SizeLimits& limits = DefaultLimits());

}  // namespace twoprover

#endif  // TWOPROVER_LIMITS_H_

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

#include "twoprover/limits.h"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>

#include "twoprover/errors.h"

namespace twoprover {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

void ReadOverride(const char* name, std::uint64_t& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ValidationError(std::string(name) + " must be a positive integer, got '" +
                          std::string(text) + "'");
  }
  target = value;
}

}  // namespace

SizeLimits SizeLimits::FromEnvironment() {
  SizeLimits limits;
  ReadOverride("TWOPROVER_MAX_TABLE_ENTRIES", limits.max_table_entries);
  ReadOverride("TWOPROVER_LP_MAX_VARIABLES", limits.lp_max_variables);
  ReadOverride("TWOPROVER_LP_MAX_CONSTRAINTS", limits.lp_max_constraints);
  return limits;
}

const SizeLimits& DefaultLimits() {
  static const SizeLimits limits = SizeLimits::FromEnvironment();
  return limits;
}

std::uint64_t SaturatingProduct(std::initializer_list<std::uint64_t> factors) {
  std::uint64_t result = 1;
  for (std::uint64_t f : factors) {
    if (f == 0) return 0;
    if (result > kSaturated / f) {
      result = kSaturated;
    } else {
      result *= f;
    }
  }
  return result;
}

std::uint64_t SaturatingPower(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    result = SaturatingProduct({result, base});
    if (result == kSaturated) break;
  }
  return result;
}

void CheckTableSize(std::uint64_t entries, std::string_view what,
                    const SizeLimits& limits) {
  if (entries > limits.max_table_entries) {
    std::string count = entries == kSaturated ? std::string("more than 2^64")
                                              : std::to_string(entries);
    throw SizeGuardError(std::string(what) + " needs " + count +
                         " table entries; the size guard allows " +
                         std::to_string(limits.max_table_entries) +
                         " (override with TWOPROVER_MAX_TABLE_ENTRIES)");
  }
}

}  // namespace twoprover

// Copyright 2026 The vulaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "vulaug/augment_engine.h"

namespace vulaug {

void RuleStats::Merge(const RuleStats& other) {
  for (size_t i = 0; i < kRuleCount; ++i) applied[i] += other.applied[i];
  for (size_t i = 0; i < kGuardReasonCount; ++i) {
    guard_failures[i] += other.guard_failures[i];
  }
  samples_in += other.samples_in;
  samples_out += other.samples_out;
  multi_transform_count += other.multi_transform_count;
  parse_failures += other.parse_failures;
  rejected += other.rejected;
}

uint64_t RuleStats::TotalApplied() const {
  return std::accumulate(applied.begin(), applied.end(), uint64_t{0});
}

namespace {

std::string Percent(uint64_t part, uint64_t whole) {
  char buf[32];
  double v = whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) /
                                    static_cast<double>(whole);
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

}  // namespace

std::string ReportStats(const RuleStats& stats) {
  std::string out;
  uint64_t total = stats.TotalApplied();
  std::vector<RuleId> order(kAllRules.begin(), kAllRules.end());
  std::stable_sort(order.begin(), order.end(), [&](RuleId a, RuleId b) {
    return stats.applied[RuleIndex(a)] > stats.applied[RuleIndex(b)];
  });
  out += "samples in: " + std::to_string(stats.samples_in) +
         ", variants out: " + std::to_string(stats.samples_out) +
         ", parse failures: " + std::to_string(stats.parse_failures) + "\n";
  out += "multi-transform variants: " +
         std::to_string(stats.multi_transform_count) + " (" +
         Percent(stats.multi_transform_count, stats.samples_out) + "%)\n";
  out += "rule applications (share of " + std::to_string(total) + "):\n";
  for (RuleId r : order) {
    uint64_t n = stats.applied[RuleIndex(r)];
    out += "  " + std::string(RuleName(r)) + ": " + std::to_string(n) + " (" +
           Percent(n, total) + "%)\n";
  }
  out += "guard failures:\n";
  for (size_t i = 0; i < kGuardReasonCount; ++i) {
    out += "  " + std::string(GuardReasonName(static_cast<GuardReason>(i))) +
           ": " + std::to_string(stats.guard_failures[i]) + "\n";
  }
  out += "rejected variants: " + std::to_string(stats.rejected) + "\n";
  out += "\n";
  out += "samples_in=" + std::to_string(stats.samples_in) + "\n";
  out += "samples_out=" + std::to_string(stats.samples_out) + "\n";
  out += "multi_transform_count=" + std::to_string(stats.multi_transform_count) +
         "\n";
  out += "parse_failures=" + std::to_string(stats.parse_failures) + "\n";
  out += "rejected=" + std::to_string(stats.rejected) + "\n";
  for (RuleId r : order) {
    out += "applied." + std::string(RuleName(r)) + "=" +
           std::to_string(stats.applied[RuleIndex(r)]) + "\n";
    out += "share." + std::string(RuleName(r)) + "=" +
           Percent(stats.applied[RuleIndex(r)], total) + "\n";
  }
  for (size_t i = 0; i < kGuardReasonCount; ++i) {
    out += "guard_failures." +
           std::string(GuardReasonName(static_cast<GuardReason>(i))) + "=" +
           std::to_string(stats.guard_failures[i]) + "\n";
  }
  return out;
}

}  // namespace vulaug

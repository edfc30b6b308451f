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

#ifndef VULAUG_AUGMENT_ENGINE_H_
#define VULAUG_AUGMENT_ENGINE_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vulaug/syntax.h"
#include "vulaug/transform_rules.h"

namespace vulaug {

enum class Label : uint8_t { kNonVulnerable = 0, kVulnerable = 1 };
enum class Provenance : uint8_t { kOriginal, kGenerated };

struct LineageStep {
  RuleId rule;
  Span anchor;  // in the coordinates of the source the rule was applied to

  friend bool operator==(const LineageStep&, const LineageStep&) = default;
};

struct CodeSample {
  std::string id;
  std::string source;
  Label label = Label::kNonVulnerable;
  std::optional<std::string> cwe;
  std::optional<std::string> cve;
  std::optional<std::string> project;
  std::optional<std::string> published;  // ISO date, year first
  Provenance provenance = Provenance::kOriginal;
  std::vector<LineageStep> lineage;
  std::optional<std::string> parent_id;  // id of the root original

  friend bool operator==(const CodeSample&, const CodeSample&) = default;
};

inline constexpr size_t kUnlimited = 0;

struct AugmentConfig {
  RuleSet enabled_rules = RuleSet::All();
  int max_chain_depth = 3;
  size_t max_variants_per_sample = 100;  // kUnlimited disables the cap
  uint64_t random_seed = 0;
  bool dedup = true;
  ParseMode parse_mode = ParseMode::kFunctionFragment;
};

struct RuleStats {
  std::array<uint64_t, kRuleCount> applied{};
  uint64_t samples_in = 0;
  uint64_t samples_out = 0;
  uint64_t multi_transform_count = 0;
  uint64_t parse_failures = 0;
  std::array<uint64_t, kGuardReasonCount> guard_failures{};
  uint64_t rejected = 0;  // variants failing the reparse or structural check

  void Merge(const RuleStats& other);
  uint64_t TotalApplied() const;
  friend bool operator==(const RuleStats&, const RuleStats&) = default;
};

// Breadth-first expansion of one sample. Variants carry ids `<id>/v<k>`.
std::vector<CodeSample> GenerateVariants(const CodeSample& sample,
                                         const AugmentConfig& cfg,
                                         RuleStats* stats);

struct CorpusResult {
  std::vector<CodeSample> samples;  // each original followed by its variants
  RuleStats stats;
};

// Runs GenerateVariants over `samples` on `workers` threads. The output is
// independent of the worker count. With `global_dedup`, a variant whose
// fingerprint matches any earlier output sample is dropped.
CorpusResult RunCorpus(const std::vector<CodeSample>& samples,
                       const AugmentConfig& cfg, int workers,
                       bool global_dedup = false);

// Re-applies `lineage` to `root_source`. Throws StaleSite when a step does
// not name a site of the intermediate source.
std::string ReplayLineage(const std::string& root_source,
                          const std::vector<LineageStep>& lineage,
                          ParseMode mode = ParseMode::kFunctionFragment);

// Human-readable rendering followed by key=value lines.
std::string ReportStats(const RuleStats& stats);

}  // namespace vulaug

#endif  // VULAUG_AUGMENT_ENGINE_H_

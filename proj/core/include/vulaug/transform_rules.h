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

#ifndef VULAUG_TRANSFORM_RULES_H_
#define VULAUG_TRANSFORM_RULES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vulaug/syntax.h"

namespace vulaug {

// The natural semantic-preserving rewrites. Declaration order is the
// tie-break order for sites sharing an anchor.
enum class RuleId : uint8_t {
  kExprSplit,    // hoist a subexpression into a temporary
  kCondNegate,   // negate an if-else condition and swap the branches
  kAssignSplit,  // `x op= y` to `x = x op (y)`
  kIfSplit,      // `if (a && b) s` to nested ifs
  kCmpMirror,    // `a > b` to `b < a`
  kForToWhile,
  kWhileToFor,
};

inline constexpr size_t kRuleCount = 7;
inline constexpr std::array<RuleId, kRuleCount> kAllRules = {
    RuleId::kExprSplit,  RuleId::kCondNegate,  RuleId::kAssignSplit,
    RuleId::kIfSplit,    RuleId::kCmpMirror,   RuleId::kForToWhile,
    RuleId::kWhileToFor};

// Stable names used in reports and lineage, e.g. "R3_AssignSplit".
std::string_view RuleName(RuleId rule);
// Accepts the stable name, its "R<n>" prefix, or the bare suffix.
std::optional<RuleId> ParseRuleId(std::string_view text);
inline size_t RuleIndex(RuleId rule) { return static_cast<size_t>(rule); }

class RuleSet {
 public:
  RuleSet() = default;
  static RuleSet All();
  // Comma-separated list of rule names; throws std::invalid_argument.
  static RuleSet Parse(std::string_view list);

  void Add(RuleId rule) { bits_ |= 1u << RuleIndex(rule); }
  bool Has(RuleId rule) const { return bits_ & (1u << RuleIndex(rule)); }
  bool empty() const { return bits_ == 0; }
  size_t size() const;
  std::vector<RuleId> rules() const;
  std::string ToString() const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  uint32_t bits_ = 0;
};

enum class GuardReason : uint8_t {
  kSideEffects,
  kMacroOverlap,
  kMissingElse,
  kContinueInBody,
  kUntypedSubexpr,
  kVolatileAccess,
  kErrorNode,
};
inline constexpr size_t kGuardReasonCount = 7;

std::string_view GuardReasonName(GuardReason reason);

struct TransformSite {
  RuleId rule;
  NodeId anchor = kNoNode;
  Span anchor_span;
  // Rule-specific captured nodes, e.g. {"cond", id}.
  std::vector<std::pair<std::string, NodeId>> bindings;
  std::vector<std::string> guard_report;
};

struct GuardFailure {
  RuleId rule;
  NodeId anchor = kNoNode;
  Span anchor_span;
  GuardReason reason;
};

struct SiteScan {
  std::vector<TransformSite> sites;
  std::vector<GuardFailure> failures;
};

// Every (location, rule) pair whose pattern matches, split into sites whose
// guards pass and rejected candidates. Results are in document order, then
// rule order.
SiteScan FindSites(const SyntaxTree& tree, const RuleSet& rules = RuleSet::All());

class StaleSite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edits realizing one application of `site`. Throws StaleSite when the site
// does not describe a valid location of `tree`.
std::vector<Edit> ApplyRule(const SyntaxTree& tree, const TransformSite& site);

// Source text whose truth value is the complement of `expr`.
std::string NegateCondition(const SyntaxTree& tree, NodeId expr);

// `<prefix><k>` for the smallest k >= 0 not used as an identifier in `tree`.
std::string FreshName(const SyntaxTree& tree, std::string_view prefix);

}  // namespace vulaug

#endif  // VULAUG_TRANSFORM_RULES_H_

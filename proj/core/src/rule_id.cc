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

#include <bit>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vulaug/transform_rules.h"

namespace vulaug {

std::string_view RuleName(RuleId rule) {
  switch (rule) {
    case RuleId::kExprSplit: return "R1_ExprSplit";
    case RuleId::kCondNegate: return "R2_CondNegate";
    case RuleId::kAssignSplit: return "R3_AssignSplit";
    case RuleId::kIfSplit: return "R4_IfSplit";
    case RuleId::kCmpMirror: return "R5_CmpMirror";
    case RuleId::kForToWhile: return "R6_ForToWhile";
    case RuleId::kWhileToFor: return "R7_WhileToFor";
  }
  return "?";
}

std::optional<RuleId> ParseRuleId(std::string_view text) {
  for (RuleId rule : kAllRules) {
    std::string_view name = RuleName(rule);
    size_t underscore = name.find('_');
    if (text == name || text == name.substr(0, underscore) ||
        text == name.substr(underscore + 1)) {
      return rule;
    }
  }
  return std::nullopt;
}

std::string_view GuardReasonName(GuardReason reason) {
  switch (reason) {
    case GuardReason::kSideEffects: return "side_effects";
    case GuardReason::kMacroOverlap: return "macro_overlap";
    case GuardReason::kMissingElse: return "missing_else";
    case GuardReason::kContinueInBody: return "continue_in_body";
    case GuardReason::kUntypedSubexpr: return "untyped_subexpr";
    case GuardReason::kVolatileAccess: return "volatile_access";
    case GuardReason::kErrorNode: return "error_node";
  }
  return "?";
}

RuleSet RuleSet::All() {
  RuleSet s;
  for (RuleId r : kAllRules) s.Add(r);
  return s;
}

RuleSet RuleSet::Parse(std::string_view list) {
  RuleSet s;
  if (list == "all") return All();
  while (!list.empty()) {
    size_t comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto rule = ParseRuleId(item);
      if (!rule) {
        throw std::invalid_argument("unknown rule '" + std::string(item) + "'");
      }
      s.Add(*rule);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return s;
}

size_t RuleSet::size() const { return std::popcount(bits_); }

std::vector<RuleId> RuleSet::rules() const {
  std::vector<RuleId> out;
  for (RuleId r : kAllRules) {
    if (Has(r)) out.push_back(r);
  }
  return out;
}

std::string RuleSet::ToString() const {
  std::string out;
  for (RuleId r : rules()) {
    if (!out.empty()) out += ',';
    out += RuleName(r);
  }
  return out;
}

}  // namespace vulaug

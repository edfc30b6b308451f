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

#include "manifest.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "vulaug/digest.h"
#include "vulaug/version.h"

namespace vulaug::cli {

Json StatsToJson(const RuleStats& stats) {
  Json j;
  j["samples_in"] = stats.samples_in;
  j["samples_out"] = stats.samples_out;
  j["multi_transform_count"] = stats.multi_transform_count;
  j["parse_failures"] = stats.parse_failures;
  j["rejected"] = stats.rejected;
  Json applied = Json::object();
  for (RuleId r : kAllRules) {
    applied[std::string(RuleName(r))] = stats.applied[RuleIndex(r)];
  }
  j["applied"] = applied;
  Json guards = Json::object();
  for (size_t i = 0; i < kGuardReasonCount; ++i) {
    guards[std::string(GuardReasonName(static_cast<GuardReason>(i)))] =
        stats.guard_failures[i];
  }
  j["guard_failures"] = guards;
  return j;
}

RuleStats StatsFromJson(const Json& j) {
  RuleStats s;
  s.samples_in = j.value("samples_in", uint64_t{0});
  s.samples_out = j.value("samples_out", uint64_t{0});
  s.multi_transform_count = j.value("multi_transform_count", uint64_t{0});
  s.parse_failures = j.value("parse_failures", uint64_t{0});
  s.rejected = j.value("rejected", uint64_t{0});
  if (j.contains("applied")) {
    for (RuleId r : kAllRules) {
      s.applied[RuleIndex(r)] =
          j["applied"].value(std::string(RuleName(r)), uint64_t{0});
    }
  }
  if (j.contains("guard_failures")) {
    for (size_t i = 0; i < kGuardReasonCount; ++i) {
      s.guard_failures[i] = j["guard_failures"].value(
          std::string(GuardReasonName(static_cast<GuardReason>(i))),
          uint64_t{0});
    }
  }
  return s;
}

RuleStats StatsFromSamples(const std::vector<CodeSample>& samples) {
  RuleStats s;
  for (const CodeSample& c : samples) {
    if (c.provenance == Provenance::kOriginal) {
      ++s.samples_in;
      continue;
    }
    ++s.samples_out;
    if (c.lineage.size() >= 2) ++s.multi_transform_count;
    for (const LineageStep& step : c.lineage) ++s.applied[RuleIndex(step.rule)];
  }
  return s;
}

RunManifest::RunManifest(std::string command) : command_(std::move(command)) {}

void RunManifest::AddInput(const std::string& path) {
  inputs_.push_back({{"path", path}, {"sha256", Sha256File(path)}});
}

void RunManifest::AddOutput(const std::string& path) {
  outputs_.push_back({{"path", path}, {"sha256", Sha256File(path)}});
}

Json RunManifest::ToJson() const {
  Json j;
  j["tool"] = "vulaug";
  j["version"] = kVersion;
  j["command"] = command_;
  j["config"] = config_;
  j["inputs"] = inputs_;
  j["outputs"] = outputs_;
  j["wall_time_s"] = wall_seconds_;
  if (!stats_.is_null()) j["stats"] = stats_;
  if (!extra_.empty()) j["result"] = extra_;
  j["warnings"] = warnings_;
  return j;
}

void RunManifest::WriteAtomic(const std::string& path) const {
  WriteFileAtomic(path, ToJson().dump(2) + "\n");
}

std::string ManifestPathFor(const std::string& output) {
  return output + ".manifest.json";
}

void WriteFileAtomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path + "': " +
                             ec.message());
  }
}

}  // namespace vulaug::cli

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

// Run manifests written next to every CLI output.

#ifndef VULAUG_TOOLS_MANIFEST_H_
#define VULAUG_TOOLS_MANIFEST_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "vulaug/augment_engine.h"

namespace vulaug::cli {

using Json = nlohmann::ordered_json;

Json StatsToJson(const RuleStats& stats);
// Missing keys read as zero.
RuleStats StatsFromJson(const Json& j);

// Stats recomputed from the lineage carried by a dataset's records. Guard
// failure counts are not recoverable and stay zero.
RuleStats StatsFromSamples(const std::vector<CodeSample>& samples);

class RunManifest {
 public:
  explicit RunManifest(std::string command);

  Json& config() { return config_; }
  Json& extra() { return extra_; }
  void AddInput(const std::string& path);
  void AddOutput(const std::string& path);
  void SetStats(const RuleStats& stats) { stats_ = StatsToJson(stats); }
  void AddWarning(const std::string& text) { warnings_.push_back(text); }
  void SetWallSeconds(double s) { wall_seconds_ = s; }

  Json ToJson() const;
  // Writes to a temporary sibling and renames it over `path`.
  void WriteAtomic(const std::string& path) const;

 private:
  std::string command_;
  Json config_ = Json::object();
  Json extra_ = Json::object();
  Json inputs_ = Json::array();
  Json outputs_ = Json::array();
  Json stats_;
  std::vector<std::string> warnings_;
  double wall_seconds_ = 0.0;
};

std::string ManifestPathFor(const std::string& output);

// Writes `content` through a temporary file and rename.
void WriteFileAtomic(const std::string& path, const std::string& content);

}  // namespace vulaug::cli

#endif  // VULAUG_TOOLS_MANIFEST_H_

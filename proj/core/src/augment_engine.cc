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

#include "vulaug/augment_engine.h"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vulaug/equiv_verify.h"

namespace vulaug {
namespace {

struct FrontierItem {
  std::string source;
  SyntaxTree tree;
  std::vector<LineageStep> lineage;
  std::vector<std::string> shape;
};

CodeSample MakeVariant(const CodeSample& root, std::string source,
                       std::vector<LineageStep> lineage, size_t k) {
  CodeSample v;
  v.id = root.id + "/v" + std::to_string(k);
  v.source = std::move(source);
  v.label = root.label;
  v.cwe = root.cwe;
  v.cve = root.cve;
  v.project = root.project;
  v.published = root.published;
  v.provenance = Provenance::kGenerated;
  v.lineage = std::move(lineage);
  v.parent_id = root.id;
  return v;
}

void CountVariant(const CodeSample& v, RuleStats* stats) {
  ++stats->samples_out;
  if (v.lineage.size() >= 2) ++stats->multi_transform_count;
  for (const LineageStep& step : v.lineage) ++stats->applied[RuleIndex(step.rule)];
}

}  // namespace

std::vector<CodeSample> GenerateVariants(const CodeSample& sample,
                                         const AugmentConfig& cfg,
                                         RuleStats* stats) {
  RuleStats local;
  ++local.samples_in;
  std::vector<CodeSample> out;
  std::vector<FrontierItem> frontier;
  try {
    SyntaxTree tree = ParseUnit(sample.source, cfg.parse_mode);
    std::vector<std::string> shape = tree.ShapeSignature();
    frontier.push_back({sample.source, std::move(tree), {}, std::move(shape)});
  } catch (const ParseError&) {
    ++local.parse_failures;
    if (stats) stats->Merge(local);
    return out;
  }
  const std::vector<std::string> root_shape = frontier.front().shape;
  std::unordered_set<uint64_t> seen = {Fingerprint(sample.source).hash};
  const size_t cap = cfg.max_variants_per_sample;
  bool full = false;

  for (int depth = 1; depth <= cfg.max_chain_depth && !full; ++depth) {
    std::vector<FrontierItem> next;
    for (const FrontierItem& item : frontier) {
      SiteScan scan = FindSites(item.tree, cfg.enabled_rules);
      if (depth == 1) {
        for (const GuardFailure& f : scan.failures) {
          ++local.guard_failures[static_cast<size_t>(f.reason)];
        }
      }
      for (const TransformSite& site : scan.sites) {
        std::string src;
        std::vector<Edit> edits;
        try {
          edits = ApplyRule(item.tree, site);
          src = Emit(item.source, edits);
        } catch (const std::exception&) {
          ++local.rejected;
          continue;
        }
        uint64_t fp = Fingerprint(src).hash;
        if (cfg.dedup && seen.count(fp)) continue;
        std::optional<SyntaxTree> parsed;
        try {
          parsed.emplace(ParseUnit(src, cfg.parse_mode));
        } catch (const ParseError&) {
          ++local.rejected;
          continue;
        }
        std::vector<std::string> shape = parsed->ShapeSignature();
        if (!ReparseCheck(*parsed, MapEditedSpans(edits)) ||
            shape == item.shape || shape == root_shape ||
            fp == Fingerprint(item.source).hash) {
          ++local.rejected;
          continue;
        }
        seen.insert(fp);
        std::vector<LineageStep> lineage = item.lineage;
        lineage.push_back({site.rule, site.anchor_span});
        CodeSample v = MakeVariant(sample, src, lineage, out.size());
        CountVariant(v, &local);
        out.push_back(std::move(v));
        if (depth < cfg.max_chain_depth) {
          next.push_back({std::move(src), std::move(*parsed), std::move(lineage),
                          std::move(shape)});
        }
        if (cap != kUnlimited && out.size() >= cap) {
          full = true;
          break;
        }
      }
      if (full) break;
    }
    frontier = std::move(next);
  }
  if (stats) stats->Merge(local);
  return out;
}

CorpusResult RunCorpus(const std::vector<CodeSample>& samples,
                       const AugmentConfig& cfg, int workers,
                       bool global_dedup) {
  std::vector<std::vector<CodeSample>> results(samples.size());
  std::vector<RuleStats> stats(samples.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next++; i < samples.size(); i = next++) {
      results[i] = GenerateVariants(samples[i], cfg, &stats[i]);
    }
  };
  workers = std::max(1, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  CorpusResult result;
  std::unordered_set<uint64_t> seen;
  for (size_t i = 0; i < samples.size(); ++i) {
    result.stats.Merge(stats[i]);
    result.samples.push_back(samples[i]);
    if (global_dedup) seen.insert(Fingerprint(samples[i].source).hash);
    for (CodeSample& v : results[i]) {
      if (global_dedup && !seen.insert(Fingerprint(v.source).hash).second) {
        // Undo the counts of the dropped variant.
        --result.stats.samples_out;
        if (v.lineage.size() >= 2) --result.stats.multi_transform_count;
        for (const LineageStep& s : v.lineage) --result.stats.applied[RuleIndex(s.rule)];
        continue;
      }
      result.samples.push_back(std::move(v));
    }
  }
  return result;
}

std::string ReplayLineage(const std::string& root_source,
                          const std::vector<LineageStep>& lineage,
                          ParseMode mode) {
  std::string src = root_source;
  for (const LineageStep& step : lineage) {
    SyntaxTree tree = ParseUnit(src, mode);
    SiteScan scan = FindSites(tree, [&] {
      RuleSet s;
      s.Add(step.rule);
      return s;
    }());
    const TransformSite* match = nullptr;
    for (const TransformSite& site : scan.sites) {
      if (site.anchor_span == step.anchor) {
        match = &site;
        break;
      }
    }
    if (!match) {
      throw StaleSite(std::string(RuleName(step.rule)) + " has no site at " +
                      std::to_string(step.anchor.start) + ".." +
                      std::to_string(step.anchor.end));
    }
    src = Emit(src, ApplyRule(tree, *match));
  }
  return src;
}

}  // namespace vulaug

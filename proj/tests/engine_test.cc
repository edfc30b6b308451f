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

#include <cmath>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.h"
#include "vulaug/augment_engine.h"
#include "vulaug/dataset_io.h"
#include "vulaug/equiv_verify.h"

namespace vulaug {
namespace {

using testing::DataDir;
using testing::ReadFile;

CodeSample Sample(const std::string& id, const std::string& src,
                  Label label = Label::kVulnerable) {
  CodeSample s;
  s.id = id;
  s.source = src;
  s.label = label;
  s.cwe = "CWE-787";
  return s;
}

std::string CopyData() { return ReadFile(DataDir() + "/samples/copy_data.c"); }

std::string ReplaceLine5(const std::string& line) {
  std::string src = CopyData();
  size_t a = src.find("    while");
  size_t b = src.find('\n', a);
  return src.substr(0, a) + line + src.substr(b);
}

const std::vector<CodeSample>& Corpus() {
  static const std::vector<CodeSample> corpus =
      ReadCanonicalFile(DataDir() + "/corpus/functions.jsonl");
  return corpus;
}

TEST(GenerateVariantsTest, CopyDataLevelOne) {
  AugmentConfig cfg;
  cfg.max_chain_depth = 1;
  RuleStats stats;
  std::vector<CodeSample> out =
      GenerateVariants(Sample("copy_data", CopyData()), cfg, &stats);
  ASSERT_EQ(out.size(), 2u);
  std::map<RuleId, std::string> by_rule;
  for (const CodeSample& v : out) {
    ASSERT_EQ(v.lineage.size(), 1u);
    by_rule[v.lineage[0].rule] = v.source;
    EXPECT_EQ(v.provenance, Provenance::kGenerated);
    EXPECT_EQ(v.parent_id, "copy_data");
    EXPECT_EQ(v.label, Label::kVulnerable);
    EXPECT_EQ(v.cwe, "CWE-787");
    EXPECT_EQ(v.id.rfind("copy_data/v", 0), 0u);
  }
  EXPECT_EQ(by_rule[RuleId::kAssignSplit],
            ReplaceLine5("    while (cnt) { *p++ = src[n]; n++; cnt = cnt - 1; }"));
  EXPECT_EQ(by_rule[RuleId::kWhileToFor],
            ReplaceLine5("    for (; cnt; cnt -= 1) { *p++ = src[n]; n++; }"));
  EXPECT_EQ(stats.samples_in, 1u);
  EXPECT_EQ(stats.samples_out, 2u);
  EXPECT_EQ(stats.multi_transform_count, 0u);
}

TEST(GenerateVariantsTest, CopyDataComposedAtDepthTwo) {
  AugmentConfig cfg;
  cfg.max_chain_depth = 2;
  RuleStats stats;
  std::vector<CodeSample> out =
      GenerateVariants(Sample("copy_data", CopyData()), cfg, &stats);
  std::string composed =
      ReplaceLine5("    for (; cnt; cnt = cnt - 1) { *p++ = src[n]; n++; }");
  bool found = false;
  for (const CodeSample& v : out) {
    if (v.source != composed) continue;
    found = true;
    ASSERT_EQ(v.lineage.size(), 2u);
    EXPECT_EQ(v.lineage[0].rule, RuleId::kWhileToFor);
    EXPECT_EQ(v.lineage[1].rule, RuleId::kAssignSplit);
  }
  EXPECT_TRUE(found);
  EXPECT_GE(stats.multi_transform_count, 1u);
}

TEST(GenerateVariantsTest, NoSitesNoVariants) {
  RuleStats stats;
  std::vector<CodeSample> out = GenerateVariants(
      Sample("s", "int f(void){return 0;}"), AugmentConfig{}, &stats);
  EXPECT_TRUE(out.empty());
  EXPECT_EQ(stats.samples_out, 0u);
  EXPECT_EQ(stats.samples_in, 1u);
}

TEST(GenerateVariantsTest, UnparseableCounted) {
  RuleStats stats;
  EXPECT_TRUE(GenerateVariants(Sample("bad", "int x;"), AugmentConfig{}, &stats).empty());
  EXPECT_EQ(stats.parse_failures, 1u);
}

TEST(GenerateVariantsTest, CapLimitsOutput) {
  AugmentConfig cfg;
  cfg.max_variants_per_sample = 5;
  for (size_t i = 0; i < 20; ++i) {
    RuleStats stats;
    EXPECT_LE(GenerateVariants(Corpus()[i], cfg, &stats).size(), 5u);
  }
}

TEST(GenerateVariantsTest, DeeperSearchIsSuperset) {
  AugmentConfig shallow;
  shallow.max_chain_depth = 1;
  shallow.max_variants_per_sample = kUnlimited;
  AugmentConfig deep = shallow;
  deep.max_chain_depth = 3;
  for (size_t i = 0; i < Corpus().size(); i += 7) {
    RuleStats s1, s3;
    std::set<std::string> d3;
    for (const CodeSample& v : GenerateVariants(Corpus()[i], deep, &s3)) {
      d3.insert(v.source);
    }
    for (const CodeSample& v : GenerateVariants(Corpus()[i], shallow, &s1)) {
      EXPECT_TRUE(d3.count(v.source)) << Corpus()[i].id;
    }
  }
}

TEST(GenerateVariantsTest, VariantsAreDistinctValidAndReplayable) {
  AugmentConfig cfg;
  for (size_t i = 0; i < Corpus().size(); i += 5) {
    const CodeSample& root = Corpus()[i];
    RuleStats stats;
    std::vector<CodeSample> out = GenerateVariants(root, cfg, &stats);
    std::set<uint64_t> prints = {Fingerprint(root.source).hash};
    for (const CodeSample& v : out) {
      EXPECT_TRUE(prints.insert(Fingerprint(v.source).hash).second) << v.id;
      EXPECT_TRUE(ReparseCheck(v.source)) << v.id;
      EXPECT_TRUE(StructuralChangeCheck(root.source, v.source)) << v.id;
      EXPECT_EQ(ReplayLineage(root.source, v.lineage), v.source) << v.id;
      EXPECT_LE(v.lineage.size(), 3u);
    }
  }
}

TEST(GenerateVariantsTest, ReplayRejectsStaleLineage) {
  std::vector<LineageStep> bogus = {{RuleId::kCondNegate, Span{0, 3}}};
  EXPECT_THROW(ReplayLineage(CopyData(), bogus), StaleSite);
}

TEST(RunCorpusTest, Additivity) {
  AugmentConfig cfg;
  cfg.enabled_rules = RuleSet::Parse("R3");
  cfg.max_chain_depth = 1;
  std::vector<CodeSample> in = {
      Sample("a", "void f(int a, int b){ a += 1; b += 2; a -= b; }"),
      Sample("b", "void g(int x, int y){ x *= 2; y |= 1; x ^= y; }",
             Label::kNonVulnerable)};
  CorpusResult r = RunCorpus(in, cfg, 2);
  ASSERT_EQ(r.samples.size(), 8u);
  EXPECT_EQ(r.stats.samples_out, 6u);
  EXPECT_EQ(r.stats.samples_in, 2u);
  EXPECT_EQ(r.samples[0].id, "a");
  EXPECT_EQ(r.samples[4].id, "b");
  for (size_t i = 5; i < 8; ++i) {
    EXPECT_EQ(r.samples[i].parent_id, "b");
    EXPECT_EQ(r.samples[i].label, Label::kNonVulnerable);
  }
}

TEST(RunCorpusTest, WorkerCountDoesNotChangeOutput) {
  AugmentConfig cfg;
  CorpusResult one = RunCorpus(Corpus(), cfg, 1);
  CorpusResult eight = RunCorpus(Corpus(), cfg, 8);
  EXPECT_EQ(one.stats, eight.stats);
  ASSERT_EQ(one.samples.size(), eight.samples.size());
  EXPECT_TRUE(one.samples == eight.samples);
}

TEST(RunCorpusTest, GlobalDedupDropsCrossSampleDuplicates) {
  AugmentConfig cfg;
  std::string src = "void f(int a, int b){ if (a < b) a = 1; else b = 2; }";
  std::vector<CodeSample> in = {Sample("a", src), Sample("b", src + "\n")};
  CorpusResult local = RunCorpus(in, cfg, 1, false);
  CorpusResult global = RunCorpus(in, cfg, 1, true);
  EXPECT_GT(local.samples.size(), global.samples.size());
  std::set<uint64_t> prints;
  for (const CodeSample& s : global.samples) {
    if (s.provenance == Provenance::kGenerated) {
      EXPECT_TRUE(prints.insert(Fingerprint(s.source).hash).second) << s.id;
    }
  }
  EXPECT_EQ(global.stats.samples_out,
            global.samples.size() - 2);
}

TEST(ReportStatsTest, SingleRuleHasFullShare) {
  RuleStats s;
  s.applied[RuleIndex(RuleId::kCondNegate)] = 12;
  s.samples_out = 12;
  std::string report = ReportStats(s);
  EXPECT_NE(report.find("share.R2_CondNegate=100.0"), std::string::npos) << report;
  EXPECT_NE(report.find("share.R5_CmpMirror=0.0"), std::string::npos);
}

TEST(ReportStatsTest, EmptyIsAllZero) {
  std::string report = ReportStats(RuleStats{});
  EXPECT_EQ(report.find("nan"), std::string::npos);
  EXPECT_NE(report.find("samples_out=0"), std::string::npos);
  EXPECT_NE(report.find("(0.0%)"), std::string::npos);
}

TEST(ReportStatsTest, CorpusSharesDescendAndSum) {
  CorpusResult r = RunCorpus(Corpus(), AugmentConfig{}, 1);
  std::string report = ReportStats(r.stats);
  std::regex share(R"(share\.\w+=([0-9.]+))");
  double total = 0, prev = 101;
  for (auto it = std::sregex_iterator(report.begin(), report.end(), share);
       it != std::sregex_iterator(); ++it) {
    double v = std::stod((*it)[1]);
    EXPECT_LE(v, prev);
    prev = v;
    total += v;
  }
  EXPECT_NEAR(total, 100.0, 0.1);
}

}  // namespace
}  // namespace vulaug

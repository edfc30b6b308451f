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

#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "manifest.h"
#include "test_support.h"
#include "vulaug/dataset_io.h"
#include "vulaug/digest.h"

namespace vulaug {
namespace {

using cli::RunCli;
using testing::DataDir;
using testing::ReadFile;
using testing::ScratchDir;
using testing::WriteFile;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Vulaug(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json Manifest(const std::string& path) {
  return nlohmann::json::parse(ReadFile(path));
}

CodeSample Original(const std::string& id, Label label, const std::string& src) {
  CodeSample s;
  s.id = id;
  s.label = label;
  s.source = src;
  return s;
}

std::string Csv(const std::vector<std::pair<std::string, int>>& rows) {
  std::string csv = "func_before,vul\n";
  for (const auto& [code, label] : rows) {
    std::string quoted = "\"";
    for (char c : code) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    csv += quoted + "\"," + std::to_string(label) + "\n";
  }
  return csv;
}

std::string Corpus() { return DataDir() + "/corpus/functions.jsonl"; }

// ---- general ----------------------------------------------------------------

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Vulaug({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(Vulaug({}).code, cli::kExitUsage);
  EXPECT_EQ(Vulaug({"augment", "-i", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(Vulaug({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(Vulaug({"augment", "-i", "x", "-o", "y", "--depth", "0"}).code,
            cli::kExitUsage);
}

TEST(CliTest, MissingInputIsDataError) {
  ScratchDir dir;
  Outcome r = Vulaug({"augment", "-i", dir.file("nope.jsonl"), "-o", dir.file("o.jsonl")});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("data error"), std::string::npos);
}

// ---- import -------------------------------------------------------------------

TEST(CliImportTest, ThreeDistinctRows) {
  ScratchDir dir;
  WriteFile(dir.file("in.csv"),
            "code;target\n\"int f(int a){ return a; }\";1\n"
            "\"int g(int b){ return b * 2; }\";0\n"
            "\"int h(int c){ return c - 1; }\";1\n");
  Outcome r = Vulaug({"import", "-i", dir.file("in.csv"), "-o", dir.file("d.jsonl"),
                      "--delimiter", ";", "--col-code", "code", "--col-label", "target"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<CodeSample> got = ReadCanonicalFile(dir.file("d.jsonl"));
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[1].source, "int g(int b){ return b * 2; }");
  EXPECT_EQ(got[1].label, Label::kNonVulnerable);
  EXPECT_EQ(got[2].label, Label::kVulnerable);
}

TEST(CliImportTest, ThreeRowsWithOneDuplicate) {
  ScratchDir dir;
  WriteFile(dir.file("in.csv"),
            Csv({{"int f(int a){ return a+1; }", 1},
                 {"int f(int a)\n{\n  return a + 1;\n}\n", 1},
                 {"int g(int b){ return b; }", 0}}));
  Outcome r = Vulaug({"import", "-i", dir.file("in.csv"), "-o", dir.file("d.jsonl")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("imported 2 records"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("1 duplicate removed"), std::string::npos) << r.err;
  EXPECT_EQ(ReadCanonicalFile(dir.file("d.jsonl")).size(), 2u);
  nlohmann::json m = Manifest(dir.file("d.jsonl.manifest.json"));
  EXPECT_EQ(m["command"], "import");
  EXPECT_EQ(m["result"]["rows"], 3);
  EXPECT_EQ(m["result"]["duplicates"], 1);
  EXPECT_EQ(m["outputs"][0]["sha256"], Sha256File(dir.file("d.jsonl")));
}

TEST(CliImportTest, UnparseableRowCounted) {
  ScratchDir dir;
  WriteFile(dir.file("in.csv"), Csv({{"int f(int a){ return a; }", 1},
                                     {"int f( {", 0},
                                     {"int g(int b){ return -b; }", 0}}));
  Outcome r = Vulaug({"import", "-i", dir.file("in.csv"), "-o", dir.file("d.jsonl")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Manifest(dir.file("d.jsonl.manifest.json"))["result"]["parse_failures"], 1);
  EXPECT_EQ(ReadCanonicalFile(dir.file("d.jsonl")).size(), 2u);
}

TEST(CliImportTest, MissingColumnIsDataError) {
  ScratchDir dir;
  WriteFile(dir.file("in.csv"), "code,label\nint f(void){return 0;},1\n");
  EXPECT_EQ(Vulaug({"import", "-i", dir.file("in.csv"), "-o", dir.file("d.jsonl")}).code,
            cli::kExitData);
  EXPECT_EQ(Vulaug({"import", "-i", dir.file("in.csv"), "-o", dir.file("d.jsonl"),
                 "--col-code", "code", "--col-label", "label"})
                .code,
            cli::kExitOk);
}

// ---- split --------------------------------------------------------------------

std::vector<CodeSample> Numbered(size_t n) {
  std::vector<CodeSample> v;
  for (size_t i = 0; i < n; ++i) {
    CodeSample s = Original("s" + std::to_string(i),
                            i % 3 ? Label::kNonVulnerable : Label::kVulnerable,
                            "int f" + std::to_string(i) + "(void){ return 0; }");
    s.published = std::to_string(2010 + i % 10) + "-06-01";
    v.push_back(s);
  }
  return v;
}

TEST(CliSplitTest, RatiosAndDeterminism) {
  ScratchDir dir;
  WriteCanonicalFile(Numbered(100), dir.file("d.jsonl"));
  std::vector<std::string> args = {"split", "-i", dir.file("d.jsonl"), "-o",
                                   dir.file("a"), "--ratios", "8:1:1", "--seed", "7"};
  ASSERT_EQ(Vulaug(args).code, 0);
  EXPECT_EQ(ReadCanonicalFile(dir.file("a/train.jsonl")).size(), 80u);
  EXPECT_EQ(ReadCanonicalFile(dir.file("a/valid.jsonl")).size(), 10u);
  EXPECT_EQ(ReadCanonicalFile(dir.file("a/test.jsonl")).size(), 10u);
  args[4] = dir.file("b");
  ASSERT_EQ(Vulaug(args).code, 0);
  for (const char* part : {"train", "valid", "test"}) {
    std::string name = std::string("/") + part + ".jsonl";
    EXPECT_EQ(ReadFile(dir.file("a") + name), ReadFile(dir.file("b") + name));
  }
  EXPECT_EQ(Manifest(dir.file("a/split.manifest.json"))["command"], "split");
}

TEST(CliSplitTest, DateCutoff) {
  ScratchDir dir;
  WriteCanonicalFile(Numbered(100), dir.file("d.jsonl"));
  ASSERT_EQ(Vulaug({"split", "-i", dir.file("d.jsonl"), "-o", dir.file("o"),
                 "--cutoff-year", "2017"})
                .code,
            0);
  for (const CodeSample& s : ReadCanonicalFile(dir.file("o/train.jsonl"))) {
    EXPECT_LT(DateYear(*s.published), 2017);
  }
  std::vector<CodeSample> valid = ReadCanonicalFile(dir.file("o/valid.jsonl"));
  std::vector<CodeSample> test = ReadCanonicalFile(dir.file("o/test.jsonl"));
  EXPECT_EQ(valid.size() + test.size(), 30u);
  for (const CodeSample& s : test) EXPECT_GE(DateYear(*s.published), 2017);
}

// ---- augment --------------------------------------------------------------------

TEST(CliAugmentTest, CopyDataSingleRule) {
  ScratchDir dir;
  std::string src = ReadFile(DataDir() + "/samples/copy_data.c");
  WriteCanonicalFile({Original("copy_data", Label::kVulnerable, src)}, dir.file("in.jsonl"));
  ASSERT_EQ(Vulaug({"augment", "-i", dir.file("in.jsonl"), "-o", dir.file("out.jsonl"),
                 "--rules", "R3", "--depth", "1"})
                .code,
            0);
  std::vector<CodeSample> out = ReadCanonicalFile(dir.file("out.jsonl"));
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].source, src);
  size_t a = src.find("cnt -= 1");
  std::string expected = src.substr(0, a) + "cnt = cnt - 1" + src.substr(a + 8);
  EXPECT_EQ(out[1].source, expected);
  EXPECT_EQ(out[1].provenance, Provenance::kGenerated);
}

TEST(CliAugmentTest, DeeperSearchIsSuperset) {
  ScratchDir dir;
  std::vector<CodeSample> corpus = ReadCanonicalFile(Corpus());
  corpus.resize(40);
  WriteCanonicalFile(corpus, dir.file("in.jsonl"));
  for (const char* d : {"1", "3"}) {
    ASSERT_EQ(Vulaug({"augment", "-i", dir.file("in.jsonl"), "-o",
                   dir.file(std::string("d") + d + ".jsonl"), "--depth", d,
                   "--max-per-sample", "0"})
                  .code,
              0);
  }
  std::set<std::string> deep;
  for (const CodeSample& s : ReadCanonicalFile(dir.file("d3.jsonl"))) deep.insert(s.source);
  for (const CodeSample& s : ReadCanonicalFile(dir.file("d1.jsonl"))) {
    EXPECT_TRUE(deep.count(s.source)) << s.id;
  }
}

TEST(CliAugmentTest, WorkerCountDoesNotChangeOutput) {
  ScratchDir dir;
  for (const char* j : {"1", "8"}) {
    ASSERT_EQ(Vulaug({"augment", "-i", Corpus(), "-o", dir.file(std::string("w") + j + ".jsonl"),
                   "-j", j})
                  .code,
              0);
  }
  EXPECT_EQ(Sha256File(dir.file("w1.jsonl")), Sha256File(dir.file("w8.jsonl")));
  nlohmann::json m1 = Manifest(dir.file("w1.jsonl.manifest.json"));
  nlohmann::json m8 = Manifest(dir.file("w8.jsonl.manifest.json"));
  EXPECT_EQ(m1["stats"], m8["stats"]);
  EXPECT_GE(m1["result"]["variants_per_second"].get<double>(), 10.0);
  EXPECT_EQ(m1["config"]["workers"], 1);
}

TEST(CliAugmentTest, RejectsGeneratedInput) {
  ScratchDir dir;
  ASSERT_EQ(Vulaug({"augment", "-i", Corpus(), "-o", dir.file("a.jsonl")}).code, 0);
  EXPECT_EQ(Vulaug({"augment", "-i", dir.file("a.jsonl"), "-o", dir.file("b.jsonl")}).code,
            cli::kExitData);
}

// ---- balance --------------------------------------------------------------------

void WriteBalanceFixture(const ScratchDir& dir, size_t n_vul, size_t n_non,
                         int per_root) {
  std::vector<CodeSample> train, variants;
  for (size_t i = 0; i < n_vul + n_non; ++i) {
    bool vul = i < n_vul;
    CodeSample root = Original((vul ? "v" : "n") + std::to_string(i),
                               vul ? Label::kVulnerable : Label::kNonVulnerable,
                               "int f(void){return 0;}");
    for (int k = 0; k < per_root; ++k) {
      CodeSample v = root;
      v.id = root.id + "/v" + std::to_string(k);
      v.provenance = Provenance::kGenerated;
      v.parent_id = root.id;
      v.lineage = {{RuleId::kCmpMirror, Span{0, 3}}};
      v.source += " /* " + std::to_string(k) + " */";
      variants.push_back(v);
    }
    train.push_back(root);
  }
  WriteCanonicalFile(train, dir.file("train.jsonl"));
  WriteCanonicalFile(variants, dir.file("variants.jsonl"));
}

TEST(CliBalanceTest, LargeScaleBothModes) {
  ScratchDir dir;
  WriteBalanceFixture(dir, 7631, 25000, 2);
  for (const char* mode : {"augm-vul", "augm-both"}) {
    std::string out = dir.file(std::string(mode) + ".jsonl");
    Outcome r = Vulaug({"balance", "--train", dir.file("train.jsonl"), "--variants",
                     dir.file("variants.jsonl"), "-o", out, "--mode", mode,
                     "--factor", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("22893 vulnerable + 22893 non-vulnerable"), std::string::npos)
        << r.err;
    EXPECT_EQ(ReadCanonicalFile(out).size(), 45786u);
    nlohmann::json m = Manifest(out + ".manifest.json");
    EXPECT_EQ(m["result"]["vulnerable"], 22893);
    EXPECT_EQ(m["result"]["non_vulnerable"], 22893);
  }
}

TEST(CliBalanceTest, FactorOneAndInsufficient) {
  ScratchDir dir;
  WriteBalanceFixture(dir, 10, 100, 1);
  Outcome one = Vulaug({"balance", "--train", dir.file("train.jsonl"), "-o",
                     dir.file("one.jsonl"), "--factor", "1"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(ReadCanonicalFile(dir.file("one.jsonl")).size(), 20u);

  Outcome few = Vulaug({"balance", "--train", dir.file("train.jsonl"), "--variants",
                     dir.file("variants.jsonl"), "-o", dir.file("few.jsonl"),
                     "--factor", "3"});
  EXPECT_EQ(few.code, cli::kExitInsufficient);
  EXPECT_NE(few.err.find("warning"), std::string::npos);
  nlohmann::json m = Manifest(dir.file("few.jsonl.manifest.json"));
  EXPECT_EQ(m["warnings"].size(), 1u);
  EXPECT_TRUE(m["result"]["insufficient_variants"].get<bool>());

  EXPECT_EQ(Vulaug({"balance", "--train", dir.file("train.jsonl"), "-o",
                 dir.file("zero.jsonl"), "--factor", "0"})
                .code,
            cli::kExitUsage);
}

// ---- stats ----------------------------------------------------------------------

TEST(CliStatsTest, SingleRuleAndEmpty) {
  ScratchDir dir;
  std::string src = ReadFile(DataDir() + "/samples/copy_data.c");
  WriteCanonicalFile({Original("l", Label::kVulnerable, src)}, dir.file("in.jsonl"));
  ASSERT_EQ(Vulaug({"augment", "-i", dir.file("in.jsonl"), "-o", dir.file("o.jsonl"),
                 "--rules", "R7"})
                .code,
            0);
  for (const std::string& input :
       {dir.file("o.jsonl"), dir.file("o.jsonl.manifest.json")}) {
    Outcome r = Vulaug({"stats", input});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("share.R7_WhileToFor=100.0"), std::string::npos) << r.out;
  }
  WriteFile(dir.file("empty.jsonl"), "");
  Outcome e = Vulaug({"stats", dir.file("empty.jsonl")});
  ASSERT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("samples_out=0"), std::string::npos);
  EXPECT_EQ(e.out.find("nan"), std::string::npos);
}

// ---- verify ---------------------------------------------------------------------

TEST(CliVerifyTest, PlantedFaultExitsNonZero) {
  ScratchDir dir;
  Outcome r = Vulaug({"verify", "--oracle-dir", std::string(VULAUG_TEST_FIXTURE_DIR) + "/planted",
                   "--depth", "1", "-o", dir.file("report.txt")});
  EXPECT_EQ(r.code, cli::kExitDivergence) << r.err;
  EXPECT_NE(r.out.find("1 divergent"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("cnt_minus_two.c"), std::string::npos);
  EXPECT_EQ(Manifest(dir.file("report.txt.manifest.json"))["command"], "verify");
}

TEST(CliVerifyTest, MissingCompilerIsEnvironmentError) {
  Outcome r = Vulaug({"verify", "--oracle-dir", std::string(VULAUG_TEST_FIXTURE_DIR) + "/planted",
                   "--compiler-cmd", "vulaug-no-such-compiler -o {out} {in}"});
  EXPECT_EQ(r.code, cli::kExitEnvironment) << r.err;
}

TEST(CliVerifyTest, EmptyOracleDirIsDataError) {
  ScratchDir dir;
  EXPECT_EQ(Vulaug({"verify", "--oracle-dir", dir.path()}).code, cli::kExitData);
}

TEST(CliVerifyTest, BundledCorpusHasNoDivergence) {
  Outcome r = Vulaug({"verify", "--oracle-dir", DataDir() + "/oracle"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("\n0 divergent"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace vulaug

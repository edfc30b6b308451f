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
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.h"
#include "vulaug/dataset_io.h"

namespace vulaug {
namespace {

using testing::DataDir;

CodeSample Original(const std::string& id, Label label,
                    const std::string& src = "int f(void){return 0;}") {
  CodeSample s;
  s.id = id;
  s.label = label;
  s.source = src;
  return s;
}

CodeSample Variant(const CodeSample& root, int k) {
  CodeSample v = root;
  v.id = root.id + "/v" + std::to_string(k);
  v.provenance = Provenance::kGenerated;
  v.parent_id = root.id;
  v.lineage = {{RuleId::kCmpMirror, Span{static_cast<size_t>(k), static_cast<size_t>(k + 3)}}};
  v.source = root.source + " /* " + std::to_string(k) + " */";
  return v;
}

std::string RoundTrip(const std::vector<CodeSample>& samples,
                      std::vector<CodeSample>* back) {
  std::stringstream ss;
  WriteCanonical(samples, ss);
  std::string text = ss.str();
  std::istringstream in(text);
  *back = ReadCanonical(in);
  return text;
}

// ---- canonical format -----------------------------------------------------

TEST(CanonicalTest, EmptyDatasetHasHeaderOnly) {
  std::vector<CodeSample> back;
  std::string text = RoundTrip({}, &back);
  EXPECT_TRUE(back.empty());
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  EXPECT_NE(text.find("\"schema_version\":1"), std::string::npos);
}

std::string RandomText(std::mt19937& rng, size_t max_len) {
  static const std::string kAlphabet =
      "abcXYZ019 \t\n\r\"\\{}[];,:/*#'\x01\xc3\xa9\xe2\x82\xac";
  std::string out;
  size_t len = rng() % max_len;
  while (out.size() < len) {
    char c = kAlphabet[rng() % kAlphabet.size()];
    if (static_cast<unsigned char>(c) >= 0x80) {
      // Keep multi-byte sequences whole.
      if (c == '\xc3') {
        out += "\xc3\xa9";
      } else if (c == '\xe2') {
        out += "\xe2\x82\xac";
      }
      continue;
    }
    out += c;
  }
  return out;
}

TEST(CanonicalTest, ThousandRecordRoundTrip) {
  std::mt19937 rng(1234);
  std::vector<CodeSample> samples;
  for (int i = 0; i < 1000; ++i) {
    CodeSample s;
    s.id = "rec-" + std::to_string(i);
    s.source = RandomText(rng, 400) + "\nint f(void)\n{\n\treturn \"a\\n\";\n}\n";
    s.label = rng() % 2 ? Label::kVulnerable : Label::kNonVulnerable;
    if (rng() % 2) s.cwe = "CWE-" + std::to_string(rng() % 1000);
    if (rng() % 2) s.cve = "CVE-2019-" + std::to_string(rng() % 99999);
    if (rng() % 2) s.project = RandomText(rng, 12);
    if (rng() % 2) s.published = "2016-0" + std::to_string(1 + rng() % 9) + "-11";
    if (i > 0 && rng() % 3 == 0) {
      s.provenance = Provenance::kGenerated;
      s.parent_id = "rec-0";
      size_t steps = 1 + rng() % 3;
      for (size_t k = 0; k < steps; ++k) {
        size_t a = rng() % 100;
        s.lineage.push_back({kAllRules[rng() % kRuleCount], Span{a, a + rng() % 30}});
      }
    }
    samples.push_back(std::move(s));
  }
  std::vector<CodeSample> back;
  std::string text = RoundTrip(samples, &back);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1001);
  ASSERT_EQ(back.size(), samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    ASSERT_EQ(back[i], samples[i]) << i;
  }
}

TEST(CanonicalTest, NonUtf8SourceSurvives) {
  CodeSample s = Original("latin", Label::kVulnerable,
                          "int f(void){ char c = '\xe9'; return c; }\xff\n");
  std::vector<CodeSample> back;
  std::string text = RoundTrip({s}, &back);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].source, s.source);
  EXPECT_NE(text.find("latin1"), std::string::npos);
}

TEST(CanonicalTest, RejectsInconsistentRecords) {
  auto read = [](const std::string& body) {
    std::istringstream in("{\"schema_version\":1,\"format\":\"vulaug.dataset\"}\n" + body);
    return ReadCanonical(in);
  };
  std::string rec = SampleToJsonLine(Original("a", Label::kVulnerable));
  EXPECT_EQ(read(rec + "\n").size(), 1u);
  EXPECT_THROW(read(rec + "\n" + rec + "\n"), SchemaError);
  EXPECT_THROW(read("{\"id\":\"x\"}\n"), SchemaError);
  EXPECT_THROW(read("not json\n"), SchemaError);

  CodeSample bad = Original("b", Label::kVulnerable);
  bad.provenance = Provenance::kGenerated;  // generated but no lineage
  EXPECT_THROW(read(SampleToJsonLine(bad) + "\n"), SchemaError);

  std::istringstream no_header("");
  EXPECT_THROW(ReadCanonical(no_header), SchemaError);
  std::istringstream future("{\"schema_version\":9}\n");
  EXPECT_THROW(ReadCanonical(future), SchemaError);
}

// ---- delimited import -----------------------------------------------------

TEST(DelimitedTest, QuotedFields) {
  std::istringstream in(
      "\xEF\xBB\xBFid,code,vul\n"
      "1,\"int f(int a, int b)\n{\n  return \"\"x\"\";\n}\",1\r\n"
      "2,plain,0\n");
  auto rows = ReadDelimited(in);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0][0], "id");
  EXPECT_EQ(rows[1][1], "int f(int a, int b)\n{\n  return \"x\";\n}");
  EXPECT_EQ(rows[1][2], "1");
  EXPECT_EQ(rows[2][1], "plain");
}

TEST(DelimitedTest, UnterminatedQuote) {
  std::istringstream in("a,b\n1,\"oops\n");
  EXPECT_THROW(ReadDelimited(in), MalformedRow);
}

TEST(ImportTest, ThreeRowsByLabel) {
  std::istringstream in(
      "func_before,vul\n"
      "\"int f(void){return 1;}\",1\n"
      "\"int g(void){return 2;}\",0\n"
      "\"int g(void){return 2;}\",0\n");
  ImportResult r = ImportTabular(in, ColumnMap{});
  ASSERT_EQ(r.samples.size(), 3u);
  size_t vul = 0;
  for (const CodeSample& s : r.samples) {
    vul += s.label == Label::kVulnerable;
    EXPECT_EQ(s.provenance, Provenance::kOriginal);
  }
  EXPECT_EQ(vul, 1u);
  // Duplicate bodies are kept; dedup is a separate step.
  EXPECT_EQ(r.samples[1].source, r.samples[2].source);
}

TEST(ImportTest, ColumnMappingAndErrors) {
  ColumnMap cols;
  cols.code = "func";
  cols.label = "target";
  cols.id = "idx";
  cols.cwe = "CWE ID";
  cols.date = "publish_date";
  std::istringstream in(
      "idx\tfunc\ttarget\tCWE ID\tpublish_date\n"
      "7\tint f(void){return 1;}\tvulnerable\tCWE-119\t2014-02-01\n"
      "8\t   \t0\t\t\n"
      "9\tint g(void){return 1;}\tfalse\t\t2018-07-30\n");
  ImportResult r = ImportTabular(in, cols, '\t');
  ASSERT_EQ(r.samples.size(), 2u);
  EXPECT_EQ(r.empty_dropped, 1u);
  EXPECT_EQ(r.samples[0].id, "7");
  EXPECT_EQ(r.samples[0].cwe, "CWE-119");
  EXPECT_EQ(r.samples[0].published, "2014-02-01");
  EXPECT_EQ(r.samples[1].label, Label::kNonVulnerable);
  EXPECT_FALSE(r.samples[1].cwe.has_value());

  std::istringstream missing("code,vul\nx,1\n");
  EXPECT_THROW(ImportTabular(missing, ColumnMap{}), MissingColumn);
  std::istringstream bad_label("func_before,vul\nint f(void){return 0;},maybe\n");
  EXPECT_THROW(ImportTabular(bad_label, ColumnMap{}), MalformedRow);
  std::istringstream short_row("func_before,vul\nint f(void){return 0;}\n");
  EXPECT_THROW(ImportTabular(short_row, ColumnMap{}), MalformedRow);
}

TEST(DedupTest, WhitespaceCopiesCollapseAndBrokenRowsDrop) {
  std::vector<CodeSample> in = {
      Original("a", Label::kVulnerable, "int f(int a){ return a+1; }"),
      Original("b", Label::kVulnerable, "int f(int a)\n{\n  return a + 1;\n}\n"),
      Original("c", Label::kNonVulnerable, "int f( {"),
      Original("d", Label::kNonVulnerable, "int g(int a){ return a; }")};
  FilterResult r = DedupAndFilter(in);
  ASSERT_EQ(r.samples.size(), 2u);
  EXPECT_EQ(r.samples[0].id, "a");
  EXPECT_EQ(r.samples[1].id, "d");
  EXPECT_EQ(r.duplicates, 1u);
  EXPECT_EQ(r.parse_failures, 1u);
}

TEST(DedupTest, SurvivorsParseAndAreDistinct) {
  std::vector<CodeSample> corpus =
      ReadCanonicalFile(DataDir() + "/corpus/functions.jsonl");
  std::vector<CodeSample> noisy = corpus;
  std::mt19937 rng(9);
  for (size_t i = 0; i < corpus.size(); i += 3) {
    CodeSample copy = corpus[i];
    copy.id += "-copy";
    copy.source = "  " + copy.source + "\n\n";
    noisy.insert(noisy.begin() + static_cast<long>(rng() % noisy.size()), copy);
  }
  noisy.push_back(Original("junk", Label::kVulnerable, "}}}"));
  FilterResult r = DedupAndFilter(noisy);
  std::set<uint64_t> prints;
  for (const CodeSample& s : r.samples) {
    EXPECT_NO_THROW(ParseUnit(s.source, ParseMode::kFunctionFragment));
    EXPECT_TRUE(prints.insert(Fingerprint(s.source).hash).second) << s.id;
  }
  EXPECT_EQ(r.samples.size(), corpus.size());
  EXPECT_EQ(r.parse_failures, 1u);
}

// ---- splitting --------------------------------------------------------------

std::vector<CodeSample> Numbered(size_t n) {
  std::vector<CodeSample> out;
  for (size_t i = 0; i < n; ++i) {
    out.push_back(Original("r" + std::to_string(i),
                           i % 3 ? Label::kNonVulnerable : Label::kVulnerable));
    out.back().published = std::to_string(2015 + i % 6) + "-05-0" + std::to_string(1 + i % 9);
  }
  return out;
}

std::vector<std::string> Ids(const std::vector<CodeSample>& v) {
  std::vector<std::string> ids;
  for (const CodeSample& s : v) ids.push_back(s.id);
  return ids;
}

TEST(SplitTest, RatioSizes) {
  SplitSpec spec;
  SplitResult r = Split(Numbered(10), spec);
  EXPECT_EQ(r.train.size(), 8u);
  EXPECT_EQ(r.valid.size(), 1u);
  EXPECT_EQ(r.test.size(), 1u);
  spec.seed = 7;
  r = Split(Numbered(100), spec);
  EXPECT_EQ(r.train.size(), 80u);
  EXPECT_EQ(r.valid.size(), 10u);
  EXPECT_EQ(r.test.size(), 10u);
}

TEST(SplitTest, PartitionAndDeterminism) {
  std::vector<CodeSample> in = Numbered(137);
  SplitSpec spec;
  spec.seed = 42;
  spec.ratios = {7, 2, 1};
  SplitResult a = Split(in, spec);
  SplitResult b = Split(in, spec);
  EXPECT_EQ(Ids(a.train), Ids(b.train));
  EXPECT_EQ(Ids(a.valid), Ids(b.valid));
  EXPECT_EQ(Ids(a.test), Ids(b.test));
  std::multiset<std::string> all;
  for (auto* part : {&a.train, &a.valid, &a.test}) {
    for (const CodeSample& s : *part) all.insert(s.id);
  }
  std::multiset<std::string> expected;
  for (const CodeSample& s : in) expected.insert(s.id);
  EXPECT_EQ(all, expected);
  spec.seed = 43;
  EXPECT_NE(Ids(Split(in, spec).train), Ids(a.train));
}

TEST(SplitTest, DateCutoffPartitionsByYear) {
  SplitSpec spec;
  spec.kind = SplitSpec::Kind::kDateCutoff;
  spec.cutoff_year = 2017;
  std::vector<CodeSample> in = Numbered(120);
  SplitResult r = Split(in, spec);
  for (const CodeSample& s : r.train) EXPECT_LT(*DateYear(*s.published), 2017);
  for (auto* part : {&r.valid, &r.test}) {
    for (const CodeSample& s : *part) EXPECT_GE(*DateYear(*s.published), 2017);
  }
  size_t early = static_cast<size_t>(std::count_if(in.begin(), in.end(), [](const CodeSample& s) {
    return *DateYear(*s.published) < 2017;
  }));
  EXPECT_EQ(r.train.size(), early);
  EXPECT_EQ(r.train.size() + r.valid.size() + r.test.size(), in.size());
  EXPECT_LE(r.test.size() - r.valid.size(), 1u);

  in[5].published.reset();
  EXPECT_THROW(Split(in, spec), MissingDate);
  in[5].published = "unknown";
  EXPECT_THROW(Split(in, spec), MissingDate);
}

TEST(SplitTest, DateYearParsing) {
  EXPECT_EQ(DateYear("2017-01-02"), 2017);
  EXPECT_EQ(DateYear("1999"), 1999);
  EXPECT_FALSE(DateYear("17-01-02").has_value());
  EXPECT_FALSE(DateYear("20171").has_value());
  EXPECT_FALSE(DateYear("").has_value());
}

TEST(RandomTest, BoundedRandomIsInRangeAndCoversIt) {
  std::mt19937_64 rng(1);
  std::vector<size_t> counts(7);
  for (int i = 0; i < 70000; ++i) {
    uint64_t v = BoundedRandom(rng, 7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  for (size_t c : counts) EXPECT_NEAR(static_cast<double>(c), 10000.0, 500.0);
}

TEST(RandomTest, ShuffleIsAPermutation) {
  std::vector<int> v(100);
  for (int i = 0; i < 100; ++i) v[i] = i;
  std::mt19937_64 rng(3);
  SeededShuffle(v, rng);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 100; ++i) ASSERT_EQ(sorted[i], i);
  EXPECT_FALSE(std::is_sorted(v.begin(), v.end()));
}

// ---- balancing --------------------------------------------------------------

struct Fixture {
  std::vector<CodeSample> train;
  std::vector<CodeSample> variants;
};

Fixture MakeFixture(size_t n_vul, size_t n_non, int variants_per_root) {
  Fixture f;
  for (size_t i = 0; i < n_vul + n_non; ++i) {
    CodeSample root = Original((i < n_vul ? "v" : "n") + std::to_string(i),
                               i < n_vul ? Label::kVulnerable : Label::kNonVulnerable);
    for (int k = 0; k < variants_per_root; ++k) f.variants.push_back(Variant(root, k));
    f.train.push_back(std::move(root));
  }
  return f;
}

struct Counts {
  size_t vul_orig = 0, vul_gen = 0, non_orig = 0, non_gen = 0;
};

Counts Count(const std::vector<CodeSample>& v) {
  Counts c;
  for (const CodeSample& s : v) {
    bool gen = s.provenance == Provenance::kGenerated;
    if (s.label == Label::kVulnerable) {
      (gen ? c.vul_gen : c.vul_orig)++;
    } else {
      (gen ? c.non_gen : c.non_orig)++;
    }
  }
  return c;
}

TEST(BalanceTest, LargeScaleAugmentVulnerable) {
  Fixture f = MakeFixture(7631, 25000, 2);
  BalanceSpec spec;
  spec.mode = BalanceSpec::Mode::kAugmVul;
  spec.expansion_factor = 3;
  BalanceResult r = BuildTrainingSet(f.train, f.variants, spec);
  EXPECT_EQ(r.vulnerable, 22893u);
  EXPECT_EQ(r.non_vulnerable, 22893u);
  EXPECT_FALSE(r.insufficient_variants);
  Counts c = Count(r.samples);
  EXPECT_EQ(c.vul_orig, 7631u);
  EXPECT_EQ(c.vul_gen, 22893u - 7631u);
  EXPECT_EQ(c.non_orig, 22893u);
  EXPECT_EQ(c.non_gen, 0u);
}

TEST(BalanceTest, LargeScaleAugmentBoth) {
  Fixture f = MakeFixture(7631, 25000, 2);
  BalanceSpec spec;
  spec.mode = BalanceSpec::Mode::kAugmBoth;
  BalanceResult r = BuildTrainingSet(f.train, f.variants, spec);
  EXPECT_EQ(r.vulnerable, 22893u);
  EXPECT_EQ(r.non_vulnerable, 22893u);
  Counts c = Count(r.samples);
  EXPECT_EQ(c.non_orig, 7631u);
  EXPECT_EQ(c.non_gen, 22893u - 7631u);
  // Generated non-vulnerable samples come only from the kept originals.
  std::set<std::string> kept;
  for (const CodeSample& s : r.samples) {
    if (s.provenance == Provenance::kOriginal) kept.insert(s.id);
  }
  for (const CodeSample& s : r.samples) {
    if (s.provenance == Provenance::kGenerated) {
      EXPECT_TRUE(kept.count(*s.parent_id));
    }
  }
}

TEST(BalanceTest, RoundRobinSpreadsAcrossRoots) {
  Fixture f = MakeFixture(100, 400, 5);
  BalanceSpec spec;
  BalanceResult r = BuildTrainingSet(f.train, f.variants, spec);
  std::map<std::string, int> per_root;
  for (const CodeSample& s : r.samples) {
    if (s.provenance == Provenance::kGenerated) ++per_root[*s.parent_id];
  }
  ASSERT_EQ(per_root.size(), 100u);
  for (const auto& [root, n] : per_root) EXPECT_EQ(n, 2) << root;
}

TEST(BalanceTest, FactorOneKeepsOriginalsOnly) {
  Fixture f = MakeFixture(50, 80, 3);
  BalanceSpec spec;
  spec.expansion_factor = 1;
  BalanceResult r = BuildTrainingSet(f.train, f.variants, spec);
  Counts c = Count(r.samples);
  EXPECT_EQ(c.vul_gen + c.non_gen, 0u);
  EXPECT_EQ(r.vulnerable, 50u);
  EXPECT_EQ(r.non_vulnerable, 50u);
  EXPECT_FALSE(r.insufficient_variants);
}

TEST(BalanceTest, InsufficientVariantsFlagged) {
  Fixture f = MakeFixture(50, 500, 1);
  BalanceSpec spec;
  BalanceResult r = BuildTrainingSet(f.train, f.variants, spec);
  EXPECT_EQ(r.vulnerable, 100u);
  EXPECT_TRUE(r.insufficient_variants);
  EXPECT_FALSE(r.warning.empty());
}

TEST(BalanceTest, SeedControlsSelection) {
  Fixture f = MakeFixture(30, 200, 4);
  BalanceSpec spec;
  spec.seed = 1;
  auto a = BuildTrainingSet(f.train, f.variants, spec);
  auto b = BuildTrainingSet(f.train, f.variants, spec);
  EXPECT_EQ(Ids(a.samples), Ids(b.samples));
  spec.seed = 2;
  EXPECT_NE(Ids(BuildTrainingSet(f.train, f.variants, spec).samples), Ids(a.samples));
}

TEST(BalanceTest, HeldOutRootsAreLeakage) {
  Fixture f = MakeFixture(20, 40, 2);
  SplitResult parts = Split(f.train, SplitSpec{});
  std::set<std::string> held;
  for (auto* part : {&parts.valid, &parts.test}) {
    for (const CodeSample& s : *part) held.insert(s.id);
  }
  ASSERT_FALSE(held.empty());
  // Variants of training roots are accepted.
  std::vector<CodeSample> clean;
  for (const CodeSample& v : f.variants) {
    if (!held.count(*v.parent_id)) clean.push_back(v);
  }
  EXPECT_NO_THROW(BuildTrainingSet(parts.train, clean, BalanceSpec{}));
  // A single variant rooted in valid or test is rejected.
  for (const CodeSample& v : f.variants) {
    if (!held.count(*v.parent_id)) continue;
    std::vector<CodeSample> leaky = clean;
    leaky.push_back(v);
    EXPECT_THROW(BuildTrainingSet(parts.train, leaky, BalanceSpec{}), LeakageError);
  }
}

TEST(BalanceTest, LabelMismatchRejected) {
  Fixture f = MakeFixture(3, 3, 1);
  f.variants[0].label = Label::kNonVulnerable;
  EXPECT_THROW(BuildTrainingSet(f.train, f.variants, BalanceSpec{}), DataError);
}

}  // namespace
}  // namespace vulaug

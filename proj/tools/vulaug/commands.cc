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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.h"
#include "manifest.h"
#include "vulaug/augment_engine.h"
#include "vulaug/dataset_io.h"
#include "vulaug/equiv_verify.h"
#include "vulaug/version.h"

namespace vulaug::cli {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, ParseMode> kParseModes = {
    {"fragment", ParseMode::kFunctionFragment},
    {"tu", ParseMode::kTranslationUnit}};

std::string ParseModeName(ParseMode m) {
  return m == ParseMode::kTranslationUnit ? "tu" : "fragment";
}

RuleSet ParseRules(const std::string& text) {
  if (text == "all" || text.empty()) return RuleSet::All();
  try {
    return RuleSet::Parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string Plural(size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

void MakeParentDirs(const std::string& path) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
}

// ---- import ---------------------------------------------------------------

struct ImportOptions {
  std::string input;
  std::string output;
  std::string delimiter = ",";
  ColumnMap columns;
  std::string col_id, col_cwe, col_cve, col_project, col_date;
  ParseMode mode = ParseMode::kFunctionFragment;
};

char DelimiterChar(const std::string& d) {
  if (d == "tab" || d == "\\t" || d == "\t") return '\t';
  if (d.size() != 1) throw UsageError("delimiter must be one character");
  return d[0];
}

std::optional<std::string> NonEmpty(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

int CmdImport(ImportOptions o, std::ostream& err) {
  auto t0 = Clock::now();
  char delim = DelimiterChar(o.delimiter);
  o.columns.id = NonEmpty(o.col_id);
  o.columns.cwe = NonEmpty(o.col_cwe);
  o.columns.cve = NonEmpty(o.col_cve);
  o.columns.project = NonEmpty(o.col_project);
  o.columns.date = NonEmpty(o.col_date);

  ImportResult imported = ImportTabularFile(o.input, o.columns, delim);
  FilterResult filtered = DedupAndFilter(imported.samples, o.mode);
  MakeParentDirs(o.output);
  WriteCanonicalFile(filtered.samples, o.output);

  err << "imported " << Plural(filtered.samples.size(), "record") << "; "
      << Plural(filtered.duplicates, "duplicate") << " removed; "
      << Plural(filtered.parse_failures, "parse failure") << "; "
      << imported.empty_dropped << " empty dropped\n";

  RunManifest m("import");
  Json& c = m.config();
  c["input"] = o.input;
  c["output"] = o.output;
  c["delimiter"] = std::string(1, delim);
  c["col_code"] = o.columns.code;
  c["col_label"] = o.columns.label;
  for (auto [key, val] : {std::pair{"col_id", &o.columns.id},
                          {"col_cwe", &o.columns.cwe},
                          {"col_cve", &o.columns.cve},
                          {"col_project", &o.columns.project},
                          {"col_date", &o.columns.date}}) {
    c[key] = val->has_value() ? Json(**val) : Json(nullptr);
  }
  c["parse_mode"] = ParseModeName(o.mode);
  m.AddInput(o.input);
  m.AddOutput(o.output);
  Json& r = m.extra();
  r["rows"] = imported.samples.size() + imported.empty_dropped;
  r["empty_dropped"] = imported.empty_dropped;
  r["duplicates"] = filtered.duplicates;
  r["parse_failures"] = filtered.parse_failures;
  r["records"] = filtered.samples.size();
  m.SetWallSeconds(SecondsSince(t0));
  m.WriteAtomic(ManifestPathFor(o.output));
  return kExitOk;
}

// ---- split ----------------------------------------------------------------

struct SplitOptions {
  std::string input;
  std::string out_dir;
  std::string ratios = "8:1:1";
  uint64_t seed = 0;
  std::optional<int> cutoff_year;
};

std::array<uint32_t, 3> ParseRatios(const std::string& text) {
  std::array<uint32_t, 3> r{};
  std::stringstream ss(text);
  std::string part;
  size_t i = 0;
  while (std::getline(ss, part, ':')) {
    if (i == 3 || part.empty() ||
        part.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("--ratios expects three integers like 8:1:1");
    }
    r[i++] = static_cast<uint32_t>(std::stoul(part));
  }
  if (i != 3 || r[0] + r[1] + r[2] == 0) {
    throw UsageError("--ratios expects three integers like 8:1:1");
  }
  return r;
}

int CmdSplit(const SplitOptions& o, std::ostream& err) {
  auto t0 = Clock::now();
  SplitSpec spec;
  spec.seed = o.seed;
  if (o.cutoff_year) {
    spec.kind = SplitSpec::Kind::kDateCutoff;
    spec.cutoff_year = *o.cutoff_year;
  } else {
    spec.ratios = ParseRatios(o.ratios);
  }
  std::vector<CodeSample> samples = ReadCanonicalFile(o.input);
  SplitResult parts = Split(samples, spec);

  std::filesystem::create_directories(o.out_dir);
  auto path = [&](const char* name) {
    return (std::filesystem::path(o.out_dir) / name).string();
  };
  WriteCanonicalFile(parts.train, path("train.jsonl"));
  WriteCanonicalFile(parts.valid, path("valid.jsonl"));
  WriteCanonicalFile(parts.test, path("test.jsonl"));
  err << "split " << samples.size() << " records into " << parts.train.size()
      << "/" << parts.valid.size() << "/" << parts.test.size() << "\n";

  RunManifest m("split");
  Json& c = m.config();
  c["input"] = o.input;
  c["out_dir"] = o.out_dir;
  c["seed"] = o.seed;
  if (o.cutoff_year) {
    c["kind"] = "date_cutoff";
    c["cutoff_year"] = *o.cutoff_year;
  } else {
    c["kind"] = "random_ratio";
    c["ratios"] = spec.ratios;
  }
  m.AddInput(o.input);
  m.AddOutput(path("train.jsonl"));
  m.AddOutput(path("valid.jsonl"));
  m.AddOutput(path("test.jsonl"));
  m.extra()["train"] = parts.train.size();
  m.extra()["valid"] = parts.valid.size();
  m.extra()["test"] = parts.test.size();
  m.SetWallSeconds(SecondsSince(t0));
  m.WriteAtomic(path("split.manifest.json"));
  return kExitOk;
}

// ---- augment --------------------------------------------------------------

struct AugmentOptions {
  std::string input;
  std::string output;
  std::string rules = "all";
  int depth = 3;
  size_t max_per_sample = 100;
  int workers = 1;
  uint64_t seed = 0;
  bool global_dedup = false;
  bool no_dedup = false;
  ParseMode mode = ParseMode::kFunctionFragment;
};

int CmdAugment(const AugmentOptions& o, std::ostream& err) {
  auto t0 = Clock::now();
  AugmentConfig cfg;
  cfg.enabled_rules = ParseRules(o.rules);
  cfg.max_chain_depth = o.depth;
  cfg.max_variants_per_sample = o.max_per_sample;
  cfg.random_seed = o.seed;
  cfg.dedup = !o.no_dedup;
  cfg.parse_mode = o.mode;

  std::vector<CodeSample> samples = ReadCanonicalFile(o.input);
  for (const CodeSample& s : samples) {
    if (s.provenance != Provenance::kOriginal) {
      throw DataError("input record '" + s.id +
                      "' is already generated; augment originals only");
    }
  }
  auto g0 = Clock::now();
  CorpusResult result = RunCorpus(samples, cfg, o.workers, o.global_dedup);
  double gen_seconds = SecondsSince(g0);
  MakeParentDirs(o.output);
  WriteCanonicalFile(result.samples, o.output);

  const RuleStats& st = result.stats;
  double rate = gen_seconds > 0 ? static_cast<double>(st.samples_out) /
                                      gen_seconds
                                : 0.0;
  uint64_t parseable = st.samples_in - st.parse_failures;
  double mean = parseable == 0 ? 0.0
                               : static_cast<double>(st.samples_out) /
                                     static_cast<double>(parseable);
  double multi = st.samples_out == 0
                     ? 0.0
                     : static_cast<double>(st.multi_transform_count) /
                           static_cast<double>(st.samples_out);
  err << "augmented " << Plural(st.samples_in, "sample") << " into "
      << Plural(st.samples_out, "variant") << " (" << rate
      << " variants/s, " << Plural(st.parse_failures, "parse failure")
      << ")\n";

  RunManifest m("augment");
  Json& c = m.config();
  c["input"] = o.input;
  c["output"] = o.output;
  c["rules"] = cfg.enabled_rules.ToString();
  c["depth"] = o.depth;
  c["max_per_sample"] = o.max_per_sample;
  c["workers"] = o.workers;
  c["seed"] = o.seed;
  c["dedup"] = cfg.dedup;
  c["global_dedup"] = o.global_dedup;
  c["parse_mode"] = ParseModeName(o.mode);
  m.AddInput(o.input);
  m.AddOutput(o.output);
  m.SetStats(st);
  Json& r = m.extra();
  r["variants_per_second"] = rate;
  r["generation_seconds"] = gen_seconds;
  r["mean_variants_per_parseable_sample"] = mean;
  r["multi_transform_fraction"] = multi;
  m.SetWallSeconds(SecondsSince(t0));
  m.WriteAtomic(ManifestPathFor(o.output));
  return kExitOk;
}

// ---- balance --------------------------------------------------------------

struct BalanceOptions {
  std::string train;
  std::string variants;
  std::string output;
  BalanceSpec::Mode mode = BalanceSpec::Mode::kAugmVul;
  int factor = 3;
  uint64_t seed = 0;
};

int CmdBalance(const BalanceOptions& o, std::ostream& err) {
  auto t0 = Clock::now();
  BalanceSpec spec;
  spec.mode = o.mode;
  spec.expansion_factor = o.factor;
  spec.seed = o.seed;
  std::vector<CodeSample> train = ReadCanonicalFile(o.train);
  std::vector<CodeSample> variants;
  if (!o.variants.empty()) {
    for (CodeSample& s : ReadCanonicalFile(o.variants)) {
      if (s.provenance == Provenance::kGenerated) variants.push_back(std::move(s));
    }
  }
  BalanceResult res = BuildTrainingSet(train, variants, spec);
  MakeParentDirs(o.output);
  WriteCanonicalFile(res.samples, o.output);
  err << "training set: " << res.vulnerable << " vulnerable + "
      << res.non_vulnerable << " non-vulnerable\n";
  if (res.insufficient_variants) err << "warning: " << res.warning << "\n";

  RunManifest m("balance");
  Json& c = m.config();
  c["train"] = o.train;
  c["variants"] = o.variants;
  c["output"] = o.output;
  c["mode"] = o.mode == BalanceSpec::Mode::kAugmBoth ? "augm-both" : "augm-vul";
  c["factor"] = o.factor;
  c["seed"] = o.seed;
  m.AddInput(o.train);
  if (!o.variants.empty()) m.AddInput(o.variants);
  m.AddOutput(o.output);
  m.extra()["vulnerable"] = res.vulnerable;
  m.extra()["non_vulnerable"] = res.non_vulnerable;
  m.extra()["insufficient_variants"] = res.insufficient_variants;
  if (res.insufficient_variants) m.AddWarning(res.warning);
  m.SetWallSeconds(SecondsSince(t0));
  m.WriteAtomic(ManifestPathFor(o.output));
  return res.insufficient_variants ? kExitInsufficient : kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string oracle_dir;
  std::string compiler_cmd;
  double timeout_s = 5.0;
  int depth = 2;
  std::string rules = "all";
  size_t max_per_sample = 100;
  std::string output;
};

int CmdVerify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  auto t0 = Clock::now();
  CompilerConfig compiler = DefaultCompilerConfig();
  if (!o.compiler_cmd.empty()) compiler.command_template = o.compiler_cmd;
  compiler.timeout = std::chrono::milliseconds(
      static_cast<long long>(o.timeout_s * 1000.0));
  AugmentConfig cfg;
  cfg.enabled_rules = ParseRules(o.rules);
  cfg.max_chain_depth = o.depth;
  cfg.max_variants_per_sample = o.max_per_sample;

  std::vector<OracleProgram> programs = LoadOracleCorpus(o.oracle_dir);
  if (programs.empty()) {
    throw DataError("no oracle programs under '" + o.oracle_dir + "'");
  }
  err << "verifying " << Plural(programs.size(), "program") << " with '"
      << compiler.command_template << "'\n";
  VerifyReport report = VerifyCorpus(programs, cfg, compiler);
  std::string text = FormatVerifyReport(report);
  out << text;

  if (!o.output.empty()) {
    MakeParentDirs(o.output);
    WriteFileAtomic(o.output, text);
    RunManifest m("verify");
    Json& c = m.config();
    c["oracle_dir"] = o.oracle_dir;
    c["compiler_cmd"] = compiler.command_template;
    c["timeout_s"] = o.timeout_s;
    c["depth"] = o.depth;
    c["rules"] = cfg.enabled_rules.ToString();
    c["max_per_sample"] = o.max_per_sample;
    m.AddOutput(o.output);
    Json& r = m.extra();
    r["programs"] = report.programs;
    r["variants"] = report.variants;
    r["equivalent"] = report.equivalent;
    r["divergent"] = report.divergent;
    r["incomparable"] = report.incomparable;
    r["oracle_mismatches"] = report.oracle_mismatches;
    m.SetWallSeconds(SecondsSince(t0));
    m.WriteAtomic(ManifestPathFor(o.output));
  }
  if (report.divergent > 0) return kExitDivergence;
  if (!report.oracle_mismatches.empty()) {
    err << "oracle programs disagree with their expected output\n";
    return kExitData;
  }
  return kExitOk;
}

// ---- stats ----------------------------------------------------------------

int CmdStats(const std::string& input, std::ostream& out) {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw DataError("cannot open '" + input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();

  RuleStats stats;
  if (content.find_first_not_of(" \t\r\n") != std::string::npos) {
    Json doc = Json::parse(content, nullptr, /*allow_exceptions=*/false);
    if (doc.is_object() && doc.contains("command")) {
      if (!doc.contains("stats")) {
        throw DataError("manifest '" + input + "' carries no rule stats");
      }
      stats = StatsFromJson(doc["stats"]);
    } else {
      std::istringstream lines(content);
      stats = StatsFromSamples(ReadCanonical(lines));
    }
  }
  out << ReportStats(stats);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Semantic-preserving augmentation of C vulnerability datasets",
               "vulaug"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto mode_check = CLI::CheckedTransformer(kParseModes, CLI::ignore_case);

  ImportOptions imp;
  CLI::App* c_import =
      app.add_subcommand("import", "Import a delimited table into a dataset");
  c_import->add_option("--input,-i", imp.input, "CSV/TSV file")->required();
  c_import->add_option("--output,-o", imp.output, "Dataset file")->required();
  c_import->add_option("--delimiter", imp.delimiter, "Field delimiter or 'tab'")
      ->capture_default_str();
  c_import->add_option("--col-code", imp.columns.code)->capture_default_str();
  c_import->add_option("--col-label", imp.columns.label)->capture_default_str();
  c_import->add_option("--col-id", imp.col_id);
  c_import->add_option("--col-cwe", imp.col_cwe);
  c_import->add_option("--col-cve", imp.col_cve);
  c_import->add_option("--col-project", imp.col_project);
  c_import->add_option("--col-date", imp.col_date);
  c_import->add_option("--parse-mode", imp.mode)->transform(mode_check);

  SplitOptions spl;
  CLI::App* c_split =
      app.add_subcommand("split", "Split a dataset into train/valid/test");
  c_split->add_option("--input,-i", spl.input)->required();
  c_split->add_option("--out-dir,-o", spl.out_dir)->required();
  CLI::Option* ratios =
      c_split->add_option("--ratios", spl.ratios)->capture_default_str();
  c_split->add_option("--seed", spl.seed)->capture_default_str();
  c_split->add_option("--cutoff-year", spl.cutoff_year,
                      "Split by publication year instead of ratios")
      ->excludes(ratios);

  AugmentOptions aug;
  CLI::App* c_augment =
      app.add_subcommand("augment", "Generate variants for every sample");
  c_augment->add_option("--input,-i", aug.input)->required();
  c_augment->add_option("--output,-o", aug.output)->required();
  c_augment->add_option("--rules", aug.rules, "Comma list or 'all'")
      ->capture_default_str();
  c_augment->add_option("--depth", aug.depth)
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  c_augment->add_option("--max-per-sample", aug.max_per_sample, "0 = no cap")
      ->capture_default_str();
  c_augment->add_option("--workers,-j", aug.workers)
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  c_augment->add_option("--seed", aug.seed)->capture_default_str();
  c_augment->add_flag("--global-dedup", aug.global_dedup);
  c_augment->add_flag("--no-dedup", aug.no_dedup);
  c_augment->add_option("--parse-mode", aug.mode)->transform(mode_check);

  BalanceOptions bal;
  CLI::App* c_balance =
      app.add_subcommand("balance", "Build a class-balanced training set");
  c_balance->add_option("--train", bal.train, "Original training split")
      ->required();
  c_balance->add_option("--variants", bal.variants, "Output of augment");
  c_balance->add_option("--output,-o", bal.output)->required();
  c_balance->add_option("--mode", bal.mode)
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, BalanceSpec::Mode>{
              {"augm-vul", BalanceSpec::Mode::kAugmVul},
              {"augm-both", BalanceSpec::Mode::kAugmBoth}}));
  c_balance->add_option("--factor", bal.factor)
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  c_balance->add_option("--seed", bal.seed)->capture_default_str();

  VerifyOptions ver;
  CLI::App* c_verify = app.add_subcommand(
      "verify", "Differentially test variants of an oracle corpus");
  c_verify->add_option("--oracle-dir", ver.oracle_dir)->required();
  c_verify->add_option("--compiler-cmd", ver.compiler_cmd,
                       "Template with {in} and {out}; default from "
                       "VULAUG_COMPILER_CMD or cc");
  c_verify->add_option("--timeout", ver.timeout_s, "Seconds per run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_verify->add_option("--depth", ver.depth)
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  c_verify->add_option("--rules", ver.rules)->capture_default_str();
  c_verify->add_option("--max-per-sample", ver.max_per_sample)
      ->capture_default_str();
  c_verify->add_option("--output,-o", ver.output, "Report file");

  std::string stats_input;
  CLI::App* c_stats =
      app.add_subcommand("stats", "Rule statistics of a manifest or dataset");
  c_stats->add_option("input", stats_input)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_import->parsed()) return CmdImport(imp, err);
    if (c_split->parsed()) return CmdSplit(spl, err);
    if (c_augment->parsed()) return CmdAugment(aug, err);
    if (c_balance->parsed()) return CmdBalance(bal, err);
    if (c_verify->parsed()) return CmdVerify(ver, out, err);
    if (c_stats->parsed()) return CmdStats(stats_input, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const ParseError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const EnvironmentError& e) {
    err << "environment error: " << e.what() << "\n";
    return kExitEnvironment;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace vulaug::cli

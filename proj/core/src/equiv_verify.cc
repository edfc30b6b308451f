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

#include "vulaug/equiv_verify.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "subprocess.h"

namespace vulaug {
namespace {

namespace fs = std::filesystem;
using internal::ProcessResult;
using internal::RunProcess;
using internal::ShellQuote;
using internal::TempDir;

constexpr std::chrono::milliseconds kMinCompileTimeout{60000};

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& p, const std::string& data) {
  std::ofstream out(p, std::ios::binary);
  out << data;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

std::string Substitute(std::string tmpl, const std::string& in,
                       const std::string& out) {
  auto replace = [&](const std::string& key, const std::string& value) {
    for (size_t pos = tmpl.find(key); pos != std::string::npos;
         pos = tmpl.find(key, pos + value.size())) {
      tmpl.replace(pos, key.size(), value);
    }
  };
  replace("{in}", ShellQuote(in));
  replace("{out}", ShellQuote(out));
  return tmpl;
}

enum class CompileStatus { kOk, kFailed };

CompileStatus Compile(const CompilerConfig& compiler, const std::string& source,
                      const fs::path& dir, const std::string& stem,
                      fs::path* binary) {
  fs::path src = dir / (stem + ".c");
  *binary = dir / stem;
  WriteFile(src, source);
  std::string cmd = Substitute(compiler.command_template, src.string(),
                               binary->string());
  ProcessResult r = RunProcess({"/bin/sh", "-c", cmd}, "",
                               std::max(compiler.timeout, kMinCompileTimeout));
  if (r.spawn_failed) throw EnvironmentError("cannot start /bin/sh");
  if (r.exit_code == 127 || r.exit_code == 126) {
    throw EnvironmentError("compiler command not runnable: " + cmd);
  }
  if (r.timed_out || r.exit_code != 0 || !fs::exists(*binary)) {
    return CompileStatus::kFailed;
  }
  return CompileStatus::kOk;
}

struct RunOutcome {
  std::string out;
  int exit_code = 0;
  bool timed_out = false;
};

std::vector<RunOutcome> RunAll(const fs::path& binary,
                               const std::vector<fs::path>& inputs,
                               std::chrono::milliseconds timeout) {
  std::vector<RunOutcome> out;
  for (const fs::path& in : inputs) {
    ProcessResult r = RunProcess({binary.string()}, in.string(), timeout);
    if (r.spawn_failed) throw EnvironmentError("cannot run " + binary.string());
    out.push_back({std::move(r.out), r.exit_code, r.timed_out});
  }
  return out;
}

std::vector<fs::path> WriteInputs(const OracleProgram& program,
                                  const fs::path& dir) {
  std::vector<fs::path> paths;
  for (size_t i = 0; i < program.inputs.size(); ++i) {
    fs::path p = dir / ("input_" + std::to_string(i) + ".txt");
    WriteFile(p, program.inputs[i]);
    paths.push_back(p);
  }
  return paths;
}

EquivalenceVerdict Compare(const std::vector<RunOutcome>& a,
                           const std::vector<RunOutcome>& b) {
  EquivalenceVerdict v;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].timed_out || b[i].timed_out) {
      v.status = VerdictStatus::kIncomparable;
      v.reason = IncomparableReason::kTimeout;
      v.detail = "timeout on input " + std::to_string(i);
      v.evidence.clear();
      return v;
    }
    if (a[i].out != b[i].out || a[i].exit_code != b[i].exit_code) {
      v.status = VerdictStatus::kDivergent;
      v.evidence.push_back({i, a[i].out, b[i].out, a[i].exit_code, b[i].exit_code});
    }
  }
  if (v.status == VerdictStatus::kDivergent) {
    v.detail = std::to_string(v.evidence.size()) + " of " +
               std::to_string(a.size()) + " inputs differ";
  }
  return v;
}

EquivalenceVerdict Incomparable(IncomparableReason reason, std::string detail) {
  EquivalenceVerdict v;
  v.status = VerdictStatus::kIncomparable;
  v.reason = reason;
  v.detail = std::move(detail);
  return v;
}

bool SelfContained(const std::string& source) {
  try {
    return ParseUnit(source, ParseMode::kTranslationUnit).HasFunctionNamed("main");
  } catch (const ParseError&) {
    return false;
  }
}

// Compiled original with its outputs, shared by every variant of a program.
struct Baseline {
  std::optional<EquivalenceVerdict> failure;
  std::vector<fs::path> inputs;
  std::vector<RunOutcome> outputs;
};

Baseline MakeBaseline(const OracleProgram& program, const CompilerConfig& compiler,
                      const fs::path& dir) {
  Baseline b;
  if (!SelfContained(program.source)) {
    b.failure = Incomparable(IncomparableReason::kNotSelfContained,
                             "no main function");
    return b;
  }
  fs::path binary;
  if (Compile(compiler, program.source, dir, "original", &binary) !=
      CompileStatus::kOk) {
    b.failure = Incomparable(IncomparableReason::kCompileFailure,
                             "original does not compile");
    return b;
  }
  b.inputs = WriteInputs(program, dir);
  b.outputs = RunAll(binary, b.inputs, compiler.timeout);
  return b;
}

EquivalenceVerdict TestAgainst(const Baseline& base, const std::string& variant,
                               const CompilerConfig& compiler,
                               const fs::path& dir, const std::string& stem) {
  if (base.failure) return *base.failure;
  fs::path binary;
  if (Compile(compiler, variant, dir, stem, &binary) != CompileStatus::kOk) {
    EquivalenceVerdict v;
    v.status = VerdictStatus::kDivergent;
    v.detail = "variant does not compile";
    return v;
  }
  EquivalenceVerdict v = Compare(base.outputs, RunAll(binary, base.inputs,
                                                      compiler.timeout));
  std::error_code ec;
  fs::remove(binary, ec);
  return v;
}

}  // namespace

bool ReparseCheck(const SyntaxTree& tree, const std::vector<Span>& edited) {
  for (NodeId id = 0; id < tree.size(); ++id) {
    const Node& n = tree.node(id);
    if (!n.flags.contains_error) continue;
    if (edited.empty()) return false;
    for (const Span& e : edited) {
      if (e.Intersects(n.span) || e.Contains(n.span) || n.span.Contains(e)) {
        return false;
      }
    }
  }
  return true;
}

bool ReparseCheck(const std::string& source, ParseMode mode) {
  try {
    return ReparseCheck(ParseUnit(source, mode), {});
  } catch (const ParseError&) {
    return false;
  }
}

bool StructuralChangeCheck(const std::string& original,
                           const std::string& variant, ParseMode mode) {
  if (Fingerprint(original) == Fingerprint(variant)) return false;
  try {
    return ParseUnit(original, mode).ShapeSignature() !=
           ParseUnit(variant, mode).ShapeSignature();
  } catch (const ParseError&) {
    return false;
  }
}

std::string DefaultCompilerTemplate() {
  if (const char* env = std::getenv("VULAUG_COMPILER_CMD"); env && *env) {
    return env;
  }
  return "cc -O0 -w -o {out} {in}";
}

CompilerConfig DefaultCompilerConfig() {
  CompilerConfig c;
  c.command_template = DefaultCompilerTemplate();
  return c;
}

std::string_view VerdictStatusName(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kEquivalent: return "equivalent";
    case VerdictStatus::kDivergent: return "divergent";
    case VerdictStatus::kIncomparable: return "incomparable";
  }
  return "?";
}

std::string_view IncomparableReasonName(IncomparableReason reason) {
  switch (reason) {
    case IncomparableReason::kNone: return "none";
    case IncomparableReason::kNotSelfContained: return "not_self_contained";
    case IncomparableReason::kCompileFailure: return "compile_failure";
    case IncomparableReason::kTimeout: return "timeout";
  }
  return "?";
}

EquivalenceVerdict DifferentialTest(const OracleProgram& program,
                                    const std::string& variant_source,
                                    const CompilerConfig& compiler) {
  if (!SelfContained(variant_source) && SelfContained(program.source)) {
    EquivalenceVerdict v;
    v.status = VerdictStatus::kDivergent;
    v.detail = "variant lost its main function";
    return v;
  }
  TempDir dir;
  Baseline base = MakeBaseline(program, compiler, dir.path());
  return TestAgainst(base, variant_source, compiler, dir.path(), "variant");
}

VerifyReport VerifyCorpus(const std::vector<OracleProgram>& programs,
                          const AugmentConfig& cfg,
                          const CompilerConfig& compiler,
                          const VariantGenerator& generator) {
  VerifyReport report;
  AugmentConfig tu_cfg = cfg;
  tu_cfg.parse_mode = ParseMode::kTranslationUnit;
  for (const OracleProgram& program : programs) {
    ++report.programs;
    TempDir dir;
    Baseline base = MakeBaseline(program, compiler, dir.path());
    if (!base.failure) {
      for (size_t i = 0; i < program.expected.size() && i < base.outputs.size(); ++i) {
        if (program.expected[i] && *program.expected[i] != base.outputs[i].out) {
          report.oracle_mismatches.push_back(program.name + " input " +
                                             std::to_string(i));
        }
      }
    }
    CodeSample root;
    root.id = program.name;
    root.source = program.source;
    std::vector<CodeSample> variants =
        generator ? generator(root, tu_cfg) : GenerateVariants(root, tu_cfg, nullptr);
    std::vector<VariantOutcome> outcomes;
    for (const CodeSample& v : variants) {
      outcomes.push_back({program.name, v.id, v.lineage, "engine", {}});
      outcomes.back().verdict =
          TestAgainst(base, v.source, compiler, dir.path(), "variant");
    }
    for (const ExternalVariant& ext : program.variants) {
      outcomes.push_back({program.name, program.name + "/" + ext.name, {},
                          "external:" + ext.name, {}});
      outcomes.back().verdict =
          TestAgainst(base, ext.source, compiler, dir.path(), "variant");
    }
    for (VariantOutcome& o : outcomes) {
      ++report.variants;
      switch (o.verdict.status) {
        case VerdictStatus::kEquivalent: ++report.equivalent; break;
        case VerdictStatus::kDivergent: ++report.divergent; break;
        case VerdictStatus::kIncomparable: ++report.incomparable; break;
      }
      if (o.verdict.status != VerdictStatus::kEquivalent) {
        report.findings.push_back(std::move(o));
      }
    }
  }
  return report;
}

std::vector<OracleProgram> LoadOracleCorpus(const std::string& dir) {
  std::vector<fs::path> subdirs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory() && fs::exists(entry.path() / "prog.c")) {
      subdirs.push_back(entry.path());
    }
  }
  std::sort(subdirs.begin(), subdirs.end());
  std::vector<OracleProgram> out;
  for (const fs::path& sub : subdirs) {
    OracleProgram p;
    p.name = sub.filename().string();
    p.source = ReadFile(sub / "prog.c");
    for (int i = 0;; ++i) {
      fs::path in = sub / ("input_" + std::to_string(i) + ".txt");
      if (!fs::exists(in)) {
        // Numbering may start at 1.
        if (i == 0) continue;
        break;
      }
      p.inputs.push_back(ReadFile(in));
      fs::path exp = sub / ("expected_" + std::to_string(i) + ".txt");
      p.expected.push_back(fs::exists(exp) ? std::optional(ReadFile(exp))
                                           : std::nullopt);
    }
    fs::path vdir = sub / "variants";
    if (fs::is_directory(vdir)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(vdir)) {
        if (e.path().extension() == ".c") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (const fs::path& f : files) {
        p.variants.push_back({f.filename().string(), ReadFile(f)});
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string FormatVerifyReport(const VerifyReport& report) {
  std::string out;
  out += "programs: " + std::to_string(report.programs) + "\n";
  out += "variants: " + std::to_string(report.variants) + "\n";
  out += "equivalent: " + std::to_string(report.equivalent) + "\n";
  out += std::to_string(report.divergent) + " divergent\n";
  out += "incomparable: " + std::to_string(report.incomparable) + "\n";
  for (const std::string& m : report.oracle_mismatches) {
    out += "oracle mismatch: " + m + "\n";
  }
  for (const VariantOutcome& o : report.findings) {
    out += std::string(VerdictStatusName(o.verdict.status)) + ": " + o.variant_id;
    if (o.verdict.status == VerdictStatus::kIncomparable) {
      out += " (" + std::string(IncomparableReasonName(o.verdict.reason)) + ")";
    }
    out += " lineage=[";
    for (size_t i = 0; i < o.lineage.size(); ++i) {
      if (i) out += ",";
      out += std::string(RuleName(o.lineage[i].rule)) + "@" +
             std::to_string(o.lineage[i].anchor.start) + ".." +
             std::to_string(o.lineage[i].anchor.end);
    }
    if (o.origin != "engine") out += o.lineage.empty() ? o.origin : "," + o.origin;
    out += "]";
    if (!o.verdict.detail.empty()) out += " " + o.verdict.detail;
    out += "\n";
  }
  return out;
}

}  // namespace vulaug

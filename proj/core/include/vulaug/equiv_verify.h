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

// Variant checks: re-parse, structural change and compile-and-run
// differential testing against self-contained oracle programs.

#ifndef VULAUG_EQUIV_VERIFY_H_
#define VULAUG_EQUIV_VERIFY_H_

#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vulaug/augment_engine.h"
#include "vulaug/syntax.h"

namespace vulaug {

// True when no node flagged contains_error intersects `edited` (spans in
// the coordinates of `tree`). An empty list checks the whole tree.
bool ReparseCheck(const SyntaxTree& tree, const std::vector<Span>& edited);
bool ReparseCheck(const std::string& source,
                  ParseMode mode = ParseMode::kFunctionFragment);

// Fingerprints differ and the tree shapes differ.
bool StructuralChangeCheck(const std::string& original,
                           const std::string& variant,
                           ParseMode mode = ParseMode::kFunctionFragment);

// The compiler could not be run at all (as opposed to rejecting a source).
class EnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CompilerConfig {
  // `{in}` and `{out}` are replaced by quoted paths; run through /bin/sh.
  std::string command_template;
  std::chrono::milliseconds timeout{5000};
};

// VULAUG_COMPILER_CMD when set, else `cc -O0 -w -o {out} {in}`.
std::string DefaultCompilerTemplate();
CompilerConfig DefaultCompilerConfig();

struct ExternalVariant {
  std::string name;
  std::string source;
};

struct OracleProgram {
  std::string name;
  std::string source;
  std::vector<std::string> inputs;
  std::vector<std::optional<std::string>> expected;  // stdout per input
  std::vector<ExternalVariant> variants;  // curated extra variants
};

enum class VerdictStatus { kEquivalent, kDivergent, kIncomparable };
enum class IncomparableReason {
  kNone,
  kNotSelfContained,
  kCompileFailure,
  kTimeout
};

std::string_view VerdictStatusName(VerdictStatus status);
std::string_view IncomparableReasonName(IncomparableReason reason);

struct CaseEvidence {
  size_t input_index = 0;
  std::string stdout_a;
  std::string stdout_b;
  int exit_a = 0;
  int exit_b = 0;
};

struct EquivalenceVerdict {
  VerdictStatus status = VerdictStatus::kEquivalent;
  IncomparableReason reason = IncomparableReason::kNone;
  std::vector<CaseEvidence> evidence;
  std::string detail;
};

// Compiles the program and the variant and compares stdout and exit codes
// on every input. Throws EnvironmentError when the compiler is missing.
EquivalenceVerdict DifferentialTest(const OracleProgram& program,
                                    const std::string& variant_source,
                                    const CompilerConfig& compiler);

struct VariantOutcome {
  std::string program;
  std::string variant_id;
  std::vector<LineageStep> lineage;
  std::string origin;  // "engine" or "external:<file>"
  EquivalenceVerdict verdict;
};

struct VerifyReport {
  size_t programs = 0;
  size_t variants = 0;
  size_t equivalent = 0;
  size_t divergent = 0;
  size_t incomparable = 0;
  // Programs whose own output disagrees with an expected file.
  std::vector<std::string> oracle_mismatches;
  std::vector<VariantOutcome> findings;  // divergent and incomparable
};

using VariantGenerator = std::function<std::vector<CodeSample>(
    const CodeSample&, const AugmentConfig&)>;

// Generates variants of each program (translation-unit parse) and tests
// every one. `generator` defaults to GenerateVariants.
VerifyReport VerifyCorpus(const std::vector<OracleProgram>& programs,
                          const AugmentConfig& cfg,
                          const CompilerConfig& compiler,
                          const VariantGenerator& generator = {});

// Directory with one subdirectory per program holding prog.c, input_N.txt,
// optional expected_N.txt and optional variants/*.c.
std::vector<OracleProgram> LoadOracleCorpus(const std::string& dir);

std::string FormatVerifyReport(const VerifyReport& report);

}  // namespace vulaug

#endif  // VULAUG_EQUIV_VERIFY_H_

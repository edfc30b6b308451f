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

// Syntactic facts about expressions used by the rule guards: purity,
// declared types of locals, and static types of simple subexpressions.

#ifndef VULAUG_SRC_EXPR_FACTS_H_
#define VULAUG_SRC_EXPR_FACTS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vulaug/syntax.h"

namespace vulaug::internal {

// An arithmetic type after typedef resolution, assuming an LP64 target.
struct ArithType {
  int rank = 0;  // _Bool 0, char 1, short 2, int 3, long 4, long long 5
  bool is_unsigned = false;
  bool is_float = false;  // float 10, double 11, long double 12
  std::string spelling;   // canonical spelling, e.g. "unsigned long"

  friend bool operator==(const ArithType& a, const ArithType& b) {
    return a.spelling == b.spelling;
  }
};

std::optional<ArithType> CanonicalArith(const std::vector<std::string>& words);
ArithType Promote(const ArithType& t);
ArithType UsualConversion(const ArithType& a, const ArithType& b);

struct ValueType {
  bool is_pointer = false;
  ArithType arith;       // valid when !is_pointer
  std::string verbatim;  // declared spelling without storage class
  bool from_declaration = false;
};

struct Symbol {
  std::vector<std::string> base_words;  // specifier words, qualifiers kept
  int pointer_depth = 0;
  bool is_array = false;
  bool is_volatile = false;
  bool is_complex = false;  // functions, function pointers, aggregates
  bool ambiguous = false;   // declared more than once with different types
};

// Names visible in one function: file-scope declarations, parameters and
// every block-scope declaration of the function, flattened.
class Scope {
 public:
  Scope() = default;
  Scope(const SyntaxTree& tree, NodeId function_def);

  const Symbol* Lookup(std::string_view name) const;

 private:
  void Declare(const SyntaxTree& tree, NodeId specs, NodeId declarator);

  std::map<std::string, Symbol, std::less<>> symbols_;
};

enum class Purity { kPure, kVolatile, kSideEffects };

// Syntactic side-effect analysis: calls, assignments, increments, the comma
// operator and macro invocations are impure; volatile reads are reported
// separately.
Purity CheckPurity(const SyntaxTree& tree, NodeId expr, const Scope& scope);

std::optional<ValueType> OperandType(const SyntaxTree& tree, NodeId expr,
                                     const Scope& scope);
// Spelling of the static type of a binary expression over simple operands.
std::optional<std::string> BinaryResultType(const SyntaxTree& tree,
                                            NodeId binary, const Scope& scope);
bool MaybeFloating(const SyntaxTree& tree, NodeId expr, const Scope& scope);

NodeId EnclosingFunction(const SyntaxTree& tree, NodeId node);
NodeId StripParens(const SyntaxTree& tree, NodeId node);
// Identifiers referenced by `node`, excluding member names.
std::set<std::string> ReferencedNames(const SyntaxTree& tree, NodeId node);
// Names declared by the direct child declarations of a compound statement.
std::set<std::string> DeclaredNames(const SyntaxTree& tree, NodeId compound);

bool IsComparisonOp(std::string_view op);
int BinaryPrecedenceOf(std::string_view op);

}  // namespace vulaug::internal

#endif  // VULAUG_SRC_EXPR_FACTS_H_

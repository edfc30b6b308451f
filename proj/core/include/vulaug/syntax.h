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

#ifndef VULAUG_SYNTAX_H_
#define VULAUG_SYNTAX_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vulaug {

// Half-open byte range [start, end) into a source buffer.
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t size() const { return end - start; }
  bool empty() const { return start == end; }
  bool Contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  // Two non-empty spans intersect when they share a byte. An empty span
  // (an insertion point) intersects a non-empty span only when it falls
  // strictly inside it, and another empty span only at the same offset.
  bool Intersects(const Span& other) const;

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

enum class TokenKind : uint8_t {
  kIdentifier,
  kKeyword,
  kNumber,
  kString,
  kChar,
  kPunct,
  kDirective,  // a whole preprocessor line, continuations included
  kUnknown,    // a single byte the lexer has no category for
};

struct Token {
  TokenKind kind;
  Span span;
};

// Lexing is total: every byte of `src` is covered either by a token or by
// trivia (whitespace and comments) between tokens.
std::vector<Token> Lex(std::string_view src);

bool IsCKeyword(std::string_view word);

struct TokenFingerprint {
  uint64_t hash = 0;
  friend bool operator==(const TokenFingerprint&,
                         const TokenFingerprint&) = default;
};

// Digest of the token sequence with whitespace and comments removed and
// tokens joined by a single separator.
TokenFingerprint Fingerprint(std::string_view src);

enum class NodeKind : uint8_t {
  kTranslationUnit,
  kFunctionDef,
  kDirective,
  kDeclaration,  // file-scope or block-scope declaration, `;` included
  kDeclSpecs,
  kInitDeclarator,
  kDeclarator,
  kParamList,
  kParamDecl,
  kTypeName,
  kInitList,
  kOpaque,  // region the parser did not analyze

  kCompoundStmt,
  kIfStmt,
  kWhileStmt,
  kDoStmt,
  kForStmt,
  kSwitchStmt,
  kCaseStmt,
  kDefaultStmt,
  kLabelStmt,
  kBreakStmt,
  kContinueStmt,
  kReturnStmt,
  kGotoStmt,
  kExprStmt,
  kNullStmt,

  kIdentifier,
  kNumberLiteral,
  kCharLiteral,
  kStringLiteral,
  kParenExpr,
  kBinaryExpr,
  kAssignExpr,
  kCompoundAssign,
  kUnaryExpr,
  kPreIncDec,
  kPostIncDec,
  kCallExpr,
  kSubscriptExpr,
  kMemberExpr,
  kCastExpr,
  kCompoundLiteral,
  kConditionalExpr,
  kCommaExpr,
  kSizeofExpr,
  kStmtExpr,
};

std::string_view NodeKindName(NodeKind kind);
bool IsStatementKind(NodeKind kind);
bool IsExpressionKind(NodeKind kind);

// Position of a node within its parent, for parents with distinguished
// children (e.g. the condition versus the body of a loop).
enum class Role : uint8_t {
  kNone,
  kCond,
  kThen,
  kElse,
  kBody,
  kInit,
  kStep,
  kLhs,
  kRhs,
  kOperand,
  kCallee,
  kArg,
  kBase,
  kIndex,
  kSpecs,
  kDeclarator,
  kInitializer,
  kName,
  kParams,
  kTrue,
  kFalse,
  kTypeName,
  kValue,
};

using NodeId = uint32_t;
inline constexpr NodeId kNoNode = UINT32_MAX;
inline constexpr uint32_t kNoToken = UINT32_MAX;

struct NodeFlags {
  bool contains_macro_token = false;
  bool contains_error = false;
};

struct Node {
  NodeKind kind;
  Role role = Role::kNone;
  Span span;
  uint32_t first_token = 0;
  uint32_t last_token = 0;  // exclusive
  uint32_t op_token = kNoToken;
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
  NodeFlags flags;
};

enum class ParseMode { kFunctionFragment, kTranslationUnit };

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable concrete syntax tree over a source buffer. Trees share their
// buffer and token array and may be copied and sent between threads freely.
class SyntaxTree {
 public:
  NodeId root() const { return root_; }
  size_t size() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::string_view source() const { return *source_; }
  const std::vector<Token>& tokens() const { return *tokens_; }

  std::string_view text(NodeId id) const;
  std::string_view text(const Span& span) const;
  std::string_view token_text(uint32_t token) const;
  // Operator token text for operator nodes; empty otherwise.
  std::string_view op(NodeId id) const;

  // First child with the given role, or kNoNode.
  NodeId Child(NodeId id, Role role) const;
  std::vector<NodeId> Preorder() const;
  std::vector<NodeId> FunctionDefs() const;
  // Declared name of a function definition, empty if it has none.
  std::string FunctionName(NodeId function_def) const;
  bool HasFunctionNamed(std::string_view name) const;

  // Node-level signature in preorder: kind, operator and leaf text. Used to
  // compare tree shapes independently of formatting.
  std::vector<std::string> ShapeSignature() const;

  // Rebuilds the source from node spans and the gap bytes between them.
  std::string Reconstruct() const;

 private:
  friend class Parser;

  std::shared_ptr<const std::string> source_;
  std::shared_ptr<const std::vector<Token>> tokens_;
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
};

// Parses `src` into a lossless tree. Regions that cannot be analyzed become
// kOpaque nodes flagged contains_error; macro invocations and directives are
// flagged contains_macro_token. Throws ParseError only when no function
// definition is recognized at all.
SyntaxTree ParseUnit(std::string_view src, ParseMode mode);

struct Edit {
  Span span;
  std::string replacement;

  friend bool operator==(const Edit&, const Edit&) = default;
};

class OverlappingEdits : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Applies pairwise non-overlapping edits to `src`. Bytes outside every edit
// span are copied unchanged.
std::string Emit(std::string_view src, const std::vector<Edit>& edits);

// Spans of `edits` expressed in the coordinates of Emit's output.
std::vector<Span> MapEditedSpans(const std::vector<Edit>& edits);

}  // namespace vulaug

#endif  // VULAUG_SYNTAX_H_

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

#include <string>
#include <string_view>
#include <vector>

#include "vulaug/syntax.h"

namespace vulaug {

bool Span::Intersects(const Span& other) const {
  if (empty() && other.empty()) return start == other.start;
  if (empty()) return other.start < start && start < other.end;
  if (other.empty()) return start < other.start && other.start < end;
  return start < other.end && other.start < end;
}

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kTranslationUnit: return "TranslationUnit";
    case NodeKind::kFunctionDef: return "FunctionDef";
    case NodeKind::kDirective: return "Directive";
    case NodeKind::kDeclaration: return "DeclStmt";
    case NodeKind::kDeclSpecs: return "DeclSpecs";
    case NodeKind::kInitDeclarator: return "InitDeclarator";
    case NodeKind::kDeclarator: return "Declarator";
    case NodeKind::kParamList: return "ParamList";
    case NodeKind::kParamDecl: return "ParamDecl";
    case NodeKind::kTypeName: return "TypeName";
    case NodeKind::kInitList: return "InitList";
    case NodeKind::kOpaque: return "Opaque";
    case NodeKind::kCompoundStmt: return "CompoundStmt";
    case NodeKind::kIfStmt: return "IfStmt";
    case NodeKind::kWhileStmt: return "WhileStmt";
    case NodeKind::kDoStmt: return "DoStmt";
    case NodeKind::kForStmt: return "ForStmt";
    case NodeKind::kSwitchStmt: return "SwitchStmt";
    case NodeKind::kCaseStmt: return "CaseStmt";
    case NodeKind::kDefaultStmt: return "DefaultStmt";
    case NodeKind::kLabelStmt: return "LabelStmt";
    case NodeKind::kBreakStmt: return "BreakStmt";
    case NodeKind::kContinueStmt: return "ContinueStmt";
    case NodeKind::kReturnStmt: return "ReturnStmt";
    case NodeKind::kGotoStmt: return "GotoStmt";
    case NodeKind::kExprStmt: return "ExprStmt";
    case NodeKind::kNullStmt: return "NullStmt";
    case NodeKind::kIdentifier: return "Identifier";
    case NodeKind::kNumberLiteral: return "NumberLiteral";
    case NodeKind::kCharLiteral: return "CharLiteral";
    case NodeKind::kStringLiteral: return "StringLiteral";
    case NodeKind::kParenExpr: return "ParenExpr";
    case NodeKind::kBinaryExpr: return "BinaryExpr";
    case NodeKind::kAssignExpr: return "AssignExpr";
    case NodeKind::kCompoundAssign: return "CompoundAssign";
    case NodeKind::kUnaryExpr: return "UnaryExpr";
    case NodeKind::kPreIncDec: return "PreIncDec";
    case NodeKind::kPostIncDec: return "PostIncDec";
    case NodeKind::kCallExpr: return "CallExpr";
    case NodeKind::kSubscriptExpr: return "SubscriptExpr";
    case NodeKind::kMemberExpr: return "MemberExpr";
    case NodeKind::kCastExpr: return "CastExpr";
    case NodeKind::kCompoundLiteral: return "CompoundLiteral";
    case NodeKind::kConditionalExpr: return "ConditionalExpr";
    case NodeKind::kCommaExpr: return "CommaExpr";
    case NodeKind::kSizeofExpr: return "SizeofExpr";
    case NodeKind::kStmtExpr: return "StmtExpr";
  }
  return "?";
}

bool IsStatementKind(NodeKind kind) {
  return (kind >= NodeKind::kCompoundStmt && kind <= NodeKind::kNullStmt) ||
         kind == NodeKind::kDeclaration || kind == NodeKind::kDirective ||
         kind == NodeKind::kOpaque;
}

bool IsExpressionKind(NodeKind kind) {
  return kind >= NodeKind::kIdentifier && kind <= NodeKind::kStmtExpr;
}

std::string_view SyntaxTree::text(NodeId id) const {
  return text(nodes_[id].span);
}

std::string_view SyntaxTree::text(const Span& span) const {
  return std::string_view(*source_).substr(span.start, span.size());
}

std::string_view SyntaxTree::token_text(uint32_t token) const {
  if (token == kNoToken || token >= tokens_->size()) return {};
  return text((*tokens_)[token].span);
}

std::string_view SyntaxTree::op(NodeId id) const {
  return token_text(nodes_[id].op_token);
}

NodeId SyntaxTree::Child(NodeId id, Role role) const {
  for (NodeId c : nodes_[id].children) {
    if (nodes_[c].role == role) return c;
  }
  return kNoNode;
}

std::vector<NodeId> SyntaxTree::Preorder() const {
  std::vector<NodeId> out;
  if (root_ == kNoNode) return out;
  out.reserve(nodes_.size());
  std::vector<NodeId> stack = {root_};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    out.push_back(id);
    const auto& ch = nodes_[id].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<NodeId> SyntaxTree::FunctionDefs() const {
  std::vector<NodeId> out;
  for (NodeId id : Preorder()) {
    if (nodes_[id].kind == NodeKind::kFunctionDef) out.push_back(id);
  }
  return out;
}

std::string SyntaxTree::FunctionName(NodeId function_def) const {
  NodeId decl = Child(function_def, Role::kDeclarator);
  if (decl == kNoNode) return {};
  // The declared name is the first kName identifier reached without
  // entering the parameter list.
  std::vector<NodeId> stack = {decl};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (n.kind == NodeKind::kIdentifier && n.role == Role::kName) {
      return std::string(text(id));
    }
    if (n.kind == NodeKind::kParamList) continue;
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return {};
}

bool SyntaxTree::HasFunctionNamed(std::string_view name) const {
  for (NodeId f : FunctionDefs()) {
    if (FunctionName(f) == name) return true;
  }
  return false;
}

std::vector<std::string> SyntaxTree::ShapeSignature() const {
  std::vector<std::string> out;
  for (NodeId id : Preorder()) {
    const Node& n = nodes_[id];
    std::string entry(NodeKindName(n.kind));
    if (n.op_token != kNoToken) {
      entry += ':';
      entry += op(id);
    }
    if (n.children.empty()) {
      entry += '=';
      entry += text(id);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string SyntaxTree::Reconstruct() const {
  std::string out;
  out.reserve(source_->size());
  size_t cursor = 0;
  // Leaves are emitted from their spans; parents only contribute the gap
  // bytes between their children.
  auto walk = [&](auto&& self, NodeId id) -> void {
    const Node& n = nodes_[id];
    if (n.children.empty()) {
      if (n.span.start < cursor) {
        // Overlapping leaves: make the mismatch visible to callers.
        out.append("\0<overlap>\0", 11);
        return;
      }
      out.append(*source_, cursor, n.span.start - cursor);
      out.append(*source_, n.span.start, n.span.size());
      cursor = n.span.end;
      return;
    }
    for (NodeId c : n.children) self(self, c);
  };
  if (root_ != kNoNode) walk(walk, root_);
  out.append(*source_, cursor, std::string::npos);
  return out;
}

}  // namespace vulaug

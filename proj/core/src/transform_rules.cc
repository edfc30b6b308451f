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

#include "vulaug/transform_rules.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expr_facts.h"

namespace vulaug {
namespace {

using internal::CheckPurity;
using internal::Purity;
using internal::Scope;
using internal::StripParens;

enum class Verdict { kNoMatch, kReject, kOk };

struct Plan {
  Verdict verdict = Verdict::kNoMatch;
  GuardReason reason = GuardReason::kSideEffects;
  std::vector<Edit> edits;
  std::vector<std::pair<std::string, NodeId>> bindings;
  std::vector<std::string> guards;
};

Plan NoMatch() { return {}; }

Plan Reject(GuardReason reason) {
  Plan p;
  p.verdict = Verdict::kReject;
  p.reason = reason;
  return p;
}

std::optional<GuardReason> PurityReason(Purity p) {
  switch (p) {
    case Purity::kPure: return std::nullopt;
    case Purity::kVolatile: return GuardReason::kVolatileAccess;
    case Purity::kSideEffects: return GuardReason::kSideEffects;
  }
  return std::nullopt;
}

bool IsControlStmt(NodeKind k) {
  return k == NodeKind::kIfStmt || k == NodeKind::kWhileStmt ||
         k == NodeKind::kDoStmt || k == NodeKind::kForStmt ||
         k == NodeKind::kSwitchStmt || k == NodeKind::kCaseStmt ||
         k == NodeKind::kDefaultStmt || k == NodeKind::kLabelStmt;
}

class RuleContext {
 public:
  explicit RuleContext(const SyntaxTree& tree) : tree_(tree), src_(tree.source()) {
    for (NodeId id = 0; id < tree.size(); ++id) {
      const Node& n = tree.node(id);
      if (n.flags.contains_error) error_spans_.push_back(n.span);
      if (n.flags.contains_macro_token) macro_spans_.push_back(n.span);
    }
    unit_ = DetectIndentUnit();
  }

  const SyntaxTree& tree() const { return tree_; }
  std::string_view src() const { return src_; }
  const std::string& unit() const { return unit_; }

  const Scope& ScopeFor(NodeId node) {
    NodeId fn = internal::EnclosingFunction(tree_, node);
    auto it = scopes_.find(fn);
    if (it == scopes_.end()) {
      it = scopes_.emplace(fn, fn == kNoNode ? Scope() : Scope(tree_, fn)).first;
    }
    return it->second;
  }

  Purity PurityOf(NodeId expr) {
    return CheckPurity(tree_, expr, ScopeFor(expr));
  }

  bool ErrorIntersects(const Span& span) const {
    for (const Span& e : error_spans_) {
      if (e.Intersects(span) || span.Contains(e)) return true;
    }
    return false;
  }

  bool MacroIntersects(const Span& span) const {
    for (const Span& m : macro_spans_) {
      if (m.Intersects(span) || (!m.empty() && span.Contains(m))) return true;
    }
    return false;
  }

  size_t LineStart(size_t pos) const {
    while (pos > 0 && src_[pos - 1] != '\n') --pos;
    return pos;
  }

  bool StartsLine(size_t pos) const {
    for (size_t i = LineStart(pos); i < pos; ++i) {
      if (src_[i] != ' ' && src_[i] != '\t') return false;
    }
    return true;
  }

  std::string LineIndent(size_t pos) const {
    size_t i = LineStart(pos);
    size_t j = i;
    while (j < src_.size() && (src_[j] == ' ' || src_[j] == '\t')) ++j;
    return std::string(src_.substr(i, j - i));
  }

  std::string Text(NodeId id) const { return std::string(tree_.text(id)); }

  size_t TokenEnd(uint32_t token) const { return tree_.tokens()[token].span.end; }
  size_t TokenStart(uint32_t token) const {
    return tree_.tokens()[token].span.start;
  }

 private:
  std::string DetectIndentUnit() const {
    size_t best = 0;
    size_t pos = 0;
    while (pos < src_.size()) {
      size_t eol = src_.find('\n', pos);
      if (eol == std::string_view::npos) eol = src_.size();
      size_t j = pos;
      while (j < eol && src_[j] == ' ') ++j;
      if (j < eol && src_[j] == '\t' && j == pos) return "\t";
      size_t width = j - pos;
      if (j < eol && width > 0 && (best == 0 || width < best)) best = width;
      pos = eol + 1;
    }
    if (best == 0 || best > 8) best = 4;
    return std::string(best, ' ');
  }

  const SyntaxTree& tree_;
  std::string_view src_;
  std::vector<Span> error_spans_;
  std::vector<Span> macro_spans_;
  std::map<NodeId, Scope> scopes_;
  std::string unit_;
};

bool HasContinue(const SyntaxTree& tree, NodeId body) {
  std::vector<NodeId> stack = {body};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = tree.node(id);
    if (n.kind == NodeKind::kContinueStmt) return true;
    if (id != body && (n.kind == NodeKind::kForStmt ||
                       n.kind == NodeKind::kWhileStmt ||
                       n.kind == NodeKind::kDoStmt)) {
      continue;
    }
    if (n.kind == NodeKind::kOpaque || n.kind == NodeKind::kDirective) {
      for (uint32_t t = n.first_token; t < n.last_token; ++t) {
        if (tree.token_text(t) == "continue") return true;
      }
      if (n.kind == NodeKind::kDirective &&
          tree.text(id).find("continue") != std::string_view::npos) {
        return true;
      }
    }
    stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
  return false;
}

// True when `stmt` ends in an if without else, so that appending `else`
// after it would bind to the inner if.
bool IsOpen(const SyntaxTree& tree, NodeId stmt) {
  while (stmt != kNoNode) {
    const Node& n = tree.node(stmt);
    switch (n.kind) {
      case NodeKind::kIfStmt: {
        NodeId els = tree.Child(stmt, Role::kElse);
        if (els == kNoNode) return true;
        stmt = els;
        break;
      }
      case NodeKind::kWhileStmt:
      case NodeKind::kForStmt:
      case NodeKind::kSwitchStmt:
      case NodeKind::kLabelStmt:
      case NodeKind::kCaseStmt:
      case NodeKind::kDefaultStmt:
        stmt = tree.Child(stmt, Role::kBody);
        break;
      default:
        return false;
    }
  }
  return false;
}

std::string_view MirrorOp(std::string_view op) {
  if (op == "<") return ">";
  if (op == ">") return "<";
  if (op == "<=") return ">=";
  if (op == ">=") return "<=";
  return op;
}

std::string_view FlipOp(std::string_view op) {
  if (op == "<") return ">=";
  if (op == ">") return "<=";
  if (op == "<=") return ">";
  if (op == ">=") return "<";
  if (op == "==") return "!=";
  if (op == "!=") return "==";
  return {};
}

std::string NegateImpl(RuleContext& ctx, NodeId expr) {
  const SyntaxTree& tree = ctx.tree();
  const Node& n = tree.node(expr);
  std::string_view op = tree.op(expr);
  if (n.kind == NodeKind::kBinaryExpr && internal::IsComparisonOp(op)) {
    bool equality = op == "==" || op == "!=";
    const Scope& scope = ctx.ScopeFor(expr);
    bool floating =
        internal::MaybeFloating(tree, tree.Child(expr, Role::kLhs), scope) ||
        internal::MaybeFloating(tree, tree.Child(expr, Role::kRhs), scope);
    // With NaN operands `!(a < b)` differs from `a >= b`.
    if (equality || !floating) {
      const Span& op_span = tree.tokens()[n.op_token].span;
      std::string out(tree.text(Span{n.span.start, op_span.start}));
      out += FlipOp(op);
      out += tree.text(Span{op_span.end, n.span.end});
      return out;
    }
  }
  if (n.kind == NodeKind::kUnaryExpr && op == "!") {
    NodeId operand = tree.Child(expr, Role::kOperand);
    if (operand != kNoNode && tree.node(operand).kind == NodeKind::kParenExpr) {
      // `!(e)` negates back to `e`.
      return ctx.Text(tree.Child(operand, Role::kOperand));
    }
  }
  return "!(" + ctx.Text(expr) + ")";
}

// ---- R1 ---------------------------------------------------------------

int CountBinaries(const SyntaxTree& tree, NodeId expr) {
  int count = 0;
  std::vector<NodeId> stack = {expr};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = tree.node(id);
    if (n.kind == NodeKind::kBinaryExpr) ++count;
    if (n.kind == NodeKind::kSizeofExpr) continue;
    stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
  return count;
}

bool IsAtom(const SyntaxTree& tree, NodeId expr) {
  NodeKind k = tree.node(StripParens(tree, expr)).kind;
  return k == NodeKind::kIdentifier || k == NodeKind::kNumberLiteral ||
         k == NodeKind::kCharLiteral || k == NodeKind::kSubscriptExpr ||
         k == NodeKind::kMemberExpr || k == NodeKind::kCastExpr;
}

// Innermost binary expressions over simple operands that are evaluated
// unconditionally, in source order.
void CollectHoistable(const SyntaxTree& tree, NodeId expr,
                      std::vector<NodeId>* out) {
  const Node& n = tree.node(expr);
  switch (n.kind) {
    case NodeKind::kSizeofExpr:
      return;
    case NodeKind::kBinaryExpr: {
      NodeId lhs = tree.Child(expr, Role::kLhs);
      NodeId rhs = tree.Child(expr, Role::kRhs);
      if (IsAtom(tree, lhs) && IsAtom(tree, rhs)) {
        out->push_back(expr);
        return;
      }
      std::string_view op = tree.op(expr);
      CollectHoistable(tree, lhs, out);
      if (op != "&&" && op != "||") CollectHoistable(tree, rhs, out);
      return;
    }
    case NodeKind::kConditionalExpr:
      CollectHoistable(tree, tree.Child(expr, Role::kCond), out);
      return;
    case NodeKind::kCastExpr:
    case NodeKind::kParenExpr:
    case NodeKind::kUnaryExpr: {
      if (n.kind == NodeKind::kUnaryExpr && tree.op(expr) == "&") return;
      NodeId operand = tree.Child(expr, Role::kOperand);
      if (operand != kNoNode) CollectHoistable(tree, operand, out);
      return;
    }
    case NodeKind::kSubscriptExpr:
      CollectHoistable(tree, tree.Child(expr, Role::kBase), out);
      CollectHoistable(tree, tree.Child(expr, Role::kIndex), out);
      return;
    default:
      return;
  }
}

std::string DeclText(const std::string& type, const std::string& name,
                     std::string_view init) {
  std::string out = type;
  if (out.empty() || out.back() != '*') out += ' ';
  out += name;
  out += " = ";
  out += init;
  out += ';';
  return out;
}

Plan PlanExprSplit(RuleContext& ctx, NodeId stmt) {
  const SyntaxTree& tree = ctx.tree();
  const Node& s = tree.node(stmt);
  NodeId rhs = kNoNode;
  NodeId lhs = kNoNode;
  if (s.kind == NodeKind::kExprStmt) {
    NodeId e = tree.Child(stmt, Role::kValue);
    if (e == kNoNode || tree.node(e).kind != NodeKind::kAssignExpr) {
      return NoMatch();
    }
    lhs = tree.Child(e, Role::kLhs);
    rhs = tree.Child(e, Role::kRhs);
  } else if (s.kind == NodeKind::kDeclaration) {
    if (s.parent == kNoNode ||
        tree.node(s.parent).kind != NodeKind::kCompoundStmt) {
      return NoMatch();
    }
    NodeId specs = tree.Child(stmt, Role::kSpecs);
    if (specs == kNoNode) return NoMatch();
    const Node& sp = tree.node(specs);
    for (uint32_t t = sp.first_token; t < sp.last_token; ++t) {
      std::string_view w = tree.token_text(t);
      if (w == "static" || w == "extern" || w == "typedef" ||
          w == "_Thread_local" || w == "__thread") {
        return NoMatch();
      }
    }
    NodeId only = kNoNode;
    int declarators = 0;
    for (NodeId c : s.children) {
      if (tree.node(c).kind == NodeKind::kInitDeclarator) {
        ++declarators;
        only = c;
      }
    }
    if (declarators != 1) return NoMatch();
    rhs = tree.Child(only, Role::kInitializer);
    if (rhs == kNoNode || !IsExpressionKind(tree.node(rhs).kind)) {
      return NoMatch();
    }
  } else {
    return NoMatch();
  }
  if (rhs == kNoNode) return NoMatch();
  NodeId core = StripParens(tree, rhs);
  if (core == kNoNode || tree.node(core).kind != NodeKind::kBinaryExpr ||
      CountBinaries(tree, rhs) < 2) {
    return NoMatch();
  }
  std::vector<NodeId> candidates;
  CollectHoistable(tree, rhs, &candidates);
  candidates.erase(std::remove(candidates.begin(), candidates.end(), core),
                   candidates.end());
  if (candidates.empty()) return NoMatch();

  if (auto r = PurityReason(ctx.PurityOf(rhs))) return Reject(*r);
  if (lhs != kNoNode) {
    if (auto r = PurityReason(ctx.PurityOf(lhs))) return Reject(*r);
  }

  const Scope& scope = ctx.ScopeFor(stmt);
  NodeId chosen = kNoNode;
  std::string type;
  for (NodeId c : candidates) {
    if (auto t = internal::BinaryResultType(tree, c, scope)) {
      chosen = c;
      type = *t;
      break;
    }
  }
  if (chosen == kNoNode) return Reject(GuardReason::kUntypedSubexpr);

  std::string name = FreshName(tree, "_aug");
  NodeId replaced = chosen;
  NodeId parent = tree.node(chosen).parent;
  if (parent != kNoNode && tree.node(parent).kind == NodeKind::kParenExpr) {
    replaced = parent;
  }
  std::string decl = DeclText(type, name, tree.text(chosen));

  Plan p;
  p.verdict = Verdict::kOk;
  p.bindings = {{"stmt", stmt}, {"subexpr", chosen}};
  p.guards = {"side_effect_free", "typed_subexpr:" + type, "fresh_name:" + name};
  bool in_block = s.parent != kNoNode &&
                  tree.node(s.parent).kind == NodeKind::kCompoundStmt;
  if (in_block) {
    std::string sep =
        ctx.StartsLine(s.span.start) ? "\n" + ctx.LineIndent(s.span.start) : " ";
    p.edits.push_back({{s.span.start, s.span.start}, decl + sep});
    p.edits.push_back({tree.node(replaced).span, name});
  } else {
    if (s.kind != NodeKind::kExprStmt) return NoMatch();
    Span rs = tree.node(replaced).span;
    std::string body(tree.text(Span{s.span.start, rs.start}));
    body += name;
    body += tree.text(Span{rs.end, s.span.end});
    p.edits.push_back({s.span, "{ " + decl + " " + body + " }"});
    p.guards.push_back("braced");
  }
  return p;
}

// ---- R2 ---------------------------------------------------------------

Plan PlanCondNegate(RuleContext& ctx, NodeId ifs) {
  const SyntaxTree& tree = ctx.tree();
  NodeId cond = tree.Child(ifs, Role::kCond);
  NodeId then_s = tree.Child(ifs, Role::kThen);
  NodeId else_s = tree.Child(ifs, Role::kElse);
  if (cond == kNoNode || then_s == kNoNode) return NoMatch();
  if (else_s == kNoNode) return Reject(GuardReason::kMissingElse);
  std::string else_text = ctx.Text(else_s);
  if (IsOpen(tree, else_s)) else_text = "{ " + else_text + " }";
  std::string then_text = ctx.Text(then_s);
  // A braced dangling-else guard added by an earlier application is dropped
  // again when the branch moves back to the else position.
  const Node& tn = tree.node(then_s);
  if (tn.kind == NodeKind::kCompoundStmt && tn.children.size() == 1 &&
      IsOpen(tree, tn.children[0]) &&
      tree.text(Span{tn.span.start, tree.node(tn.children[0]).span.start}) ==
          "{ " &&
      tree.text(Span{tree.node(tn.children[0]).span.end, tn.span.end}) ==
          " }") {
    then_text = ctx.Text(tn.children[0]);
  }
  Plan p;
  p.verdict = Verdict::kOk;
  p.bindings = {{"cond", cond}, {"then", then_s}, {"else", else_s}};
  p.guards = {"has_else"};
  p.edits.push_back({tree.node(cond).span, NegateImpl(ctx, cond)});
  p.edits.push_back({tn.span, else_text});
  p.edits.push_back({tree.node(else_s).span, then_text});
  return p;
}

// ---- R3 ---------------------------------------------------------------

bool IsPrimaryOrPostfix(const SyntaxTree& tree, NodeId expr) {
  switch (tree.node(expr).kind) {
    case NodeKind::kIdentifier:
    case NodeKind::kNumberLiteral:
    case NodeKind::kCharLiteral:
    case NodeKind::kStringLiteral:
    case NodeKind::kParenExpr:
    case NodeKind::kCallExpr:
    case NodeKind::kSubscriptExpr:
    case NodeKind::kMemberExpr:
    case NodeKind::kPostIncDec:
      return true;
    default:
      return false;
  }
}

Plan PlanAssignSplit(RuleContext& ctx, NodeId assign) {
  const SyntaxTree& tree = ctx.tree();
  NodeId lhs = tree.Child(assign, Role::kLhs);
  NodeId rhs = tree.Child(assign, Role::kRhs);
  if (lhs == kNoNode || rhs == kNoNode) return NoMatch();
  if (auto r = PurityReason(ctx.PurityOf(lhs))) return Reject(*r);
  std::string_view op = tree.op(assign);
  op.remove_suffix(1);
  std::string r_text = ctx.Text(rhs);
  if (!IsPrimaryOrPostfix(tree, rhs)) r_text = "(" + r_text + ")";
  std::string l_text = ctx.Text(lhs);
  Plan p;
  p.verdict = Verdict::kOk;
  p.bindings = {{"lhs", lhs}, {"rhs", rhs}};
  p.guards = {"lhs_side_effect_free", "lhs_not_volatile"};
  p.edits.push_back({tree.node(assign).span,
                     l_text + " = " + l_text + " " + std::string(op) + " " +
                         r_text});
  return p;
}

// ---- R4 ---------------------------------------------------------------

Plan PlanIfSplit(RuleContext& ctx, NodeId ifs) {
  const SyntaxTree& tree = ctx.tree();
  if (tree.Child(ifs, Role::kElse) != kNoNode) return NoMatch();
  NodeId cond = tree.Child(ifs, Role::kCond);
  NodeId then_s = tree.Child(ifs, Role::kThen);
  if (cond == kNoNode || then_s == kNoNode) return NoMatch();
  if (tree.node(cond).kind != NodeKind::kBinaryExpr || tree.op(cond) != "&&") {
    return NoMatch();
  }
  NodeId a = tree.Child(cond, Role::kLhs);
  NodeId b = tree.Child(cond, Role::kRhs);
  if (auto r = PurityReason(ctx.PurityOf(a))) return Reject(*r);
  size_t if_start = tree.node(ifs).span.start;
  std::string ind = ctx.LineIndent(if_start);
  size_t rparen_end = ctx.TokenEnd(tree.node(cond).last_token);
  size_t then_end = tree.node(then_s).span.end;
  Plan p;
  p.verdict = Verdict::kOk;
  p.bindings = {{"cond", cond}, {"lhs", a}, {"rhs", b}, {"then", then_s}};
  p.guards = {"no_else", "lhs_side_effect_free"};
  p.edits.push_back({tree.node(cond).span, ctx.Text(a)});
  p.edits.push_back({{rparen_end, rparen_end},
                     " {\n" + ind + ctx.unit() + "if (" + ctx.Text(b) + ")"});
  p.edits.push_back({{then_end, then_end}, "\n" + ind + "}"});
  return p;
}

// ---- R5 ---------------------------------------------------------------

bool InIfCondition(const SyntaxTree& tree, NodeId expr) {
  NodeId child = expr;
  NodeId parent = tree.node(expr).parent;
  while (parent != kNoNode) {
    const Node& pn = tree.node(parent);
    if (pn.kind == NodeKind::kIfStmt) {
      return tree.node(child).role == Role::kCond;
    }
    if (IsStatementKind(pn.kind) || pn.kind == NodeKind::kStmtExpr ||
        !IsExpressionKind(pn.kind)) {
      return false;
    }
    child = parent;
    parent = pn.parent;
  }
  return false;
}

int ExprPrecedence(const SyntaxTree& tree, NodeId expr) {
  const Node& n = tree.node(expr);
  switch (n.kind) {
    case NodeKind::kBinaryExpr: return internal::BinaryPrecedenceOf(tree.op(expr));
    case NodeKind::kConditionalExpr: return -1;
    case NodeKind::kAssignExpr:
    case NodeKind::kCompoundAssign: return -2;
    case NodeKind::kCommaExpr: return -3;
    default: return 100;
  }
}

Plan PlanCmpMirror(RuleContext& ctx, NodeId cmp) {
  const SyntaxTree& tree = ctx.tree();
  std::string_view op = tree.op(cmp);
  if (!internal::IsComparisonOp(op) || !InIfCondition(tree, cmp)) {
    return NoMatch();
  }
  NodeId a = tree.Child(cmp, Role::kLhs);
  NodeId b = tree.Child(cmp, Role::kRhs);
  if (auto r = PurityReason(ctx.PurityOf(a))) return Reject(*r);
  if (auto r = PurityReason(ctx.PurityOf(b))) return Reject(*r);
  int prec = internal::BinaryPrecedenceOf(op);
  std::string a_text = ctx.Text(a);
  if (ExprPrecedence(tree, a) <= prec) a_text = "(" + a_text + ")";
  std::string b_text = ctx.Text(b);
  if (ExprPrecedence(tree, b) < prec) b_text = "(" + b_text + ")";
  Plan p;
  p.verdict = Verdict::kOk;
  p.bindings = {{"lhs", a}, {"rhs", b}};
  p.guards = {"operands_side_effect_free"};
  p.edits.push_back({tree.node(cmp).span,
                     b_text + " " + std::string(MirrorOp(op)) + " " + a_text});
  return p;
}

// ---- R6 ---------------------------------------------------------------

Plan PlanForToWhile(RuleContext& ctx, NodeId loop) {
  const SyntaxTree& tree = ctx.tree();
  const Node& f = tree.node(loop);
  NodeId init = tree.Child(loop, Role::kInit);
  NodeId cond = tree.Child(loop, Role::kCond);
  NodeId step = tree.Child(loop, Role::kStep);
  NodeId body = tree.Child(loop, Role::kBody);
  if (body == kNoNode) return NoMatch();
  if (HasContinue(tree, body)) return Reject(GuardReason::kContinueInBody);

  std::string ind = ctx.LineIndent(f.span.start);
  const std::string& unit = ctx.unit();
  bool starts_line = ctx.StartsLine(f.span.start);
  std::string sep = starts_line ? "\n" + ind : " ";
  bool init_is_decl =
      init != kNoNode && tree.node(init).kind == NodeKind::kDeclaration;
  bool parent_control = f.parent != kNoNode &&
                        IsControlStmt(tree.node(f.parent).kind);
  bool braces = init_is_decl || (parent_control && init != kNoNode);
  std::string inner = braces ? sep + unit : sep;

  std::string header;
  if (braces) header = "{" + inner;
  if (init != kNoNode) {
    header += ctx.Text(init);
    if (!init_is_decl) header += ';';
    header += inner;
  }
  header += "while (" + (cond != kNoNode ? ctx.Text(cond) : std::string("1")) +
            ")";
  std::string step_text = step != kNoNode ? ctx.Text(step) + ";" : "";

  Plan p;
  p.verdict = Verdict::kOk;
  p.bindings = {{"init", init}, {"cond", cond}, {"step", step}, {"body", body}};
  p.guards = {"no_continue"};
  const Node& bn = tree.node(body);
  size_t rparen_end = ctx.TokenEnd(bn.first_token - 1);
  std::string body_ind = braces ? ind + unit : ind;

  if (bn.kind != NodeKind::kCompoundStmt) {
    std::string out = header;
    if (step == kNoNode) {
      out += tree.text(Span{rparen_end, bn.span.end});
    } else {
      std::string bsep = starts_line ? "\n" + body_ind : " ";
      out += " {" + bsep + unit + ctx.Text(body) + bsep + unit + step_text +
             bsep + "}";
    }
    if (braces) out += sep + "}";
    p.edits.push_back({f.span, out});
    return p;
  }

  p.edits.push_back({{f.span.start, rparen_end}, header});
  if (step != kNoNode) {
    std::set<std::string> declared = internal::DeclaredNames(tree, body);
    std::set<std::string> used = internal::ReferencedNames(tree, step);
    bool shadowed = std::any_of(used.begin(), used.end(), [&](const auto& n) {
      return declared.count(n) > 0;
    });
    size_t close = ctx.TokenStart(bn.last_token - 1);
    if (!shadowed) {
      if (ctx.StartsLine(close) && bn.children.size() > 0) {
        size_t at = ctx.LineStart(close);
        p.edits.push_back(
            {{at, at}, ctx.LineIndent(close) + unit + step_text + "\n"});
      } else {
        bool space = close > 0 && (ctx.src()[close - 1] == ' ' ||
                                   ctx.src()[close - 1] == '\n');
        p.edits.push_back({{close, close}, (space ? "" : " ") + step_text + " "});
      }
    } else {
      std::string bsep = starts_line ? "\n" + body_ind : " ";
      p.edits.push_back({bn.span, "{" + bsep + unit + ctx.Text(body) + bsep +
                                      unit + step_text + bsep + "}"});
      p.guards.push_back("nested_body");
    }
  }
  if (braces) p.edits.push_back({{f.span.end, f.span.end}, sep + "}"});
  return p;
}

// ---- R7 ---------------------------------------------------------------

Span DeletionSpan(const RuleContext& ctx, NodeId stmt) {
  const SyntaxTree& tree = ctx.tree();
  std::string_view src = ctx.src();
  const Node& n = tree.node(stmt);
  size_t end = n.span.end;
  size_t after = end;
  while (after < src.size() && (src[after] == ' ' || src[after] == '\t')) ++after;
  if (ctx.StartsLine(n.span.start) && after < src.size() && src[after] == '\n') {
    return {ctx.LineStart(n.span.start), after + 1};
  }
  size_t prev_end = n.first_token > 0 ? ctx.TokenEnd(n.first_token - 1) : 0;
  std::string_view gap = src.substr(prev_end, n.span.start - prev_end);
  bool blank = gap.find_first_not_of(" \t\r\n") == std::string_view::npos;
  if (blank) return {prev_end, end};
  return {n.span.start, after};
}

Plan PlanWhileToFor(RuleContext& ctx, NodeId loop) {
  const SyntaxTree& tree = ctx.tree();
  NodeId cond = tree.Child(loop, Role::kCond);
  NodeId body = tree.Child(loop, Role::kBody);
  if (cond == kNoNode || body == kNoNode) return NoMatch();
  const Node& bn = tree.node(body);
  if (bn.kind != NodeKind::kCompoundStmt || bn.children.empty()) {
    return NoMatch();
  }
  NodeId last = bn.children.back();
  if (tree.node(last).kind != NodeKind::kExprStmt) return NoMatch();
  NodeId update = tree.Child(last, Role::kValue);
  if (update == kNoNode) return NoMatch();
  NodeKind uk = tree.node(update).kind;
  NodeId lvalue = kNoNode;
  if (uk == NodeKind::kCompoundAssign) {
    lvalue = tree.Child(update, Role::kLhs);
  } else if (uk == NodeKind::kPreIncDec || uk == NodeKind::kPostIncDec) {
    lvalue = tree.Child(update, Role::kOperand);
  } else {
    return NoMatch();
  }
  std::set<std::string> cond_names = internal::ReferencedNames(tree, cond);
  std::set<std::string> lv_names = internal::ReferencedNames(tree, lvalue);
  bool linked = std::any_of(lv_names.begin(), lv_names.end(), [&](const auto& n) {
    return cond_names.count(n) > 0;
  });
  if (!linked) return NoMatch();
  std::set<std::string> declared = internal::DeclaredNames(tree, body);
  std::set<std::string> used = internal::ReferencedNames(tree, update);
  for (const auto& name : used) {
    if (declared.count(name)) return NoMatch();
  }
  if (HasContinue(tree, body)) return Reject(GuardReason::kContinueInBody);
  if (auto r = PurityReason(ctx.PurityOf(lvalue))) return Reject(*r);
  // The update itself is the only side effect allowed; its right operand
  // must not have any of its own.
  if (uk == NodeKind::kCompoundAssign) {
    if (auto r = PurityReason(ctx.PurityOf(tree.Child(update, Role::kRhs)))) {
      return Reject(*r);
    }
  }
  const Node& w = tree.node(loop);
  size_t rparen_end = ctx.TokenEnd(bn.first_token - 1);
  Plan p;
  p.verdict = Verdict::kOk;
  p.bindings = {{"cond", cond}, {"body", body}, {"update", last}};
  p.guards = {"no_continue", "update_side_effect_free"};
  p.edits.push_back({{w.span.start, rparen_end},
                     "for (; " + ctx.Text(cond) + "; " + ctx.Text(update) + ")"});
  p.edits.push_back({DeletionSpan(ctx, last), ""});
  return p;
}

bool AnchorKindMatches(RuleId rule, NodeKind kind) {
  switch (rule) {
    case RuleId::kExprSplit:
      return kind == NodeKind::kExprStmt || kind == NodeKind::kDeclaration;
    case RuleId::kCondNegate:
    case RuleId::kIfSplit:
      return kind == NodeKind::kIfStmt;
    case RuleId::kAssignSplit:
      return kind == NodeKind::kCompoundAssign;
    case RuleId::kCmpMirror:
      return kind == NodeKind::kBinaryExpr;
    case RuleId::kForToWhile:
      return kind == NodeKind::kForStmt;
    case RuleId::kWhileToFor:
      return kind == NodeKind::kWhileStmt;
  }
  return false;
}

Plan PlanRule(RuleContext& ctx, RuleId rule, NodeId anchor) {
  const SyntaxTree& tree = ctx.tree();
  if (!AnchorKindMatches(rule, tree.node(anchor).kind)) return NoMatch();
  Plan p;
  switch (rule) {
    case RuleId::kExprSplit: p = PlanExprSplit(ctx, anchor); break;
    case RuleId::kCondNegate: p = PlanCondNegate(ctx, anchor); break;
    case RuleId::kAssignSplit: p = PlanAssignSplit(ctx, anchor); break;
    case RuleId::kIfSplit: p = PlanIfSplit(ctx, anchor); break;
    case RuleId::kCmpMirror: p = PlanCmpMirror(ctx, anchor); break;
    case RuleId::kForToWhile: p = PlanForToWhile(ctx, anchor); break;
    case RuleId::kWhileToFor: p = PlanWhileToFor(ctx, anchor); break;
  }
  if (p.verdict == Verdict::kNoMatch) return p;
  Span anchor_span = tree.node(anchor).span;
  if (ctx.ErrorIntersects(anchor_span)) return Reject(GuardReason::kErrorNode);
  for (const Edit& e : p.edits) {
    if (ctx.ErrorIntersects(e.span)) return Reject(GuardReason::kErrorNode);
  }
  if (p.verdict != Verdict::kOk) return p;
  for (const Edit& e : p.edits) {
    if (ctx.MacroIntersects(e.span)) return Reject(GuardReason::kMacroOverlap);
  }
  p.guards.push_back("no_macro_overlap");
  return p;
}

}  // namespace

SiteScan FindSites(const SyntaxTree& tree, const RuleSet& rules) {
  SiteScan scan;
  if (tree.root() == kNoNode) return scan;
  RuleContext ctx(tree);
  for (NodeId id : tree.Preorder()) {
    NodeKind kind = tree.node(id).kind;
    for (RuleId rule : kAllRules) {
      if (!rules.Has(rule) || !AnchorKindMatches(rule, kind)) continue;
      Plan p = PlanRule(ctx, rule, id);
      if (p.verdict == Verdict::kOk) {
        scan.sites.push_back({rule, id, tree.node(id).span,
                              std::move(p.bindings), std::move(p.guards)});
      } else if (p.verdict == Verdict::kReject) {
        scan.failures.push_back({rule, id, tree.node(id).span, p.reason});
      }
    }
  }
  return scan;
}

std::vector<Edit> ApplyRule(const SyntaxTree& tree, const TransformSite& site) {
  if (site.anchor >= tree.size() ||
      tree.node(site.anchor).span != site.anchor_span) {
    throw StaleSite("site anchor does not match the tree");
  }
  RuleContext ctx(tree);
  Plan p = PlanRule(ctx, site.rule, site.anchor);
  if (p.verdict != Verdict::kOk) {
    throw StaleSite(std::string(RuleName(site.rule)) +
                    " does not apply at the site anchor");
  }
  return p.edits;
}

std::string NegateCondition(const SyntaxTree& tree, NodeId expr) {
  RuleContext ctx(tree);
  return NegateImpl(ctx, expr);
}

std::string FreshName(const SyntaxTree& tree, std::string_view prefix) {
  std::set<std::string_view> used;
  for (const Token& t : tree.tokens()) {
    if (t.kind == TokenKind::kIdentifier) used.insert(tree.text(t.span));
  }
  std::string_view src = tree.source();
  for (size_t k = 0;; ++k) {
    std::string name = std::string(prefix) + std::to_string(k);
    if (used.count(name)) continue;
    // Names mentioned only inside directives count as used too.
    bool in_directive = false;
    for (const Token& t : tree.tokens()) {
      if (t.kind == TokenKind::kDirective &&
          src.substr(t.span.start, t.span.size()).find(name) !=
              std::string_view::npos) {
        in_directive = true;
        break;
      }
    }
    if (!in_directive) return name;
  }
}

}  // namespace vulaug

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

// Tolerant recursive-descent parser for the C subset the transformation
// rules operate on. Statements the parser cannot analyze are wrapped in
// opaque nodes instead of failing the whole unit.

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vulaug/syntax.h"

namespace vulaug {
namespace {

struct SyntaxFailure {};

const std::unordered_set<std::string_view>& TypeKeywords() {
  static const std::unordered_set<std::string_view> k = {
      "void",   "char",     "short",      "int",    "long",
      "float",  "double",   "signed",     "unsigned", "_Bool",
      "_Complex", "__signed__"};
  return k;
}

const std::unordered_set<std::string_view>& SpecKeywords() {
  static const std::unordered_set<std::string_view> k = {
      "const",     "volatile",    "restrict",    "static",
      "extern",    "auto",        "register",    "typedef",
      "inline",    "__inline",    "__inline__",  "_Noreturn",
      "_Thread_local", "_Atomic", "__restrict",  "__restrict__",
      "__const",   "__volatile__", "__extension__"};
  return k;
}

const std::unordered_set<std::string_view>& BuiltinTypedefs() {
  static const std::unordered_set<std::string_view> k = {
      "size_t",  "ssize_t", "ptrdiff_t", "intptr_t", "uintptr_t", "off_t",
      "FILE",    "bool",    "wchar_t",   "va_list",  "time_t",    "pid_t",
      "uid_t",   "gid_t",   "mode_t",    "socklen_t", "int8_t",   "int16_t",
      "int32_t", "int64_t", "uint8_t",   "uint16_t", "uint32_t",  "uint64_t",
      "u8",      "u16",     "u32",       "u64",      "s8",        "s16",
      "s32",     "s64",     "__u8",      "__u16",    "__u32",     "__u64",
      "__s8",    "__s16",   "__s32",     "__s64",    "__le16",    "__le32",
      "__le64",  "__be16",  "__be32",    "__be64",   "gfp_t",     "loff_t",
      "uchar",   "ushort",  "uint",      "ulong",    "BOOL",      "DWORD",
      "BYTE",    "WORD"};
  return k;
}

int BinaryPrecedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "<<" || op == ">>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return 0;
}

bool IsAssignOp(std::string_view op) {
  return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" ||
         op == "%=" || op == "<<=" || op == ">>=" || op == "&=" ||
         op == "^=" || op == "|=";
}

bool LooksLikeMacroName(std::string_view name) {
  if (name.size() < 2) return false;
  bool has_upper = false;
  for (char c : name) {
    if (c >= 'A' && c <= 'Z') {
      has_upper = true;
    } else if (!(c == '_' || (c >= '0' && c <= '9'))) {
      return false;
    }
  }
  return has_upper;
}

}  // namespace

class Parser {
 public:
  Parser(std::string_view src, ParseMode mode) : mode_(mode) {
    source_ = std::make_shared<const std::string>(src);
    tokens_ = std::make_shared<const std::vector<Token>>(Lex(*source_));
    n_ = tokens_->size();
    ComputeMatches();
    ScanDirectives();
  }

  SyntaxTree Run() {
    std::vector<NodeId> items;
    while (pos_ < n_) items.push_back(ParseExternalTolerant());

    bool any_function = false;
    for (const Node& n : nodes_) {
      if (n.kind == NodeKind::kFunctionDef) any_function = true;
    }
    if (!any_function) {
      throw ParseError("no function definition recognized");
    }

    NodeId root;
    if (mode_ == ParseMode::kFunctionFragment && items.size() == 1 &&
        nodes_[items[0]].kind == NodeKind::kFunctionDef) {
      root = items[0];
    } else {
      root = static_cast<NodeId>(nodes_.size());
      Node tu;
      tu.kind = NodeKind::kTranslationUnit;
      tu.first_token = 0;
      tu.last_token = static_cast<uint32_t>(n_);
      tu.children = items;
      nodes_.push_back(std::move(tu));
      for (NodeId c : items) nodes_[c].parent = root;
    }
    nodes_[root].span = {0, source_->size()};

    SyntaxTree tree;
    tree.source_ = source_;
    tree.tokens_ = tokens_;
    tree.nodes_ = std::move(nodes_);
    tree.root_ = root;
    return tree;
  }

 private:
  // ---- token helpers -----------------------------------------------------

  std::string_view T(size_t i) const {
    if (i >= n_) return {};
    const Span& s = (*tokens_)[i].span;
    return std::string_view(*source_).substr(s.start, s.size());
  }
  TokenKind Kind(size_t i) const { return (*tokens_)[i].kind; }
  bool P(size_t i, std::string_view p) const {
    return i < n_ && Kind(i) == TokenKind::kPunct && T(i) == p;
  }
  bool P(std::string_view p) const { return P(pos_, p); }
  bool K(size_t i, std::string_view k) const {
    return i < n_ && Kind(i) == TokenKind::kKeyword && T(i) == k;
  }
  bool K(std::string_view k) const { return K(pos_, k); }
  bool Id(size_t i) const { return i < n_ && Kind(i) == TokenKind::kIdentifier; }

  [[noreturn]] void Fail() const { throw SyntaxFailure{}; }

  void Expect(std::string_view p) {
    if (!P(p)) Fail();
    ++pos_;
  }

  uint32_t Match(size_t i) const { return i < n_ ? match_[i] : kNoToken; }

  void SkipBalanced() {
    uint32_t close = Match(pos_);
    if (close == kNoToken) Fail();
    pos_ = close + 1;
  }

  void ComputeMatches() {
    match_.assign(n_, kNoToken);
    std::vector<uint32_t> stack;
    for (uint32_t i = 0; i < n_; ++i) {
      if (Kind(i) != TokenKind::kPunct) continue;
      std::string_view t = T(i);
      if (t == "(" || t == "[" || t == "{") {
        stack.push_back(i);
        continue;
      }
      char open = t == ")" ? '(' : t == "]" ? '[' : t == "}" ? '{' : 0;
      if (!open) continue;
      // Pop unmatched openers down to the nearest opener of the same kind.
      for (size_t k = stack.size(); k-- > 0;) {
        if (T(stack[k])[0] == open) {
          match_[stack[k]] = i;
          match_[i] = stack[k];
          stack.resize(k);
          break;
        }
      }
    }
  }

  void ScanDirectives() {
    for (size_t i = 0; i < n_; ++i) {
      if (Kind(i) != TokenKind::kDirective) continue;
      std::string_view d = T(i);
      size_t p = 1;
      while (p < d.size() && (d[p] == ' ' || d[p] == '\t')) ++p;
      if (d.substr(p, 6) != "define") continue;
      p += 6;
      while (p < d.size() && (d[p] == ' ' || d[p] == '\t')) ++p;
      size_t name_start = p;
      while (p < d.size() &&
             (isalnum(static_cast<unsigned char>(d[p])) || d[p] == '_')) {
        ++p;
      }
      std::string name(d.substr(name_start, p - name_start));
      if (name.empty()) continue;
      if (p < d.size() && d[p] == '(') {
        function_macros_.insert(name);
        continue;
      }
      // Object-like macros whose body is more than one token can change
      // precedence when substituted; treat their uses as macro tokens.
      std::vector<Token> body = Lex(d.substr(p));
      if (body.size() > 1) hazardous_macros_.insert(name);
    }
  }

  // ---- node construction -------------------------------------------------

  NodeId Make(NodeKind kind, uint32_t first,
              std::vector<std::pair<NodeId, Role>> kids,
              uint32_t op = kNoToken) {
    return MakeRange(kind, first, static_cast<uint32_t>(pos_), std::move(kids),
                     op);
  }

  NodeId MakeRange(NodeKind kind, uint32_t first, uint32_t last,
                   std::vector<std::pair<NodeId, Role>> kids,
                   uint32_t op = kNoToken) {
    if (last <= first) Fail();
    NodeId id = static_cast<NodeId>(nodes_.size());
    Node node;
    node.kind = kind;
    node.first_token = first;
    node.last_token = last;
    node.op_token = op;
    node.span = {(*tokens_)[first].span.start, (*tokens_)[last - 1].span.end};
    node.children.reserve(kids.size());
    for (auto& [child, role] : kids) {
      if (child == kNoNode) continue;
      node.children.push_back(child);
      nodes_[child].role = role;
      nodes_[child].parent = id;
    }
    nodes_.push_back(std::move(node));
    return id;
  }

  NodeId Leaf(NodeKind kind, Role role = Role::kNone) {
    uint32_t first = static_cast<uint32_t>(pos_);
    ++pos_;
    NodeId id = Make(kind, first, {});
    nodes_[id].role = role;
    return id;
  }

  // Flags a statement whose own expressions (not nested statements) contain
  // macro tokens.
  void PropagateMacroFlag(NodeId stmt) {
    std::vector<NodeId> stack(nodes_[stmt].children.begin(),
                              nodes_[stmt].children.end());
    while (!stack.empty()) {
      NodeId id = stack.back();
      stack.pop_back();
      const Node& n = nodes_[id];
      if (IsStatementKind(n.kind) || n.kind == NodeKind::kStmtExpr) continue;
      if (n.flags.contains_macro_token) {
        nodes_[stmt].flags.contains_macro_token = true;
        return;
      }
      stack.insert(stack.end(), n.children.begin(), n.children.end());
    }
  }

  bool IsMacroCallee(std::string_view name) const {
    return function_macros_.count(std::string(name)) > 0 ||
           LooksLikeMacroName(name);
  }

  // ---- declarations ------------------------------------------------------

  bool IsKnownTypedef(std::string_view name) const {
    if (vars_.count(std::string(name))) return false;
    if (typedefs_.count(std::string(name))) return true;
    if (BuiltinTypedefs().count(name)) return true;
    return name.size() > 2 && name.ends_with("_t");
  }

  bool IsSpecKeyword(size_t i) const {
    if (i >= n_ || Kind(i) != TokenKind::kKeyword) return false;
    std::string_view t = T(i);
    return TypeKeywords().count(t) || SpecKeywords().count(t) ||
           t == "struct" || t == "union" || t == "enum" ||
           t == "__attribute__" || t == "typeof" || t == "__typeof__" ||
           t == "_Alignas";
  }

  bool IsDeclarationStart(size_t i) const {
    if (IsSpecKeyword(i)) {
      // `__extension__` may also prefix an expression.
      return !K(i, "__extension__") || IsDeclarationStart(i + 1);
    }
    if (!Id(i)) return false;
    std::string name(T(i));
    if (vars_.count(name)) return false;
    if (IsKnownTypedef(name)) return !P(i + 1, "(") || P(i + 2, "*");
    if (Id(i + 1)) return true;
    if (P(i + 1, "*")) {
      size_t j = i + 1;
      while (P(j, "*")) ++j;
      if (Id(j) && !vars_.count(std::string(T(j))) &&
          (P(j + 1, ";") || P(j + 1, "=") || P(j + 1, ",") || P(j + 1, "["))) {
        return true;
      }
    }
    return false;
  }

  bool IsTypeNameStart(size_t i) const {
    if (IsSpecKeyword(i)) return true;
    if (!Id(i)) return false;
    std::string_view name = T(i);
    if (vars_.count(std::string(name))) return false;
    if (IsKnownTypedef(name)) return true;
    size_t j = i + 1;
    if (!P(j, "*")) return false;
    while (P(j, "*")) ++j;
    return P(j, ")");
  }

  struct SpecInfo {
    NodeId node = kNoNode;
    bool has_type = false;
    bool is_typedef = false;
  };

  SpecInfo ParseDeclSpecs() {
    SpecInfo info;
    uint32_t first = static_cast<uint32_t>(pos_);
    bool macro = false;
    while (pos_ < n_) {
      std::string_view t = T(pos_);
      if (Kind(pos_) == TokenKind::kKeyword) {
        if (TypeKeywords().count(t)) {
          info.has_type = true;
          ++pos_;
        } else if (SpecKeywords().count(t)) {
          if (t == "typedef") info.is_typedef = true;
          ++pos_;
        } else if (t == "__attribute__" || t == "_Alignas") {
          ++pos_;
          if (P("(")) SkipBalanced();
        } else if (t == "typeof" || t == "__typeof__") {
          ++pos_;
          if (!P("(")) Fail();
          SkipBalanced();
          info.has_type = true;
        } else if (t == "struct" || t == "union" || t == "enum") {
          ++pos_;
          while (K("__attribute__")) {
            ++pos_;
            if (P("(")) SkipBalanced();
          }
          bool named = false;
          if (Id(pos_)) {
            ++pos_;
            named = true;
          }
          if (P("{")) {
            SkipBalanced();
          } else if (!named) {
            Fail();
          }
          info.has_type = true;
        } else {
          break;
        }
        continue;
      }
      if (!Id(pos_)) break;
      std::string name(t);
      if (!info.has_type && IsKnownTypedef(name)) {
        info.has_type = true;
        ++pos_;
      } else if (!info.has_type && !vars_.count(name) &&
                 (Id(pos_ + 1) || IsSpecKeyword(pos_ + 1))) {
        // Unknown type name or attribute-like macro before the type.
        if (IsSpecKeyword(pos_ + 1) && LooksLikeMacroName(name)) {
          macro = true;
        } else {
          info.has_type = true;
        }
        ++pos_;
      } else if (!info.has_type && !vars_.count(name) && P(pos_ + 1, "*")) {
        info.has_type = true;
        ++pos_;
      } else if (info.has_type && Id(pos_ + 1)) {
        // Attribute macro between the type and the declarator.
        macro = true;
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == first) return info;
    info.node = Make(NodeKind::kDeclSpecs, first, {});
    nodes_[info.node].flags.contains_macro_token = macro;
    return info;
  }

  // Declarator info of the most recent ParseDeclarator call.
  std::string last_name_;
  bool last_is_function_ = false;

  NodeId ParseDeclarator(bool allow_abstract) {
    uint32_t first = static_cast<uint32_t>(pos_);
    std::vector<std::pair<NodeId, Role>> kids;
    std::string name;
    bool is_function = false;
    while (pos_ < n_) {
      if (P("*")) {
        ++pos_;
      } else if (K("const") || K("volatile") || K("restrict") ||
                 K("__restrict") || K("__restrict__") || K("__const") ||
                 K("_Atomic")) {
        ++pos_;
      } else if (K("__attribute__")) {
        ++pos_;
        if (P("(")) SkipBalanced();
      } else {
        break;
      }
    }
    if (Id(pos_)) {
      name = std::string(T(pos_));
      kids.push_back({Leaf(NodeKind::kIdentifier), Role::kName});
    } else if (P("(") && (P(pos_ + 1, "*") || P(pos_ + 1, "(") ||
                          P(pos_ + 1, "^") || Id(pos_ + 1))) {
      uint32_t close = Match(pos_);
      if (close == kNoToken) Fail();
      size_t save = pos_;
      ++pos_;
      try {
        NodeId inner = ParseDeclarator(allow_abstract);
        if (pos_ != close) Fail();
        kids.push_back({inner, Role::kDeclarator});
        name = last_name_;
        pos_ = close + 1;
      } catch (const SyntaxFailure&) {
        if (!allow_abstract) throw;
        pos_ = save;  // abstract function declarator: `int (int)`
      }
    } else if (!allow_abstract) {
      Fail();
    }
    while (pos_ < n_) {
      if (P("[")) {
        SkipBalanced();
        is_function = false;
      } else if (P("(")) {
        kids.push_back({ParseParamList(), Role::kParams});
        is_function = kids.size() >= 2 &&
                      nodes_[kids[kids.size() - 2].first].kind ==
                          NodeKind::kIdentifier;
      } else {
        break;
      }
    }
    while (K("__attribute__") || K("asm") || K("__asm__")) {
      ++pos_;
      if (P("(")) SkipBalanced();
    }
    last_name_ = name;
    last_is_function_ = is_function;
    if (pos_ == first) return kNoNode;
    return Make(NodeKind::kDeclarator, first, std::move(kids));
  }

  NodeId ParseParamList() {
    uint32_t first = static_cast<uint32_t>(pos_);
    uint32_t close = Match(pos_);
    if (close == kNoToken) Fail();
    ++pos_;
    std::vector<std::pair<NodeId, Role>> kids;
    while (pos_ < close) {
      if (P("...")) {
        ++pos_;
      } else {
        uint32_t pstart = static_cast<uint32_t>(pos_);
        size_t mark = nodes_.size();
        try {
          SpecInfo specs = ParseDeclSpecs();
          NodeId d = ParseDeclarator(true);
          if (!(P(",") || pos_ == close)) Fail();
          if (!last_name_.empty()) param_names_.push_back(last_name_);
          kids.push_back({Make(NodeKind::kParamDecl, pstart,
                               {{specs.node, Role::kSpecs},
                                {d, Role::kDeclarator}}),
                          Role::kNone});
        } catch (const SyntaxFailure&) {
          nodes_.resize(mark);
          pos_ = pstart;
          while (pos_ < close && !P(",")) {
            if (Match(pos_) != kNoToken && Match(pos_) > pos_) {
              pos_ = Match(pos_) + 1;
            } else {
              ++pos_;
            }
          }
          if (pos_ == pstart) Fail();
          NodeId bad = Make(NodeKind::kOpaque, pstart, {});
          nodes_[bad].flags.contains_error = true;
          kids.push_back({bad, Role::kNone});
        }
      }
      if (P(",")) {
        ++pos_;
        continue;
      }
      if (pos_ != close) Fail();
    }
    pos_ = close + 1;
    return Make(NodeKind::kParamList, first, std::move(kids));
  }

  NodeId ParseInitList() {
    uint32_t first = static_cast<uint32_t>(pos_);
    SkipBalanced();
    return Make(NodeKind::kInitList, first, {});
  }

  NodeId ParseInitializer() {
    if (P("{")) return ParseInitList();
    return ParseAssign();
  }

  void RecordDeclaredName(bool is_typedef) {
    if (last_name_.empty()) return;
    if (is_typedef) {
      typedefs_.insert(last_name_);
      vars_.erase(last_name_);
    } else {
      vars_.insert(last_name_);
    }
  }

  // Remaining init-declarators of a declaration whose first declarator has
  // already been parsed.
  NodeId FinishDeclaration(uint32_t first, const SpecInfo& specs,
                           NodeId first_declarator, uint32_t decl_first) {
    std::vector<std::pair<NodeId, Role>> kids = {{specs.node, Role::kSpecs}};
    NodeId d = first_declarator;
    uint32_t dstart = decl_first;
    while (true) {
      RecordDeclaredName(specs.is_typedef);
      NodeId init = kNoNode;
      if (P("=")) {
        ++pos_;
        init = ParseInitializer();
      } else if (P(":")) {  // bit-field width
        ++pos_;
        init = ParseConditional();
      }
      kids.push_back({Make(NodeKind::kInitDeclarator, dstart,
                           {{d, Role::kDeclarator}, {init, Role::kInitializer}}),
                      Role::kNone});
      if (!P(",")) break;
      ++pos_;
      dstart = static_cast<uint32_t>(pos_);
      d = ParseDeclarator(false);
    }
    Expect(";");
    NodeId decl = Make(NodeKind::kDeclaration, first, std::move(kids));
    PropagateMacroFlag(decl);
    return decl;
  }

  NodeId ParseDeclaration() {
    uint32_t first = static_cast<uint32_t>(pos_);
    SpecInfo specs = ParseDeclSpecs();
    if (specs.node == kNoNode) Fail();
    if (P(";")) {
      ++pos_;
      return Make(NodeKind::kDeclaration, first, {{specs.node, Role::kSpecs}});
    }
    uint32_t dstart = static_cast<uint32_t>(pos_);
    NodeId d = ParseDeclarator(false);
    return FinishDeclaration(first, specs, d, dstart);
  }

  // ---- external declarations --------------------------------------------

  NodeId ParseExternalTolerant() {
    size_t save = pos_;
    size_t mark = nodes_.size();
    try {
      return ParseExternal();
    } catch (const SyntaxFailure&) {
      nodes_.resize(mark);
      pos_ = save;
      vars_ = globals_;
      return RecoverTopLevel();
    }
  }

  NodeId RecoverTopLevel() {
    uint32_t first = static_cast<uint32_t>(pos_);
    while (pos_ < n_) {
      if (P(";")) {
        ++pos_;
        break;
      }
      if (P("{")) {
        uint32_t close = Match(pos_);
        if (close == kNoToken) {
          pos_ = n_;
          break;
        }
        pos_ = close + 1;
        if (P(";")) ++pos_;
        break;
      }
      if ((P("(") || P("[")) && Match(pos_) != kNoToken) {
        pos_ = Match(pos_) + 1;
        continue;
      }
      ++pos_;
    }
    if (pos_ == first) ++pos_;
    NodeId id = Make(NodeKind::kOpaque, first, {});
    nodes_[id].flags.contains_error = true;
    return id;
  }

  NodeId ParseExternal() {
    uint32_t first = static_cast<uint32_t>(pos_);
    if (Kind(pos_) == TokenKind::kDirective) {
      NodeId d = Leaf(NodeKind::kDirective);
      nodes_[d].flags.contains_macro_token = true;
      return d;
    }
    if (P(";")) return Leaf(NodeKind::kNullStmt);

    SpecInfo specs = ParseDeclSpecs();
    if (P(";")) {
      if (specs.node == kNoNode) Fail();
      ++pos_;
      return Make(NodeKind::kDeclaration, first, {{specs.node, Role::kSpecs}});
    }
    uint32_t dstart = static_cast<uint32_t>(pos_);
    param_names_.clear();
    NodeId d = ParseDeclarator(false);
    if (last_is_function_ && !specs.is_typedef &&
        (P("{") || IsDeclarationStart(pos_))) {
      std::vector<std::string> params = param_names_;
      std::vector<std::pair<NodeId, Role>> kids = {{specs.node, Role::kSpecs},
                                                   {d, Role::kDeclarator}};
      vars_ = globals_;
      for (const auto& p : params) vars_.insert(p);
      // Old-style parameter declarations.
      while (!P("{")) {
        if (pos_ >= n_) Fail();
        kids.push_back({ParseDeclaration(), Role::kParams});
      }
      if (Match(pos_) == kNoToken) Fail();
      kids.push_back({ParseCompound(), Role::kBody});
      NodeId fn = Make(NodeKind::kFunctionDef, first, std::move(kids));
      vars_ = globals_;
      return fn;
    }
    NodeId decl = FinishDeclaration(first, specs, d, dstart);
    globals_ = vars_;
    return decl;
  }

  // ---- statements ----------------------------------------------------------

  NodeId ParseCompound() {
    uint32_t first = static_cast<uint32_t>(pos_);
    if (!P("{")) Fail();
    uint32_t close = Match(pos_);
    if (close == kNoToken) Fail();
    ++pos_;
    std::vector<std::pair<NodeId, Role>> kids;
    while (pos_ < close) kids.push_back({ParseBlockItem(close), Role::kNone});
    pos_ = close + 1;
    return Make(NodeKind::kCompoundStmt, first, std::move(kids));
  }

  NodeId ParseBlockItem(uint32_t limit) {
    size_t save = pos_;
    size_t mark = nodes_.size();
    try {
      NodeId s = ParseStatement();
      if (pos_ > limit) Fail();
      return s;
    } catch (const SyntaxFailure&) {
      nodes_.resize(mark);
      pos_ = save;
      return RecoverStatement(limit);
    }
  }

  NodeId RecoverStatement(uint32_t limit) {
    uint32_t first = static_cast<uint32_t>(pos_);
    bool macro = false;
    while (pos_ < limit) {
      if (P(";")) {
        ++pos_;
        break;
      }
      if (Id(pos_) && P(pos_ + 1, "(") && IsMacroCallee(T(pos_))) macro = true;
      if (P("{") && Match(pos_) != kNoToken && Match(pos_) < limit) {
        pos_ = Match(pos_) + 1;
        break;
      }
      if ((P("(") || P("[")) && Match(pos_) != kNoToken &&
          Match(pos_) < limit) {
        pos_ = Match(pos_) + 1;
        continue;
      }
      ++pos_;
    }
    if (pos_ == first) ++pos_;
    NodeId id = Make(NodeKind::kOpaque, first, {});
    nodes_[id].flags.contains_error = true;
    nodes_[id].flags.contains_macro_token = macro;
    return id;
  }

  // Parses a sub-statement (loop or branch body) with statement-level
  // recovery bounded by the enclosing block.
  NodeId ParseSubStatement() {
    size_t save = pos_;
    size_t mark = nodes_.size();
    try {
      return ParseStatement();
    } catch (const SyntaxFailure&) {
      nodes_.resize(mark);
      pos_ = save;
      throw;
    }
  }

  NodeId ParseParenCondition() {
    if (!P("(")) Fail();
    uint32_t close = Match(pos_);
    if (close == kNoToken) Fail();
    ++pos_;
    NodeId cond = ParseExpr();
    if (pos_ != close) Fail();
    ++pos_;
    return cond;
  }

  NodeId ParseStatement() {
    if (pos_ >= n_) Fail();
    uint32_t first = static_cast<uint32_t>(pos_);
    if (Kind(pos_) == TokenKind::kDirective) {
      NodeId d = Leaf(NodeKind::kDirective);
      nodes_[d].flags.contains_macro_token = true;
      return d;
    }
    if (P("{")) return ParseCompound();
    if (P(";")) return Leaf(NodeKind::kNullStmt);
    if (Kind(pos_) == TokenKind::kKeyword) {
      std::string_view kw = T(pos_);
      if (kw == "if") {
        ++pos_;
        NodeId cond = ParseParenCondition();
        NodeId then_s = ParseSubStatement();
        NodeId else_s = kNoNode;
        if (K("else")) {
          ++pos_;
          else_s = ParseSubStatement();
        }
        NodeId s = Make(NodeKind::kIfStmt, first,
                        {{cond, Role::kCond},
                         {then_s, Role::kThen},
                         {else_s, Role::kElse}});
        return s;
      }
      if (kw == "while") {
        ++pos_;
        NodeId cond = ParseParenCondition();
        NodeId body = ParseSubStatement();
        NodeId s = Make(NodeKind::kWhileStmt, first,
                        {{cond, Role::kCond}, {body, Role::kBody}});
        return s;
      }
      if (kw == "do") {
        ++pos_;
        NodeId body = ParseSubStatement();
        if (!K("while")) Fail();
        ++pos_;
        NodeId cond = ParseParenCondition();
        Expect(";");
        NodeId s = Make(NodeKind::kDoStmt, first,
                        {{body, Role::kBody}, {cond, Role::kCond}});
        return s;
      }
      if (kw == "for") return ParseFor();
      if (kw == "switch") {
        ++pos_;
        NodeId cond = ParseParenCondition();
        NodeId body = ParseSubStatement();
        NodeId s = Make(NodeKind::kSwitchStmt, first,
                        {{cond, Role::kCond}, {body, Role::kBody}});
        return s;
      }
      if (kw == "case") {
        ++pos_;
        NodeId value = ParseConditional();
        if (P("...")) {  // GNU case range
          ++pos_;
          ParseConditional();
        }
        Expect(":");
        NodeId body = LabelBody();
        NodeId s = Make(NodeKind::kCaseStmt, first,
                        {{value, Role::kValue}, {body, Role::kBody}});
        return s;
      }
      if (kw == "default") {
        ++pos_;
        Expect(":");
        NodeId body = LabelBody();
        return Make(NodeKind::kDefaultStmt, first, {{body, Role::kBody}});
      }
      if (kw == "break" || kw == "continue") {
        ++pos_;
        Expect(";");
        return Make(kw == "break" ? NodeKind::kBreakStmt
                                  : NodeKind::kContinueStmt,
                    first, {});
      }
      if (kw == "return") {
        ++pos_;
        NodeId value = kNoNode;
        if (!P(";")) value = ParseExpr();
        Expect(";");
        NodeId s = Make(NodeKind::kReturnStmt, first, {{value, Role::kValue}});
        PropagateMacroFlag(s);
        return s;
      }
      if (kw == "goto") {
        ++pos_;
        if (P("*")) {
          ++pos_;
          ParseExpr();
        } else if (Id(pos_)) {
          ++pos_;
        } else {
          Fail();
        }
        Expect(";");
        return Make(NodeKind::kGotoStmt, first, {});
      }
      if (kw == "else") Fail();
    }
    if (Id(pos_) && P(pos_ + 1, ":")) {
      ++pos_;
      ++pos_;
      NodeId body = LabelBody();
      return Make(NodeKind::kLabelStmt, first, {{body, Role::kBody}});
    }
    if (IsDeclarationStart(pos_)) return ParseDeclaration();
    NodeId e = ParseExpr();
    Expect(";");
    NodeId s = Make(NodeKind::kExprStmt, first, {{e, Role::kValue}});
    PropagateMacroFlag(s);
    return s;
  }

  NodeId LabelBody() {
    if (P("}")) return kNoNode;
    return ParseSubStatement();
  }

  NodeId ParseFor() {
    uint32_t first = static_cast<uint32_t>(pos_);
    ++pos_;
    if (!P("(")) Fail();
    uint32_t close = Match(pos_);
    if (close == kNoToken) Fail();
    ++pos_;
    NodeId init = kNoNode;
    if (P(";")) {
      ++pos_;
    } else if (IsDeclarationStart(pos_)) {
      init = ParseDeclaration();
    } else {
      init = ParseExpr();
      Expect(";");
    }
    NodeId cond = kNoNode;
    if (!P(";")) cond = ParseExpr();
    Expect(";");
    NodeId step = kNoNode;
    if (pos_ != close) step = ParseExpr();
    if (pos_ != close) Fail();
    ++pos_;
    NodeId body = ParseSubStatement();
    NodeId s = Make(NodeKind::kForStmt, first,
                    {{init, Role::kInit},
                     {cond, Role::kCond},
                     {step, Role::kStep},
                     {body, Role::kBody}});
    return s;
  }

  // ---- expressions --------------------------------------------------------

  NodeId ParseExpr() {
    uint32_t first = static_cast<uint32_t>(pos_);
    NodeId left = ParseAssign();
    while (P(",")) {
      uint32_t op = static_cast<uint32_t>(pos_);
      ++pos_;
      NodeId right = ParseAssign();
      left = Make(NodeKind::kCommaExpr, first,
                  {{left, Role::kLhs}, {right, Role::kRhs}}, op);
    }
    return left;
  }

  NodeId ParseAssign() {
    uint32_t first = static_cast<uint32_t>(pos_);
    NodeId left = ParseConditional();
    if (pos_ < n_ && Kind(pos_) == TokenKind::kPunct && IsAssignOp(T(pos_))) {
      uint32_t op = static_cast<uint32_t>(pos_);
      ++pos_;
      NodeId right = ParseAssign();
      NodeKind kind = T(op) == "=" ? NodeKind::kAssignExpr
                                   : NodeKind::kCompoundAssign;
      return Make(kind, first, {{left, Role::kLhs}, {right, Role::kRhs}}, op);
    }
    return left;
  }

  NodeId ParseConditional() {
    uint32_t first = static_cast<uint32_t>(pos_);
    NodeId cond = ParseBinary(1);
    if (!P("?")) return cond;
    uint32_t op = static_cast<uint32_t>(pos_);
    ++pos_;
    NodeId t = kNoNode;
    if (!P(":")) t = ParseExpr();
    Expect(":");
    NodeId f = ParseConditional();
    return Make(NodeKind::kConditionalExpr, first,
                {{cond, Role::kCond}, {t, Role::kTrue}, {f, Role::kFalse}}, op);
  }

  NodeId ParseBinary(int min_prec) {
    uint32_t first = static_cast<uint32_t>(pos_);
    NodeId left = ParseCast();
    while (pos_ < n_ && Kind(pos_) == TokenKind::kPunct) {
      int prec = BinaryPrecedence(T(pos_));
      if (prec == 0 || prec < min_prec) break;
      uint32_t op = static_cast<uint32_t>(pos_);
      ++pos_;
      NodeId right = ParseBinary(prec + 1);
      left = Make(NodeKind::kBinaryExpr, first,
                  {{left, Role::kLhs}, {right, Role::kRhs}}, op);
    }
    return left;
  }

  NodeId ParseTypeNameUntil(uint32_t close) {
    uint32_t first = static_cast<uint32_t>(pos_);
    SpecInfo specs = ParseDeclSpecs();
    if (specs.node == kNoNode) Fail();
    NodeId d = ParseDeclarator(true);
    if (pos_ != close) Fail();
    return Make(NodeKind::kTypeName, first,
                {{specs.node, Role::kSpecs}, {d, Role::kDeclarator}});
  }

  NodeId ParseCast() {
    if (P("(") && IsTypeNameStart(pos_ + 1)) {
      uint32_t first = static_cast<uint32_t>(pos_);
      uint32_t close = Match(pos_);
      if (close == kNoToken) Fail();
      ++pos_;
      NodeId type = ParseTypeNameUntil(close);
      pos_ = close + 1;
      if (P("{")) {
        NodeId init = ParseInitList();
        NodeId lit = Make(NodeKind::kCompoundLiteral, first,
                          {{type, Role::kTypeName}, {init, Role::kInitializer}});
        return ParsePostfixTail(first, lit);
      }
      NodeId operand = ParseCast();
      return Make(NodeKind::kCastExpr, first,
                  {{type, Role::kTypeName}, {operand, Role::kOperand}});
    }
    return ParseUnary();
  }

  NodeId ParseUnary() {
    if (pos_ >= n_) Fail();
    uint32_t first = static_cast<uint32_t>(pos_);
    if (P("++") || P("--")) {
      ++pos_;
      NodeId operand = ParseUnary();
      return Make(NodeKind::kPreIncDec, first, {{operand, Role::kOperand}},
                  first);
    }
    if (P("&") || P("*") || P("+") || P("-") || P("~") || P("!")) {
      ++pos_;
      NodeId operand = ParseCast();
      return Make(NodeKind::kUnaryExpr, first, {{operand, Role::kOperand}},
                  first);
    }
    if (P("&&") && Id(pos_ + 1)) {  // GNU label address
      ++pos_;
      NodeId label = Leaf(NodeKind::kIdentifier);
      return Make(NodeKind::kUnaryExpr, first, {{label, Role::kOperand}},
                  first);
    }
    if (K("sizeof") || K("_Alignof")) {
      ++pos_;
      if (P("(") && IsTypeNameStart(pos_ + 1)) {
        uint32_t close = Match(pos_);
        if (close == kNoToken) Fail();
        ++pos_;
        NodeId type = ParseTypeNameUntil(close);
        pos_ = close + 1;
        return Make(NodeKind::kSizeofExpr, first, {{type, Role::kTypeName}},
                    first);
      }
      NodeId operand = ParseUnary();
      return Make(NodeKind::kSizeofExpr, first, {{operand, Role::kOperand}},
                  first);
    }
    if (K("__extension__")) {
      ++pos_;
      return ParseCast();
    }
    return ParsePostfix();
  }

  NodeId ParsePostfix() {
    uint32_t first = static_cast<uint32_t>(pos_);
    NodeId base = ParsePrimary();
    return ParsePostfixTail(first, base);
  }

  NodeId ParsePostfixTail(uint32_t first, NodeId base) {
    while (pos_ < n_) {
      if (P("[")) {
        uint32_t close = Match(pos_);
        if (close == kNoToken) Fail();
        ++pos_;
        NodeId index = ParseExpr();
        if (pos_ != close) Fail();
        ++pos_;
        base = Make(NodeKind::kSubscriptExpr, first,
                    {{base, Role::kBase}, {index, Role::kIndex}});
      } else if (P("(")) {
        uint32_t close = Match(pos_);
        if (close == kNoToken) Fail();
        ++pos_;
        std::vector<std::pair<NodeId, Role>> kids = {{base, Role::kCallee}};
        while (pos_ < close) {
          kids.push_back({ParseAssign(), Role::kArg});
          if (P(",")) {
            ++pos_;
          } else if (pos_ != close) {
            Fail();
          }
        }
        pos_ = close + 1;
        bool macro = nodes_[base].kind == NodeKind::kIdentifier &&
                     IsMacroCallee(T(nodes_[base].first_token));
        base = Make(NodeKind::kCallExpr, first, std::move(kids));
        if (macro) nodes_[base].flags.contains_macro_token = true;
      } else if (P(".") || P("->")) {
        uint32_t op = static_cast<uint32_t>(pos_);
        ++pos_;
        if (!Id(pos_)) Fail();
        NodeId member = Leaf(NodeKind::kIdentifier);
        base = Make(NodeKind::kMemberExpr, first,
                    {{base, Role::kBase}, {member, Role::kName}}, op);
      } else if (P("++") || P("--")) {
        uint32_t op = static_cast<uint32_t>(pos_);
        ++pos_;
        base = Make(NodeKind::kPostIncDec, first, {{base, Role::kOperand}}, op);
      } else {
        break;
      }
    }
    return base;
  }

  NodeId ParsePrimary() {
    if (pos_ >= n_) Fail();
    uint32_t first = static_cast<uint32_t>(pos_);
    switch (Kind(pos_)) {
      case TokenKind::kIdentifier: {
        std::string name(T(pos_));
        NodeId id = Leaf(NodeKind::kIdentifier);
        if (hazardous_macros_.count(name)) {
          nodes_[id].flags.contains_macro_token = true;
        }
        return id;
      }
      case TokenKind::kNumber:
        return Leaf(NodeKind::kNumberLiteral);
      case TokenKind::kChar:
        return Leaf(NodeKind::kCharLiteral);
      case TokenKind::kString: {
        bool macro = false;
        ++pos_;
        while (pos_ < n_) {
          if (Kind(pos_) == TokenKind::kString) {
            ++pos_;
          } else if (Id(pos_) && pos_ + 1 < n_ &&
                     Kind(pos_ + 1) == TokenKind::kString) {
            macro = true;  // e.g. "%" PRIu64 "\n"
            pos_ += 2;
          } else {
            break;
          }
        }
        NodeId s = Make(NodeKind::kStringLiteral, first, {});
        nodes_[s].flags.contains_macro_token = macro;
        return s;
      }
      case TokenKind::kPunct:
        if (P("(")) {
          uint32_t close = Match(pos_);
          if (close == kNoToken) Fail();
          ++pos_;
          if (P("{")) {
            NodeId body = ParseCompound();
            if (pos_ != close) Fail();
            ++pos_;
            return Make(NodeKind::kStmtExpr, first, {{body, Role::kBody}});
          }
          NodeId inner = ParseExpr();
          if (pos_ != close) Fail();
          ++pos_;
          return Make(NodeKind::kParenExpr, first, {{inner, Role::kOperand}});
        }
        Fail();
      default:
        Fail();
    }
    Fail();
  }

  ParseMode mode_;
  std::shared_ptr<const std::string> source_;
  std::shared_ptr<const std::vector<Token>> tokens_;
  size_t n_ = 0;
  size_t pos_ = 0;
  std::vector<uint32_t> match_;
  std::vector<Node> nodes_;

  std::set<std::string> function_macros_;
  std::set<std::string> hazardous_macros_;
  std::set<std::string> typedefs_;
  std::set<std::string> vars_;
  std::set<std::string> globals_;
  std::vector<std::string> param_names_;
};

SyntaxTree ParseUnit(std::string_view src, ParseMode mode) {
  return Parser(src, mode).Run();
}

}  // namespace vulaug

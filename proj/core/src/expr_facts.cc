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

#include "expr_facts.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vulaug::internal {
namespace {

const std::unordered_map<std::string_view, std::string_view>& KnownTypedefs() {
  static const auto* table =
      new std::unordered_map<std::string_view, std::string_view>{
          {"size_t", "unsigned long"},   {"ssize_t", "long"},
          {"ptrdiff_t", "long"},         {"intptr_t", "long"},
          {"uintptr_t", "unsigned long"}, {"off_t", "long"},
          {"int8_t", "signed char"},     {"uint8_t", "unsigned char"},
          {"int16_t", "short"},          {"uint16_t", "unsigned short"},
          {"int32_t", "int"},            {"uint32_t", "unsigned int"},
          {"int64_t", "long"},           {"uint64_t", "unsigned long"},
          {"u8", "unsigned char"},       {"u16", "unsigned short"},
          {"u32", "unsigned int"},       {"u64", "unsigned long long"},
          {"s8", "signed char"},         {"s16", "short"},
          {"s32", "int"},                {"s64", "long long"},
          {"__u8", "unsigned char"},     {"__u16", "unsigned short"},
          {"__u32", "unsigned int"},     {"__u64", "unsigned long long"},
          {"bool", "_Bool"},             {"BOOL", "int"},
          {"UINT", "unsigned int"},      {"DWORD", "unsigned int"},
          {"guint", "unsigned int"},     {"gint", "int"},
          {"gsize", "unsigned long"},    {"gssize", "long"},
      };
  return *table;
}

bool IsQualifier(std::string_view w) {
  return w == "const" || w == "volatile" || w == "restrict" ||
         w == "__restrict" || w == "__restrict__" || w == "__const" ||
         w == "_Atomic";
}

bool IsStorageWord(std::string_view w) {
  return w == "static" || w == "extern" || w == "register" || w == "auto" ||
         w == "inline" || w == "__inline" || w == "__inline__" ||
         w == "_Noreturn" || w == "_Thread_local" || w == "__thread" ||
         w == "__extension__";
}

std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

// Specifier words without qualifiers, joined. Used as the verbatim spelling.
std::string Unqualified(const std::vector<std::string>& words) {
  std::vector<std::string> kept;
  for (const auto& w : words) {
    if (!IsQualifier(w)) kept.push_back(w);
  }
  return Join(kept);
}

ArithType MakeArith(int rank, bool is_unsigned, bool is_float) {
  ArithType t;
  t.rank = rank;
  t.is_unsigned = is_unsigned;
  t.is_float = is_float;
  if (is_float) {
    t.spelling = rank == 10 ? "float" : rank == 11 ? "double" : "long double";
    return t;
  }
  static constexpr std::string_view kNames[] = {"_Bool", "char",  "short",
                                                "int",   "long",  "long long"};
  std::string name(kNames[rank]);
  if (rank == 0) {
    t.is_unsigned = true;
  } else if (is_unsigned) {
    name = "unsigned " + name;
  }
  t.spelling = name;
  return t;
}

std::string_view NumberSuffix(std::string_view text, size_t* digits_end) {
  size_t i = text.size();
  while (i > 0 && (text[i - 1] == 'u' || text[i - 1] == 'U' ||
                   text[i - 1] == 'l' || text[i - 1] == 'L' ||
                   text[i - 1] == 'f' || text[i - 1] == 'F')) {
    --i;
  }
  *digits_end = i;
  return text.substr(i);
}

bool IsFloatLiteral(std::string_view text) {
  bool hex = text.size() > 1 && text[0] == '0' &&
             (text[1] == 'x' || text[1] == 'X');
  if (hex) return text.find_first_of("pP") != std::string_view::npos;
  return text.find_first_of(".eE") != std::string_view::npos;
}

std::optional<ArithType> LiteralType(std::string_view text) {
  size_t end = 0;
  std::string_view suffix = NumberSuffix(text, &end);
  if (IsFloatLiteral(text)) {
    bool hex = text.size() > 1 && (text[1] == 'x' || text[1] == 'X');
    if (!hex && (suffix == "f" || suffix == "F")) return MakeArith(10, false, true);
    if (suffix == "l" || suffix == "L") return MakeArith(12, false, true);
    if (suffix.empty()) return MakeArith(11, false, true);
    return std::nullopt;
  }
  bool is_unsigned = false;
  int longs = 0;
  for (char c : suffix) {
    if (c == 'u' || c == 'U') is_unsigned = true;
    if (c == 'l' || c == 'L') ++longs;
    if (c == 'f' || c == 'F') return std::nullopt;
  }
  std::string digits(text.substr(0, end));
  unsigned long long value = 0;
  try {
    value = std::stoull(digits, nullptr, 0);
  } catch (...) {
    return std::nullopt;
  }
  bool decimal = digits.size() == 1 || digits[0] != '0';
  // Smallest type of the standard list that holds the value.
  int rank = longs == 0 ? 3 : longs == 1 ? 4 : 5;
  if (rank == 3) {
    if (value <= 0x7fffffffULL) {
      // int
    } else if (!decimal && value <= 0xffffffffULL) {
      is_unsigned = true;
    } else {
      rank = 4;
    }
  }
  if (rank >= 4 && value > 0x7fffffffffffffffULL) {
    if (decimal && !is_unsigned) return std::nullopt;
    is_unsigned = true;
  }
  return MakeArith(rank, is_unsigned, false);
}

bool IsPrimitiveWord(std::string_view w) {
  return w == "char" || w == "short" || w == "int" || w == "long" ||
         w == "signed" || w == "unsigned" || w == "float" || w == "double" ||
         w == "_Bool" || w == "__signed__" || w == "__signed";
}

// Specifier words of a DeclSpecs or TypeName specs node.
std::vector<std::string> SpecWords(const SyntaxTree& tree, NodeId specs,
                                   bool* complex, bool* is_typedef) {
  std::vector<std::string> words;
  const Node& n = tree.node(specs);
  for (uint32_t t = n.first_token; t < n.last_token; ++t) {
    std::string_view w = tree.token_text(t);
    if (w == "{" || w == "(" || w == "[") *complex = true;
    if (w == "typedef") *is_typedef = true;
    if (w == "struct" || w == "union" || w == "enum" ||
        w == "__attribute__" || w == "typeof" || w == "__typeof__") {
      *complex = true;
    }
    if (IsStorageWord(w) || w == "typedef") continue;
    words.emplace_back(w);
  }
  return words;
}

}  // namespace

std::optional<ArithType> CanonicalArith(const std::vector<std::string>& words) {
  std::vector<std::string_view> core;
  for (const auto& w : words) {
    if (!IsQualifier(w)) core.push_back(w);
  }
  if (core.size() == 1 && !IsPrimitiveWord(core[0])) {
    auto it = KnownTypedefs().find(core[0]);
    if (it == KnownTypedefs().end()) return std::nullopt;
    std::vector<std::string> expanded;
    std::string_view rest = it->second;
    while (!rest.empty()) {
      size_t sp = rest.find(' ');
      expanded.emplace_back(rest.substr(0, sp));
      if (sp == std::string_view::npos) break;
      rest.remove_prefix(sp + 1);
    }
    return CanonicalArith(expanded);
  }
  int longs = 0, chars = 0, shorts = 0, ints = 0, floats = 0, doubles = 0,
      bools = 0;
  bool is_unsigned = false, is_signed = false;
  for (std::string_view w : core) {
    if (w == "long") ++longs;
    else if (w == "char") ++chars;
    else if (w == "short") ++shorts;
    else if (w == "int") ++ints;
    else if (w == "float") ++floats;
    else if (w == "double") ++doubles;
    else if (w == "_Bool") ++bools;
    else if (w == "unsigned") is_unsigned = true;
    else if (w == "signed" || w == "__signed__" || w == "__signed") is_signed = true;
    else return std::nullopt;
  }
  if (is_signed && is_unsigned) return std::nullopt;
  if (floats + doubles > 0) {
    if (chars + shorts + ints + bools > 0 || is_signed || is_unsigned) {
      return std::nullopt;
    }
    if (floats == 1 && doubles == 0 && longs == 0) return MakeArith(10, false, true);
    if (doubles == 1 && floats == 0 && longs == 0) return MakeArith(11, false, true);
    if (doubles == 1 && floats == 0 && longs == 1) return MakeArith(12, false, true);
    return std::nullopt;
  }
  if (bools > 0) {
    if (bools == 1 && core.size() == 1) return MakeArith(0, true, false);
    return std::nullopt;
  }
  if (chars > 0) {
    if (chars != 1 || shorts + ints + longs > 0) return std::nullopt;
    ArithType t = MakeArith(1, is_unsigned, false);
    if (is_signed) t.spelling = "signed char";
    return t;
  }
  if (shorts > 0) {
    if (shorts != 1 || longs > 0 || ints > 1) return std::nullopt;
    return MakeArith(2, is_unsigned, false);
  }
  if (ints > 1 || longs > 2) return std::nullopt;
  if (longs == 0 && ints == 0 && !is_signed && !is_unsigned) return std::nullopt;
  return MakeArith(longs == 0 ? 3 : longs == 1 ? 4 : 5, is_unsigned, false);
}

ArithType Promote(const ArithType& t) {
  if (t.is_float || t.rank >= 3) return t;
  // Every narrower type fits in int on LP64.
  return MakeArith(3, false, false);
}

ArithType UsualConversion(const ArithType& a, const ArithType& b) {
  if (a.is_float || b.is_float) {
    int ra = a.is_float ? a.rank : 0;
    int rb = b.is_float ? b.rank : 0;
    return MakeArith(std::max(ra, rb), false, true);
  }
  ArithType pa = Promote(a), pb = Promote(b);
  if (pa.is_unsigned == pb.is_unsigned) {
    return pa.rank >= pb.rank ? pa : pb;
  }
  const ArithType& u = pa.is_unsigned ? pa : pb;
  const ArithType& s = pa.is_unsigned ? pb : pa;
  if (u.rank >= s.rank) return u;
  // The signed type is wider. On LP64, long and long long can represent
  // every unsigned int but not every unsigned long.
  if (u.rank == 3) return s;
  return MakeArith(s.rank, true, false);
}

Scope::Scope(const SyntaxTree& tree, NodeId function_def) {
  for (NodeId id : tree.Preorder()) {
    const Node& n = tree.node(id);
    if (n.kind == NodeKind::kDeclaration) {
      NodeId fn = EnclosingFunction(tree, id);
      if (fn != kNoNode && fn != function_def) continue;
      NodeId specs = tree.Child(id, Role::kSpecs);
      if (specs == kNoNode) continue;
      for (NodeId c : n.children) {
        if (tree.node(c).kind != NodeKind::kInitDeclarator) continue;
        Declare(tree, specs, tree.Child(c, Role::kDeclarator));
      }
    } else if (n.kind == NodeKind::kParamDecl) {
      // Parameters of the function's own declarator only.
      NodeId list = n.parent;
      if (list == kNoNode) continue;
      NodeId decl = tree.node(list).parent;
      if (decl == kNoNode || tree.node(decl).parent != function_def) continue;
      Declare(tree, tree.Child(id, Role::kSpecs),
              tree.Child(id, Role::kDeclarator));
    }
  }
}

void Scope::Declare(const SyntaxTree& tree, NodeId specs, NodeId declarator) {
  if (specs == kNoNode || declarator == kNoNode) return;
  Symbol sym;
  bool is_typedef = false;
  sym.base_words = SpecWords(tree, specs, &sym.is_complex, &is_typedef);
  if (is_typedef) return;
  for (const auto& w : sym.base_words) {
    if (w == "volatile") sym.is_volatile = true;
  }
  NodeId name_node = tree.Child(declarator, Role::kName);
  if (name_node == kNoNode) return;  // nested or abstract declarator
  const Node& d = tree.node(declarator);
  const Node& nm = tree.node(name_node);
  for (uint32_t t = d.first_token; t < d.last_token; ++t) {
    std::string_view w = tree.token_text(t);
    if (t < nm.first_token) {
      if (w == "*") ++sym.pointer_depth;
      if (w == "volatile") sym.is_volatile = true;
    } else if (t > nm.first_token) {
      if (w == "[") sym.is_array = true;
      if (w == "(") {
        sym.is_complex = true;
        break;
      }
    }
  }
  std::string name(tree.text(name_node));
  auto [it, inserted] = symbols_.emplace(name, sym);
  if (!inserted) {
    Symbol& old = it->second;
    bool same = old.base_words == sym.base_words &&
                old.pointer_depth == sym.pointer_depth &&
                old.is_array == sym.is_array &&
                old.is_complex == sym.is_complex;
    old.is_volatile = old.is_volatile || sym.is_volatile;
    if (!same) old.ambiguous = true;
  }
}

const Symbol* Scope::Lookup(std::string_view name) const {
  auto it = symbols_.find(name);
  return it == symbols_.end() ? nullptr : &it->second;
}

Purity CheckPurity(const SyntaxTree& tree, NodeId expr, const Scope& scope) {
  bool is_volatile = false;
  std::vector<NodeId> stack = {expr};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = tree.node(id);
    if (n.flags.contains_macro_token || n.flags.contains_error) {
      return Purity::kSideEffects;
    }
    switch (n.kind) {
      case NodeKind::kCallExpr:
      case NodeKind::kAssignExpr:
      case NodeKind::kCompoundAssign:
      case NodeKind::kPreIncDec:
      case NodeKind::kPostIncDec:
      case NodeKind::kCommaExpr:
      case NodeKind::kStmtExpr:
      case NodeKind::kOpaque:
        return Purity::kSideEffects;
      case NodeKind::kSizeofExpr:
        continue;  // unevaluated
      case NodeKind::kIdentifier: {
        if (n.role == Role::kName) break;  // member name
        const Symbol* sym = scope.Lookup(tree.text(id));
        if (sym && sym->is_volatile) is_volatile = true;
        break;
      }
      case NodeKind::kCastExpr: {
        NodeId type = tree.Child(id, Role::kTypeName);
        if (type != kNoNode) {
          const Node& tn = tree.node(type);
          for (uint32_t t = tn.first_token; t < tn.last_token; ++t) {
            if (tree.token_text(t) == "volatile") is_volatile = true;
          }
        }
        NodeId operand = tree.Child(id, Role::kOperand);
        if (operand != kNoNode) stack.push_back(operand);
        continue;
      }
      default:
        break;
    }
    stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
  return is_volatile ? Purity::kVolatile : Purity::kPure;
}

namespace {

std::string PointerSpelling(const std::vector<std::string>& base, int depth) {
  std::string out = Join(base);
  out += ' ';
  out.append(static_cast<size_t>(depth), '*');
  return out;
}

}  // namespace

std::optional<ValueType> OperandType(const SyntaxTree& tree, NodeId expr,
                                     const Scope& scope) {
  expr = StripParens(tree, expr);
  const Node& n = tree.node(expr);
  switch (n.kind) {
    case NodeKind::kNumberLiteral: {
      auto t = LiteralType(tree.text(expr));
      if (!t) return std::nullopt;
      ValueType v;
      v.arith = *t;
      v.verbatim = t->spelling;
      return v;
    }
    case NodeKind::kCharLiteral: {
      std::string_view text = tree.text(expr);
      if (text.empty() || text[0] != '\'') return std::nullopt;
      ValueType v;
      v.arith = MakeArith(3, false, false);
      v.verbatim = "int";
      return v;
    }
    case NodeKind::kIdentifier: {
      const Symbol* sym = scope.Lookup(tree.text(expr));
      if (!sym || sym->is_complex || sym->ambiguous) return std::nullopt;
      int depth = sym->pointer_depth + (sym->is_array ? 1 : 0);
      ValueType v;
      v.from_declaration = true;
      if (depth > 0) {
        v.is_pointer = true;
        v.verbatim = PointerSpelling(sym->base_words, depth);
        return v;
      }
      auto t = CanonicalArith(sym->base_words);
      if (!t) return std::nullopt;
      v.arith = *t;
      v.verbatim = Unqualified(sym->base_words);
      return v;
    }
    case NodeKind::kSubscriptExpr: {
      NodeId base = StripParens(tree, tree.Child(expr, Role::kBase));
      if (base == kNoNode || tree.node(base).kind != NodeKind::kIdentifier) {
        return std::nullopt;
      }
      const Symbol* sym = scope.Lookup(tree.text(base));
      if (!sym || sym->is_complex || sym->ambiguous) return std::nullopt;
      int depth = sym->pointer_depth + (sym->is_array ? 1 : 0) - 1;
      // Multi-dimensional arrays need the dimension count; skip them.
      if (depth != 0 || sym->pointer_depth + (sym->is_array ? 1 : 0) != 1) {
        return std::nullopt;
      }
      auto t = CanonicalArith(sym->base_words);
      if (!t) return std::nullopt;
      ValueType v;
      v.arith = *t;
      v.verbatim = Unqualified(sym->base_words);
      v.from_declaration = true;
      return v;
    }
    case NodeKind::kCastExpr: {
      NodeId type = tree.Child(expr, Role::kTypeName);
      if (type == kNoNode) return std::nullopt;
      NodeId specs = tree.Child(type, Role::kSpecs);
      if (specs == kNoNode || tree.Child(type, Role::kDeclarator) != kNoNode) {
        return std::nullopt;
      }
      bool complex = false, is_typedef = false;
      auto words = SpecWords(tree, specs, &complex, &is_typedef);
      if (complex) return std::nullopt;
      auto t = CanonicalArith(words);
      if (!t) return std::nullopt;
      ValueType v;
      v.arith = *t;
      v.verbatim = Unqualified(words);
      v.from_declaration = true;
      return v;
    }
    default:
      return std::nullopt;
  }
}

bool IsComparisonOp(std::string_view op) {
  return op == "<" || op == ">" || op == "<=" || op == ">=" || op == "==" ||
         op == "!=";
}

int BinaryPrecedenceOf(std::string_view op) {
  if (op == "*" || op == "/" || op == "%") return 10;
  if (op == "+" || op == "-") return 9;
  if (op == "<<" || op == ">>") return 8;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "==" || op == "!=") return 6;
  if (op == "&") return 5;
  if (op == "^") return 4;
  if (op == "|") return 3;
  if (op == "&&") return 2;
  if (op == "||") return 1;
  return 0;
}

namespace {

// Spelling for an arithmetic result, preferring an operand's declared
// spelling when it names exactly the result type without promotion.
std::string ResultSpelling(const ArithType& result, const ValueType& a,
                           const ValueType& b) {
  for (const ValueType* v : {&a, &b}) {
    if (v->from_declaration && v->arith == result && v->arith.rank >= 3) {
      return v->verbatim;
    }
  }
  return result.spelling;
}

}  // namespace

std::optional<std::string> BinaryResultType(const SyntaxTree& tree,
                                            NodeId binary, const Scope& scope) {
  const Node& n = tree.node(binary);
  if (n.kind != NodeKind::kBinaryExpr) return std::nullopt;
  std::string_view op = tree.op(binary);
  auto lhs = OperandType(tree, tree.Child(binary, Role::kLhs), scope);
  auto rhs = OperandType(tree, tree.Child(binary, Role::kRhs), scope);
  if (!lhs || !rhs) return std::nullopt;
  if (IsComparisonOp(op) || op == "&&" || op == "||") {
    if (lhs->is_pointer != rhs->is_pointer && !(op == "&&" || op == "||")) {
      return std::nullopt;
    }
    return std::string("int");
  }
  if (lhs->is_pointer || rhs->is_pointer) {
    if (lhs->is_pointer && rhs->is_pointer) return std::nullopt;
    const ValueType& ptr = lhs->is_pointer ? *lhs : *rhs;
    const ValueType& other = lhs->is_pointer ? *rhs : *lhs;
    if (other.arith.is_float) return std::nullopt;
    if (op == "+" || (op == "-" && lhs->is_pointer)) return ptr.verbatim;
    return std::nullopt;
  }
  bool integral_only = op == "%" || op == "<<" || op == ">>" || op == "&" ||
                       op == "|" || op == "^";
  if (integral_only && (lhs->arith.is_float || rhs->arith.is_float)) {
    return std::nullopt;
  }
  if (op == "<<" || op == ">>") {
    ArithType result = Promote(lhs->arith);
    if (lhs->from_declaration && lhs->arith == result) return lhs->verbatim;
    return result.spelling;
  }
  ArithType result = UsualConversion(lhs->arith, rhs->arith);
  return ResultSpelling(result, *lhs, *rhs);
}

bool MaybeFloating(const SyntaxTree& tree, NodeId expr, const Scope& scope) {
  std::vector<NodeId> stack = {expr};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = tree.node(id);
    switch (n.kind) {
      case NodeKind::kNumberLiteral:
        if (IsFloatLiteral(tree.text(id))) return true;
        break;
      case NodeKind::kIdentifier: {
        if (n.role == Role::kName) break;
        const Symbol* sym = scope.Lookup(tree.text(id));
        if (sym && sym->pointer_depth == 0) {
          for (const auto& w : sym->base_words) {
            if (w == "float" || w == "double") return true;
          }
        }
        break;
      }
      case NodeKind::kTypeName:
        for (uint32_t t = n.first_token; t < n.last_token; ++t) {
          std::string_view w = tree.token_text(t);
          if (w == "float" || w == "double") return true;
        }
        break;
      case NodeKind::kSizeofExpr:
        continue;
      default:
        break;
    }
    stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
  return false;
}

NodeId EnclosingFunction(const SyntaxTree& tree, NodeId node) {
  while (node != kNoNode) {
    if (tree.node(node).kind == NodeKind::kFunctionDef) return node;
    node = tree.node(node).parent;
  }
  return kNoNode;
}

NodeId StripParens(const SyntaxTree& tree, NodeId node) {
  while (node != kNoNode && tree.node(node).kind == NodeKind::kParenExpr) {
    node = tree.Child(node, Role::kOperand);
  }
  return node;
}

std::set<std::string> ReferencedNames(const SyntaxTree& tree, NodeId node) {
  std::set<std::string> out;
  std::vector<NodeId> stack = {node};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = tree.node(id);
    if (n.kind == NodeKind::kIdentifier &&
        !(n.role == Role::kName && n.parent != kNoNode &&
          tree.node(n.parent).kind == NodeKind::kMemberExpr)) {
      out.emplace(tree.text(id));
    }
    if (n.kind == NodeKind::kOpaque) {
      for (uint32_t t = n.first_token; t < n.last_token; ++t) {
        if (tree.tokens()[t].kind == TokenKind::kIdentifier) {
          out.emplace(tree.token_text(t));
        }
      }
    }
    stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
  return out;
}

std::set<std::string> DeclaredNames(const SyntaxTree& tree, NodeId compound) {
  std::set<std::string> out;
  for (NodeId c : tree.node(compound).children) {
    const Node& n = tree.node(c);
    if (n.kind != NodeKind::kDeclaration) continue;
    for (NodeId d : n.children) {
      if (tree.node(d).kind != NodeKind::kInitDeclarator) continue;
      NodeId decl = tree.Child(d, Role::kDeclarator);
      while (decl != kNoNode) {
        NodeId name = tree.Child(decl, Role::kName);
        if (name != kNoNode) {
          out.emplace(tree.text(name));
          break;
        }
        decl = tree.Child(decl, Role::kDeclarator);
      }
    }
  }
  return out;
}

}  // namespace vulaug::internal

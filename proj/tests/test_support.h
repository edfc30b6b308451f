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

// Helpers shared by the test binaries.

#ifndef VULAUG_TESTS_TEST_SUPPORT_H_
#define VULAUG_TESTS_TEST_SUPPORT_H_

#include <stdlib.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vulaug/syntax.h"
#include "vulaug/transform_rules.h"

namespace vulaug::testing {

inline std::string DataDir() { return VULAUG_TEST_DATA_DIR; }

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

class ScratchDir {
 public:
  ScratchDir() {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / "vulaug-test-XXXXXX")
            .string();
    if (::mkdtemp(tmpl.data()) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    path_ = tmpl;
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  std::string path() const { return path_; }
  std::string file(const std::string& name) const {
    return (std::filesystem::path(path_) / name).string();
  }

 private:
  std::string path_;
};

// Result of applying the `index`-th site of `rule`, or nullopt when there
// are not that many sites.
inline std::optional<std::string> ApplyNth(const std::string& src,
                                           RuleId rule, size_t index = 0) {
  SyntaxTree tree = ParseUnit(src, ParseMode::kFunctionFragment);
  RuleSet rules;
  rules.Add(rule);
  SiteScan scan = FindSites(tree, rules);
  if (index >= scan.sites.size()) return std::nullopt;
  return Emit(tree.source(), ApplyRule(tree, scan.sites[index]));
}

inline std::vector<std::string> ApplyAll(const std::string& src,
                                         RuleId rule) {
  std::vector<std::string> out;
  SyntaxTree tree = ParseUnit(src, ParseMode::kFunctionFragment);
  RuleSet rules;
  rules.Add(rule);
  for (const TransformSite& site : FindSites(tree, rules).sites) {
    out.push_back(Emit(tree.source(), ApplyRule(tree, site)));
  }
  return out;
}

// A small evaluator for side-effect-free C integer expressions over named
// variables. It is written from the C operator table and shares no code
// with the library, so tests can use it to judge rewrites.
class ExprEval {
 public:
  using Env = std::map<std::string, long long>;

  // nullopt on division by zero or a syntax error.
  static std::optional<long long> Eval(std::string_view text, const Env& env) {
    ExprEval e(text, env);
    try {
      long long v = e.Ternary();
      e.SkipSpace();
      if (e.pos_ != e.text_.size()) return std::nullopt;
      return v;
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  }

 private:
  ExprEval(std::string_view text, const Env& env) : text_(text), env_(env) {}

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool Accept(std::string_view tok) {
    SkipSpace();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    // Reject a prefix match of a longer operator.
    if (tok.size() == 1 && pos_ + 1 < text_.size()) {
      char n = text_[pos_ + 1];
      std::string two{tok[0], n};
      static const char* kLonger[] = {"<=", ">=", "==", "!=", "&&", "||",
                                      "<<", ">>"};
      for (const char* l : kLonger) {
        if (two == l) return false;
      }
    }
    if (tok.size() == 2 && (tok == "<<" || tok == ">>") &&
        pos_ + 2 < text_.size() && text_[pos_ + 2] == '=') {
      return false;
    }
    pos_ += tok.size();
    return true;
  }
  [[noreturn]] void Fail() { throw std::domain_error("eval"); }

  long long Ternary() {
    long long c = LogicalOr();
    if (Accept("?")) {
      long long a = Ternary();
      if (!Accept(":")) Fail();
      long long b = Ternary();
      return c ? a : b;
    }
    return c;
  }
  long long LogicalOr() {
    long long v = LogicalAnd();
    while (Accept("||")) {
      long long r = LogicalAnd();
      v = (v || r) ? 1 : 0;
    }
    return v;
  }
  long long LogicalAnd() {
    long long v = BitOr();
    while (Accept("&&")) {
      long long r = BitOr();
      v = (v && r) ? 1 : 0;
    }
    return v;
  }
  long long BitOr() {
    long long v = BitXor();
    while (Accept("|")) v |= BitXor();
    return v;
  }
  long long BitXor() {
    long long v = BitAnd();
    while (Accept("^")) v ^= BitAnd();
    return v;
  }
  long long BitAnd() {
    long long v = Equality();
    while (Accept("&")) v &= Equality();
    return v;
  }
  long long Equality() {
    long long v = Relational();
    for (;;) {
      if (Accept("==")) {
        v = v == Relational();
      } else if (Accept("!=")) {
        v = v != Relational();
      } else {
        return v;
      }
    }
  }
  long long Relational() {
    long long v = Shift();
    for (;;) {
      if (Accept("<=")) {
        v = v <= Shift();
      } else if (Accept(">=")) {
        v = v >= Shift();
      } else if (Accept("<")) {
        v = v < Shift();
      } else if (Accept(">")) {
        v = v > Shift();
      } else {
        return v;
      }
    }
  }
  long long Shift() {
    long long v = Additive();
    for (;;) {
      if (Accept("<<")) {
        v = v << Additive();
      } else if (Accept(">>")) {
        v = v >> Additive();
      } else {
        return v;
      }
    }
  }
  long long Additive() {
    long long v = Multiplicative();
    for (;;) {
      if (Accept("+")) {
        v += Multiplicative();
      } else if (Accept("-")) {
        v -= Multiplicative();
      } else {
        return v;
      }
    }
  }
  long long Multiplicative() {
    long long v = Unary();
    for (;;) {
      if (Accept("*")) {
        v *= Unary();
      } else if (Accept("/")) {
        long long d = Unary();
        if (d == 0) Fail();
        v /= d;
      } else if (Accept("%")) {
        long long d = Unary();
        if (d == 0) Fail();
        v %= d;
      } else {
        return v;
      }
    }
  }
  long long Unary() {
    if (Accept("!")) return !Unary();
    if (Accept("-")) return -Unary();
    if (Accept("~")) return ~Unary();
    if (Accept("+")) return Unary();
    return Primary();
  }
  long long Primary() {
    SkipSpace();
    if (Accept("(")) {
      long long v = Ternary();
      if (!Accept(")")) Fail();
      return v;
    }
    size_t start = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      return std::stoll(std::string(text_.substr(start, pos_ - start)), nullptr,
                        0);
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) Fail();
    auto it = env_.find(std::string(text_.substr(start, pos_ - start)));
    if (it == env_.end()) Fail();
    return it->second;
  }

  std::string_view text_;
  const Env& env_;
  size_t pos_ = 0;
};

// Text between the first `(` after `if` and its matching `)`.
inline std::string IfCondition(const std::string& src) {
  size_t at = src.find("if");
  size_t open = src.find('(', at);
  int depth = 0;
  for (size_t i = open; i < src.size(); ++i) {
    if (src[i] == '(') ++depth;
    if (src[i] == ')' && --depth == 0) {
      return src.substr(open + 1, i - open - 1);
    }
  }
  return {};
}

}  // namespace vulaug::testing

#endif  // VULAUG_TESTS_TEST_SUPPORT_H_

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

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vulaug/syntax.h"

namespace vulaug {
namespace {

constexpr std::array<std::string_view, 56> kKeywords = {
    "auto",          "break",        "case",          "char",
    "const",         "continue",     "default",       "do",
    "double",        "else",         "enum",          "extern",
    "float",         "for",          "goto",          "if",
    "inline",        "int",          "long",          "register",
    "restrict",      "return",       "short",         "signed",
    "sizeof",        "static",       "struct",        "switch",
    "typedef",       "union",        "unsigned",      "void",
    "volatile",      "while",        "_Bool",         "_Complex",
    "_Alignas",      "_Alignof",     "_Atomic",       "_Generic",
    "_Noreturn",     "_Static_assert", "_Thread_local", "__inline",
    "__inline__",    "__restrict",   "__restrict__",  "__const",
    "__volatile__",  "__attribute__", "__extension__", "__asm__",
    "asm",           "__typeof__",   "typeof",        "__signed__",
};

// Longest match first within each length class.
constexpr std::array<std::string_view, 3> kPunct3 = {"...", "<<=", ">>="};
constexpr std::array<std::string_view, 21> kPunct2 = {
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "*=", "/=", "%=", "+=", "-=", "&=", "^=", "|=", "##", "::"};
constexpr std::string_view kPunct1 = "[](){}.&*+-~!/%<>^|?:;=,#";

bool IsIdentStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$';
}

bool IsIdentChar(unsigned char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9');
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    out.reserve(src_.size() / 4 + 8);
    bool at_line_start = true;
    while (pos_ < src_.size()) {
      unsigned char c = src_[pos_];
      if (c == '\n') {
        at_line_start = true;
        ++pos_;
        continue;
      }
      if (IsSpace(c)) {
        ++pos_;
        continue;
      }
      if (c == '\\' && pos_ + 1 < src_.size() &&
          (src_[pos_ + 1] == '\n' || src_[pos_ + 1] == '\r')) {
        // Line splice outside a directive.
        pos_ += 2;
        continue;
      }
      if (c == '/' && Peek(1) == '/') {
        SkipLineComment();
        continue;
      }
      if (c == '/' && Peek(1) == '*') {
        SkipBlockComment();
        continue;
      }
      size_t start = pos_;
      if (c == '#' && at_line_start) {
        LexDirective();
        out.push_back({TokenKind::kDirective, {start, pos_}});
        continue;
      }
      at_line_start = false;
      out.push_back(LexToken());
    }
    return out;
  }

 private:
  char Peek(size_t k) const {
    return pos_ + k < src_.size() ? src_[pos_ + k] : '\0';
  }

  void SkipLineComment() {
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && Peek(1) == '\n') {
        pos_ += 2;
        continue;
      }
      ++pos_;
    }
  }

  void SkipBlockComment() {
    pos_ += 2;
    while (pos_ < src_.size()) {
      if (src_[pos_] == '*' && Peek(1) == '/') {
        pos_ += 2;
        return;
      }
      ++pos_;
    }
  }

  void SkipQuoted(char quote) {
    ++pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size()) {
        pos_ += 2;
        continue;
      }
      if (c == '\n') return;  // unterminated: stop at end of line
      ++pos_;
      if (c == quote) return;
    }
  }

  // Consumes a directive through the end of its logical line. The trailing
  // newline is left as trivia.
  void LexDirective() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') break;
      if (c == '\\' && (Peek(1) == '\n' || (Peek(1) == '\r' && Peek(2) == '\n'))) {
        pos_ += Peek(1) == '\r' ? 3 : 2;
        continue;
      }
      if (c == '/' && Peek(1) == '*') {
        SkipBlockComment();
        continue;
      }
      if (c == '/' && Peek(1) == '/') {
        SkipLineComment();
        break;
      }
      if (c == '"' || c == '\'') {
        SkipQuoted(c);
        continue;
      }
      ++pos_;
    }
    // Drop trailing whitespace (e.g. '\r') from the token.
    while (pos_ > 0 && (src_[pos_ - 1] == ' ' || src_[pos_ - 1] == '\t' ||
                        src_[pos_ - 1] == '\r')) {
      --pos_;
    }
  }

  Token LexToken() {
    size_t start = pos_;
    unsigned char c = src_[pos_];
    if (IsIdentStart(c)) {
      while (pos_ < src_.size() && IsIdentChar(src_[pos_])) ++pos_;
      std::string_view word = src_.substr(start, pos_ - start);
      bool prefix = word == "L" || word == "u" || word == "U" || word == "u8";
      if (prefix && pos_ < src_.size() &&
          (src_[pos_] == '"' || src_[pos_] == '\'')) {
        char q = src_[pos_];
        SkipQuoted(q);
        return {q == '"' ? TokenKind::kString : TokenKind::kChar,
                {start, pos_}};
      }
      return {IsCKeyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier,
              {start, pos_}};
    }
    if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
      ++pos_;
      while (pos_ < src_.size()) {
        unsigned char d = src_[pos_];
        if ((d == '+' || d == '-') &&
            (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E' ||
             src_[pos_ - 1] == 'p' || src_[pos_ - 1] == 'P')) {
          ++pos_;
          continue;
        }
        if (IsIdentChar(d) || d == '.') {
          ++pos_;
          continue;
        }
        break;
      }
      return {TokenKind::kNumber, {start, pos_}};
    }
    if (c == '"' || c == '\'') {
      SkipQuoted(c);
      return {c == '"' ? TokenKind::kString : TokenKind::kChar, {start, pos_}};
    }
    std::string_view rest = src_.substr(pos_);
    for (std::string_view p : kPunct3) {
      if (rest.starts_with(p)) {
        pos_ += 3;
        return {TokenKind::kPunct, {start, pos_}};
      }
    }
    for (std::string_view p : kPunct2) {
      if (rest.starts_with(p)) {
        pos_ += 2;
        return {TokenKind::kPunct, {start, pos_}};
      }
    }
    ++pos_;
    if (kPunct1.find(static_cast<char>(c)) != std::string_view::npos) {
      return {TokenKind::kPunct, {start, pos_}};
    }
    return {TokenKind::kUnknown, {start, pos_}};
  }

  std::string_view src_;
  size_t pos_ = 0;
};

// Directive text with comments stripped and whitespace runs collapsed.
std::string NormalizeDirective(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  size_t i = 0;
  auto flush_space = [&] {
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\\' && i + 1 < text.size() &&
        (text[i + 1] == '\n' || text[i + 1] == '\r')) {
      pending_space = true;
      i += 2;
      continue;
    }
    if (IsSpace(static_cast<unsigned char>(c))) {
      pending_space = true;
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      size_t close = text.find("*/", i + 2);
      i = close == std::string_view::npos ? text.size() : close + 2;
      pending_space = true;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') break;
    if (c == '"' || c == '\'') {
      flush_space();
      size_t j = i + 1;
      while (j < text.size() && text[j] != c && text[j] != '\n') {
        if (text[j] == '\\') ++j;
        ++j;
      }
      j = std::min(j + 1, text.size());
      out.append(text.substr(i, j - i));
      i = j;
      continue;
    }
    flush_space();
    out.push_back(c);
    ++i;
  }
  return out;
}

}  // namespace

bool IsCKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> Lex(std::string_view src) { return Lexer(src).Run(); }

TokenFingerprint Fingerprint(std::string_view src) {
  // FNV-1a over token texts separated by a byte that cannot start a token.
  constexpr uint64_t kOffset = 14695981039346656037ULL;
  constexpr uint64_t kPrime = 1099511628211ULL;
  uint64_t h = kOffset;
  auto mix = [&](std::string_view bytes) {
    for (unsigned char b : bytes) {
      h ^= b;
      h *= kPrime;
    }
  };
  bool first = true;
  for (const Token& tok : Lex(src)) {
    if (!first) mix("\x1f");
    first = false;
    std::string_view text = src.substr(tok.span.start, tok.span.size());
    if (tok.kind == TokenKind::kDirective) {
      mix(NormalizeDirective(text));
    } else {
      mix(text);
    }
  }
  return {h};
}

}  // namespace vulaug

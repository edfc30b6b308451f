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
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.h"
#include "vulaug/dataset_io.h"
#include "vulaug/syntax.h"

namespace vulaug {
namespace {

using testing::DataDir;
using testing::ReadFile;

std::vector<NodeId> OfKind(const SyntaxTree& t, NodeKind k) {
  std::vector<NodeId> out;
  for (NodeId id : t.Preorder()) {
    if (t.node(id).kind == k) out.push_back(id);
  }
  return out;
}

TEST(LexTest, CoversEveryByte) {
  std::string src =
      "int f(int a) /* c */ {\n#define X 1 \\\n  2\n  return a+X; // t\n}\n";
  std::vector<Token> toks = Lex(src);
  ASSERT_FALSE(toks.empty());
  size_t prev = 0;
  for (const Token& t : toks) {
    ASSERT_GE(t.span.start, prev);
    std::string gap = src.substr(prev, t.span.start - prev);
    std::string rest;
    for (size_t i = 0; i < gap.size(); ++i) {
      if (gap.compare(i, 2, "/*") == 0) {
        i = gap.find("*/", i + 2) + 1;
      } else if (gap.compare(i, 2, "//") == 0) {
        i = gap.find('\n', i);
        if (i == std::string::npos) break;
      } else {
        rest += gap[i];
      }
    }
    ASSERT_EQ(rest.find_first_not_of(" \t\r\n"), std::string::npos)
        << "non-trivia bytes before offset " << t.span.start;
    prev = t.span.end;
  }
  auto directive = std::find_if(toks.begin(), toks.end(), [](const Token& t) {
    return t.kind == TokenKind::kDirective;
  });
  ASSERT_NE(directive, toks.end());
  EXPECT_EQ(src.substr(directive->span.start, directive->span.size()),
            "#define X 1 \\\n  2");
}

TEST(ParseTest, MinimalFunction) {
  SyntaxTree t = ParseUnit("int f(void){return 0;}", ParseMode::kFunctionFragment);
  ASSERT_EQ(t.FunctionDefs().size(), 1u);
  EXPECT_EQ(t.FunctionName(t.FunctionDefs()[0]), "f");
  EXPECT_EQ(OfKind(t, NodeKind::kReturnStmt).size(), 1u);
}

TEST(ParseTest, IfWithBinaryCondition) {
  SyntaxTree t = ParseUnit("int f(){ if(a>b) x=1; else x=2; }",
                           ParseMode::kFunctionFragment);
  std::vector<NodeId> ifs = OfKind(t, NodeKind::kIfStmt);
  ASSERT_EQ(ifs.size(), 1u);
  NodeId cond = t.Child(ifs[0], Role::kCond);
  ASSERT_NE(cond, kNoNode);
  EXPECT_EQ(t.node(cond).kind, NodeKind::kBinaryExpr);
  EXPECT_EQ(t.op(cond), ">");
  EXPECT_NE(t.Child(ifs[0], Role::kElse), kNoNode);
}

TEST(ParseTest, MacroStatementIsFlaggedAndLossless) {
  std::string src = "void f(int x)\n{\n    FOO_MACRO(x);\n    x++;\n}\n";
  SyntaxTree t = ParseUnit(src, ParseMode::kFunctionFragment);
  EXPECT_EQ(t.Reconstruct(), src);
  bool flagged = false;
  for (NodeId id : t.Preorder()) {
    const Node& n = t.node(id);
    if (IsStatementKind(n.kind) && n.flags.contains_macro_token &&
        t.text(id).find("FOO_MACRO") != std::string_view::npos &&
        n.kind != NodeKind::kCompoundStmt) {
      flagged = true;
    }
  }
  EXPECT_TRUE(flagged);
}

TEST(ParseTest, UnanalyzableRegionBecomesOpaque) {
  std::string src = "int f(int a)\n{\n    a = (int[]){1, 2}[0] @ 3;\n    return a;\n}\n";
  SyntaxTree t = ParseUnit(src, ParseMode::kFunctionFragment);
  EXPECT_EQ(t.Reconstruct(), src);
  bool opaque_error = false;
  for (NodeId id : OfKind(t, NodeKind::kOpaque)) {
    opaque_error |= t.node(id).flags.contains_error;
  }
  EXPECT_TRUE(opaque_error);
}

TEST(ParseTest, NoFunctionThrows) {
  EXPECT_THROW(ParseUnit("int x = 3;", ParseMode::kFunctionFragment), ParseError);
  EXPECT_THROW(ParseUnit("", ParseMode::kFunctionFragment), ParseError);
}

TEST(ParseTest, TranslationUnitFindsMain) {
  std::string src =
      "#include <stdio.h>\nstatic int g;\nstatic int h(void) { return g; }\n"
      "int main(void) { return h(); }\n";
  SyntaxTree t = ParseUnit(src, ParseMode::kTranslationUnit);
  EXPECT_TRUE(t.HasFunctionNamed("main"));
  EXPECT_TRUE(t.HasFunctionNamed("h"));
  EXPECT_EQ(t.Reconstruct(), src);
}

TEST(ParseTest, ChildSpansNestInsideParents) {
  std::vector<CodeSample> corpus =
      ReadCanonicalFile(DataDir() + "/corpus/functions.jsonl");
  for (const CodeSample& s : corpus) {
    SyntaxTree t = ParseUnit(s.source, ParseMode::kFunctionFragment);
    ASSERT_EQ(t.Reconstruct(), s.source) << s.id;
    for (NodeId id : t.Preorder()) {
      const Node& n = t.node(id);
      Span prev{n.span.start, n.span.start};
      for (NodeId c : n.children) {
        const Node& cn = t.node(c);
        ASSERT_EQ(cn.parent, id);
        ASSERT_TRUE(n.span.Contains(cn.span)) << s.id;
        ASSERT_GE(cn.span.start, prev.end) << s.id;
        prev = cn.span;
      }
    }
  }
}

TEST(SpanTest, IntersectionOfInsertionPoints) {
  Span a{2, 5};
  EXPECT_TRUE(a.Intersects(Span{4, 8}));
  EXPECT_FALSE(a.Intersects(Span{5, 8}));
  EXPECT_TRUE(a.Intersects(Span{3, 3}));
  EXPECT_FALSE(a.Intersects(Span{2, 2}));
  EXPECT_FALSE(a.Intersects(Span{5, 5}));
  EXPECT_TRUE((Span{7, 7}.Intersects(Span{7, 7})));
  EXPECT_FALSE((Span{7, 7}.Intersects(Span{8, 8})));
}

TEST(EmitTest, IdentityAndReplacement) {
  EXPECT_EQ(Emit("abc", {}), "abc");
  EXPECT_EQ(Emit("a+=1;", {Edit{Span{0, 4}, "a = a + 1"}}), "a = a + 1;");
}

TEST(EmitTest, OverlapThrows) {
  EXPECT_THROW(Emit("abcdef", {Edit{{0, 3}, "x"}, Edit{{2, 4}, "y"}}),
               OverlappingEdits);
  EXPECT_THROW(Emit("abcdef", {Edit{{1, 4}, "x"}, Edit{{2, 2}, "y"}}),
               OverlappingEdits);
}

// Oracle: applying disjoint edits one at a time from the highest offset down
// never shifts the spans of the edits still pending.
TEST(EmitTest, MatchesDescendingSequentialApplication) {
  std::mt19937 rng(11);
  for (int round = 0; round < 500; ++round) {
    std::string src(30, 'a');
    for (char& c : src) c = static_cast<char>('a' + rng() % 26);
    std::vector<Edit> edits;
    size_t pos = 0;
    while (pos < src.size()) {
      size_t start = pos + rng() % 5;
      size_t len = rng() % 4;
      if (start + len > src.size()) break;
      edits.push_back(Edit{{start, start + len},
                           std::string(rng() % 3, static_cast<char>('A' + rng() % 26))});
      pos = start + len + 1;
    }
    std::vector<Edit> shuffled = edits;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::string expected = src;
    for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
      expected.replace(it->span.start, it->span.size(), it->replacement);
    }
    ASSERT_EQ(Emit(src, shuffled), expected) << "round " << round;
  }
}

TEST(EmitTest, MappedSpansLocateReplacements) {
  std::string src = "0123456789";
  std::vector<Edit> edits = {{{2, 4}, "XYZW"}, {{7, 7}, "++"}, {{8, 10}, ""}};
  std::string out = Emit(src, edits);
  std::vector<Span> mapped = MapEditedSpans(edits);
  ASSERT_EQ(mapped.size(), 3u);
  EXPECT_EQ(out.substr(mapped[0].start, mapped[0].size()), "XYZW");
  EXPECT_EQ(out.substr(mapped[1].start, mapped[1].size()), "++");
  EXPECT_TRUE(mapped[2].empty());
}

TEST(FingerprintTest, WhitespaceInsensitive) {
  EXPECT_EQ(Fingerprint("a = 1;"), Fingerprint("a=1 ;"));
  EXPECT_EQ(Fingerprint("a = 1; /* note */"), Fingerprint("a = 1;"));
  EXPECT_NE(Fingerprint("a = 1;"), Fingerprint("a = 2;"));
  EXPECT_NE(Fingerprint("ab"), Fingerprint("a b"));
}

// Brute force: insert random whitespace between tokens and count the
// distinct digests.
TEST(FingerprintTest, RandomWhitespacePerturbations) {
  std::string src = ReadFile(DataDir() + "/samples/copy_data.c");
  std::vector<Token> toks = Lex(src);
  std::mt19937 rng(5);
  const char* kGaps[] = {" ", "  ", "\n", "\t", "\n    ", " /* x */ "};
  std::set<uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    std::string out;
    for (const Token& t : toks) {
      out += kGaps[rng() % 6];
      out.append(src, t.span.start, t.span.size());
    }
    seen.insert(Fingerprint(out).hash);
  }
  EXPECT_EQ(seen.size(), 1u);
  EXPECT_EQ(*seen.begin(), Fingerprint(src).hash);
}

TEST(ShapeTest, IgnoresFormatting) {
  SyntaxTree a = ParseUnit("int f(){ x=a+b; }", ParseMode::kFunctionFragment);
  SyntaxTree b = ParseUnit("int f()\n{\n  x = a + b;\n}\n", ParseMode::kFunctionFragment);
  EXPECT_EQ(a.ShapeSignature(), b.ShapeSignature());
  SyntaxTree c = ParseUnit("int f(){ x=b+a; }", ParseMode::kFunctionFragment);
  EXPECT_NE(a.ShapeSignature(), c.ShapeSignature());
}

}  // namespace
}  // namespace vulaug

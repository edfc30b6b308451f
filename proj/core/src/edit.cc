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
#include <string>
#include <vector>

#include "vulaug/syntax.h"

namespace vulaug {
namespace {

std::vector<const Edit*> SortedChecked(const std::vector<Edit>& edits,
                                       size_t limit) {
  std::vector<const Edit*> order;
  order.reserve(edits.size());
  for (const Edit& e : edits) {
    if (e.span.start > e.span.end || e.span.end > limit) {
      throw std::out_of_range("edit span outside source");
    }
    order.push_back(&e);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Edit* a, const Edit* b) { return a->span < b->span; });
  for (size_t i = 1; i < order.size(); ++i) {
    const Span& a = order[i - 1]->span;
    const Span& b = order[i]->span;
    if (a.Intersects(b) || b.start < a.end) {
      throw OverlappingEdits("edits overlap at bytes " +
                             std::to_string(b.start) + ".." +
                             std::to_string(a.end));
    }
  }
  return order;
}

}  // namespace

std::string Emit(std::string_view src, const std::vector<Edit>& edits) {
  std::vector<const Edit*> order = SortedChecked(edits, src.size());
  std::string out;
  out.reserve(src.size() + 64);
  size_t cursor = 0;
  for (const Edit* e : order) {
    out.append(src.substr(cursor, e->span.start - cursor));
    out.append(e->replacement);
    cursor = e->span.end;
  }
  out.append(src.substr(cursor));
  return out;
}

std::vector<Span> MapEditedSpans(const std::vector<Edit>& edits) {
  std::vector<const Edit*> order =
      SortedChecked(edits, std::string::npos);
  std::vector<Span> out;
  long long shift = 0;
  for (const Edit* e : order) {
    size_t start = static_cast<size_t>(static_cast<long long>(e->span.start) +
                                       shift);
    out.push_back({start, start + e->replacement.size()});
    shift += static_cast<long long>(e->replacement.size()) -
             static_cast<long long>(e->span.size());
  }
  return out;
}

}  // namespace vulaug

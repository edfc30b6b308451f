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
#include <cctype>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vulaug/dataset_io.h"

namespace vulaug {

uint64_t BoundedRandom(std::mt19937_64& rng, uint64_t bound) {
  // Lemire's multiply-and-reject; the library distributions are not
  // specified bit-for-bit across standard libraries.
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < bound) {
    uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

std::optional<int> DateYear(const std::string& date) {
  if (date.size() < 4) return std::nullopt;
  int year = 0;
  for (size_t i = 0; i < 4; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(date[i]))) return std::nullopt;
    year = year * 10 + (date[i] - '0');
  }
  if (date.size() > 4 && std::isdigit(static_cast<unsigned char>(date[4]))) {
    return std::nullopt;
  }
  return year;
}

SplitResult Split(const std::vector<CodeSample>& samples, const SplitSpec& spec) {
  SplitResult out;
  std::mt19937_64 rng(spec.seed);
  if (spec.kind == SplitSpec::Kind::kRandomRatio) {
    uint64_t sum = 0;
    for (uint32_t r : spec.ratios) {
      if (r == 0) throw std::invalid_argument("split ratios must be positive");
      sum += r;
    }
    std::vector<CodeSample> items = samples;
    SeededShuffle(items, rng);
    size_t n = items.size();
    size_t cut1 = static_cast<size_t>(n * spec.ratios[0] / sum);
    size_t cut2 = static_cast<size_t>(n * (spec.ratios[0] + spec.ratios[1]) / sum);
    out.train.assign(items.begin(), items.begin() + cut1);
    out.valid.assign(items.begin() + cut1, items.begin() + cut2);
    out.test.assign(items.begin() + cut2, items.end());
    return out;
  }
  std::vector<CodeSample> late;
  for (const CodeSample& s : samples) {
    std::optional<int> year = s.published ? DateYear(*s.published) : std::nullopt;
    if (!year) throw MissingDate("record '" + s.id + "' has no usable date");
    if (*year < spec.cutoff_year) {
      out.train.push_back(s);
    } else {
      late.push_back(s);
    }
  }
  SeededShuffle(late, rng);
  size_t half = late.size() / 2;
  out.valid.assign(late.begin(), late.begin() + half);
  out.test.assign(late.begin() + half, late.end());
  return out;
}

namespace {

// Takes up to `want` variants, one per root per round, visiting roots in
// `roots` order with each root's variants pre-shuffled.
std::vector<const CodeSample*> RoundRobin(
    const std::vector<std::string>& roots,
    std::unordered_map<std::string, std::vector<const CodeSample*>>& by_root,
    size_t want) {
  std::vector<const CodeSample*> picked;
  for (size_t round = 0; picked.size() < want; ++round) {
    bool any = false;
    for (const std::string& root : roots) {
      auto it = by_root.find(root);
      if (it == by_root.end() || round >= it->second.size()) continue;
      any = true;
      picked.push_back(it->second[round]);
      if (picked.size() == want) break;
    }
    if (!any) break;
  }
  return picked;
}

}  // namespace

BalanceResult BuildTrainingSet(const std::vector<CodeSample>& train,
                               const std::vector<CodeSample>& variants,
                               const BalanceSpec& spec) {
  if (spec.expansion_factor < 1) {
    throw std::invalid_argument("expansion factor must be at least 1");
  }
  std::unordered_map<std::string, const CodeSample*> originals;
  std::vector<const CodeSample*> vul, non;
  for (const CodeSample& s : train) {
    if (s.provenance != Provenance::kOriginal) continue;
    originals.emplace(s.id, &s);
    (s.label == Label::kVulnerable ? vul : non).push_back(&s);
  }
  std::unordered_map<std::string, std::vector<const CodeSample*>> by_root;
  std::vector<const CodeSample*> pool;
  for (const CodeSample& v : variants) {
    if (v.provenance != Provenance::kGenerated) continue;
    if (!v.parent_id || !originals.count(*v.parent_id)) {
      throw LeakageError("variant '" + v.id + "' has root '" +
                         v.parent_id.value_or("<none>") +
                         "' outside the training split");
    }
    if (originals.at(*v.parent_id)->label != v.label) {
      throw DataError("variant '" + v.id + "' disagrees with its root's label");
    }
    pool.push_back(&v);
  }

  std::mt19937_64 rng(spec.seed);
  // Shuffle each root's variants, then the root visiting order.
  for (const CodeSample* v : pool) by_root[*v->parent_id].push_back(v);
  std::vector<std::string> root_order;
  for (const CodeSample& s : train) {
    if (s.provenance == Provenance::kOriginal && by_root.count(s.id)) {
      root_order.push_back(s.id);
    }
  }
  for (const std::string& root : root_order) SeededShuffle(by_root[root], rng);
  SeededShuffle(root_order, rng);
  std::unordered_set<std::string> vul_ids;
  for (const CodeSample* s : vul) vul_ids.insert(s->id);

  size_t n_vul = vul.size();
  size_t target = n_vul * static_cast<size_t>(spec.expansion_factor);
  BalanceResult result;
  auto emit = [&](const CodeSample* s) {
    result.samples.push_back(*s);
    if (s->label == Label::kVulnerable) {
      ++result.vulnerable;
    } else {
      ++result.non_vulnerable;
    }
  };

  std::vector<std::string> vul_roots, non_roots;
  for (const std::string& r : root_order) {
    (vul_ids.count(r) ? vul_roots : non_roots).push_back(r);
  }
  for (const CodeSample* s : vul) emit(s);
  for (const CodeSample* s : RoundRobin(vul_roots, by_root, target - n_vul)) emit(s);

  std::vector<const CodeSample*> non_sample = non;
  SeededShuffle(non_sample, rng);
  if (spec.mode == BalanceSpec::Mode::kAugmVul) {
    size_t want = result.vulnerable;
    if (non_sample.size() > want) non_sample.resize(want);
    for (const CodeSample* s : non_sample) emit(s);
  } else {
    if (non_sample.size() > n_vul) non_sample.resize(n_vul);
    std::unordered_set<std::string> chosen;
    for (const CodeSample* s : non_sample) {
      emit(s);
      chosen.insert(s->id);
    }
    std::vector<std::string> chosen_roots;
    for (const std::string& r : non_roots) {
      if (chosen.count(r)) chosen_roots.push_back(r);
    }
    size_t want = result.vulnerable > result.non_vulnerable
                      ? result.vulnerable - result.non_vulnerable
                      : 0;
    for (const CodeSample* s : RoundRobin(chosen_roots, by_root, want)) emit(s);
  }
  if (result.vulnerable < target || result.non_vulnerable != result.vulnerable) {
    result.insufficient_variants = true;
    result.warning = "target " + std::to_string(target) +
                     " per class not reached: vulnerable=" +
                     std::to_string(result.vulnerable) +
                     " non_vulnerable=" + std::to_string(result.non_vulnerable);
  }
  return result;
}

}  // namespace vulaug

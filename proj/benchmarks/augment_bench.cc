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
#include <vector>

#include "benchmark/benchmark.h"
#include "vulaug/augment_engine.h"
#include "vulaug/dataset_io.h"
#include "vulaug/syntax.h"
#include "vulaug/transform_rules.h"

namespace vulaug {
namespace {

const std::vector<CodeSample>& Corpus() {
  static const std::vector<CodeSample> corpus = ReadCanonicalFile(
      std::string(VULAUG_BENCH_DATA_DIR) + "/corpus/functions.jsonl");
  return corpus;
}

size_t CorpusBytes() {
  size_t n = 0;
  for (const CodeSample& s : Corpus()) n += s.source.size();
  return n;
}

void BM_ParseCorpus(benchmark::State& state) {
  for (auto _ : state) {
    for (const CodeSample& s : Corpus()) {
      benchmark::DoNotOptimize(ParseUnit(s.source, ParseMode::kFunctionFragment));
    }
  }
  state.SetBytesProcessed(state.iterations() * CorpusBytes());
  state.SetItemsProcessed(state.iterations() * Corpus().size());
}
BENCHMARK(BM_ParseCorpus)->Unit(benchmark::kMillisecond);

void BM_FindSites(benchmark::State& state) {
  std::vector<SyntaxTree> trees;
  for (const CodeSample& s : Corpus()) {
    trees.push_back(ParseUnit(s.source, ParseMode::kFunctionFragment));
  }
  RuleSet rules = RuleSet::All();
  size_t sites = 0;
  for (auto _ : state) {
    for (const SyntaxTree& t : trees) sites += FindSites(t, rules).sites.size();
  }
  state.SetItemsProcessed(state.iterations() * trees.size());
  state.counters["sites/sample"] =
      static_cast<double>(sites) / (state.iterations() * trees.size());
}
BENCHMARK(BM_FindSites)->Unit(benchmark::kMillisecond);

// Arg is the chain depth.
void BM_GenerateVariants(benchmark::State& state) {
  AugmentConfig cfg;
  cfg.max_chain_depth = static_cast<int>(state.range(0));
  size_t variants = 0;
  for (auto _ : state) {
    for (const CodeSample& s : Corpus()) {
      RuleStats stats;
      variants += GenerateVariants(s, cfg, &stats).size();
    }
  }
  state.counters["variants/s"] =
      benchmark::Counter(static_cast<double>(variants), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_GenerateVariants)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_RunCorpusWorkers(benchmark::State& state) {
  AugmentConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunCorpus(Corpus(), cfg, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * Corpus().size());
}
BENCHMARK(BM_RunCorpusWorkers)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vulaug

BENCHMARK_MAIN();

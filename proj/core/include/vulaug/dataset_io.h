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

// Dataset files, tabular import, splitting and class balancing.

#ifndef VULAUG_DATASET_IO_H_
#define VULAUG_DATASET_IO_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "vulaug/augment_engine.h"

namespace vulaug {

// Base of every input-data error; the CLI maps it to the data exit code.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingColumn : public DataError {
 public:
  using DataError::DataError;
};

class MalformedRow : public DataError {
 public:
  MalformedRow(size_t row, const std::string& what)
      : DataError("row " + std::to_string(row) + ": " + what), row_(row) {}
  size_t row() const { return row_; }

 private:
  size_t row_;
};

class SchemaError : public DataError {
 public:
  using DataError::DataError;
};

class MissingDate : public DataError {
 public:
  using DataError::DataError;
};

class LeakageError : public DataError {
 public:
  using DataError::DataError;
};

// ---- canonical line-delimited format -----------------------------------

inline constexpr int kSchemaVersion = 1;

std::string SampleToJsonLine(const CodeSample& sample);
// Throws SchemaError on a malformed record.
CodeSample SampleFromJsonLine(const std::string& line);

void WriteCanonical(const std::vector<CodeSample>& samples, std::ostream& out);
std::vector<CodeSample> ReadCanonical(std::istream& in);
// File variants throw DataError on I/O failure.
void WriteCanonicalFile(const std::vector<CodeSample>& samples,
                        const std::string& path);
std::vector<CodeSample> ReadCanonicalFile(const std::string& path);

// ---- tabular import -----------------------------------------------------

// RFC 4180 records: quoted fields may hold delimiters, quotes ("") and line
// breaks. Throws MalformedRow on an unterminated quote.
std::vector<std::vector<std::string>> ReadDelimited(std::istream& in,
                                                    char delimiter = ',');

struct ColumnMap {
  std::string code = "func_before";
  std::string label = "vul";
  std::optional<std::string> id;
  std::optional<std::string> cwe;
  std::optional<std::string> cve;
  std::optional<std::string> project;
  std::optional<std::string> date;
};

struct ImportResult {
  std::vector<CodeSample> samples;
  size_t empty_dropped = 0;
};

ImportResult ImportTabular(std::istream& in, const ColumnMap& columns,
                           char delimiter = ',');
ImportResult ImportTabularFile(const std::string& path,
                               const ColumnMap& columns, char delimiter = ',');

struct FilterResult {
  std::vector<CodeSample> samples;
  size_t duplicates = 0;
  size_t parse_failures = 0;
};

// Keeps the first of each fingerprint-equal group and drops records that do
// not parse.
FilterResult DedupAndFilter(const std::vector<CodeSample>& samples,
                            ParseMode mode = ParseMode::kFunctionFragment);

// ---- splitting ----------------------------------------------------------

struct SplitSpec {
  enum class Kind { kRandomRatio, kDateCutoff };
  Kind kind = Kind::kRandomRatio;
  std::array<uint32_t, 3> ratios = {8, 1, 1};
  int cutoff_year = 2017;
  uint64_t seed = 0;
};

struct SplitResult {
  std::vector<CodeSample> train;
  std::vector<CodeSample> valid;
  std::vector<CodeSample> test;
};

SplitResult Split(const std::vector<CodeSample>& samples, const SplitSpec& spec);

// Year of an ISO-style date, or nullopt when it has no leading year.
std::optional<int> DateYear(const std::string& date);

// Uniform integer in [0, bound) from a 64-bit engine, unbiased.
uint64_t BoundedRandom(std::mt19937_64& rng, uint64_t bound);

template <typename T>
void SeededShuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(BoundedRandom(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

// ---- balancing ----------------------------------------------------------

struct BalanceSpec {
  enum class Mode { kAugmVul, kAugmBoth };
  Mode mode = Mode::kAugmVul;
  int expansion_factor = 3;
  uint64_t seed = 0;
};

struct BalanceResult {
  std::vector<CodeSample> samples;
  size_t vulnerable = 0;
  size_t non_vulnerable = 0;
  bool insufficient_variants = false;
  std::string warning;
};

// `train` holds originals; `variants` holds generated samples. Variants
// whose root original is not in `train` raise LeakageError.
BalanceResult BuildTrainingSet(const std::vector<CodeSample>& train,
                               const std::vector<CodeSample>& variants,
                               const BalanceSpec& spec);

}  // namespace vulaug

#endif  // VULAUG_DATASET_IO_H_

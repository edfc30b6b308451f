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

#include "vulaug/dataset_io.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

namespace vulaug {
namespace {

using json = nlohmann::ordered_json;

bool IsValidUtf8(const std::string& s) {
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3
                 : (c >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) return false;
    for (size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    if (len == 2 && c < 0xC2) return false;
    i += len;
  }
  return true;
}

std::string Latin1ToUtf8(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c < 0x80) {
      out += ch;
    } else {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

std::string Utf8ToLatin1(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out += s[i];
    } else if ((c & 0xE0) == 0xC0 && i + 1 < s.size() && c <= 0xC3) {
      out += static_cast<char>(((c & 0x03) << 6) |
                               (static_cast<unsigned char>(s[i + 1]) & 0x3F));
      ++i;
    } else {
      throw SchemaError("latin1 source holds a code point above U+00FF");
    }
  }
  return out;
}

json OptionalField(const std::optional<std::string>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<std::string> ReadOptional(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw SchemaError(std::string("field '") + key + "' is not text");
  return it->get<std::string>();
}

std::string Trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

std::optional<Label> ParseLabel(std::string text) {
  text = Trim(text);
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (text == "1" || text == "1.0" || text == "true" || text == "vulnerable" ||
      text == "yes") {
    return Label::kVulnerable;
  }
  if (text == "0" || text == "0.0" || text == "false" ||
      text == "non_vulnerable" || text == "no") {
    return Label::kNonVulnerable;
  }
  return std::nullopt;
}

std::optional<std::string> NonEmpty(std::string s) {
  s = Trim(std::move(s));
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

std::string SampleToJsonLine(const CodeSample& s) {
  json j;
  j["id"] = s.id;
  j["label"] = s.label == Label::kVulnerable ? 1 : 0;
  j["cwe"] = OptionalField(s.cwe);
  j["cve"] = OptionalField(s.cve);
  j["project"] = OptionalField(s.project);
  j["date"] = OptionalField(s.published);
  j["provenance"] = s.provenance == Provenance::kOriginal ? "original" : "generated";
  j["parent_id"] = OptionalField(s.parent_id);
  json lineage = json::array();
  for (const LineageStep& step : s.lineage) {
    lineage.push_back({{"rule", std::string(RuleName(step.rule))},
                       {"start", step.anchor.start},
                       {"end", step.anchor.end}});
  }
  j["lineage"] = std::move(lineage);
  if (IsValidUtf8(s.source)) {
    j["source"] = s.source;
  } else {
    j["source"] = Latin1ToUtf8(s.source);
    j["source_encoding"] = "latin1";
  }
  return j.dump();
}

CodeSample SampleFromJsonLine(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid record: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("record is not an object");
  CodeSample s;
  try {
    s.id = j.at("id").get<std::string>();
    int label = j.at("label").get<int>();
    if (label != 0 && label != 1) throw SchemaError("label must be 0 or 1");
    s.label = label == 1 ? Label::kVulnerable : Label::kNonVulnerable;
    s.cwe = ReadOptional(j, "cwe");
    s.cve = ReadOptional(j, "cve");
    s.project = ReadOptional(j, "project");
    s.published = ReadOptional(j, "date");
    std::string prov = j.at("provenance").get<std::string>();
    if (prov == "original") {
      s.provenance = Provenance::kOriginal;
    } else if (prov == "generated") {
      s.provenance = Provenance::kGenerated;
    } else {
      throw SchemaError("unknown provenance '" + prov + "'");
    }
    s.parent_id = ReadOptional(j, "parent_id");
    for (const json& step : j.at("lineage")) {
      std::string name = step.at("rule").get<std::string>();
      auto rule = ParseRuleId(name);
      if (!rule) throw SchemaError("unknown rule '" + name + "' in lineage");
      s.lineage.push_back(
          {*rule, {step.at("start").get<size_t>(), step.at("end").get<size_t>()}});
    }
    s.source = j.at("source").get<std::string>();
    if (auto enc = ReadOptional(j, "source_encoding"); enc && *enc == "latin1") {
      s.source = Utf8ToLatin1(s.source);
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("record field error: ") + e.what());
  }
  if ((s.provenance == Provenance::kOriginal) != s.lineage.empty()) {
    throw SchemaError("record " + s.id + ": provenance disagrees with lineage");
  }
  return s;
}

void WriteCanonical(const std::vector<CodeSample>& samples, std::ostream& out) {
  json header = {{"schema_version", kSchemaVersion}, {"format", "vulaug.dataset"}};
  out << header.dump() << '\n';
  for (const CodeSample& s : samples) out << SampleToJsonLine(s) << '\n';
}

std::vector<CodeSample> ReadCanonical(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("missing header record");
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception&) {
    throw SchemaError("header record is not valid JSON");
  }
  if (!header.is_object() || !header.contains("schema_version")) {
    throw SchemaError("header record lacks schema_version");
  }
  if (header["schema_version"] != kSchemaVersion) {
    throw SchemaError("unsupported schema_version " +
                      header["schema_version"].dump());
  }
  std::vector<CodeSample> out;
  std::unordered_set<std::string> ids;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(SampleFromJsonLine(line));
    } catch (const SchemaError& e) {
      throw SchemaError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!ids.insert(out.back().id).second) {
      throw SchemaError("line " + std::to_string(line_no) + ": duplicate id '" +
                        out.back().id + "'");
    }
  }
  return out;
}

void WriteCanonicalFile(const std::vector<CodeSample>& samples,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  WriteCanonical(samples, out);
  out.flush();
  if (!out) throw DataError("write to '" + path + "' failed");
}

std::vector<CodeSample> ReadCanonicalFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  try {
    return ReadCanonical(in);
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

ImportResult ImportTabular(std::istream& in, const ColumnMap& columns,
                           char delimiter) {
  auto rows = ReadDelimited(in, delimiter);
  if (rows.empty()) throw MissingColumn("input has no header row");
  const auto& header = rows[0];
  auto find = [&](const std::string& name) -> size_t {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw MissingColumn("column '" + name + "' not found");
    return static_cast<size_t>(it - header.begin());
  };
  auto find_opt = [&](const std::optional<std::string>& name) -> std::optional<size_t> {
    if (!name) return std::nullopt;
    return find(*name);
  };
  size_t code = find(columns.code);
  size_t label = find(columns.label);
  auto id = find_opt(columns.id);
  auto cwe = find_opt(columns.cwe);
  auto cve = find_opt(columns.cve);
  auto project = find_opt(columns.project);
  auto date = find_opt(columns.date);

  ImportResult result;
  std::unordered_set<std::string> ids;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      throw MalformedRow(r, "expected " + std::to_string(header.size()) +
                                " fields, found " + std::to_string(row.size()));
    }
    if (Trim(row[code]).empty()) {
      ++result.empty_dropped;
      continue;
    }
    CodeSample s;
    auto lab = ParseLabel(row[label]);
    if (!lab) throw MalformedRow(r, "unrecognized label '" + row[label] + "'");
    s.label = *lab;
    s.source = row[code];
    s.id = id ? Trim(row[*id]) : "s" + std::to_string(r);
    if (s.id.empty()) throw MalformedRow(r, "empty id");
    if (!ids.insert(s.id).second) throw MalformedRow(r, "duplicate id '" + s.id + "'");
    if (cwe) s.cwe = NonEmpty(row[*cwe]);
    if (cve) s.cve = NonEmpty(row[*cve]);
    if (project) s.project = NonEmpty(row[*project]);
    if (date) s.published = NonEmpty(row[*date]);
    result.samples.push_back(std::move(s));
  }
  return result;
}

ImportResult ImportTabularFile(const std::string& path,
                               const ColumnMap& columns, char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  return ImportTabular(in, columns, delimiter);
}

FilterResult DedupAndFilter(const std::vector<CodeSample>& samples,
                            ParseMode mode) {
  FilterResult result;
  std::unordered_set<uint64_t> seen;
  for (const CodeSample& s : samples) {
    if (!seen.insert(Fingerprint(s.source).hash).second) {
      ++result.duplicates;
      continue;
    }
    try {
      ParseUnit(s.source, mode);
    } catch (const ParseError&) {
      ++result.parse_failures;
      continue;
    }
    result.samples.push_back(s);
  }
  return result;
}

}  // namespace vulaug

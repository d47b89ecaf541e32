// Copyright 2026 The Agatha Pipeline Authors.
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

#include "agatha/tagmap.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "agatha/error.h"

namespace agatha {

namespace {

std::vector<std::string> SplitString(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos
                                           ? std::string_view::npos
                                           : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

// Calls fn(line_no, fields) for every data line; skips blanks, '#'
// comments and a header whose first field is `header`.
template <typename Fn>
void ForEachCsvRow(std::string_view csv, std::string_view header, Fn fn) {
  std::istringstream in{std::string(csv)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with('#')) continue;
    auto fields = SplitString(line, ',');
    if (fields[0] == header) continue;
    fn(line_no, fields);
  }
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("tagmap", "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

bool IsSourceCategory(std::string_view category) {
  return std::find(kSourceCategories.begin(), kSourceCategories.end(),
                   category) != kSourceCategories.end();
}

MappingTable MappingTable::Parse(std::string_view rules_csv,
                                 std::string_view manifest_csv) {
  MappingTable table;
  std::optional<int> total;
  ForEachCsvRow(manifest_csv, "category", [&](int line, const auto &fields) {
    int count = -1;
    if (fields.size() == 2) {
      std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), count);
    }
    if (count < 0) {
      throw Error("tagmap", "manifest line " + std::to_string(line) +
                                ": expected 'category,count'");
    }
    if (fields[0] == "TOTAL") {
      total = count;
      return;
    }
    if (!IsSourceCategory(fields[0])) {
      throw Error("tagmap", "manifest line " + std::to_string(line) +
                                ": unknown category '" + fields[0] + "'");
    }
    if (!table.manifest_.emplace(fields[0], count).second) {
      throw Error("tagmap", "manifest lists '" + fields[0] + "' twice");
    }
  });
  int sum = 0;
  for (const auto &[category, count] : table.manifest_) sum += count;
  if (total && *total != sum) {
    throw Error("tagmap", "manifest categories sum to " + std::to_string(sum) +
                              " but TOTAL is " + std::to_string(*total));
  }
  table.declared_total_ = total.value_or(sum);

  ForEachCsvRow(rules_csv, "category", [&](int line, const auto &fields) {
    if (fields.size() != 3 || fields[2].empty()) {
      throw Error("tagmap", "rule line " + std::to_string(line) +
                                ": expected 'category,features,eagles'");
    }
    if (!IsSourceCategory(fields[0])) {
      throw Error("tagmap", "rule line " + std::to_string(line) +
                                ": unknown category '" + fields[0] + "'");
    }
    MappingRule rule;
    rule.category = fields[0];
    if (!fields[1].empty()) rule.features = SplitString(fields[1], '|');
    std::sort(rule.features.begin(), rule.features.end());
    rule.eagles = fields[2];
    Key key{rule.category, rule.features};
    if (!table.index_.emplace(key, table.rules_.size()).second) {
      throw Error("tagmap", "rule line " + std::to_string(line) +
                                ": duplicate key (" + rule.category + ", {" +
                                Join(rule.features, "|") + "})");
    }
    table.rules_.push_back(std::move(rule));
  });

  std::map<std::string, int> counts;
  for (const MappingRule &rule : table.rules_) ++counts[rule.category];
  for (std::string_view category : kSourceCategories) {
    std::string name(category);
    auto expected = table.manifest_.find(name);
    int want = expected == table.manifest_.end() ? 0 : expected->second;
    int have = counts.count(name) ? counts[name] : 0;
    if (want != have) {
      throw Error("tagmap", "count mismatch for " + name + ": manifest says " +
                                std::to_string(want) + ", rule file has " +
                                std::to_string(have));
    }
  }
  return table;
}

MappingTable::Conversion MappingTable::Convert(
    std::string_view category, std::vector<std::string> features) const {
  std::sort(features.begin(), features.end());
  Key key{std::string(category), std::move(features)};
  auto it = index_.find(key);
  if (it != index_.end()) return {rules_[it->second].eagles, false};
  std::vector<std::string> requested = std::move(key.second);
  key.second.clear();
  it = index_.find(key);
  if (it != index_.end()) return {rules_[it->second].eagles, true};
  throw Error("tagmap", "unmapped tag (" + key.first + ", {" +
                            Join(requested, "|") + "})");
}

int MappingTable::CountFor(std::string_view category) const {
  return static_cast<int>(std::count_if(
      rules_.begin(), rules_.end(),
      [&](const MappingRule &r) { return r.category == category; }));
}

MappingTable LoadMappingTable(const std::filesystem::path &rule_file,
                              const std::filesystem::path &manifest_file) {
  return MappingTable::Parse(ReadFile(rule_file), ReadFile(manifest_file));
}

std::string ConvertTag(std::string_view category,
                       std::span<const std::string> features,
                       const MappingTable &table) {
  return table.Convert(category, {features.begin(), features.end()}).eagles;
}

std::pair<std::string, std::vector<std::string>> SplitSourceTag(
    std::string_view tag) {
  auto parts = SplitString(tag, '|');
  std::string category = std::move(parts.front());
  parts.erase(parts.begin());
  std::erase(parts, std::string());
  return {std::move(category), std::move(parts)};
}

Document ConvertDocument(const Document &doc, const MappingTable &table,
                         ConversionStats *stats) {
  Document out = doc;
  for (Sentence &sentence : out.sentences) {
    for (Token &token : sentence.tokens) {
      auto [category, features] = SplitSourceTag(token.pos);
      MappingTable::Conversion conv;
      try {
        conv = table.Convert(category, std::move(features));
      } catch (const Error &e) {
        throw Error("tagmap", "document " + doc.doc_id + " sentence " +
                                  std::to_string(sentence.index) + " token " +
                                  std::to_string(token.index) + ": " +
                                  e.message());
      }
      token.pos = std::move(conv.eagles);
      if (stats != nullptr) {
        ++stats->converted;
        if (conv.fallback) ++stats->fallbacks;
      }
    }
  }
  return out;
}

}  // namespace agatha

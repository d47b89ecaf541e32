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

// Rule-table conversion from Universal-Dependencies-style categories and
// features to EAGLES tags.
//
// Rule CSV:     category,features,eagles   (features '|'-joined key=value)
// Manifest CSV: category,count ... TOTAL,<n>

#ifndef AGATHA_TAGMAP_H_
#define AGATHA_TAGMAP_H_

#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agatha/doc_model.h"

namespace agatha {

inline constexpr std::array<std::string_view, 14> kSourceCategories = {
    "NOUN", "VERB", "PROPN", "PRON",  "ADJ",   "DET",   "AUX",
    "ADP",  "NUM",  "PUNCT", "CCONJ", "SCONJ", "INTJ",  "ADV"};

bool IsSourceCategory(std::string_view category);

struct MappingRule {
  std::string category;
  std::vector<std::string> features;  // sorted
  std::string eagles;

  bool operator==(const MappingRule &) const = default;
};

class MappingTable {
 public:
  struct Conversion {
    std::string eagles;
    bool fallback = false;  // resolved through the bare-category rule
  };

  // Throws agatha::Error("tagmap", ...) on unknown categories, duplicate
  // (category, features) keys, or counts that disagree with the manifest.
  static MappingTable Parse(std::string_view rules_csv,
                            std::string_view manifest_csv);

  // Exact lookup on the sorted features, then the bare-category rule.
  // Throws agatha::Error("tagmap", ...) when neither exists.
  Conversion Convert(std::string_view category,
                     std::vector<std::string> features) const;

  const std::vector<MappingRule> &rules() const { return rules_; }
  const std::map<std::string, int> &manifest() const { return manifest_; }
  int declared_total() const { return declared_total_; }
  size_t size() const { return rules_.size(); }
  int CountFor(std::string_view category) const;

 private:
  using Key = std::pair<std::string, std::vector<std::string>>;

  std::vector<MappingRule> rules_;
  std::map<std::string, int> manifest_;
  int declared_total_ = 0;
  std::map<Key, size_t> index_;
};

MappingTable LoadMappingTable(const std::filesystem::path &rule_file,
                              const std::filesystem::path &manifest_file);

std::string ConvertTag(std::string_view category,
                       std::span<const std::string> features,
                       const MappingTable &table);

// Splits "CATEGORY|k=v|k=v" into the category and its features.
std::pair<std::string, std::vector<std::string>> SplitSourceTag(
    std::string_view tag);

struct ConversionStats {
  int converted = 0;
  int fallbacks = 0;
};

// Replaces every token's source tag with its EAGLES tag; other layers are
// untouched. Errors name the sentence and token.
Document ConvertDocument(const Document &doc, const MappingTable &table,
                         ConversionStats *stats = nullptr);

}  // namespace agatha

#endif  // AGATHA_TAGMAP_H_

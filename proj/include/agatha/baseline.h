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

// Deterministic rule-based annotator. It fills every annotation layer from
// raw text so the pipeline can run without trained models; accuracy is not a
// goal.

#ifndef AGATHA_BASELINE_H_
#define AGATHA_BASELINE_H_

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "agatha/doc_model.h"

namespace agatha {

struct Gazetteer {
  std::string name;
  std::set<std::string> entries;  // lowercase; may span several tokens
  NerLabel label = NerLabel::kPerson;
};

// File format: first line "#label <NER>", then one lowercase entry per line.
Gazetteer ParseGazetteer(std::string name, std::string_view content);
Gazetteer LoadGazetteer(const std::filesystem::path &path);

// surface -> EAGLES tag. Lookups try the surface, then its lowercase form.
using PosLexicon = std::map<std::string, std::string, std::less<>>;

// File format: "surface<TAB>tag" per line; '#' lines are comments.
PosLexicon ParsePosLexicon(std::string_view content);
PosLexicon LoadPosLexicon(const std::filesystem::path &path);

struct DocumentInfo {
  std::string doc_id;
  std::string case_id;
  std::string language = "pt";
};

inline constexpr std::string_view kFallbackNounTag = "NCMS000";

// Tokenizes, splits sentences, tags and assigns heuristic dependencies and
// roles. Never fails; text without verbs yields no predicates.
Document AnnotateBaseline(std::string_view raw, const PosLexicon &lexicon,
                          std::span<const Gazetteer> gazetteers,
                          const DocumentInfo &info);

// Whitespace and punctuation tokenization; dates and numbers stay whole.
std::vector<std::string> Tokenize(std::string_view raw);

}  // namespace agatha

#endif  // AGATHA_BASELINE_H_

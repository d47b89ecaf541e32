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

// Layered annotation model shared by every pipeline stage: surface, lemma,
// EAGLES part of speech, named entity, dependency head and semantic roles.

#ifndef AGATHA_DOC_MODEL_H_
#define AGATHA_DOC_MODEL_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agatha {

enum class NerLabel { kPerson, kLocation, kOrganization, kDateTime, kCurrency };

// "PERSON", "LOCATION", "ORGANIZATION", "DATE_TIME", "CURRENCY".
std::string_view NerName(NerLabel label);
std::optional<NerLabel> ParseNer(std::string_view name);

// Closed role inventory: actor, object, time, location.
enum class RoleLabel { kA0, kA1, kAmTmp, kAmLoc };

// "A0", "A1", "AM-TMP", "AM-LOC". ParseRole also accepts "AM_TMP"/"AM_LOC".
std::string_view RoleName(RoleLabel label);
std::optional<RoleLabel> ParseRole(std::string_view name);

// EAGLES coarse classes are carried by the first characters of the tag.
inline bool IsVerbTag(std::string_view pos) { return pos.starts_with('V'); }
inline bool IsNounTag(std::string_view pos) { return pos.starts_with('N'); }
inline bool IsDateTag(std::string_view pos) { return pos.starts_with('W'); }
inline bool IsCurrencyTag(std::string_view pos) {
  return pos.starts_with("Zm");
}

struct Token {
  int index = 0;  // 1-based position in the sentence
  std::string surface;
  std::string lemma;
  std::string pos;
  std::optional<NerLabel> ner;
  std::optional<int> head;  // index of the head token; nullopt for the root
  std::string deprel;
  std::map<int, RoleLabel> roles;  // predicate token index -> role

  bool IsVerb() const { return IsVerbTag(pos); }
  bool operator==(const Token &) const = default;
};

struct Sentence {
  int index = 0;  // 0-based position in the document
  std::vector<Token> tokens;
  std::vector<int> predicates;  // sorted verb indices carrying role fillers

  // Token with the given 1-based index, or nullptr.
  const Token *Find(int token_index) const;
  bool operator==(const Sentence &) const = default;
};

struct Document {
  std::string doc_id;
  std::string case_id;
  std::string language;
  std::vector<Sentence> sentences;

  bool operator==(const Document &) const = default;
};

// Sorted token indices referenced as predicates by some role.
std::vector<int> ComputePredicates(const Sentence &sentence);

struct Violation {
  int sentence = -1;  // -1 for document-level rules
  int token = -1;     // -1 for sentence-level rules
  std::string rule;
  std::string detail;

  std::string ToString() const;
  bool operator==(const Violation &) const = default;
};

// Checks every model invariant and reports all violations; never throws.
// Rules: doc-id, case-id, language, sentence-index, empty-sentence, index,
// self-head, head-range, root-count, cycle, ner-pos, role-range,
// role-predicate, predicates.
std::vector<Violation> ValidateDocument(const Document &doc);

}  // namespace agatha

#endif  // AGATHA_DOC_MODEL_H_

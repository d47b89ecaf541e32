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

// Classified criminal-law thesaurus and the two matchers run against event
// mentions: exact lowercase match and Levenshtein near-match.
//
// Thesaurus TSV: term<TAB>category<TAB>concept_iri<TAB>source, '#' comments.
// Manifest CSV:  category,count ... TOTAL,<n>

#ifndef AGATHA_LEXICON_H_
#define AGATHA_LEXICON_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agatha/events.h"

namespace agatha {

enum class Category { kActor, kEvent, kPlace, kObject };
enum class TermSource { kEurovocCriminalLaw, kExtendedOntology };

std::string_view CategoryName(Category category);  // "Actor", ...
std::optional<Category> ParseCategory(std::string_view name);
std::string_view SourceName(TermSource source);  // "EUROVOC_CRIMINAL_LAW", ...
std::optional<TermSource> ParseSource(std::string_view name);

struct LexiconEntry {
  std::string term;
  Category category = Category::kEvent;
  std::string concept_iri;
  TermSource source = TermSource::kEurovocCriminalLaw;

  bool operator==(const LexiconEntry &) const = default;
};

class Thesaurus {
 public:
  Thesaurus() = default;

  // Throws agatha::Error("lexicon", ...) on duplicate (term, source), empty
  // terms or malformed IRIs.
  static Thesaurus FromEntries(std::vector<LexiconEntry> entries);

  // Parses the TSV; when a manifest is given the per-category counts must
  // match it exactly.
  static Thesaurus Parse(std::string_view tsv,
                         std::optional<std::string_view> manifest_csv,
                         std::string_view source_name = "<thesaurus>");

  // Adds the other thesaurus' entries; (term, source) stays unique.
  void Merge(const Thesaurus &other);

  const std::vector<LexiconEntry> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  std::map<Category, int> CategoryCounts() const;

  // Entries whose lowercase term equals `lowercase_term`, in load order.
  std::vector<const LexiconEntry *> Lookup(std::string_view lowercase_term) const;

  // Lowercased term of entries()[i], as code points.
  const std::u32string &LowerTerm(size_t i) const { return lower_terms_[i]; }

 private:
  void Add(LexiconEntry entry);

  std::vector<LexiconEntry> entries_;
  std::vector<std::u32string> lower_terms_;
  std::map<std::string, std::vector<size_t>, std::less<>> index_;
};

Thesaurus LoadThesaurus(
    const std::filesystem::path &file,
    const std::optional<std::filesystem::path> &manifest = std::nullopt);

// Edit distance over Unicode scalar values (UTF-8 input is decoded).
int Levenshtein(std::u32string_view a, std::u32string_view b);
int Levenshtein(std::string_view a, std::string_view b);

enum class MatchMethod { kExact, kLevenshtein };
std::string_view MethodName(MatchMethod method);  // "EXACT", "LEVENSHTEIN"

struct MatchResult {
  LexiconEntry entry;
  std::string surface;
  int distance = 0;
  MatchMethod method = MatchMethod::kExact;

  bool operator==(const MatchResult &) const = default;
};

// Accepted distance by term length in code points: short terms must match
// exactly, medium ones allow one edit, long ones two.
struct FuzzyPolicy {
  int short_max = 0;
  int medium_max = 1;
  int long_max = 2;
  size_t medium_min_length = 4;
  size_t long_min_length = 8;

  int Threshold(size_t term_length) const;
  // Every band's threshold capped at `max_distance`.
  FuzzyPolicy Capped(int max_distance) const;
  bool Valid() const;
};

// `mention` must already be lowercase; otherwise throws std::invalid_argument.
std::optional<MatchResult> MatchExact(std::string_view mention,
                                      const Thesaurus &thesaurus);

// All entries within the policy threshold, sorted by (distance, term).
std::vector<MatchResult> MatchFuzzy(std::string_view mention,
                                    const Thesaurus &thesaurus,
                                    const FuzzyPolicy &policy);

// Best match for a (possibly multi-token) normalized mention: the full
// string and each whitespace-separated token are tried, lowest distance
// wins and the full string wins ties.
std::optional<MatchResult> MatchMention(std::string_view mention,
                                        const Thesaurus &thesaurus,
                                        const FuzzyPolicy &policy);

enum class Slot { kAction, kActor, kObject, kPlace, kTime };
std::string_view SlotName(Slot slot);

struct SlotMatch {
  Slot slot = Slot::kAction;
  std::string mention;  // normalized mention (the action lemma for kAction)
  MatchResult result;

  bool operator==(const SlotMatch &) const = default;
};

using EventMatches = std::map<std::string, std::vector<SlotMatch>>;

// Matches each event's action, actors, objects, place and time. Events
// without any match are absent from the map.
EventMatches MatchEvents(std::span<const Event> events,
                         const Thesaurus &thesaurus, const FuzzyPolicy &policy);

std::string MatchesToJsonLines(const EventMatches &matches);

}  // namespace agatha

#endif  // AGATHA_LEXICON_H_

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

#include "agatha/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "agatha/error.h"
#include "agatha/iri.h"
#include "agatha/utf8.h"

namespace agatha {

namespace {

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("lexicon", "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename Fn>
void ForEachLine(std::string_view text, Fn fn) {
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && !line.starts_with('#')) fn(line_no, line);
    start = end + 1;
  }
}

std::map<Category, int> ParseManifest(std::string_view csv,
                                      std::string_view source_name) {
  std::map<Category, int> counts;
  std::optional<int> total;
  ForEachLine(csv, [&](int line_no, std::string_view line) {
    auto fields = Split(line, ',');
    if (fields[0] == "category") return;
    int count = -1;
    if (fields.size() == 2) {
      std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), count);
    }
    if (count < 0) {
      throw Error("lexicon", std::string(source_name) + " manifest line " +
                                 std::to_string(line_no) +
                                 ": expected 'category,count'");
    }
    if (fields[0] == "TOTAL") {
      total = count;
      return;
    }
    auto category = ParseCategory(fields[0]);
    if (!category) {
      throw Error("lexicon", std::string(source_name) + " manifest line " +
                                 std::to_string(line_no) + ": unknown category '" +
                                 std::string(fields[0]) + "'");
    }
    counts[*category] = count;
  });
  int sum = 0;
  for (const auto &[c, n] : counts) sum += n;
  if (total && *total != sum) {
    throw Error("lexicon", std::string(source_name) + " manifest sums to " +
                               std::to_string(sum) + " but TOTAL is " +
                               std::to_string(*total));
  }
  return counts;
}

// Two-row dynamic program after trimming the shared prefix and suffix.
int EditDistance(std::u32string_view a, std::u32string_view b) {
  while (!a.empty() && !b.empty() && a.front() == b.front()) {
    a.remove_prefix(1);
    b.remove_prefix(1);
  }
  while (!a.empty() && !b.empty() && a.back() == b.back()) {
    a.remove_suffix(1);
    b.remove_suffix(1);
  }
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return static_cast<int>(a.size());
  std::vector<int> prev(b.size() + 1);
  std::vector<int> curr(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 0; i < a.size(); ++i) {
    curr[0] = static_cast<int>(i + 1);
    for (size_t j = 0; j < b.size(); ++j) {
      int substitution = prev[j] + (a[i] == b[j] ? 0 : 1);
      curr[j + 1] = std::min({prev[j + 1] + 1, curr[j] + 1, substitution});
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

// Orders by distance, then lowercase term; equal keys keep load order.
bool ResultLess(const MatchResult &x, const MatchResult &y) {
  if (x.distance != y.distance) return x.distance < y.distance;
  return utf8::ToLower(x.entry.term) < utf8::ToLower(y.entry.term);
}

}  // namespace

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kActor: return "Actor";
    case Category::kEvent: return "Event";
    case Category::kPlace: return "Place";
    case Category::kObject: return "Object";
  }
  return "";
}

std::optional<Category> ParseCategory(std::string_view name) {
  if (name == "Actor") return Category::kActor;
  if (name == "Event") return Category::kEvent;
  if (name == "Place") return Category::kPlace;
  if (name == "Object") return Category::kObject;
  return std::nullopt;
}

std::string_view SourceName(TermSource source) {
  switch (source) {
    case TermSource::kEurovocCriminalLaw: return "EUROVOC_CRIMINAL_LAW";
    case TermSource::kExtendedOntology: return "EXTENDED_ONTOLOGY";
  }
  return "";
}

std::optional<TermSource> ParseSource(std::string_view name) {
  if (name == "EUROVOC_CRIMINAL_LAW") return TermSource::kEurovocCriminalLaw;
  if (name == "EXTENDED_ONTOLOGY") return TermSource::kExtendedOntology;
  return std::nullopt;
}

void Thesaurus::Add(LexiconEntry entry) {
  if (entry.term.empty()) throw Error("lexicon", "empty term");
  if (!IsAbsoluteIri(entry.concept_iri)) {
    throw Error("lexicon", "term '" + entry.term + "' has malformed concept IRI '" +
                               entry.concept_iri + "'");
  }
  std::string lower = utf8::ToLower(entry.term);
  auto &slots = index_[lower];
  for (size_t i : slots) {
    if (entries_[i].term == entry.term && entries_[i].source == entry.source) {
      throw Error("lexicon", "duplicate term '" + entry.term + "' in source " +
                                 std::string(SourceName(entry.source)));
    }
  }
  slots.push_back(entries_.size());
  lower_terms_.push_back(utf8::Decode(lower));
  entries_.push_back(std::move(entry));
}

Thesaurus Thesaurus::FromEntries(std::vector<LexiconEntry> entries) {
  Thesaurus th;
  for (LexiconEntry &e : entries) th.Add(std::move(e));
  return th;
}

Thesaurus Thesaurus::Parse(std::string_view tsv,
                           std::optional<std::string_view> manifest_csv,
                           std::string_view source_name) {
  Thesaurus th;
  ForEachLine(tsv, [&](int line_no, std::string_view line) {
    auto fail = [&](const std::string &message) {
      throw Error("lexicon", std::string(source_name) + ":" +
                                 std::to_string(line_no) + ": " + message);
    };
    auto fields = Split(line, '\t');
    if (fields.size() != 4) fail("expected term<TAB>category<TAB>concept_iri<TAB>source");
    auto category = ParseCategory(fields[1]);
    if (!category) fail("unknown category '" + std::string(fields[1]) + "'");
    auto source = ParseSource(fields[3]);
    if (!source) fail("unknown source '" + std::string(fields[3]) + "'");
    try {
      th.Add({std::string(fields[0]), *category, std::string(fields[2]), *source});
    } catch (const Error &e) {
      fail(e.message());
    }
  });
  if (manifest_csv) {
    auto expected = ParseManifest(*manifest_csv, source_name);
    auto actual = th.CategoryCounts();
    for (Category c : {Category::kActor, Category::kEvent, Category::kPlace,
                       Category::kObject}) {
      int want = expected.count(c) ? expected[c] : 0;
      int have = actual.count(c) ? actual[c] : 0;
      if (want != have) {
        throw Error("lexicon", std::string(source_name) + ": count mismatch for " +
                                   std::string(CategoryName(c)) + ": manifest says " +
                                   std::to_string(want) + ", file has " +
                                   std::to_string(have));
      }
    }
  }
  return th;
}

void Thesaurus::Merge(const Thesaurus &other) {
  for (const LexiconEntry &e : other.entries_) Add(e);
}

std::map<Category, int> Thesaurus::CategoryCounts() const {
  std::map<Category, int> counts;
  for (const LexiconEntry &e : entries_) ++counts[e.category];
  return counts;
}

std::vector<const LexiconEntry *> Thesaurus::Lookup(
    std::string_view lowercase_term) const {
  std::vector<const LexiconEntry *> out;
  auto it = index_.find(lowercase_term);
  if (it == index_.end()) return out;
  for (size_t i : it->second) out.push_back(&entries_[i]);
  return out;
}

Thesaurus LoadThesaurus(const std::filesystem::path &file,
                        const std::optional<std::filesystem::path> &manifest) {
  std::string tsv = ReadFile(file);
  if (!manifest) return Thesaurus::Parse(tsv, std::nullopt, file.string());
  std::string csv = ReadFile(*manifest);
  return Thesaurus::Parse(tsv, csv, file.string());
}

int Levenshtein(std::u32string_view a, std::u32string_view b) {
  return EditDistance(a, b);
}

int Levenshtein(std::string_view a, std::string_view b) {
  return EditDistance(utf8::Decode(a), utf8::Decode(b));
}

std::string_view MethodName(MatchMethod method) {
  return method == MatchMethod::kExact ? "EXACT" : "LEVENSHTEIN";
}

int FuzzyPolicy::Threshold(size_t term_length) const {
  if (term_length >= long_min_length) return long_max;
  if (term_length >= medium_min_length) return medium_max;
  return short_max;
}

FuzzyPolicy FuzzyPolicy::Capped(int max_distance) const {
  FuzzyPolicy p = *this;
  p.short_max = std::min(p.short_max, max_distance);
  p.medium_max = std::min(p.medium_max, max_distance);
  p.long_max = std::min(p.long_max, max_distance);
  return p;
}

bool FuzzyPolicy::Valid() const {
  return short_max >= 0 && medium_max >= 0 && long_max >= 0 &&
         medium_min_length <= long_min_length;
}

std::optional<MatchResult> MatchExact(std::string_view mention,
                                      const Thesaurus &thesaurus) {
  if (!utf8::IsLower(mention)) {
    throw std::invalid_argument("MatchExact: mention '" + std::string(mention) +
                                "' is not lowercase");
  }
  auto hits = thesaurus.Lookup(mention);
  if (hits.empty()) return std::nullopt;
  return MatchResult{*hits.front(), std::string(mention), 0, MatchMethod::kExact};
}

std::vector<MatchResult> MatchFuzzy(std::string_view mention,
                                    const Thesaurus &thesaurus,
                                    const FuzzyPolicy &policy) {
  if (!utf8::IsLower(mention)) {
    throw std::invalid_argument("MatchFuzzy: mention '" + std::string(mention) +
                                "' is not lowercase");
  }
  if (!policy.Valid()) throw std::invalid_argument("MatchFuzzy: invalid policy");
  std::u32string query = utf8::Decode(mention);
  std::vector<MatchResult> results;
  for (size_t i = 0; i < thesaurus.size(); ++i) {
    const std::u32string &term = thesaurus.LowerTerm(i);
    int threshold = policy.Threshold(term.size());
    size_t diff = term.size() > query.size() ? term.size() - query.size()
                                             : query.size() - term.size();
    if (diff > static_cast<size_t>(threshold)) continue;
    int d = Levenshtein(query, term);
    if (d > threshold) continue;
    results.push_back({thesaurus.entries()[i], std::string(mention), d,
                       d == 0 ? MatchMethod::kExact : MatchMethod::kLevenshtein});
  }
  std::stable_sort(results.begin(), results.end(), ResultLess);
  return results;
}

std::optional<MatchResult> MatchMention(std::string_view mention,
                                        const Thesaurus &thesaurus,
                                        const FuzzyPolicy &policy) {
  if (mention.empty()) return std::nullopt;
  std::optional<MatchResult> best;
  auto consider = [&](std::string_view candidate) {
    if (candidate.empty()) return;
    auto results = MatchFuzzy(candidate, thesaurus, policy);
    if (results.empty()) return;
    if (!best || ResultLess(results.front(), *best)) best = results.front();
  };
  consider(mention);
  if (mention.find(' ') != std::string_view::npos) {
    for (std::string_view token : Split(mention, ' ')) consider(token);
  }
  return best;
}

std::string_view SlotName(Slot slot) {
  switch (slot) {
    case Slot::kAction: return "action";
    case Slot::kActor: return "actor";
    case Slot::kObject: return "object";
    case Slot::kPlace: return "place";
    case Slot::kTime: return "time";
  }
  return "";
}

EventMatches MatchEvents(std::span<const Event> events,
                         const Thesaurus &thesaurus, const FuzzyPolicy &policy) {
  EventMatches out;
  for (const Event &event : events) {
    std::vector<SlotMatch> matches;
    auto try_match = [&](Slot slot, const std::string &mention) {
      auto m = MatchMention(mention, thesaurus, policy);
      if (m) matches.push_back({slot, mention, std::move(*m)});
    };
    try_match(Slot::kAction, utf8::ToLower(event.action));
    for (const Mention &m : event.actors) try_match(Slot::kActor, m.normalized);
    for (const Mention &m : event.objects) try_match(Slot::kObject, m.normalized);
    if (event.place) try_match(Slot::kPlace, event.place->normalized);
    if (event.time) try_match(Slot::kTime, event.time->normalized);
    if (!matches.empty()) out.emplace(event.event_id, std::move(matches));
  }
  return out;
}

std::string MatchesToJsonLines(const EventMatches &matches) {
  using json = nlohmann::ordered_json;
  std::string out;
  for (const auto &[event_id, list] : matches) {
    for (const SlotMatch &m : list) {
      json j;
      j["event_id"] = event_id;
      j["slot"] = SlotName(m.slot);
      j["mention"] = m.mention;
      j["surface"] = m.result.surface;
      j["term"] = m.result.entry.term;
      j["category"] = CategoryName(m.result.entry.category);
      j["concept_iri"] = m.result.entry.concept_iri;
      j["source"] = SourceName(m.result.entry.source);
      j["distance"] = m.result.distance;
      j["method"] = MethodName(m.result.method);
      out += j.dump(-1, ' ', false, json::error_handler_t::replace);
      out += '\n';
    }
  }
  return out;
}

}  // namespace agatha

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

// Subject-verb-object event extraction over semantic-role annotations: one
// event per verb that carries role fillers.

#ifndef AGATHA_EVENTS_H_
#define AGATHA_EVENTS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agatha/doc_model.h"

namespace agatha {

struct Mention {
  std::string text;        // space-joined surfaces of the span
  std::string normalized;  // lowercase, outer punctuation stripped
  int head_index = 0;      // token that carries the role

  bool operator==(const Mention &) const = default;
};

struct Provenance {
  std::string doc_id;
  std::string case_id;
  int sentence = 0;
  int predicate = 0;

  bool operator==(const Provenance &) const = default;
};

struct Event {
  std::string event_id;  // <doc_id>:s<sentence>:p<predicate>
  std::string action;    // verb lemma
  std::vector<Mention> actors;
  std::vector<Mention> objects;
  std::optional<Mention> place;
  std::optional<Mention> time;
  std::vector<Mention> organizations;
  std::vector<Mention> currencies;
  Provenance provenance;

  bool operator==(const Event &) const = default;
};

std::string MakeEventId(std::string_view doc_id, int sentence, int predicate);

// The filler token plus its dependency subtree, joined in index order.
Mention ExpandSpan(const Sentence &sentence, int filler_index);

// Events ordered by (sentence, predicate). Extra AM-LOC / AM-TMP fillers
// beyond the first are dropped with a warning.
std::vector<Event> ExtractEvents(const Document &doc,
                                 std::vector<std::string> *warnings = nullptr);

// One JSON object per line.
std::string EventsToJsonLines(std::span<const Event> events);

}  // namespace agatha

#endif  // AGATHA_EVENTS_H_

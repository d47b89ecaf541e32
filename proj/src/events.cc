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

#include "agatha/events.h"

#include <json.hpp>

#include "agatha/utf8.h"

namespace agatha {

namespace {

using json = nlohmann::ordered_json;

Mention MakeMention(const Sentence &sentence, const std::vector<int> &indices,
                    int head_index) {
  Mention mention;
  mention.head_index = head_index;
  for (int index : indices) {
    if (!mention.text.empty()) mention.text += ' ';
    mention.text += sentence.Find(index)->surface;
  }
  mention.normalized = utf8::ToLower(utf8::StripPunct(mention.text));
  return mention;
}

// Contiguous tokens sharing one NER label form a single mention.
std::vector<Mention> NerMentions(const Sentence &sentence, NerLabel label) {
  std::vector<Mention> mentions;
  std::vector<int> run;
  auto flush = [&] {
    if (!run.empty()) mentions.push_back(MakeMention(sentence, run, run.front()));
    run.clear();
  };
  for (const Token &token : sentence.tokens) {
    if (token.ner == label) {
      run.push_back(token.index);
    } else {
      flush();
    }
  }
  flush();
  return mentions;
}

json MentionJson(const Mention &m) {
  return {{"text", m.text}, {"normalized", m.normalized}, {"head", m.head_index}};
}

json MentionsJson(const std::vector<Mention> &ms) {
  json out = json::array();
  for (const Mention &m : ms) out.push_back(MentionJson(m));
  return out;
}

}  // namespace

std::string MakeEventId(std::string_view doc_id, int sentence, int predicate) {
  return std::string(doc_id) + ":s" + std::to_string(sentence) + ":p" +
         std::to_string(predicate);
}

Mention ExpandSpan(const Sentence &sentence, int filler_index) {
  const int n = static_cast<int>(sentence.tokens.size());
  // A token is in the subtree if walking its heads reaches the filler.
  std::vector<int> indices;
  for (const Token &token : sentence.tokens) {
    const Token *cur = &token;
    for (int steps = 0; cur != nullptr && steps <= n; ++steps) {
      if (cur->index == filler_index) {
        indices.push_back(token.index);
        break;
      }
      if (!cur->head) break;
      cur = sentence.Find(*cur->head);
    }
  }
  if (indices.empty()) indices.push_back(filler_index);
  return MakeMention(sentence, indices, filler_index);
}

std::vector<Event> ExtractEvents(const Document &doc,
                                 std::vector<std::string> *warnings) {
  std::vector<Event> events;
  for (const Sentence &sentence : doc.sentences) {
    std::vector<Mention> organizations;
    std::vector<Mention> currencies;
    bool ner_done = false;
    for (int pred : sentence.predicates) {
      const Token *verb = sentence.Find(pred);
      if (verb == nullptr) continue;
      if (!ner_done) {
        organizations = NerMentions(sentence, NerLabel::kOrganization);
        currencies = NerMentions(sentence, NerLabel::kCurrency);
        ner_done = true;
      }
      Event event;
      event.event_id = MakeEventId(doc.doc_id, sentence.index, pred);
      event.action = verb->lemma.empty() ? utf8::ToLower(verb->surface) : verb->lemma;
      event.provenance = {doc.doc_id, doc.case_id, sentence.index, pred};
      event.organizations = organizations;
      event.currencies = currencies;
      auto single = [&](std::optional<Mention> *slot, const Token &token,
                        std::string_view role) {
        if (!slot->has_value()) {
          *slot = ExpandSpan(sentence, token.index);
        } else if (warnings != nullptr) {
          warnings->push_back(event.event_id + ": extra " + std::string(role) +
                              " filler at token " +
                              std::to_string(token.index) + " dropped");
        }
      };
      for (const Token &token : sentence.tokens) {
        auto it = token.roles.find(pred);
        if (it == token.roles.end()) continue;
        switch (it->second) {
          case RoleLabel::kA0:
            event.actors.push_back(ExpandSpan(sentence, token.index));
            break;
          case RoleLabel::kA1:
            event.objects.push_back(ExpandSpan(sentence, token.index));
            break;
          case RoleLabel::kAmLoc:
            single(&event.place, token, "AM-LOC");
            break;
          case RoleLabel::kAmTmp:
            single(&event.time, token, "AM-TMP");
            break;
        }
      }
      events.push_back(std::move(event));
    }
  }
  return events;
}

std::string EventsToJsonLines(std::span<const Event> events) {
  std::string out;
  for (const Event &e : events) {
    json j;
    j["event_id"] = e.event_id;
    j["action"] = e.action;
    j["actors"] = MentionsJson(e.actors);
    j["objects"] = MentionsJson(e.objects);
    j["place"] = e.place ? MentionJson(*e.place) : json(nullptr);
    j["time"] = e.time ? MentionJson(*e.time) : json(nullptr);
    j["organizations"] = MentionsJson(e.organizations);
    j["currencies"] = MentionsJson(e.currencies);
    j["provenance"] = {{"doc_id", e.provenance.doc_id},
                       {"case_id", e.provenance.case_id},
                       {"sentence", e.provenance.sentence},
                       {"predicate", e.provenance.predicate}};
    out += j.dump(-1, ' ', false, json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

}  // namespace agatha

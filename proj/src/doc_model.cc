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

#include "agatha/doc_model.h"

#include <algorithm>
#include <set>

namespace agatha {

std::string_view NerName(NerLabel label) {
  switch (label) {
    case NerLabel::kPerson: return "PERSON";
    case NerLabel::kLocation: return "LOCATION";
    case NerLabel::kOrganization: return "ORGANIZATION";
    case NerLabel::kDateTime: return "DATE_TIME";
    case NerLabel::kCurrency: return "CURRENCY";
  }
  return "";
}

std::optional<NerLabel> ParseNer(std::string_view name) {
  if (name == "PERSON") return NerLabel::kPerson;
  if (name == "LOCATION") return NerLabel::kLocation;
  if (name == "ORGANIZATION") return NerLabel::kOrganization;
  if (name == "DATE_TIME") return NerLabel::kDateTime;
  if (name == "CURRENCY") return NerLabel::kCurrency;
  return std::nullopt;
}

std::string_view RoleName(RoleLabel label) {
  switch (label) {
    case RoleLabel::kA0: return "A0";
    case RoleLabel::kA1: return "A1";
    case RoleLabel::kAmTmp: return "AM-TMP";
    case RoleLabel::kAmLoc: return "AM-LOC";
  }
  return "";
}

std::optional<RoleLabel> ParseRole(std::string_view name) {
  if (name == "A0") return RoleLabel::kA0;
  if (name == "A1") return RoleLabel::kA1;
  if (name == "AM-TMP" || name == "AM_TMP") return RoleLabel::kAmTmp;
  if (name == "AM-LOC" || name == "AM_LOC") return RoleLabel::kAmLoc;
  return std::nullopt;
}

const Token *Sentence::Find(int token_index) const {
  if (token_index >= 1 && token_index <= static_cast<int>(tokens.size()) &&
      tokens[token_index - 1].index == token_index) {
    return &tokens[token_index - 1];
  }
  for (const Token &token : tokens) {
    if (token.index == token_index) return &token;
  }
  return nullptr;
}

std::vector<int> ComputePredicates(const Sentence &sentence) {
  std::set<int> preds;
  for (const Token &token : sentence.tokens) {
    for (const auto &[pred, role] : token.roles) preds.insert(pred);
  }
  return {preds.begin(), preds.end()};
}

std::string Violation::ToString() const {
  std::string out = rule;
  if (sentence >= 0) out += " sentence " + std::to_string(sentence);
  if (token >= 0) out += " token " + std::to_string(token);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

namespace {

bool HasSpace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

void ValidateSentence(const Sentence &sentence, int position,
                      std::vector<Violation> *out) {
  auto report = [&](int token, std::string rule, std::string detail) {
    out->push_back({position, token, std::move(rule), std::move(detail)});
  };
  if (sentence.index != position) {
    report(-1, "sentence-index",
           "index " + std::to_string(sentence.index) + " at position " +
               std::to_string(position));
  }
  if (sentence.tokens.empty()) {
    report(-1, "empty-sentence", "sentence has no tokens");
    return;
  }

  const int n = static_cast<int>(sentence.tokens.size());
  std::set<int> seen;
  for (int i = 0; i < n; ++i) {
    const Token &token = sentence.tokens[i];
    if (token.index != i + 1 || !seen.insert(token.index).second) {
      report(token.index, "index",
             "expected " + std::to_string(i + 1) + ", found " +
                 std::to_string(token.index));
    }
  }

  int roots = 0;
  for (const Token &token : sentence.tokens) {
    if (!token.head) {
      ++roots;
    } else if (*token.head == token.index) {
      report(token.index, "self-head", "token is its own head");
    } else if (sentence.Find(*token.head) == nullptr) {
      report(token.index, "head-range",
             "head " + std::to_string(*token.head) + " not in sentence");
    }
    if (token.ner) {
      if (IsDateTag(token.pos) && *token.ner != NerLabel::kDateTime) {
        report(token.index, "ner-pos", "W tag requires DATE_TIME");
      }
      if (IsCurrencyTag(token.pos) && *token.ner != NerLabel::kCurrency) {
        report(token.index, "ner-pos", "Zm tag requires CURRENCY");
      }
    }
    for (const auto &[pred, role] : token.roles) {
      const Token *target = sentence.Find(pred);
      if (target == nullptr) {
        report(token.index, "role-range",
               "predicate " + std::to_string(pred) + " not in sentence");
      } else if (!target->IsVerb()) {
        report(token.index, "role-predicate",
               "predicate " + std::to_string(pred) + " has non-verb tag '" +
                   target->pos + "'");
      }
    }
  }
  if (roots != 1) {
    report(-1, "root-count",
           "expected exactly one root, found " + std::to_string(roots));
  }

  // Walk head chains; any chain longer than n revisits a token.
  for (const Token &token : sentence.tokens) {
    const Token *cur = &token;
    int steps = 0;
    while (cur != nullptr && cur->head && *cur->head != cur->index) {
      cur = sentence.Find(*cur->head);
      if (++steps > n) {
        report(token.index, "cycle", "head chain does not reach the root");
        break;
      }
    }
  }

  if (sentence.predicates != ComputePredicates(sentence)) {
    report(-1, "predicates", "predicate list does not match role keys");
  }
}

}  // namespace

std::vector<Violation> ValidateDocument(const Document &doc) {
  std::vector<Violation> out;
  if (doc.doc_id.empty() || HasSpace(doc.doc_id)) {
    out.push_back({-1, -1, "doc-id", "empty or contains whitespace"});
  }
  if (doc.case_id.empty() || HasSpace(doc.case_id)) {
    out.push_back({-1, -1, "case-id", "empty or contains whitespace"});
  }
  if (doc.language.size() != 2 ||
      !std::all_of(doc.language.begin(), doc.language.end(),
                   [](char c) { return c >= 'a' && c <= 'z'; })) {
    out.push_back({-1, -1, "language", "not an ISO-639-1 code"});
  }
  for (size_t i = 0; i < doc.sentences.size(); ++i) {
    ValidateSentence(doc.sentences[i], static_cast<int>(i), &out);
  }
  return out;
}

}  // namespace agatha

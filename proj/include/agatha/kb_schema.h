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

// Event-centred schema vocabulary and knowledge-base population from
// extracted events and thesaurus matches.

#ifndef AGATHA_KB_SCHEMA_H_
#define AGATHA_KB_SCHEMA_H_

#include <span>
#include <string>
#include <string_view>

#include "agatha/events.h"
#include "agatha/lexicon.h"
#include "agatha/term.h"
#include "agatha/triple_store.h"

namespace agatha {

inline constexpr std::string_view kRdfNamespace =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNamespace =
    "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOntologyNamespace = "http://agatha.example/onto#";
inline constexpr std::string_view kDefaultResourceNamespace =
    "http://agatha.example/resource/";

struct SchemaVocabulary {
  // Classes.
  Term event, actor, place, time, object, organization, currency;
  // Properties.
  Term has_actor, has_object, has_place, has_time, has_organization, has_currency;
  Term has_action, in_document, in_case, linked_concept;
  Term type, sub_class_of, label;

  static SchemaVocabulary Default();

  // The class a thesaurus category refines.
  const Term &ClassFor(Category category) const;
};

// Mints stable IRIs under a resource namespace. Entity IRIs depend only on
// (class, normalized label), so equal labels converge on one node.
class ResourceMinter {
 public:
  // Throws agatha::Error("kb", ...) unless `ns` is an absolute IRI.
  explicit ResourceMinter(std::string ns = std::string(kDefaultResourceNamespace));

  Term EventIri(std::string_view event_id) const;
  Term DocumentIri(std::string_view doc_id) const;
  Term CaseIri(std::string_view case_id) const;
  Term EntityIri(std::string_view class_name, std::string_view normalized) const;

  const std::string &ns() const { return ns_; }

 private:
  Term Mint(std::string_view kind, std::string_view key) const;

  std::string ns_;
};

// The instance triples for `events`; does not touch any store.
Graph BuildPopulation(std::span<const Event> events, const EventMatches &matches,
                      const SchemaVocabulary &vocabulary,
                      const ResourceMinter &minter);

// Inserts BuildPopulation(...) as one batch; returns the count of new
// triples. Idempotent.
size_t Populate(TripleStore *store, std::span<const Event> events,
                const EventMatches &matches, const SchemaVocabulary &vocabulary,
                const ResourceMinter &minter);

// "conceptIRI subClassOf ClassIRI" for every subclass entry.
Graph BuildSchema(const Thesaurus &subclasses, const SchemaVocabulary &vocabulary);
size_t LoadSchema(TripleStore *store, const SchemaVocabulary &vocabulary,
                  const Thesaurus &subclasses);

}  // namespace agatha

#endif  // AGATHA_KB_SCHEMA_H_

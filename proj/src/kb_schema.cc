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

#include "agatha/kb_schema.h"

#include <vector>

#include "agatha/error.h"
#include "agatha/iri.h"

namespace agatha {

namespace {

Term Onto(std::string_view local) {
  return Term::Iri(std::string(kOntologyNamespace) + std::string(local));
}

}  // namespace

SchemaVocabulary SchemaVocabulary::Default() {
  SchemaVocabulary v;
  v.event = Onto("Event");
  v.actor = Onto("Actor");
  v.place = Onto("Place");
  v.time = Onto("Time");
  v.object = Onto("Object");
  v.organization = Onto("Organization");
  v.currency = Onto("Currency");
  v.has_actor = Onto("hasActor");
  v.has_object = Onto("hasObject");
  v.has_place = Onto("hasPlace");
  v.has_time = Onto("hasTime");
  v.has_organization = Onto("hasOrganization");
  v.has_currency = Onto("hasCurrency");
  v.has_action = Onto("hasAction");
  v.in_document = Onto("inDocument");
  v.in_case = Onto("inCase");
  v.linked_concept = Onto("linkedConcept");
  v.type = Term::Iri(std::string(kRdfNamespace) + "type");
  v.sub_class_of = Term::Iri(std::string(kRdfsNamespace) + "subClassOf");
  v.label = Term::Iri(std::string(kRdfsNamespace) + "label");
  return v;
}

const Term &SchemaVocabulary::ClassFor(Category category) const {
  switch (category) {
    case Category::kActor: return actor;
    case Category::kEvent: return event;
    case Category::kPlace: return place;
    case Category::kObject: return object;
  }
  throw InvariantError("unknown category");
}

ResourceMinter::ResourceMinter(std::string ns) : ns_(std::move(ns)) {
  if (!IsAbsoluteIri(ns_)) {
    throw Error("kb", "namespace '" + ns_ + "' is not an absolute IRI");
  }
}

Term ResourceMinter::Mint(std::string_view kind, std::string_view key) const {
  return Term::Iri(ns_ + std::string(kind) + "/" + PercentEncode(key));
}

Term ResourceMinter::EventIri(std::string_view event_id) const {
  return Mint("event", event_id);
}

Term ResourceMinter::DocumentIri(std::string_view doc_id) const {
  return Mint("document", doc_id);
}

Term ResourceMinter::CaseIri(std::string_view case_id) const {
  return Mint("case", case_id);
}

Term ResourceMinter::EntityIri(std::string_view class_name,
                               std::string_view normalized) const {
  return Mint(class_name, normalized);
}

namespace {

std::string_view LocalName(const Term &class_iri) {
  std::string_view v = class_iri.value;
  size_t cut = v.find_last_of("#/");
  return cut == std::string_view::npos ? v : v.substr(cut + 1);
}

class Populator {
 public:
  Populator(const SchemaVocabulary &vocabulary, const ResourceMinter &minter,
            Graph *graph)
      : v_(vocabulary), minter_(minter), graph_(graph) {}

  void AddEvent(const Event &event, const std::vector<SlotMatch> *matches) {
    Term e = minter_.EventIri(event.event_id);
    Add(e, v_.type, v_.event);
    Add(e, v_.has_action, Term::Literal(event.action));
    for (const Mention &m : event.actors) AddSlot(e, v_.has_actor, v_.actor, m);
    for (const Mention &m : event.objects) AddSlot(e, v_.has_object, v_.object, m);
    if (event.place) AddSlot(e, v_.has_place, v_.place, *event.place);
    if (event.time) AddSlot(e, v_.has_time, v_.time, *event.time);
    for (const Mention &m : event.organizations) {
      AddSlot(e, v_.has_organization, v_.organization, m);
    }
    for (const Mention &m : event.currencies) {
      AddSlot(e, v_.has_currency, v_.currency, m);
    }
    Term doc = minter_.DocumentIri(event.provenance.doc_id);
    Add(e, v_.in_document, doc);
    Add(doc, v_.in_case, minter_.CaseIri(event.provenance.case_id));

    if (matches == nullptr) return;
    for (const SlotMatch &m : *matches) {
      Term concept_iri = Term::Iri(m.result.entry.concept_iri);
      if (m.slot == Slot::kAction) {
        Add(e, v_.linked_concept, concept_iri);
        continue;
      }
      if (m.mention.empty()) continue;
      Add(minter_.EntityIri(LocalName(SlotClass(m.slot)), m.mention), v_.linked_concept,
          concept_iri);
    }
  }

 private:
  const Term &SlotClass(Slot slot) const {
    switch (slot) {
      case Slot::kActor: return v_.actor;
      case Slot::kObject: return v_.object;
      case Slot::kPlace: return v_.place;
      case Slot::kTime: return v_.time;
      case Slot::kAction: return v_.event;
    }
    throw InvariantError("unknown slot");
  }

  void AddSlot(const Term &event, const Term &property, const Term &class_iri,
               const Mention &mention) {
    // A mention of pure punctuation normalizes to nothing; it names no entity.
    if (mention.normalized.empty()) return;
    Term entity = minter_.EntityIri(LocalName(class_iri), mention.normalized);
    Add(event, property, entity);
    Add(entity, v_.type, class_iri);
    Add(entity, v_.label, Term::Literal(mention.normalized));
  }

  void Add(const Term &s, const Term &p, const Term &o) { graph_->insert({s, p, o}); }

  const SchemaVocabulary &v_;
  const ResourceMinter &minter_;
  Graph *graph_;
};

}  // namespace

Graph BuildPopulation(std::span<const Event> events, const EventMatches &matches,
                      const SchemaVocabulary &vocabulary,
                      const ResourceMinter &minter) {
  Graph graph;
  Populator populator(vocabulary, minter, &graph);
  for (const Event &event : events) {
    auto it = matches.find(event.event_id);
    populator.AddEvent(event, it == matches.end() ? nullptr : &it->second);
  }
  return graph;
}

size_t Populate(TripleStore *store, std::span<const Event> events,
                const EventMatches &matches, const SchemaVocabulary &vocabulary,
                const ResourceMinter &minter) {
  Graph graph = BuildPopulation(events, matches, vocabulary, minter);
  std::vector<Triple> batch(graph.begin(), graph.end());
  return store->Insert(batch);
}

Graph BuildSchema(const Thesaurus &subclasses, const SchemaVocabulary &vocabulary) {
  Graph graph;
  for (const LexiconEntry &entry : subclasses.entries()) {
    graph.insert({Term::Iri(entry.concept_iri), vocabulary.sub_class_of,
                  vocabulary.ClassFor(entry.category)});
  }
  return graph;
}

size_t LoadSchema(TripleStore *store, const SchemaVocabulary &vocabulary,
                  const Thesaurus &subclasses) {
  Graph graph = BuildSchema(subclasses, vocabulary);
  std::vector<Triple> batch(graph.begin(), graph.end());
  return store->Insert(batch);
}

}  // namespace agatha

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

#include <set>

#include "agatha/error.h"
#include "agatha/events.h"
#include "agatha/ingest.h"
#include "agatha/query.h"
#include "doctest.h"
#include "testing/generators.h"

namespace agatha {
namespace {

Event OneActorEvent(const std::string &doc, const std::string &case_id, const std::string &actor) {
  Event e;
  e.event_id = doc + ":s0:p2";
  e.action = "matar";
  e.actors = {{actor, actor, 1}};
  e.provenance = {doc, case_id, 0, 2};
  return e;
}

TEST_CASE("vocabulary terms are distinct and namespaced") {
  SchemaVocabulary v = SchemaVocabulary::Default();
  std::vector<Term> onto = {v.event, v.actor, v.place, v.time, v.object, v.organization,
                            v.currency, v.has_actor, v.has_object, v.has_place, v.has_time,
                            v.has_organization, v.has_currency, v.has_action, v.in_document,
                            v.in_case, v.linked_concept};
  std::set<Term> all(onto.begin(), onto.end());
  for (const Term &t : onto) CHECK(t.value.rfind(kOntologyNamespace, 0) == 0);
  all.insert({v.type, v.sub_class_of, v.label});
  CHECK(all.size() == 20);
  CHECK(v.type.value == "http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
  CHECK(v.sub_class_of.value == "http://www.w3.org/2000/01/rdf-schema#subClassOf");
  CHECK(v.label.value == "http://www.w3.org/2000/01/rdf-schema#label");
}

TEST_CASE("one event with one unmatched actor gives seven triples") {
  TripleStore store;
  SchemaVocabulary v = SchemaVocabulary::Default();
  ResourceMinter minter;
  std::vector<Event> events = {OneActorEvent("d1", "c1", "joão")};
  CHECK(Populate(&store, events, {}, v, minter) == 7);
  Term e = minter.EventIri("d1:s0:p2");
  Term actor = minter.EntityIri("Actor", "joão");
  CHECK(actor.value == "http://agatha.example/resource/Actor/jo%C3%A3o");
  for (const Triple &t : std::vector<Triple>{
           {e, v.type, v.event},
           {e, v.has_action, Term::Literal("matar")},
           {e, v.has_actor, actor},
           {actor, v.type, v.actor},
           {actor, v.label, Term::Literal("joão")},
           {e, v.in_document, minter.DocumentIri("d1")},
           {minter.DocumentIri("d1"), v.in_case, minter.CaseIri("c1")}}) {
    CHECK(store.Contains(t));
  }
  // Idempotent.
  CHECK(Populate(&store, events, {}, v, minter) == 0);
  CHECK(Populate(&store, std::vector<Event>{}, {}, v, minter) == 0);
}

TEST_CASE("equal labels across cases converge on one node") {
  TripleStore store;
  SchemaVocabulary v = SchemaVocabulary::Default();
  std::vector<Event> events = {OneActorEvent("d1", "c1", "joão"),
                               OneActorEvent("d2", "c2", "joão")};
  Populate(&store, events, {}, v, ResourceMinter());
  QueryPattern actors{{{Variable{"a"}, v.type, v.actor}}, {}};
  CHECK(Select(store, actors).rows.size() == 1);
  QueryPattern shared{{{Variable{"e1"}, v.has_actor, Variable{"a"}},
                       {Variable{"e2"}, v.has_actor, Variable{"a"}}},
                      {"e1", "e2"}};
  bool distinct = false;
  for (const auto &row : Select(store, shared).rows) distinct |= row[0] != row[1];
  CHECK(distinct);
}

TEST_CASE("matches link entities and actions to concepts") {
  SchemaVocabulary v = SchemaVocabulary::Default();
  ResourceMinter minter("urn:test:");
  Event e = OneActorEvent("d1", "c1", "vítima");
  LexiconEntry victim{"Victim", Category::kActor, "http://agatha.example/onto#Victim",
                      TermSource::kExtendedOntology};
  LexiconEntry kill{"matar", Category::kEvent, "http://t.example/kill",
                    TermSource::kEurovocCriminalLaw};
  EventMatches matches;
  matches[e.event_id] = {{Slot::kActor, "vítima", {victim, "vítima", 2, MatchMethod::kLevenshtein}},
                         {Slot::kAction, "matar", {kill, "matar", 0, MatchMethod::kExact}}};
  Graph g = BuildPopulation(std::vector<Event>{e}, matches, v, minter);
  CHECK(g.size() == 9);
  CHECK(g.count({minter.EntityIri("Actor", "vítima"), v.linked_concept,
                 Term::Iri(victim.concept_iri)}) == 1);
  CHECK(g.count({minter.EventIri(e.event_id), v.linked_concept, Term::Iri(kill.concept_iri)}) == 1);
}

TEST_CASE("every slot becomes a typed entity") {
  Document doc = ParseCorpus(
      "#doc d1 c1 pt\n"
      "1\tJoão\tjoão\tNP00000\tPERSON\t2\tnsubj\t2:A0\n"
      "2\troubou\troubar\tVMIS3S0\t_\t0\troot\t_\n"
      "3\t100\t100\tZm\tCURRENCY\t2\tobj\t2:A1\n"
      "4\teuros\teuro\tZm\tCURRENCY\t3\tflat\t_\n"
      "5\tao\ta\tSP\t_\t6\tcase\t_\n"
      "6\tBanco\tbanco\tNP00000\tORGANIZATION\t2\tobl\t_\n"
      "7\tem\tem\tSP\t_\t8\tcase\t_\n"
      "8\tLisboa\tlisboa\tNP00000\tLOCATION\t2\tobl\t2:AM-LOC\n"
      "9\tontem\tontem\tW\tDATE_TIME\t2\tobl\t2:AM-TMP\n")
                     .at(0);
  auto events = ExtractEvents(doc);
  SchemaVocabulary v = SchemaVocabulary::Default();
  TripleStore store;
  Populate(&store, events, {}, v, ResourceMinter());
  for (const Term &cls : {v.actor, v.object, v.place, v.time, v.organization, v.currency}) {
    QueryPattern q{{{Variable{"x"}, v.type, cls}}, {}};
    CHECK_MESSAGE(Select(store, q).rows.size() == 1, cls.value);
  }
}

TEST_CASE("one entity node per (class, label) on random corpora") {
  testing::Rng rng(71);
  SchemaVocabulary v = SchemaVocabulary::Default();
  std::vector<Event> events;
  for (int d = 0; d < 30; ++d) {
    Document doc = testing::RandomDocument(rng, "d" + std::to_string(d), "c" + std::to_string(d % 3));
    for (Event &e : ExtractEvents(doc)) events.push_back(std::move(e));
  }
  TripleStore store;
  Populate(&store, events, {}, v, ResourceMinter());
  for (const Term &cls : {v.actor, v.object, v.place, v.time}) {
    QueryPattern q{{{Variable{"x"}, v.type, cls}, {Variable{"x"}, v.label, Variable{"l"}}},
                   {"l"}};
    QueryPattern nodes{{{Variable{"x"}, v.type, cls}}, {}};
    CHECK(Select(store, q).rows.size() == Select(store, nodes).rows.size());
    QueryPattern labels_per_node{{{Variable{"x"}, v.type, cls}, {Variable{"x"}, v.label, Variable{"l"}}},
                                 {"x", "l"}};
    CHECK(Select(store, labels_per_node).rows.size() == Select(store, nodes).rows.size());
  }
}

TEST_CASE("schema from the subclass file") {
  SchemaVocabulary v = SchemaVocabulary::Default();
  Thesaurus sub = LoadThesaurus(AGATHA_DATA_DIR "/lexicon/extended_ontology.tsv");
  TripleStore store;
  CHECK(LoadSchema(&store, v, sub) == 84);
  CHECK(store.Contains({Term::Iri("http://agatha.example/onto#Victim"), v.sub_class_of, v.actor}));
  std::map<std::string, size_t> per_class;
  for (const Triple &t : store.Snapshot()) per_class[t.object.value]++;
  CHECK(per_class[v.actor.value] == 6);
  CHECK(per_class[v.event.value] == 64);
  CHECK(per_class[v.object.value] == 3);
  CHECK(per_class[v.place.value] == 11);
  TripleStore empty;
  CHECK(LoadSchema(&empty, v, Thesaurus()) == 0);
}

TEST_CASE("namespace must be absolute") {
  CHECK_THROWS_AS(ResourceMinter("not a namespace"), Error);
  CHECK(ResourceMinter("urn:x:").CaseIri("a b").value == "urn:x:case/a%20b");
}

}  // namespace
}  // namespace agatha

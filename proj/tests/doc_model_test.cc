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

#include "doctest.h"
#include "testing/generators.h"

namespace agatha {
namespace {

Token Tok(int index, std::string surface, std::string pos, std::optional<int> head) {
  Token t;
  t.index = index;
  t.surface = surface;
  t.lemma = surface;
  t.pos = std::move(pos);
  t.head = head;
  t.deprel = "dep";
  return t;
}

// "João matou Pedro" with matou as root and both names as its fillers.
Document Simple() {
  Sentence s;
  s.tokens = {Tok(1, "João", "NP00000", 2), Tok(2, "matou", "VMIS3S0", std::nullopt),
              Tok(3, "Pedro", "NP00000", 2)};
  s.tokens[0].roles[2] = RoleLabel::kA0;
  s.tokens[2].roles[2] = RoleLabel::kA1;
  s.predicates = ComputePredicates(s);
  Document doc;
  doc.doc_id = "d1";
  doc.case_id = "c1";
  doc.language = "pt";
  doc.sentences = {s};
  return doc;
}

bool HasRule(const std::vector<Violation> &vs, std::string_view rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation &v) { return v.rule == rule; });
}

TEST_CASE("well-formed document has no violations") {
  CHECK(ValidateDocument(Simple()).empty());
}

TEST_CASE("self-head is reported with its coordinates") {
  Document doc = Simple();
  doc.sentences[0].tokens[0].head = 1;
  auto vs = ValidateDocument(doc);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].rule == "self-head");
  CHECK(vs[0].sentence == 0);
  CHECK(vs[0].token == 1);
}

TEST_CASE("role keyed by a non-verb is reported") {
  Document doc = Simple();
  doc.sentences[0].tokens[2].roles = {{1, RoleLabel::kA1}};
  doc.sentences[0].predicates = ComputePredicates(doc.sentences[0]);
  auto vs = ValidateDocument(doc);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].rule == "role-predicate");
}

TEST_CASE("structural rules") {
  SUBCASE("two roots") {
    Document doc = Simple();
    doc.sentences[0].tokens[0].head.reset();
    CHECK(HasRule(ValidateDocument(doc), "root-count"));
  }
  SUBCASE("cycle") {
    Document doc = Simple();
    doc.sentences[0].tokens[1].head = 3;
    doc.sentences[0].tokens[2].head = 2;
    auto vs = ValidateDocument(doc);
    CHECK(HasRule(vs, "cycle"));
    CHECK(HasRule(vs, "root-count"));
  }
  SUBCASE("head out of range") {
    Document doc = Simple();
    doc.sentences[0].tokens[0].head = 9;
    CHECK(HasRule(ValidateDocument(doc), "head-range"));
  }
  SUBCASE("index gap") {
    Document doc = Simple();
    doc.sentences[0].tokens[2].index = 5;
    CHECK(HasRule(ValidateDocument(doc), "index"));
  }
  SUBCASE("stale predicate list") {
    Document doc = Simple();
    doc.sentences[0].predicates.clear();
    CHECK(HasRule(ValidateDocument(doc), "predicates"));
  }
  SUBCASE("empty sentence") {
    Document doc = Simple();
    doc.sentences.push_back(Sentence{1, {}, {}});
    CHECK(HasRule(ValidateDocument(doc), "empty-sentence"));
  }
  SUBCASE("ids") {
    Document doc = Simple();
    doc.doc_id = "";
    doc.case_id = "a b";
    doc.language = "PT";
    auto vs = ValidateDocument(doc);
    CHECK(HasRule(vs, "doc-id"));
    CHECK(HasRule(vs, "case-id"));
    CHECK(HasRule(vs, "language"));
  }
}

TEST_CASE("NER must agree with W and Zm tags") {
  Document doc = Simple();
  doc.sentences[0].tokens[2].pos = "W";
  doc.sentences[0].tokens[2].ner = NerLabel::kPerson;
  CHECK(HasRule(ValidateDocument(doc), "ner-pos"));
  doc.sentences[0].tokens[2].ner = NerLabel::kDateTime;
  CHECK(ValidateDocument(doc).empty());
  doc.sentences[0].tokens[2].pos = "Zm";
  CHECK(HasRule(ValidateDocument(doc), "ner-pos"));
  doc.sentences[0].tokens[2].ner.reset();
  CHECK(ValidateDocument(doc).empty());
}

TEST_CASE("label names round-trip") {
  for (NerLabel l : {NerLabel::kPerson, NerLabel::kLocation, NerLabel::kOrganization,
                     NerLabel::kDateTime, NerLabel::kCurrency}) {
    CHECK(ParseNer(NerName(l)) == l);
  }
  for (RoleLabel r : {RoleLabel::kA0, RoleLabel::kA1, RoleLabel::kAmTmp, RoleLabel::kAmLoc}) {
    CHECK(ParseRole(RoleName(r)) == r);
  }
  CHECK(ParseRole("AM_LOC") == RoleLabel::kAmLoc);
  CHECK_FALSE(ParseRole("A2").has_value());
  CHECK_FALSE(ParseNer("WEAPON").has_value());
}

TEST_CASE("validation is idempotent on random documents") {
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Document doc = testing::RandomDocument(rng, "d", "c");
    auto first = ValidateDocument(doc);
    CHECK(first.empty());
    CHECK(ValidateDocument(doc) == first);
  }
}

}  // namespace
}  // namespace agatha

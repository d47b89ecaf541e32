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

#include <stdexcept>

#include "agatha/error.h"
#include "agatha/utf8.h"
#include "doctest.h"
#include "oracles/levenshtein_oracle.h"
#include "testing/generators.h"

namespace agatha {
namespace {

Thesaurus Extended() {
  return LoadThesaurus(AGATHA_DATA_DIR "/lexicon/extended_ontology.tsv",
                       AGATHA_DATA_DIR "/lexicon/extended_ontology.manifest.csv");
}

Thesaurus Eurovoc() {
  return LoadThesaurus(AGATHA_DATA_DIR "/lexicon/eurovoc_criminal_law.tsv",
                       AGATHA_DATA_DIR "/lexicon/eurovoc_criminal_law.manifest.csv");
}

TEST_CASE("shipped thesauri honour their manifests") {
  auto e = Eurovoc().CategoryCounts();
  CHECK(e[Category::kActor] == 9);
  CHECK(e[Category::kEvent] == 133);
  CHECK(e[Category::kPlace] == 22);
  CHECK(e[Category::kObject] == 3);
  auto x = Extended().CategoryCounts();
  CHECK(x[Category::kActor] == 6);
  CHECK(x[Category::kEvent] == 64);
  CHECK(x[Category::kObject] == 3);
  CHECK(x[Category::kPlace] == 11);
}

TEST_CASE("thesaurus load errors") {
  const char *iri = "http://x.example/a";
  CHECK_THROWS_AS(Thesaurus::Parse(std::string("faca\tWeapon\t") + iri + "\tEXTENDED_ONTOLOGY\n",
                                   std::nullopt),
                  Error);
  CHECK_THROWS_AS(Thesaurus::Parse(std::string("faca\tObject\t") + iri +
                                       "\tEXTENDED_ONTOLOGY\nfaca\tObject\t" + iri +
                                       "\tEXTENDED_ONTOLOGY\n",
                                   std::nullopt),
                  Error);
  CHECK_THROWS_AS(Thesaurus::Parse("faca\tObject\tnot-an-iri\tEXTENDED_ONTOLOGY\n", std::nullopt),
                  Error);
  CHECK_THROWS_AS(Thesaurus::Parse(std::string("faca\tObject\t") + iri + "\tEXTENDED_ONTOLOGY\n",
                                   std::string_view("category,count\nObject,2\nTOTAL,2\n")),
                  Error);
}

TEST_CASE("levenshtein examples") {
  CHECK(Levenshtein(std::string_view(""), std::string_view("abc")) == 3);
  CHECK(Levenshtein(std::string_view("roubo"), std::string_view("roubo")) == 0);
  CHECK(Levenshtein(std::string_view("kitten"), std::string_view("sitting")) == 3);
  CHECK(Levenshtein(std::string_view("ação"), std::string_view("acao")) == 2);
  CHECK(oracle::FullMatrixDistance(U"kitten", U"sitting") == 3);
}

TEST_CASE("levenshtein agrees with the full-matrix oracle") {
  testing::Rng rng(31);
  const std::u32string alphabet = testing::UnicodeAlphabet();
  for (int i = 0; i < 5000; ++i) {
    auto a = testing::RandomString(rng, alphabet, 12);
    auto b = testing::RandomString(rng, alphabet, 12);
    CHECK(Levenshtein(a, b) == oracle::FullMatrixDistance(a, b));
  }
}

TEST_CASE("exact matching") {
  Thesaurus x = Extended();
  auto rape = MatchExact("rape", x);
  REQUIRE(rape.has_value());
  CHECK(rape->entry.term == "Rape");
  CHECK(rape->entry.category == Category::kEvent);
  CHECK(rape->method == MatchMethod::kExact);
  CHECK(rape->distance == 0);
  CHECK_THROWS_AS(MatchExact("RAPE", x), std::invalid_argument);
  CHECK_FALSE(MatchExact("xyzzy", x).has_value());
}

TEST_CASE("fuzzy matching") {
  Thesaurus x = Extended();
  FuzzyPolicy policy;
  auto prison = MatchFuzzy("prision", x, policy);
  REQUIRE(prison.size() == 1);
  CHECK(prison[0].entry.term == "Prison");
  CHECK(prison[0].distance == 1);
  CHECK(prison[0].method == MatchMethod::kLevenshtein);
  CHECK(MatchFuzzy("prision", Thesaurus(), policy).empty());

  auto fine = MatchFuzzy("fine", x, policy);
  REQUIRE_FALSE(fine.empty());
  CHECK(fine[0].distance == 0);
  CHECK(fine[0].entry.term == "Fine");
  for (size_t i = 1; i < fine.size(); ++i) CHECK(fine[i - 1].distance <= fine[i].distance);

  CHECK(policy.Threshold(3) == 0);
  CHECK(policy.Threshold(4) == 1);
  CHECK(policy.Threshold(7) == 1);
  CHECK(policy.Threshold(8) == 2);
  CHECK(policy.Capped(0).Threshold(10) == 0);
  CHECK(MatchFuzzy("prision", x, policy.Capped(0)).empty());
}

TEST_CASE("exact hit heads the fuzzy list, case-insensitively") {
  Thesaurus th = Eurovoc();
  th.Merge(Extended());
  FuzzyPolicy policy;
  for (const LexiconEntry &e : th.entries()) {
    std::string lower = utf8::ToLower(e.term);
    auto exact = MatchExact(lower, th);
    REQUIRE(exact.has_value());
    auto fuzzy = MatchFuzzy(lower, th, policy);
    REQUIRE_FALSE(fuzzy.empty());
    CHECK(fuzzy[0].distance == 0);
    CHECK(fuzzy[0].entry == exact->entry);
    CHECK(MatchExact(utf8::ToLower(e.term), th) == exact);
  }
}

TEST_CASE("mentions and events") {
  Thesaurus x = Extended();
  FuzzyPolicy policy;
  auto m = MatchMention("a vítima na prisão de lisboa", x, policy);
  CHECK_FALSE(m.has_value());  // Portuguese words, English terms
  auto p = MatchMention("the old prison", x, policy);
  REQUIRE(p.has_value());
  CHECK(p->entry.term == "Prison");

  Event e;
  e.event_id = "d:s0:p1";
  e.action = "rape";
  e.actors = {{"The victim", "the victim", 1}};
  e.place = Mention{"prision", "prision", 3};
  EventMatches matches = MatchEvents(std::vector<Event>{e}, x, policy);
  REQUIRE(matches.count("d:s0:p1") == 1);
  const auto &list = matches.at("d:s0:p1");
  REQUIRE(list.size() == 3);
  CHECK(list[0].slot == Slot::kAction);
  CHECK(list[1].slot == Slot::kActor);
  CHECK(list[1].result.entry.term == "Victim");
  CHECK(list[2].slot == Slot::kPlace);
  CHECK(list[2].result.method == MatchMethod::kLevenshtein);
  CHECK_FALSE(MatchesToJsonLines(matches).empty());
}

}  // namespace
}  // namespace agatha

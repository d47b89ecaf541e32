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

#include "agatha/baseline.h"

#include "agatha/events.h"
#include "doctest.h"

namespace agatha {
namespace {

struct Fixture {
  PosLexicon lexicon = ParsePosLexicon("# test lexicon\nmatou\tVMIS3S0\no\tDA0MS0\nem\tSP\n");
  std::vector<Gazetteer> gazetteers = {
      ParseGazetteer("persons", "#label PERSON\njoão\npedro\njoão silva\n"),
      ParseGazetteer("places", "#label LOCATION\nlisboa\n")};
  DocumentInfo info{"d1", "c1", "pt"};

  Document Annotate(std::string_view raw) const {
    return AnnotateBaseline(raw, lexicon, gazetteers, info);
  }
};

TEST_CASE("agent and patient around a verb") {
  Fixture f;
  Document doc = f.Annotate("João matou Pedro .");
  REQUIRE(doc.sentences.size() == 1);
  const Sentence &s = doc.sentences[0];
  REQUIRE(s.tokens.size() == 4);
  CHECK(s.predicates == std::vector<int>{2});
  CHECK(s.tokens[0].roles.at(2) == RoleLabel::kA0);
  CHECK(s.tokens[2].roles.at(2) == RoleLabel::kA1);
  CHECK(s.tokens[0].ner == NerLabel::kPerson);
  CHECK(ValidateDocument(doc).empty());
}

TEST_CASE("dates become one W token") {
  Fixture f;
  Document doc = f.Annotate("12/05/2019");
  REQUIRE(doc.sentences.size() == 1);
  REQUIRE(doc.sentences[0].tokens.size() == 1);
  const Token &t = doc.sentences[0].tokens[0];
  CHECK(t.surface == "12/05/2019");
  CHECK(t.pos == "W");
  CHECK(t.ner == NerLabel::kDateTime);
}

TEST_CASE("month names and currency amounts") {
  Fixture f;
  Document doc = f.Annotate("em maio o João matou 500 euros");
  const auto &tokens = doc.sentences.at(0).tokens;
  CHECK(tokens[1].pos == "W");
  CHECK(tokens[1].ner == NerLabel::kDateTime);
  CHECK(tokens[5].pos == "Zm");
  CHECK(tokens[5].ner == NerLabel::kCurrency);
  CHECK(tokens[6].ner == NerLabel::kCurrency);
  CHECK(ValidateDocument(doc).empty());
  // AM-TMP on the month, relative to the verb.
  CHECK(tokens[1].roles.at(5) == RoleLabel::kAmTmp);
}

TEST_CASE("verbless text yields no predicates and no events") {
  Fixture f;
  Document doc = f.Annotate("o carro vermelho");
  REQUIRE(doc.sentences.size() == 1);
  CHECK(doc.sentences[0].predicates.empty());
  CHECK(doc.sentences[0].tokens[1].pos == kFallbackNounTag);
  CHECK(ExtractEvents(doc).empty());
}

TEST_CASE("sentence splitting, locations and multi-token gazetteer entries") {
  Fixture f;
  Document doc = f.Annotate("João Silva matou Pedro em Lisboa! O Pedro matou? Sim.");
  REQUIRE(doc.sentences.size() == 3);
  const auto &s0 = doc.sentences[0].tokens;
  CHECK(s0[0].ner == NerLabel::kPerson);
  CHECK(s0[1].ner == NerLabel::kPerson);
  CHECK(s0[0].roles.at(3) == RoleLabel::kA0);
  CHECK(s0[1].roles.empty());  // roles sit on the first token of a run
  CHECK(s0[5].ner == NerLabel::kLocation);
  CHECK(s0[5].roles.at(3) == RoleLabel::kAmLoc);
  CHECK(ValidateDocument(doc).empty());
}

TEST_CASE("deterministic and always tagged") {
  Fixture f;
  const char *raw = "O João matou 3 € em 1/1/20, disse-o a Pedro... fim";
  Document a = f.Annotate(raw);
  CHECK(a == f.Annotate(raw));
  CHECK(ValidateDocument(a).empty());
  for (const Sentence &s : a.sentences) {
    for (const Token &t : s.tokens) {
      CHECK_FALSE(t.pos.empty());
      CHECK((t.ner == NerLabel::kDateTime) == IsDateTag(t.pos));
      CHECK((t.ner == NerLabel::kCurrency) == IsCurrencyTag(t.pos));
    }
  }
}

TEST_CASE("tokenizer keeps dates, numbers and inner hyphens") {
  CHECK(Tokenize("em 12/05/2019, 3,5 kg disse-o.") ==
        std::vector<std::string>{"em", "12/05/2019", ",", "3,5", "kg", "disse-o", "."});
}

TEST_CASE("resource file errors") {
  CHECK_THROWS(ParseGazetteer("g", "joão\n"));
  CHECK_THROWS(ParseGazetteer("g", "#label WEAPON\nfaca\n"));
  CHECK_THROWS(ParseGazetteer("g", "#label PERSON\n"));
  CHECK_THROWS(ParsePosLexicon("matou VMIS3S0\n"));
}

}  // namespace
}  // namespace agatha

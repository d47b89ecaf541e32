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

#include "agatha/ntriples.h"

#include "agatha/error.h"
#include "doctest.h"
#include "testing/generators.h"

namespace agatha {
namespace {

Term I(const std::string &local) { return Term::Iri("http://t.example/" + local); }

std::string ErrorOf(const std::string &text) {
  try {
    ParseNTriples(text, "kb.nt");
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

TEST_CASE("empty and single triple") {
  CHECK(SerializeNTriples(Graph{}).empty());
  CHECK(ParseNTriples("").empty());
  Graph g = {{I("a"), I("p"), I("b")}};
  std::string text = SerializeNTriples(g);
  CHECK(text == "<http://t.example/a> <http://t.example/p> <http://t.example/b> .\n");
  CHECK(ParseNTriples(text) == g);
}

TEST_CASE("literal escapes") {
  Term lit = Term::Literal("say \"hi\"\nback\\slash\ttab\r\x01\x7F");
  CHECK(FormatTerm(lit) == "\"say \\\"hi\\\"\\nback\\\\slash\\ttab\\r\\u0001\\u007F\"");
  Graph g = {{I("a"), I("p"), lit}};
  CHECK(ParseNTriples(SerializeNTriples(g)) == g);
  CHECK(FormatTerm(Term::Literal("5", "http://www.w3.org/2001/XMLSchema#int")) ==
        "\"5\"^^<http://www.w3.org/2001/XMLSchema#int>");
  CHECK(FormatTerm(Term::Iri("http://t.example/a b")) == "<http://t.example/a\\u0020b>");
}

TEST_CASE("parser accepts standard escapes, comments and blank lines") {
  Graph g = ParseNTriples(
      "# header\n"
      "\n"
      "<http://t.example/a> <http://t.example/p> \"\\u00E7\\U0001F600\\b\\f\\'\" . # trailing\n"
      "  <http://t.example/\\u0041>\t<http://t.example/p>  <http://t.example/b>.\n");
  REQUIRE(g.size() == 2);
  CHECK(g.count({I("a"), I("p"), Term::Literal("ç😀\b\f'")}) == 1);
  CHECK(g.count({I("A"), I("p"), I("b")}) == 1);
}

TEST_CASE("lines are sorted bytewise") {
  Graph g = {{I("b"), I("p"), I("c")}, {I("a"), I("p"), Term::Literal("z")},
             {I("a"), I("p"), I("z")}};
  std::string text = SerializeNTriples(g);
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  CHECK(lines.size() == 3);
  CHECK(std::is_sorted(lines.begin(), lines.end()));
}

TEST_CASE("malformed input names the line") {
  CHECK(ErrorOf("<http://t.example/a> <http://t.example/p> <http://t.example/b> .\n"
                "<http://t.example/a> <http://t.example/p> .\n") ==
        "ntriples: kb.nt:2: missing object");
  CHECK(ErrorOf("<http://t.example/a> <http://t.example/p> \"x\"\n").find("kb.nt:1: expected '.'") !=
        std::string::npos);
  CHECK(ErrorOf("_:b <http://t.example/p> \"x\" .\n").find("blank nodes") != std::string::npos);
  CHECK(ErrorOf("\"s\" <http://t.example/p> \"x\" .\n").find("literal in subject") !=
        std::string::npos);
  CHECK(ErrorOf("<a> <http://t.example/p> \"x\" .\n").find("absolute") != std::string::npos);
  CHECK(ErrorOf("<http://t.example/a> <http://t.example/p> \"x\"@pt .\n").find("language") !=
        std::string::npos);
  CHECK(ErrorOf("<http://t.example/a> <http://t.example/p> \"\\q\" .\n").find("bad escape") !=
        std::string::npos);
  CHECK(ErrorOf("<http://t.example/a> <http://t.example/p> \"x\" . junk\n").find("trailing") !=
        std::string::npos);
}

TEST_CASE("random torture graphs round-trip") {
  testing::Rng rng(61);
  const auto vocab = testing::Vocabulary::Make(/*torture=*/true);
  for (int i = 0; i < 100; ++i) {
    Graph g = testing::RandomGraph(rng, vocab, 100);
    std::string text = SerializeNTriples(g);
    CHECK(ParseNTriples(text) == g);
    CHECK(SerializeNTriples(ParseNTriples(text)) == text);
  }
}

}  // namespace
}  // namespace agatha

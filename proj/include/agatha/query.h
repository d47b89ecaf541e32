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

// Conjunctive triple-pattern queries over a TripleStore and the six query
// verbs: SELECT, ASK, CONSTRUCT, DESCRIBE, INSERT and DELETE.

#ifndef AGATHA_QUERY_H_
#define AGATHA_QUERY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agatha/triple_store.h"

namespace agatha {

struct QueryPattern {
  std::vector<TriplePattern> patterns;
  // Variables to report; empty means every variable in order of appearance.
  std::vector<std::string> projection;
};

struct ResultTable {
  std::vector<std::string> variables;
  std::vector<std::vector<Term>> rows;  // deduplicated, sorted

  bool operator==(const ResultTable &) const = default;
};

// Variables in order of first appearance.
std::vector<std::string> PatternVariables(const QueryPattern &query);

// Every full solution of the conjunction. An empty pattern list has none.
std::vector<Binding> Solve(const TripleStore &store, const QueryPattern &query);

// Throws agatha::Error("kb", ...) when a projected variable does not occur
// in any pattern.
ResultTable Select(const TripleStore &store, const QueryPattern &query);
bool Ask(const TripleStore &store, const QueryPattern &query);

// Instantiates the template once per solution; instantiations with unbound
// variables or a literal subject/predicate are skipped.
Graph Construct(const TripleStore &store, const QueryPattern &where,
                const std::vector<TriplePattern> &templ);

// Every triple with `iri` as subject or object.
Graph Describe(const TripleStore &store, const Term &iri);

enum class QueryVerb { kSelect, kAsk, kConstruct, kDescribe, kInsert, kDelete };

struct ParsedQuery {
  QueryVerb verb = QueryVerb::kSelect;
  QueryPattern where;                          // SELECT/ASK/CONSTRUCT/DELETE
  std::vector<TriplePattern> construct_template;
  std::optional<Term> describe_target;
  std::vector<Triple> insert_triples;
};

// Default prefixes: rdf, rdfs, xsd and onto.
std::map<std::string, std::string> DefaultPrefixes();

// Query text: optional PREFIX lines, an optional verb line, then one triple
// pattern per line. Terms are <iri>, "literal" (with optional ^^<iri>),
// ?var, prefix:local or `a` for rdf:type; a trailing '.' is allowed.
//
//   SELECT ?a ?b | ASK | CONSTRUCT { s p o . s p o } | DESCRIBE <iri>
//   INSERT (ground triples follow) | DELETE (patterns follow)
//
// Without a verb line the query is SELECT of every variable. Throws
// agatha::Error("query", "line N: ...") on malformed input.
ParsedQuery ParseQuery(std::string_view text,
                       std::map<std::string, std::string> prefixes = DefaultPrefixes());

}  // namespace agatha

#endif  // AGATHA_QUERY_H_

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

// Reference query semantics by brute force: every assignment of the query
// variables over all terms of the graph is tried, and an assignment is a
// solution when every instantiated pattern is a member of the graph. No
// indexes, no join ordering.

#ifndef AGATHA_TESTS_ORACLES_QUERY_ORACLE_H_
#define AGATHA_TESTS_ORACLES_QUERY_ORACLE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agatha/term.h"
#include "agatha/triple_store.h"

namespace agatha::oracle {

using Assignment = std::map<std::string, Term>;

inline std::vector<std::string> VariablesOf(const std::vector<TriplePattern> &patterns) {
  std::vector<std::string> vars;
  auto visit = [&](const PatternTerm &pt) {
    if (auto *v = std::get_if<Variable>(&pt)) {
      for (const std::string &seen : vars) {
        if (seen == v->name) return;
      }
      vars.push_back(v->name);
    }
  };
  for (const TriplePattern &p : patterns) {
    visit(p.subject);
    visit(p.predicate);
    visit(p.object);
  }
  return vars;
}

inline std::optional<Term> Substitute(const PatternTerm &pt, const Assignment &a) {
  if (auto *t = std::get_if<Term>(&pt)) return *t;
  auto it = a.find(std::get<Variable>(pt).name);
  if (it == a.end()) return std::nullopt;
  return it->second;
}

inline std::vector<Assignment> BruteForceSolutions(
    const Graph &graph, const std::vector<TriplePattern> &patterns) {
  std::vector<Assignment> out;
  if (patterns.empty()) return out;
  std::set<Term> domain;
  for (const Triple &t : graph) {
    domain.insert(t.subject);
    domain.insert(t.predicate);
    domain.insert(t.object);
  }
  std::vector<Term> values(domain.begin(), domain.end());
  std::vector<std::string> vars = VariablesOf(patterns);
  std::vector<size_t> choice(vars.size(), 0);
  if (!vars.empty() && values.empty()) return out;
  while (true) {
    Assignment a;
    for (size_t i = 0; i < vars.size(); ++i) a[vars[i]] = values[choice[i]];
    bool all = true;
    for (const TriplePattern &p : patterns) {
      Triple t{*Substitute(p.subject, a), *Substitute(p.predicate, a),
               *Substitute(p.object, a)};
      if (graph.count(t) == 0) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(a);
    // Odometer increment over the assignment space.
    size_t k = 0;
    while (k < vars.size() && ++choice[k] == values.size()) choice[k++] = 0;
    if (k == vars.size()) break;
  }
  return out;
}

inline std::set<std::vector<Term>> BruteForceSelect(
    const Graph &graph, const std::vector<TriplePattern> &patterns,
    const std::vector<std::string> &projection) {
  std::set<std::vector<Term>> rows;
  for (const Assignment &a : BruteForceSolutions(graph, patterns)) {
    std::vector<Term> row;
    for (const std::string &v : projection) row.push_back(a.at(v));
    rows.insert(row);
  }
  return rows;
}

inline Graph BruteForceConstruct(const Graph &graph,
                                 const std::vector<TriplePattern> &where,
                                 const std::vector<TriplePattern> &templ) {
  Graph out;
  for (const Assignment &a : BruteForceSolutions(graph, where)) {
    for (const TriplePattern &p : templ) {
      auto s = Substitute(p.subject, a);
      auto pr = Substitute(p.predicate, a);
      auto o = Substitute(p.object, a);
      if (!s || !pr || !o) continue;
      if (s->kind != Term::Kind::kIri || pr->kind != Term::Kind::kIri) continue;
      out.insert({*s, *pr, *o});
    }
  }
  return out;
}

inline Graph BruteForceDescribe(const Graph &graph, const Term &iri) {
  Graph out;
  for (const Triple &t : graph) {
    if (t.subject == iri || t.object == iri) out.insert(t);
  }
  return out;
}

}  // namespace agatha::oracle

#endif  // AGATHA_TESTS_ORACLES_QUERY_ORACLE_H_

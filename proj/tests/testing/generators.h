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

// Seeded random instances for property and acceptance tests: strings,
// annotated documents, graphs and conjunctive queries.

#ifndef AGATHA_TESTS_TESTING_GENERATORS_H_
#define AGATHA_TESTS_TESTING_GENERATORS_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "agatha/doc_model.h"
#include "agatha/term.h"
#include "agatha/triple_store.h"
#include "agatha/utf8.h"

namespace agatha::testing {

using Rng = std::mt19937_64;

inline size_t Uniform(Rng &rng, size_t lo, size_t hi) {  // inclusive
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

inline bool Coin(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T &Pick(Rng &rng, const std::vector<T> &items) {
  return items[Uniform(rng, 0, items.size() - 1)];
}

inline std::u32string RandomString(Rng &rng, const std::u32string &alphabet,
                                   size_t max_len) {
  std::u32string s(Uniform(rng, 0, max_len), U'a');
  for (char32_t &c : s) c = alphabet[Uniform(rng, 0, alphabet.size() - 1)];
  return s;
}

// Mixed scripts: ASCII, Latin-1, Greek, CJK, and astral-plane symbols.
inline std::u32string UnicodeAlphabet() {
  return U"abcdeçãéõßΩλжя中文😀𝄞 ́";
}

// Strings built to break field and literal escaping.
inline const std::vector<std::string> &TortureStrings() {
  static const std::vector<std::string> kStrings = {
      "", "_", "\\_", "\\", "\\\\", "\t", "\n", "\r", "\r\n", "a\tb\nc",
      "\"quoted\"", "\\t", "\\n", "tab\there", "back\\slash", "#doc x y pt",
      "3:A0", "a;b:c", "ação", "😀", "\x01\x7F", "end\\", "  spaced  ", "<iri>",
      "^^", "@pt", ".", "\"", "\\u0041", "日本語"};
  return kStrings;
}

inline const std::vector<std::string> &Words() {
  static const std::vector<std::string> kWords = {
      "joão", "maria", "polícia", "carro", "vermelho", "casa", "lisboa", "porto",
      "arma", "roubo", "banco", "juiz", "réu", "vítima", "testemunha", "faca",
      "dinheiro", "rua", "noite", "prisão"};
  return kWords;
}

struct DocumentOptions {
  size_t max_sentences = 4;
  size_t max_tokens = 10;
  double verb_rate = 0.3;
  double predicate_rate = 0.75;
  bool torture = false;  // surfaces, lemmas and deprels from TortureStrings()
};

// A random document that satisfies every model invariant: a random
// dependency tree per sentence, NER consistent with the tags, and roles
// keyed only by verbs.
inline Document RandomDocument(Rng &rng, const std::string &doc_id,
                               const std::string &case_id,
                               const DocumentOptions &options = {}) {
  static const std::vector<std::string> kNonVerbTags = {
      "NCMS000", "NCFP000", "NP00000", "DA0MS0", "SP", "AQ0MS0", "W", "Zm", "Fp", "Z"};
  static const std::vector<std::string> kVerbTags = {"VMIS3S0", "VMIP3P0", "VAII3S0"};
  static const std::vector<NerLabel> kNames = {NerLabel::kPerson, NerLabel::kLocation,
                                               NerLabel::kOrganization};
  static const std::vector<RoleLabel> kRoles = {RoleLabel::kA0, RoleLabel::kA1,
                                                RoleLabel::kAmTmp, RoleLabel::kAmLoc};
  Document doc;
  doc.doc_id = doc_id;
  doc.case_id = case_id;
  doc.language = "pt";
  size_t sentences = Uniform(rng, 0, options.max_sentences);
  for (size_t s = 0; s < sentences; ++s) {
    Sentence sentence;
    sentence.index = static_cast<int>(s);
    int n = static_cast<int>(Uniform(rng, 1, options.max_tokens));
    for (int i = 1; i <= n; ++i) {
      Token t;
      t.index = i;
      if (options.torture) {
        t.surface = Pick(rng, TortureStrings());
        t.lemma = Pick(rng, TortureStrings());
        t.deprel = Pick(rng, TortureStrings());
      } else {
        t.surface = Pick(rng, Words());
        t.lemma = utf8::ToLower(t.surface);
        t.deprel = "dep";
      }
      bool verb = Coin(rng, options.verb_rate);
      t.pos = verb ? Pick(rng, kVerbTags) : Pick(rng, kNonVerbTags);
      if (IsDateTag(t.pos)) {
        if (Coin(rng, 0.8)) t.ner = NerLabel::kDateTime;
      } else if (IsCurrencyTag(t.pos)) {
        if (Coin(rng, 0.8)) t.ner = NerLabel::kCurrency;
      } else if (t.pos == "NP00000") {
        if (Coin(rng, 0.8)) t.ner = Pick(rng, kNames);
      }
      sentence.tokens.push_back(std::move(t));
    }
    // Random tree: attach tokens in shuffled order to an already attached one.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    for (int k = 1; k < n; ++k) {
      sentence.tokens[order[k] - 1].head = order[Uniform(rng, 0, k - 1)];
    }
    for (Token &pred : sentence.tokens) {
      if (!pred.IsVerb() || !Coin(rng, options.predicate_rate)) continue;
      size_t fillers = Uniform(rng, 1, 3);
      for (size_t f = 0; f < fillers; ++f) {
        Token &filler = sentence.tokens[Uniform(rng, 0, n - 1)];
        if (filler.index == pred.index || filler.IsVerb()) continue;
        filler.roles.emplace(pred.index, Pick(rng, kRoles));
      }
    }
    sentence.predicates = ComputePredicates(sentence);
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

// A small fixed vocabulary so random graphs and queries collide often.
struct Vocabulary {
  std::vector<Term> nodes;       // IRIs usable as subject or object
  std::vector<Term> predicates;  // IRIs
  std::vector<Term> literals;

  static Vocabulary Make(bool torture = false) {
    Vocabulary v;
    for (int i = 0; i < 12; ++i) {
      v.nodes.push_back(Term::Iri("http://test.example/n" + std::to_string(i)));
    }
    for (int i = 0; i < 4; ++i) {
      v.predicates.push_back(Term::Iri("http://test.example/p" + std::to_string(i)));
    }
    for (int i = 0; i < 6; ++i) {
      v.literals.push_back(Term::Literal("lit" + std::to_string(i)));
    }
    v.literals[4] = Term::Literal("lit4", "http://www.w3.org/2001/XMLSchema#string");
    if (torture) {
      for (const std::string &s : TortureStrings()) v.literals.push_back(Term::Literal(s));
      v.literals.push_back(Term::Literal("x\"y", "http://t.example/dt#a\\b"));
      v.nodes.push_back(Term::Iri("http://t.example/with{braces}|pipe^`<>\"\\"));
      v.nodes.push_back(Term::Iri("urn:x:ação/😀"));
    }
    return v;
  }

  Term RandomObject(Rng &rng) const {
    return Coin(rng, 0.3) ? Pick(rng, literals) : Pick(rng, nodes);
  }
};

inline Graph RandomGraph(Rng &rng, const Vocabulary &v, size_t max_triples) {
  Graph g;
  size_t n = Uniform(rng, 0, max_triples);
  for (size_t i = 0; i < n; ++i) {
    g.insert({Pick(rng, v.nodes), Pick(rng, v.predicates), v.RandomObject(rng)});
  }
  return g;
}

// Up to `max_patterns` patterns over variables ?x ?y ?z; constants come from
// the vocabulary, so some never occur in a given graph.
inline std::vector<TriplePattern> RandomPatterns(Rng &rng, const Vocabulary &v,
                                                 size_t max_patterns) {
  static const std::vector<std::string> kVars = {"x", "y", "z"};
  std::vector<TriplePattern> out;
  size_t n = Uniform(rng, 1, max_patterns);
  for (size_t i = 0; i < n; ++i) {
    auto var = [&] { return PatternTerm(Variable{Pick(rng, kVars)}); };
    TriplePattern p;
    p.subject = Coin(rng, 0.6) ? var() : PatternTerm(Pick(rng, v.nodes));
    p.predicate = Coin(rng, 0.4) ? var() : PatternTerm(Pick(rng, v.predicates));
    p.object = Coin(rng, 0.6) ? var() : PatternTerm(v.RandomObject(rng));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace agatha::testing

#endif  // AGATHA_TESTS_TESTING_GENERATORS_H_

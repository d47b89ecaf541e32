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

#include "agatha/query.h"

#include <algorithm>
#include <set>

#include "agatha/error.h"
#include "agatha/iri.h"
#include "agatha/kb_schema.h"
#include "agatha/utf8.h"

namespace agatha {

namespace {

int BoundCount(const TriplePattern &p, const Binding &b) {
  return (Resolve(p.subject, b) != nullptr) + (Resolve(p.predicate, b) != nullptr) +
         (Resolve(p.object, b) != nullptr);
}

// Depth-first join: always extends with the pattern that has the most
// positions bound under the current partial solution.
void Search(const TripleIndex &index, const std::vector<TriplePattern> &patterns,
            std::vector<bool> *used, const Binding &binding,
            std::vector<Binding> *out) {
  int next = -1;
  int best_bound = -1;
  for (size_t i = 0; i < patterns.size(); ++i) {
    if ((*used)[i]) continue;
    int bound = BoundCount(patterns[i], binding);
    if (bound > best_bound) {
      best_bound = bound;
      next = static_cast<int>(i);
    }
  }
  if (next < 0) {
    out->push_back(binding);
    return;
  }
  const TriplePattern &p = patterns[next];
  (*used)[next] = true;
  index.ForEachMatch(Resolve(p.subject, binding), Resolve(p.predicate, binding),
                     Resolve(p.object, binding), [&](const Triple &t) {
                       Binding extended = binding;
                       if (Unify(p, t, &extended)) {
                         Search(index, patterns, used, extended, out);
                       }
                     });
  (*used)[next] = false;
}

std::optional<Term> Instantiate(const PatternTerm &position, const Binding &b) {
  const Term *t = Resolve(position, b);
  if (t == nullptr) return std::nullopt;
  return *t;
}

}  // namespace

std::vector<std::string> PatternVariables(const QueryPattern &query) {
  std::vector<std::string> vars;
  auto note = [&](const PatternTerm &pt) {
    if (const Variable *v = std::get_if<Variable>(&pt)) {
      if (std::find(vars.begin(), vars.end(), v->name) == vars.end()) {
        vars.push_back(v->name);
      }
    }
  };
  for (const TriplePattern &p : query.patterns) {
    note(p.subject);
    note(p.predicate);
    note(p.object);
  }
  return vars;
}

std::vector<Binding> Solve(const TripleStore &store, const QueryPattern &query) {
  std::vector<Binding> out;
  if (query.patterns.empty()) return out;
  store.Read([&](const TripleIndex &index) {
    std::vector<bool> used(query.patterns.size(), false);
    Search(index, query.patterns, &used, Binding(), &out);
  });
  return out;
}

ResultTable Select(const TripleStore &store, const QueryPattern &query) {
  std::vector<std::string> all = PatternVariables(query);
  ResultTable table;
  table.variables = query.projection.empty() ? all : query.projection;
  for (const std::string &v : table.variables) {
    if (std::find(all.begin(), all.end(), v) == all.end()) {
      throw Error("kb", "projected variable ?" + v + " does not occur in the query");
    }
  }
  std::set<std::vector<Term>> rows;
  for (const Binding &b : Solve(store, query)) {
    std::vector<Term> row;
    row.reserve(table.variables.size());
    for (const std::string &v : table.variables) row.push_back(b.at(v));
    rows.insert(std::move(row));
  }
  table.rows.assign(rows.begin(), rows.end());
  return table;
}

bool Ask(const TripleStore &store, const QueryPattern &query) {
  return !Solve(store, query).empty();
}

Graph Construct(const TripleStore &store, const QueryPattern &where,
                const std::vector<TriplePattern> &templ) {
  Graph graph;
  for (const Binding &b : Solve(store, where)) {
    for (const TriplePattern &p : templ) {
      auto s = Instantiate(p.subject, b);
      auto pr = Instantiate(p.predicate, b);
      auto o = Instantiate(p.object, b);
      if (!s || !pr || !o || s->is_literal() || pr->is_literal()) continue;
      graph.insert({*s, *pr, *o});
    }
  }
  return graph;
}

Graph Describe(const TripleStore &store, const Term &iri) {
  Graph graph;
  if (!iri.is_iri()) return graph;
  store.Read([&](const TripleIndex &index) {
    auto add = [&](const Triple &t) { graph.insert(t); };
    index.ForEachMatch(&iri, nullptr, nullptr, add);
    index.ForEachMatch(nullptr, nullptr, &iri, add);
  });
  return graph;
}

std::map<std::string, std::string> DefaultPrefixes() {
  return {{"rdf", std::string(kRdfNamespace)},
          {"rdfs", std::string(kRdfsNamespace)},
          {"xsd", "http://www.w3.org/2001/XMLSchema#"},
          {"onto", std::string(kOntologyNamespace)}};
}

namespace {

struct QueryToken {
  enum class Kind { kTerm, kVariable, kWord, kOpen, kClose, kDot };
  Kind kind;
  Term term;         // kTerm
  std::string text;  // kVariable name or kWord text
};

class LineLexer {
 public:
  LineLexer(std::string_view line, int line_no,
            const std::map<std::string, std::string> &prefixes)
      : line_(line), line_no_(line_no), prefixes_(prefixes) {}

  std::vector<QueryToken> Lex() {
    std::vector<QueryToken> tokens;
    while (true) {
      while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' ||
                                     line_[pos_] == '\r')) {
        ++pos_;
      }
      if (pos_ >= line_.size()) break;
      char c = line_[pos_];
      if (c == '#') break;
      if (c == '<') {
        tokens.push_back({QueryToken::Kind::kTerm, Term::Iri(ReadIri()), {}});
      } else if (c == '"') {
        tokens.push_back({QueryToken::Kind::kTerm, ReadLiteral(), {}});
      } else if (c == '?' || c == '$') {
        ++pos_;
        size_t start = pos_;
        while (pos_ < line_.size() && IsNameChar(line_[pos_])) ++pos_;
        if (pos_ == start) Fail("empty variable name");
        tokens.push_back({QueryToken::Kind::kVariable, {},
                          std::string(line_.substr(start, pos_ - start))});
      } else if (c == '{') {
        ++pos_;
        tokens.push_back({QueryToken::Kind::kOpen, {}, "{"});
      } else if (c == '}') {
        ++pos_;
        tokens.push_back({QueryToken::Kind::kClose, {}, "}"});
      } else if (c == '.') {
        ++pos_;
        tokens.push_back({QueryToken::Kind::kDot, {}, "."});
      } else {
        size_t start = pos_;
        while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t' &&
               line_[pos_] != '{' && line_[pos_] != '}' && line_[pos_] != '\r') {
          ++pos_;
        }
        std::string_view word = line_.substr(start, pos_ - start);
        bool trailing_dot = word.size() > 1 && word.back() == '.';
        if (trailing_dot) word.remove_suffix(1);
        tokens.push_back(WordToken(word));
        if (trailing_dot) tokens.push_back({QueryToken::Kind::kDot, {}, "."});
      }
    }
    return tokens;
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw Error("query", "line " + std::to_string(line_no_) + ": " + message);
  }

 private:
  static bool IsNameChar(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  QueryToken WordToken(std::string_view word) {
    if (word == "a") {
      return {QueryToken::Kind::kTerm,
              Term::Iri(std::string(kRdfNamespace) + "type"), {}};
    }
    size_t colon = word.find(':');
    if (colon != std::string_view::npos) {
      auto it = prefixes_.find(std::string(word.substr(0, colon)));
      if (it != prefixes_.end()) {
        return {QueryToken::Kind::kTerm,
                Term::Iri(it->second + std::string(word.substr(colon + 1))), {}};
      }
    }
    return {QueryToken::Kind::kWord, {}, std::string(word)};
  }

  std::string ReadIri() {
    size_t end = line_.find('>', pos_ + 1);
    if (end == std::string_view::npos) Fail("unterminated IRI");
    std::string iri(line_.substr(pos_ + 1, end - pos_ - 1));
    pos_ = end + 1;
    if (!IsAbsoluteIri(iri)) Fail("'" + iri + "' is not an absolute IRI");
    return iri;
  }

  Term ReadLiteral() {
    std::string value;
    ++pos_;
    while (true) {
      if (pos_ >= line_.size()) Fail("unterminated literal");
      char c = line_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        value.push_back(c);
        continue;
      }
      if (pos_ >= line_.size()) Fail("dangling escape in literal");
      char e = line_[pos_++];
      switch (e) {
        case 'n': value.push_back('\n'); break;
        case 't': value.push_back('\t'); break;
        case 'r': value.push_back('\r'); break;
        case '"': value.push_back('"'); break;
        case '\\': value.push_back('\\'); break;
        case 'u':
        case 'U': {
          size_t digits = e == 'u' ? 4 : 8;
          if (pos_ + digits > line_.size()) Fail("short \\u escape");
          char32_t cp = 0;
          for (size_t k = 0; k < digits; ++k) {
            char h = line_[pos_ + k];
            int v = (h >= '0' && h <= '9')   ? h - '0'
                    : (h >= 'a' && h <= 'f') ? h - 'a' + 10
                    : (h >= 'A' && h <= 'F') ? h - 'A' + 10
                                             : -1;
            if (v < 0) Fail("bad hex digit in escape");
            cp = cp * 16 + v;
          }
          pos_ += digits;
          utf8::Append(cp, &value);
          break;
        }
        default:
          Fail(std::string("unknown escape \\") + e);
      }
    }
    std::string datatype;
    if (line_.substr(pos_).starts_with("^^")) {
      pos_ += 2;
      if (pos_ < line_.size() && line_[pos_] == '<') {
        datatype = ReadIri();
      } else {
        size_t start = pos_;
        while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t' &&
               line_[pos_] != '}') {
          ++pos_;
        }
        std::string_view word = line_.substr(start, pos_ - start);
        if (word.ends_with('.')) {
          word.remove_suffix(1);
          --pos_;
        }
        QueryToken t = WordToken(word);
        if (t.kind != QueryToken::Kind::kTerm) Fail("bad datatype '" + std::string(word) + "'");
        datatype = t.term.value;
      }
    }
    return Term::Literal(std::move(value), std::move(datatype));
  }

  std::string_view line_;
  int line_no_;
  const std::map<std::string, std::string> &prefixes_;
  size_t pos_ = 0;
};

bool IsKeyword(const std::string &w) {
  static const std::set<std::string> kWords = {"SELECT", "ASK", "CONSTRUCT",
                                               "DESCRIBE", "INSERT", "DELETE"};
  return kWords.count(w) != 0;
}

bool LooksLikeVerb(const std::string &w) {
  return !w.empty() && std::all_of(w.begin(), w.end(),
                                   [](char c) { return c >= 'A' && c <= 'Z'; });
}

// Splits tokens into '.'-separated triples of pattern terms.
std::vector<TriplePattern> ParsePatterns(const std::vector<QueryToken> &tokens,
                                         size_t begin, size_t end,
                                         const LineLexer &lexer) {
  std::vector<TriplePattern> out;
  std::vector<PatternTerm> current;
  auto flush = [&] {
    if (current.empty()) return;
    if (current.size() != 3) {
      lexer.Fail("expected 3 terms in a triple pattern, found " +
                 std::to_string(current.size()));
    }
    out.push_back({current[0], current[1], current[2]});
    current.clear();
  };
  for (size_t i = begin; i < end; ++i) {
    const QueryToken &t = tokens[i];
    switch (t.kind) {
      case QueryToken::Kind::kTerm: current.emplace_back(t.term); break;
      case QueryToken::Kind::kVariable: current.emplace_back(Variable{t.text}); break;
      case QueryToken::Kind::kDot: flush(); break;
      case QueryToken::Kind::kWord: lexer.Fail("unknown term '" + t.text + "'");
      default: lexer.Fail("unexpected '" + t.text + "'");
    }
  }
  flush();
  return out;
}

}  // namespace

ParsedQuery ParseQuery(std::string_view text,
                       std::map<std::string, std::string> prefixes) {
  ParsedQuery query;
  bool verb_seen = false;
  bool patterns_seen = false;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    LineLexer lexer(line, line_no, prefixes);
    std::vector<QueryToken> tokens = lexer.Lex();
    if (tokens.empty()) continue;

    const QueryToken &first = tokens.front();
    if (first.kind == QueryToken::Kind::kWord && first.text == "PREFIX") {
      if (tokens.size() != 3 || tokens[1].kind != QueryToken::Kind::kWord ||
          !tokens[1].text.ends_with(':') || tokens[2].kind != QueryToken::Kind::kTerm ||
          !tokens[2].term.is_iri()) {
        lexer.Fail("expected 'PREFIX name: <iri>'");
      }
      prefixes[tokens[1].text.substr(0, tokens[1].text.size() - 1)] =
          tokens[2].term.value;
      continue;
    }
    // Optional SPARQL-style decoration.
    bool decoration = std::all_of(tokens.begin(), tokens.end(), [](const QueryToken &t) {
      return t.kind == QueryToken::Kind::kOpen || t.kind == QueryToken::Kind::kClose ||
             (t.kind == QueryToken::Kind::kWord && t.text == "WHERE");
    });
    if (decoration) continue;

    if (first.kind == QueryToken::Kind::kWord && LooksLikeVerb(first.text)) {
      if (!IsKeyword(first.text)) lexer.Fail("unknown verb '" + first.text + "'");
      if (verb_seen || patterns_seen) lexer.Fail("verb must be the first statement");
      verb_seen = true;
      const std::string &verb = first.text;
      if (verb == "SELECT") {
        query.verb = QueryVerb::kSelect;
        for (size_t i = 1; i < tokens.size(); ++i) {
          if (tokens[i].kind == QueryToken::Kind::kWord && tokens[i].text == "*") continue;
          if (tokens[i].kind == QueryToken::Kind::kWord && tokens[i].text == "WHERE") break;
          if (tokens[i].kind == QueryToken::Kind::kOpen) break;
          if (tokens[i].kind != QueryToken::Kind::kVariable) {
            lexer.Fail("SELECT expects variables");
          }
          query.where.projection.push_back(tokens[i].text);
        }
      } else if (verb == "ASK") {
        query.verb = QueryVerb::kAsk;
      } else if (verb == "CONSTRUCT") {
        query.verb = QueryVerb::kConstruct;
        if (tokens.size() < 3 || tokens[1].kind != QueryToken::Kind::kOpen) {
          lexer.Fail("expected 'CONSTRUCT { ... }'");
        }
        size_t close = 2;
        while (close < tokens.size() && tokens[close].kind != QueryToken::Kind::kClose) {
          ++close;
        }
        if (close == tokens.size()) lexer.Fail("missing '}' in CONSTRUCT");
        query.construct_template = ParsePatterns(tokens, 2, close, lexer);
      } else if (verb == "DESCRIBE") {
        query.verb = QueryVerb::kDescribe;
        if (tokens.size() != 2 || tokens[1].kind != QueryToken::Kind::kTerm ||
            !tokens[1].term.is_iri()) {
          lexer.Fail("expected 'DESCRIBE <iri>'");
        }
        query.describe_target = tokens[1].term;
      } else if (verb == "INSERT") {
        query.verb = QueryVerb::kInsert;
      } else {
        query.verb = QueryVerb::kDelete;
      }
      if (verb == "INSERT" || verb == "DELETE" || verb == "ASK") {
        size_t i = 1;
        while (i < tokens.size() && tokens[i].kind == QueryToken::Kind::kWord &&
               (tokens[i].text == "DATA" || tokens[i].text == "WHERE")) {
          ++i;
        }
        if (i != tokens.size()) lexer.Fail("unexpected text after " + verb);
      }
      continue;
    }

    std::vector<TriplePattern> patterns = ParsePatterns(tokens, 0, tokens.size(), lexer);
    patterns_seen = true;
    if (query.verb == QueryVerb::kDescribe) lexer.Fail("DESCRIBE takes no patterns");
    if (query.verb == QueryVerb::kInsert) {
      for (const TriplePattern &p : patterns) {
        const Term *s = std::get_if<Term>(&p.subject);
        const Term *pr = std::get_if<Term>(&p.predicate);
        const Term *o = std::get_if<Term>(&p.object);
        if (!s || !pr || !o) lexer.Fail("INSERT triples may not contain variables");
        query.insert_triples.push_back({*s, *pr, *o});
      }
    } else {
      for (TriplePattern &p : patterns) query.where.patterns.push_back(std::move(p));
    }
  }
  return query;
}

}  // namespace agatha

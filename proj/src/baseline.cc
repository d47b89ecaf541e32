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

#include <fstream>
#include <sstream>

#include "agatha/error.h"
#include "agatha/utf8.h"

namespace agatha {

namespace {

const std::set<std::string, std::less<>> &MonthNames() {
  static const std::set<std::string, std::less<>> kMonths = {
      "janeiro", "fevereiro", "março", "abril", "maio", "junho", "julho",
      "agosto", "setembro", "outubro", "novembro", "dezembro"};
  return kMonths;
}

const std::set<std::string, std::less<>> &CurrencyWords() {
  static const std::set<std::string, std::less<>> kCurrencies = {
      "€", "$", "£", "euro", "euros", "eur", "dólar", "dólares", "usd",
      "real", "reais", "libra", "libras"};
  return kCurrencies;
}

std::string ReadFile(const std::filesystem::path &path, const char *module) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(module, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Text = std::u32string_view;

// Length of a run of at most `max_digits` digits starting at i.
size_t Digits(Text s, size_t i, size_t max_digits) {
  size_t n = 0;
  while (i + n < s.size() && utf8::IsDigit(s[i + n]) && n < max_digits) ++n;
  return n;
}

// \d{1,2}/\d{1,2}/\d{2,4} at position i, not followed by another digit.
size_t MatchDate(Text s, size_t i) {
  size_t j = i;
  for (int part = 0; part < 3; ++part) {
    size_t max = part == 2 ? 4 : 2;
    size_t n = Digits(s, j, max);
    if (n < (part == 2 ? 2u : 1u)) return 0;
    j += n;
    if (j < s.size() && utf8::IsDigit(s[j])) return 0;
    if (part < 2) {
      if (j >= s.size() || s[j] != '/') return 0;
      ++j;
    }
  }
  return j - i;
}

// \d+([.,]\d+)? at position i.
size_t MatchNumber(Text s, size_t i) {
  size_t n = Digits(s, i, s.size());
  if (n == 0) return 0;
  size_t j = i + n;
  if (j + 1 < s.size() && (s[j] == '.' || s[j] == ',') &&
      utf8::IsDigit(s[j + 1])) {
    j += 1 + Digits(s, j + 1, s.size());
  }
  return j - i;
}

bool IsWordChar(char32_t c) { return utf8::IsLetter(c) || utf8::IsDigit(c); }

bool WholeMatch(std::string_view token, size_t (*matcher)(Text, size_t)) {
  std::u32string cps = utf8::Decode(token);
  return !cps.empty() && matcher(cps, 0) == cps.size();
}

std::string PunctTag(std::string_view surface) {
  static const std::map<std::string_view, std::string_view> kTags = {
      {".", "Fp"}, {",", "Fc"}, {":", "Fd"}, {";", "Fx"}, {"!", "Fat"},
      {"?", "Fit"}, {"-", "Fg"}, {"\"", "Fe"}, {"'", "Fe"}, {"(", "Fpa"},
      {")", "Fpt"}, {"[", "Fca"}, {"]", "Fct"}, {"/", "Fh"}, {"%", "Ft"},
      {"«", "Fra"}, {"»", "Frc"}};
  auto it = kTags.find(surface);
  return std::string(it == kTags.end() ? "Fz" : it->second);
}

bool IsPunctToken(std::string_view surface) {
  std::u32string cps = utf8::Decode(surface);
  return cps.size() == 1 && utf8::IsPunct(cps[0]);
}

bool IsTerminator(std::string_view s) { return s == "." || s == "!" || s == "?"; }

// Per-token annotation state before it is frozen into a Token.
struct Draft {
  std::string surface;
  std::string lower;
  std::string pos;
  std::optional<NerLabel> ner;
  int run_first = -1;  // 0-based index of the first token of its NER run
};

void ApplyGazetteers(std::span<const Gazetteer> gazetteers,
                     std::vector<Draft> *drafts) {
  size_t max_len = 0;
  for (const Gazetteer &g : gazetteers) {
    for (const std::string &entry : g.entries) {
      max_len = std::max(max_len, Tokenize(entry).size());
    }
  }
  const size_t n = drafts->size();
  size_t i = 0;
  while (i < n) {
    size_t matched = 0;
    NerLabel label = NerLabel::kPerson;
    for (size_t len = std::min(max_len, n - i); len >= 1 && matched == 0; --len) {
      std::string key = (*drafts)[i].lower;
      for (size_t k = 1; k < len; ++k) key += " " + (*drafts)[i + k].lower;
      for (const Gazetteer &g : gazetteers) {
        if (g.entries.count(key) != 0) {
          matched = len;
          label = g.label;
          break;
        }
      }
    }
    if (matched == 0) {
      ++i;
      continue;
    }
    for (size_t k = 0; k < matched; ++k) (*drafts)[i + k].ner = label;
    i += matched;
  }
}

std::string LookupPos(const PosLexicon &lexicon, const Draft &d) {
  auto it = lexicon.find(d.surface);
  if (it == lexicon.end()) it = lexicon.find(d.lower);
  return it == lexicon.end() ? std::string() : it->second;
}

Sentence AnnotateSentence(const std::vector<std::string> &surfaces,
                          int sentence_index, const PosLexicon &lexicon,
                          std::span<const Gazetteer> gazetteers) {
  const int n = static_cast<int>(surfaces.size());
  std::vector<Draft> drafts(n);
  for (int i = 0; i < n; ++i) {
    drafts[i].surface = surfaces[i];
    drafts[i].lower = utf8::ToLower(surfaces[i]);
  }
  ApplyGazetteers(gazetteers, &drafts);

  for (int i = 0; i < n; ++i) {
    Draft &d = drafts[i];
    std::string tag = LookupPos(lexicon, d);
    if (WholeMatch(d.surface, MatchDate) || MonthNames().count(d.lower) != 0) {
      d.pos = "W";
    } else if (!tag.empty()) {
      d.pos = tag;
    } else if (d.ner) {
      d.pos = "NP00000";
    } else if (IsPunctToken(d.surface)) {
      d.pos = PunctTag(d.surface);
    } else if (WholeMatch(d.surface, MatchNumber)) {
      d.pos = "Z";
    } else {
      d.pos = std::string(kFallbackNounTag);
    }
  }
  // Amount followed by a currency symbol or word.
  for (int i = 0; i + 1 < n; ++i) {
    if (WholeMatch(drafts[i].surface, MatchNumber) &&
        CurrencyWords().count(drafts[i + 1].lower) != 0) {
      for (int k : {i, i + 1}) {
        drafts[k].pos = "Zm";
        drafts[k].ner = NerLabel::kCurrency;
      }
    }
  }
  // Keep POS and NER consistent for date/time and currency.
  for (Draft &d : drafts) {
    if (IsDateTag(d.pos)) {
      d.ner = NerLabel::kDateTime;
    } else if (IsCurrencyTag(d.pos)) {
      d.ner = NerLabel::kCurrency;
    } else if (d.ner == NerLabel::kDateTime) {
      d.pos = "W";
    } else if (d.ner == NerLabel::kCurrency) {
      d.pos = "Zm";
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!drafts[i].ner) continue;
    bool continues = i > 0 && drafts[i - 1].ner == drafts[i].ner;
    drafts[i].run_first = continues ? drafts[i - 1].run_first : i;
  }

  auto in_run_tail = [&](int i) {
    return drafts[i].run_first >= 0 && drafts[i].run_first != i;
  };
  auto anchor = [&](int i) {
    return drafts[i].run_first >= 0 ? drafts[i].run_first : i;
  };

  int root = 0;
  for (int i = 0; i < n; ++i) {
    if (IsVerbTag(drafts[i].pos)) {
      root = i;
      break;
    }
  }

  Sentence sentence;
  sentence.index = sentence_index;
  sentence.tokens.resize(n);
  for (int i = 0; i < n; ++i) {
    const Draft &d = drafts[i];
    Token &t = sentence.tokens[i];
    t.index = i + 1;
    t.surface = d.surface;
    t.lemma = d.lower;
    t.pos = d.pos;
    t.ner = d.ner;
    if (i == root) {
      t.deprel = "ROOT";
      continue;
    }
    int head = root;
    t.deprel = IsPunctToken(d.surface) ? "punct" : "dep";
    if (in_run_tail(i)) {
      head = d.run_first;
      t.deprel = "flat";
    } else if (d.run_first < 0 && d.pos.starts_with('D')) {
      for (int j = i + 1; j < n && j <= i + 3; ++j) {
        if (IsNounTag(drafts[j].pos) && anchor(j) != i) {
          head = anchor(j);
          t.deprel = "det";
          break;
        }
      }
    } else if (d.run_first < 0 && d.pos.starts_with('A')) {
      if (i > 0 && IsNounTag(drafts[i - 1].pos)) {
        head = anchor(i - 1);
        t.deprel = "amod";
      } else if (i + 1 < n && IsNounTag(drafts[i + 1].pos)) {
        head = anchor(i + 1);
        t.deprel = "amod";
      }
    }
    t.head = head + 1;
  }

  // Nominal heads eligible as actor/object fillers.
  auto nominal = [&](int i) {
    const Draft &d = drafts[i];
    if (in_run_tail(i)) return false;
    if (d.ner == NerLabel::kPerson || d.ner == NerLabel::kOrganization) return true;
    return !d.ner && IsNounTag(d.pos);
  };
  for (int v = 0; v < n; ++v) {
    if (!IsVerbTag(drafts[v].pos)) continue;
    const int pred = v + 1;
    for (int i = v - 1; i >= 0; --i) {
      if (nominal(i)) {
        sentence.tokens[i].roles.emplace(pred, RoleLabel::kA0);
        break;
      }
    }
    for (int i = v + 1; i < n; ++i) {
      if (nominal(i)) {
        sentence.tokens[i].roles.emplace(pred, RoleLabel::kA1);
        break;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (in_run_tail(i)) continue;
      if (drafts[i].ner == NerLabel::kLocation) {
        sentence.tokens[i].roles.emplace(pred, RoleLabel::kAmLoc);
      } else if (drafts[i].ner == NerLabel::kDateTime) {
        sentence.tokens[i].roles.emplace(pred, RoleLabel::kAmTmp);
      }
    }
  }
  sentence.predicates = ComputePredicates(sentence);
  return sentence;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view raw) {
  std::u32string s = utf8::Decode(raw);
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < s.size()) {
    if (utf8::IsSpace(s[i])) {
      ++i;
      continue;
    }
    size_t len = MatchDate(s, i);
    if (len == 0) len = MatchNumber(s, i);
    if (len != 0 && i + len < s.size() && utf8::IsLetter(s[i + len])) len = 0;
    if (len == 0 && IsWordChar(s[i])) {
      len = 1;
      while (i + len < s.size()) {
        char32_t c = s[i + len];
        if (IsWordChar(c)) {
          ++len;
        } else if ((c == '-' || c == '\'' || c == 0x2019) &&
                   i + len + 1 < s.size() && utf8::IsLetter(s[i + len + 1])) {
          len += 2;
        } else {
          break;
        }
      }
    }
    if (len == 0) len = 1;
    tokens.push_back(utf8::Encode(Text(s).substr(i, len)));
    i += len;
  }
  return tokens;
}

Gazetteer ParseGazetteer(std::string name, std::string_view content) {
  Gazetteer g;
  g.name = std::move(name);
  bool has_label = false;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with("#label")) {
      std::string label = line.size() > 7 ? line.substr(7) : "";
      auto parsed = ParseNer(label);
      if (!parsed) {
        throw Error("ingest", "gazetteer " + g.name + ":" +
                                  std::to_string(line_no) +
                                  ": invalid label '" + label + "'");
      }
      g.label = *parsed;
      has_label = true;
      continue;
    }
    if (line.empty() || line.starts_with('#')) continue;
    g.entries.insert(utf8::ToLower(line));
  }
  if (!has_label) throw Error("ingest", "gazetteer " + g.name + " has no #label line");
  if (g.entries.empty()) throw Error("ingest", "gazetteer " + g.name + " has no entries");
  return g;
}

Gazetteer LoadGazetteer(const std::filesystem::path &path) {
  return ParseGazetteer(path.stem().string(), ReadFile(path, "ingest"));
}

PosLexicon ParsePosLexicon(std::string_view content) {
  PosLexicon lexicon;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with('#')) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error("ingest", "pos lexicon line " + std::to_string(line_no) +
                                ": expected 'surface<TAB>tag'");
    }
    lexicon[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return lexicon;
}

PosLexicon LoadPosLexicon(const std::filesystem::path &path) {
  return ParsePosLexicon(ReadFile(path, "ingest"));
}

Document AnnotateBaseline(std::string_view raw, const PosLexicon &lexicon,
                          std::span<const Gazetteer> gazetteers,
                          const DocumentInfo &info) {
  Document doc;
  doc.doc_id = info.doc_id;
  doc.case_id = info.case_id;
  doc.language = info.language;

  std::vector<std::string> tokens = Tokenize(raw);
  std::vector<std::string> current;
  auto flush = [&] {
    if (current.empty()) return;
    doc.sentences.push_back(AnnotateSentence(
        current, static_cast<int>(doc.sentences.size()), lexicon, gazetteers));
    current.clear();
  };
  for (size_t i = 0; i < tokens.size(); ++i) {
    current.push_back(tokens[i]);
    bool next_is_terminator = i + 1 < tokens.size() && IsTerminator(tokens[i + 1]);
    if (IsTerminator(tokens[i]) && !next_is_terminator) flush();
  }
  flush();
  return doc;
}

}  // namespace agatha

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

#include "agatha/ingest.h"

#include <charconv>
#include <optional>
#include <set>

#include "agatha/error.h"

namespace agatha {

namespace {

constexpr int kColumns = 8;

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<std::string> TryUnescape(std::string_view field) {
  if (field == "_") return std::string();
  std::string out;
  out.reserve(field.size());
  for (size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\') {
      out.push_back(field[i]);
      continue;
    }
    if (++i == field.size()) return std::nullopt;
    switch (field[i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case '\\': out.push_back('\\'); break;
      case '_': out.push_back('_'); break;
      default: return std::nullopt;
    }
  }
  return out;
}

// A token line plus the line number it came from, kept until the sentence
// is complete so range checks can name the offending line.
struct PendingToken {
  Token token;
  int line;
};

class CorpusParser {
 public:
  CorpusParser(const ParseOptions &options, std::vector<std::string> *warnings)
      : options_(options), warnings_(warnings) {}

  std::vector<Document> Parse(std::string_view content) {
    int line_no = 0;
    size_t start = 0;
    while (start < content.size()) {
      size_t end = content.find('\n', start);
      if (end == std::string_view::npos) end = content.size();
      ++line_no;
      ParseLine(content.substr(start, end - start), line_no);
      start = end + 1;
    }
    FlushSentence();
    FlushDocument();
    return std::move(docs_);
  }

 private:
  [[noreturn]] void Fail(int line, const std::string &message) const {
    throw Error("ingest", options_.source_name + ":" + std::to_string(line) +
                              ": " + message);
  }

  void ParseLine(std::string_view line, int line_no) {
    if (line.empty()) {
      FlushSentence();
      return;
    }
    if (line.starts_with("#doc ") || line == "#doc") {
      FlushSentence();
      FlushDocument();
      auto fields = Split(line, ' ');
      if (fields.size() != 4 || fields[1].empty() || fields[2].empty() ||
          fields[3].empty()) {
        Fail(line_no, "expected '#doc <doc_id> <case_id> <lang>'");
      }
      std::string id(fields[1]);
      if (!doc_ids_.insert(id).second) {
        Fail(line_no, "duplicate doc_id '" + id + "'");
      }
      doc_.emplace();
      doc_->doc_id = id;
      doc_->case_id = std::string(fields[2]);
      doc_->language = std::string(fields[3]);
      doc_line_ = line_no;
      return;
    }
    if (line.starts_with('#')) return;
    if (!doc_) Fail(line_no, "token line before any #doc header");
    pending_.push_back({ParseToken(line, line_no), line_no});
  }

  Token ParseToken(std::string_view line, int line_no) {
    auto cols = Split(line, '\t');
    if (cols.size() != kColumns) {
      Fail(line_no, "expected 8 columns, found " + std::to_string(cols.size()));
    }
    auto field = [&](int col, const char *name) {
      auto value = TryUnescape(cols[col]);
      if (!value) Fail(line_no, std::string("bad escape in ") + name);
      return *value;
    };

    Token token;
    auto index = ParseInt(cols[0]);
    if (!index || *index < 1) Fail(line_no, "INDEX must be a positive integer");
    token.index = *index;
    token.surface = field(1, "SURFACE");
    token.lemma = field(2, "LEMMA");
    token.pos = field(3, "POS");
    if (cols[4] != "_") {
      token.ner = ParseNer(cols[4]);
      if (!token.ner) Fail(line_no, "unknown NER label '" + std::string(cols[4]) + "'");
    }
    auto head = ParseInt(cols[5]);
    if (!head || *head < 0) Fail(line_no, "HEAD must be a non-negative integer");
    if (*head != 0) token.head = *head;
    token.deprel = field(6, "DEPREL");
    if (cols[7] != "_") {
      for (std::string_view pair : Split(cols[7], ';')) {
        size_t colon = pair.find(':');
        if (colon == std::string_view::npos) {
          Fail(line_no, "ROLES entry '" + std::string(pair) +
                            "' is not predIndex:label");
        }
        auto pred = ParseInt(pair.substr(0, colon));
        if (!pred || *pred < 1) Fail(line_no, "ROLES predicate index is not a positive integer");
        std::string_view label = pair.substr(colon + 1);
        auto role = ParseRole(label);
        if (!role) {
          if (warnings_ != nullptr) {
            warnings_->push_back(options_.source_name + ":" +
                                 std::to_string(line_no) +
                                 ": dropped unknown role '" +
                                 std::string(label) + "'");
          }
          continue;
        }
        if (!token.roles.emplace(*pred, *role).second) {
          Fail(line_no, "two roles for predicate " + std::to_string(*pred));
        }
      }
    }
    return token;
  }

  void FlushSentence() {
    if (pending_.empty()) return;
    const int n = static_cast<int>(pending_.size());
    Sentence sentence;
    sentence.index = static_cast<int>(doc_->sentences.size());
    for (PendingToken &p : pending_) {
      if (p.token.head && *p.token.head > n) {
        Fail(p.line, "HEAD " + std::to_string(*p.token.head) +
                         " out of range for a " + std::to_string(n) +
                         "-token sentence");
      }
      for (const auto &[pred, role] : p.token.roles) {
        if (pred > n) {
          Fail(p.line, "ROLES references missing predicate index " +
                           std::to_string(pred));
        }
      }
      sentence.tokens.push_back(std::move(p.token));
    }
    sentence.predicates = ComputePredicates(sentence);
    doc_->sentences.push_back(std::move(sentence));
    pending_.clear();
  }

  void FlushDocument() {
    if (!doc_) return;
    if (options_.validate) {
      auto violations = ValidateDocument(*doc_);
      if (!violations.empty()) {
        std::string message = "document '" + doc_->doc_id + "' (line " +
                              std::to_string(doc_line_) + ") is invalid:";
        for (const Violation &v : violations) message += " [" + v.ToString() + "]";
        throw Error("ingest", options_.source_name + ": " + message);
      }
    }
    docs_.push_back(std::move(*doc_));
    doc_.reset();
  }

  const ParseOptions &options_;
  std::vector<std::string> *warnings_;
  std::vector<Document> docs_;
  std::optional<Document> doc_;
  int doc_line_ = 0;
  std::vector<PendingToken> pending_;
  std::set<std::string> doc_ids_;
};

}  // namespace

std::string EscapeField(std::string_view value) {
  if (value.empty()) return "_";
  if (value == "_") return "\\_";
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string UnescapeField(std::string_view field) {
  auto value = TryUnescape(field);
  if (!value) throw Error("ingest", "bad escape in field '" + std::string(field) + "'");
  return *value;
}

std::vector<Document> ParseCorpus(std::string_view content,
                                  const ParseOptions &options,
                                  std::vector<std::string> *warnings) {
  return CorpusParser(options, warnings).Parse(content);
}

std::string SerializeCorpus(std::span<const Document> docs) {
  std::string out;
  for (const Document &doc : docs) {
    out += "#doc " + doc.doc_id + " " + doc.case_id + " " + doc.language + "\n";
    for (const Sentence &sentence : doc.sentences) {
      for (const Token &token : sentence.tokens) {
        out += std::to_string(token.index);
        out += '\t';
        out += EscapeField(token.surface);
        out += '\t';
        out += EscapeField(token.lemma);
        out += '\t';
        out += EscapeField(token.pos);
        out += '\t';
        out += token.ner ? std::string(NerName(*token.ner)) : "_";
        out += '\t';
        out += std::to_string(token.head.value_or(0));
        out += '\t';
        out += EscapeField(token.deprel);
        out += '\t';
        if (token.roles.empty()) {
          out += '_';
        } else {
          bool first = true;
          for (const auto &[pred, role] : token.roles) {
            if (!first) out += ';';
            first = false;
            out += std::to_string(pred);
            out += ':';
            out += RoleName(role);
          }
        }
        out += '\n';
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace agatha

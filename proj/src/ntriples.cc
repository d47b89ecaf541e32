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

#include <algorithm>
#include <cstdio>
#include <vector>

#include "agatha/error.h"
#include "agatha/utf8.h"

namespace agatha {

namespace {

void AppendUEscape(unsigned char c, std::string *out) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "\\u%04X", c);
  out->append(buf);
}

bool IriNeedsEscape(unsigned char c) {
  return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
         c == '|' || c == '^' || c == '`' || c == '\\';
}

void AppendIri(std::string_view iri, std::string *out) {
  out->push_back('<');
  for (unsigned char c : iri) {
    if (IriNeedsEscape(c)) {
      AppendUEscape(c, out);
    } else {
      out->push_back(static_cast<char>(c));
    }
  }
  out->push_back('>');
}

void AppendLiteral(std::string_view value, std::string *out) {
  out->push_back('"');
  for (unsigned char c : value) {
    switch (c) {
      case '"': out->append("\\\""); break;
      case '\\': out->append("\\\\"); break;
      case '\n': out->append("\\n"); break;
      case '\r': out->append("\\r"); break;
      case '\t': out->append("\\t"); break;
      default:
        if (c < 0x20 || c == 0x7F) {
          AppendUEscape(c, out);
        } else {
          out->push_back(static_cast<char>(c));
        }
    }
  }
  out->push_back('"');
}

class LineParser {
 public:
  LineParser(std::string_view line, std::string_view source, int line_no)
      : line_(line), source_(source), line_no_(line_no) {}

  // False for a blank or comment-only line.
  bool Parse(Triple *triple) {
    SkipSpace();
    if (AtEnd() || Peek() == '#') return false;
    triple->subject = ReadTerm("subject");
    SkipSpace();
    triple->predicate = ReadTerm("predicate");
    SkipSpace();
    triple->object = ReadTerm("object");
    SkipSpace();
    if (AtEnd() || Peek() != '.') Fail("expected '.' after the object");
    ++pos_;
    SkipSpace();
    if (!AtEnd() && Peek() != '#') Fail("trailing text after '.'");
    try {
      CheckTriple(*triple);
    } catch (const Error &e) {
      Fail(e.message());
    }
    return true;
  }

 private:
  bool AtEnd() const { return pos_ >= line_.size(); }
  char Peek() const { return line_[pos_]; }

  void SkipSpace() {
    while (!AtEnd() && (Peek() == ' ' || Peek() == '\t' || Peek() == '\r')) ++pos_;
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw Error("ntriples", std::string(source_) + ":" + std::to_string(line_no_) +
                                ": " + message);
  }

  Term ReadTerm(const char *position) {
    if (AtEnd()) Fail(std::string("missing ") + position);
    char c = Peek();
    if (c == '<') return Term::Iri(ReadIri());
    if (c == '"') return ReadLiteral();
    if (c == '_') Fail("blank nodes are not supported");
    if (c == '.') Fail(std::string("missing ") + position);
    Fail(std::string("unexpected character '") + c + "' in " + position);
  }

  char32_t ReadHex(size_t digits) {
    if (pos_ + digits > line_.size()) Fail("truncated \\u escape");
    char32_t cp = 0;
    for (size_t k = 0; k < digits; ++k) {
      char h = line_[pos_ + k];
      int v = (h >= '0' && h <= '9')   ? h - '0'
              : (h >= 'a' && h <= 'f') ? h - 'a' + 10
              : (h >= 'A' && h <= 'F') ? h - 'A' + 10
                                       : -1;
      if (v < 0) Fail("bad hex digit in escape");
      cp = cp * 16 + static_cast<char32_t>(v);
    }
    pos_ += digits;
    if (cp > 0x10FFFF) Fail("escape outside the Unicode range");
    return cp;
  }

  // Code points below 0x80 are appended as raw bytes so escaped control
  // characters restore exactly.
  void AppendCodePoint(char32_t cp, std::string *out) {
    if (cp < 0x80) {
      out->push_back(static_cast<char>(cp));
    } else {
      utf8::Append(cp, out);
    }
  }

  std::string ReadIri() {
    ++pos_;
    std::string iri;
    while (true) {
      if (AtEnd()) Fail("unterminated IRI");
      char c = line_[pos_++];
      if (c == '>') break;
      if (c == '\\') {
        if (AtEnd()) Fail("dangling escape in IRI");
        char e = line_[pos_++];
        if (e == 'u') {
          AppendCodePoint(ReadHex(4), &iri);
        } else if (e == 'U') {
          AppendCodePoint(ReadHex(8), &iri);
        } else {
          Fail(std::string("bad escape \\") + e + " in IRI");
        }
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"') {
        Fail("illegal character in IRI");
      }
      iri.push_back(c);
    }
    return iri;
  }

  Term ReadLiteral() {
    ++pos_;
    std::string value;
    while (true) {
      if (AtEnd()) Fail("unterminated literal");
      char c = line_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        value.push_back(c);
        continue;
      }
      if (AtEnd()) Fail("dangling escape in literal");
      char e = line_[pos_++];
      switch (e) {
        case 't': value.push_back('\t'); break;
        case 'b': value.push_back('\b'); break;
        case 'n': value.push_back('\n'); break;
        case 'r': value.push_back('\r'); break;
        case 'f': value.push_back('\f'); break;
        case '"': value.push_back('"'); break;
        case '\'': value.push_back('\''); break;
        case '\\': value.push_back('\\'); break;
        case 'u': AppendCodePoint(ReadHex(4), &value); break;
        case 'U': AppendCodePoint(ReadHex(8), &value); break;
        default: Fail(std::string("bad escape \\") + e + " in literal");
      }
    }
    std::string datatype;
    if (!AtEnd() && Peek() == '@') Fail("language tags are not supported");
    if (line_.substr(pos_).starts_with("^^")) {
      pos_ += 2;
      if (AtEnd() || Peek() != '<') Fail("expected <iri> after ^^");
      datatype = ReadIri();
    }
    return Term::Literal(std::move(value), std::move(datatype));
  }

  std::string_view line_;
  std::string_view source_;
  int line_no_;
  size_t pos_ = 0;
};

}  // namespace

std::string FormatTerm(const Term &term) {
  std::string out;
  if (term.is_iri()) {
    AppendIri(term.value, &out);
  } else {
    AppendLiteral(term.value, &out);
    if (!term.datatype.empty()) {
      out.append("^^");
      AppendIri(term.datatype, &out);
    }
  }
  return out;
}

std::string FormatTriple(const Triple &triple) {
  return FormatTerm(triple.subject) + " " + FormatTerm(triple.predicate) + " " +
         FormatTerm(triple.object) + " .";
}

std::string SerializeNTriples(const Graph &graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const Triple &t : graph) lines.push_back(FormatTriple(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string &line : lines) {
    out += line;
    out.push_back('\n');
  }
  return out;
}

std::string SerializeNTriples(const TripleStore &store) {
  return SerializeNTriples(store.Snapshot());
}

Graph ParseNTriples(std::string_view text, std::string_view source_name) {
  Graph graph;
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    Triple triple;
    if (LineParser(text.substr(start, end - start), source_name, line_no).Parse(&triple)) {
      graph.insert(std::move(triple));
    }
    start = end + 1;
  }
  return graph;
}

}  // namespace agatha

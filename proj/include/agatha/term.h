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

#ifndef AGATHA_TERM_H_
#define AGATHA_TERM_H_

#include <compare>
#include <set>
#include <string>
#include <string_view>

namespace agatha {

// An RDF node: an absolute IRI or a literal with an optional datatype IRI.
// No blank nodes.
struct Term {
  enum class Kind : unsigned char { kIri, kLiteral };

  Kind kind = Kind::kIri;
  std::string value;
  std::string datatype;  // literals only; empty for plain literals

  static Term Iri(std::string iri);
  static Term Literal(std::string value, std::string datatype = {});

  bool is_iri() const { return kind == Kind::kIri; }
  bool is_literal() const { return kind == Kind::kLiteral; }

  auto operator<=>(const Term &) const = default;
  bool operator==(const Term &) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple &) const = default;
  bool operator==(const Triple &) const = default;
};

// Throws agatha::Error("kb", ...) when a literal sits in subject or
// predicate position, or an IRI / datatype is not absolute.
void CheckTriple(const Triple &triple);

using Graph = std::set<Triple>;

}  // namespace agatha

#endif  // AGATHA_TERM_H_

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

#include "agatha/term.h"

#include "agatha/error.h"
#include "agatha/iri.h"

namespace agatha {

Term Term::Iri(std::string iri) { return {Kind::kIri, std::move(iri), {}}; }

Term Term::Literal(std::string value, std::string datatype) {
  return {Kind::kLiteral, std::move(value), std::move(datatype)};
}

namespace {

void CheckIri(const Term &term, const char *position) {
  if (!IsAbsoluteIri(term.value)) {
    throw Error("kb", std::string(position) + " '" + term.value +
                          "' is not an absolute IRI");
  }
}

}  // namespace

void CheckTriple(const Triple &triple) {
  if (triple.subject.is_literal()) throw Error("kb", "literal in subject position");
  if (triple.predicate.is_literal()) throw Error("kb", "literal in predicate position");
  CheckIri(triple.subject, "subject");
  CheckIri(triple.predicate, "predicate");
  if (triple.object.is_iri()) {
    CheckIri(triple.object, "object");
  } else if (!triple.object.datatype.empty() &&
             !IsAbsoluteIri(triple.object.datatype)) {
    throw Error("kb", "datatype '" + triple.object.datatype + "' is not an absolute IRI");
  }
}

}  // namespace agatha

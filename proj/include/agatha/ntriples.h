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

// Canonical N-Triples: one "S P O ." line per triple, LF terminated, lines
// sorted bytewise. No blank nodes and no language tags.

#ifndef AGATHA_NTRIPLES_H_
#define AGATHA_NTRIPLES_H_

#include <string>
#include <string_view>

#include "agatha/term.h"
#include "agatha/triple_store.h"

namespace agatha {

std::string FormatTerm(const Term &term);
std::string FormatTriple(const Triple &triple);  // without the newline

std::string SerializeNTriples(const Graph &graph);
std::string SerializeNTriples(const TripleStore &store);

// Throws agatha::Error("ntriples", "<source>:<line>: ...") on malformed
// input. Comment and blank lines are skipped.
Graph ParseNTriples(std::string_view text,
                    std::string_view source_name = "<ntriples>");

}  // namespace agatha

#endif  // AGATHA_NTRIPLES_H_

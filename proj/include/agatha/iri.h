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

#ifndef AGATHA_IRI_H_
#define AGATHA_IRI_H_

#include <string>
#include <string_view>

namespace agatha {

// scheme ":" rest, with a non-empty rest and no whitespace or control
// characters.
bool IsAbsoluteIri(std::string_view iri);

// Percent-encodes every byte outside [A-Za-z0-9-._~].
std::string PercentEncode(std::string_view text);

}  // namespace agatha

#endif  // AGATHA_IRI_H_

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

// Reader and writer for the annotated corpus format: one token per line with
// eight tab-separated columns
//
//   INDEX SURFACE LEMMA POS NER HEAD DEPREL ROLES
//
// sentences separated by blank lines and documents introduced by
// "#doc <doc_id> <case_id> <lang>". "_" marks an empty field; inside fields
// tab, newline and backslash are written as \t, \n and \\, and a field that
// is literally "_" is written as \_. Other lines starting with '#' are
// comments.

#ifndef AGATHA_INGEST_H_
#define AGATHA_INGEST_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agatha/doc_model.h"

namespace agatha {

struct ParseOptions {
  // Name used in error messages, usually the file path.
  std::string source_name = "<corpus>";
  // Run ValidateDocument on every document and fail on violations. Disabled
  // when POS columns still carry source-tagset tags.
  bool validate = true;
};

// Throws agatha::Error("ingest", ...) naming the line on malformed input.
// Unknown role labels are dropped; a message is appended to *warnings.
std::vector<Document> ParseCorpus(std::string_view content,
                                  const ParseOptions &options = {},
                                  std::vector<std::string> *warnings = nullptr);

std::string SerializeCorpus(std::span<const Document> docs);

std::string EscapeField(std::string_view value);
std::string UnescapeField(std::string_view field);

}  // namespace agatha

#endif  // AGATHA_INGEST_H_

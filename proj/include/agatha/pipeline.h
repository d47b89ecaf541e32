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

// End-to-end wiring: corpus -> tag conversion -> events -> thesaurus
// matches -> knowledge base, plus the annotate, query and export commands.

#ifndef AGATHA_PIPELINE_H_
#define AGATHA_PIPELINE_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agatha/lexicon.h"
#include "agatha/query.h"
#include "agatha/triple_store.h"

namespace agatha {

namespace fs = std::filesystem;

struct PipelineConfig {
  fs::path corpus;  // a corpus TSV file or a directory of *.tsv files
  fs::path raw;     // raw text directory for `annotate`
  fs::path pos_lexicon;
  std::vector<fs::path> gazetteers;
  std::string tagset = "eagles";  // or "ud": POS columns carry CATEGORY|k=v
  fs::path mapping_rules;
  fs::path mapping_manifest;
  std::vector<fs::path> thesauri;
  std::vector<fs::path> thesaurus_manifests;  // parallel to thesauri, or empty
  fs::path subclass_file;
  fs::path out = "out";
  std::optional<int> fuzzy_max;
  std::string resource_namespace = "http://agatha.example/resource/";
  int workers = 0;  // 0: hardware concurrency
  std::string language = "pt";
  std::string case_id = "case";  // for raw files directly under `raw`

  FuzzyPolicy Policy() const;
};

// Parses the key = value config subset (strings, integers, string lists,
// '#' comments). Relative paths resolve against `base_dir`. Throws
// agatha::Error("config", "<source>:<line>: ...").
PipelineConfig ParseConfig(std::string_view text, const fs::path &base_dir,
                           std::string_view source_name = "<config>");
PipelineConfig LoadConfig(const fs::path &file);

// Receives one structured log record per call (a JSON object).
using LogSink = std::function<void(const std::string &record)>;

struct RunStats {
  int document_count = 0;
  int sentence_count = 0;
  int event_count = 0;
  int exact_matches = 0;
  int levenshtein_matches = 0;
  size_t triple_count = 0;
  size_t schema_triple_count = 0;

  std::string ToJson() const;
};

// Writes events.jsonl, matches.jsonl, kb.nt, schema.nt and stats.json into
// config.out. Throws agatha::Error on bad input.
RunStats RunPipeline(const PipelineConfig &config, const LogSink &log = {});

// Baseline-annotates every *.txt under config.raw. Files directly in the
// directory belong to config.case_id; each subdirectory is a case.
std::string AnnotateDirectory(const PipelineConfig &config, const LogSink &log = {});

// Loads and merges N-Triples files into one store.
TripleStore LoadKnowledgeBase(const std::vector<fs::path> &files);

// SELECT: TSV with a header row; ASK: YES / NO; CONSTRUCT / DESCRIBE:
// N-Triples; INSERT / DELETE: the count of affected triples. INSERT and
// DELETE modify *store.
std::string ExecuteQuery(TripleStore *store, const ParsedQuery &query);

std::string ReadFile(const fs::path &path, std::string_view module);
void WriteFile(const fs::path &path, std::string_view content);

}  // namespace agatha

#endif  // AGATHA_PIPELINE_H_

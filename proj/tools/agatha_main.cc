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

// Command-line entry point: annotate, run, query and export.
//
// Exit status: 0 on success, 1 on an input error, 2 on an internal failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "agatha/error.h"
#include "agatha/ntriples.h"
#include "agatha/pipeline.h"
#include "agatha/query.h"

namespace {

void LogToStderr(const std::string &record) { std::cerr << record << "\n"; }

struct Flags {
  std::string config;
  std::string out;
  std::optional<int> fuzzy_max;
  std::string ns;
  std::string corpus;
  std::string raw;
  std::vector<std::string> kb;
  std::string query;
  std::string write;
  std::string from;
};

agatha::PipelineConfig BuildConfig(const Flags &flags) {
  agatha::PipelineConfig config;
  if (!flags.config.empty()) config = agatha::LoadConfig(flags.config);
  if (!flags.out.empty()) config.out = flags.out;
  if (flags.fuzzy_max) config.fuzzy_max = *flags.fuzzy_max;
  if (!flags.ns.empty()) config.resource_namespace = flags.ns;
  if (!flags.corpus.empty()) config.corpus = flags.corpus;
  if (!flags.raw.empty()) config.raw = flags.raw;
  return config;
}

int Annotate(const Flags &flags) {
  agatha::PipelineConfig config = BuildConfig(flags);
  std::string corpus = agatha::AnnotateDirectory(config, LogToStderr);
  // For annotate, --out names the corpus file.
  if (flags.out.empty()) {
    std::cout << corpus;
  } else {
    agatha::WriteFile(flags.out, corpus);
  }
  return 0;
}

int Run(const Flags &flags) {
  agatha::RunPipeline(BuildConfig(flags), LogToStderr);
  return 0;
}

int Query(const Flags &flags) {
  std::vector<agatha::fs::path> files(flags.kb.begin(), flags.kb.end());
  agatha::TripleStore store = agatha::LoadKnowledgeBase(files);
  agatha::ParsedQuery query =
      agatha::ParseQuery(agatha::ReadFile(flags.query, "query"));
  std::cout << agatha::ExecuteQuery(&store, query);
  if (!flags.write.empty()) agatha::WriteFile(flags.write, agatha::SerializeNTriples(store));
  return 0;
}

int Export(const Flags &flags) {
  std::vector<agatha::fs::path> files(flags.kb.begin(), flags.kb.end());
  if (files.empty()) {
    agatha::fs::path dir = flags.from;
    if (dir.empty()) dir = BuildConfig(Flags{flags.config}).out;
    files = {dir / "kb.nt", dir / "schema.nt"};
  }
  std::string text = agatha::SerializeNTriples(agatha::LoadKnowledgeBase(files));
  if (flags.out.empty()) {
    std::cout << text;
  } else {
    agatha::WriteFile(flags.out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Event extraction and knowledge-base population for annotated "
               "Portuguese documents"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--config", flags.config, "Pipeline config file");
  };

  CLI::App *annotate = app.add_subcommand("annotate", "Baseline-annotate raw text into a corpus TSV");
  add_common(annotate);
  annotate->add_option("--raw", flags.raw, "Raw text directory (overrides config)");
  annotate->add_option("--out", flags.out, "Output corpus file (default: stdout)");

  CLI::App *run = app.add_subcommand("run", "Run the pipeline and write its artifacts");
  add_common(run);
  run->add_option("--out", flags.out, "Output directory (overrides config)");
  run->add_option("--corpus", flags.corpus, "Corpus file or directory (overrides config)");
  run->add_option("--fuzzy-max", flags.fuzzy_max, "Cap on fuzzy-match distance")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--namespace", flags.ns, "Base IRI for minted resources");

  CLI::App *query = app.add_subcommand("query", "Run a query file against N-Triples files");
  query->add_option("--kb", flags.kb, "N-Triples file (repeatable)")->required();
  query->add_option("query", flags.query, "Query file")->required();
  query->add_option("--write", flags.write, "Write the store back after INSERT/DELETE");

  CLI::App *exp = app.add_subcommand("export", "Write kb.nt plus schema.nt as one N-Triples file");
  add_common(exp);
  exp->add_option("--from", flags.from, "Run output directory (default: config out)");
  exp->add_option("--kb", flags.kb, "N-Triples file to include (repeatable)");
  exp->add_option("--out", flags.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*annotate) return Annotate(flags);
    if (*run) return Run(flags);
    if (*query) return Query(flags);
    if (*exp) return Export(flags);
  } catch (const agatha::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

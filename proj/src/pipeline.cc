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

#include "agatha/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "agatha/baseline.h"
#include "agatha/error.h"
#include "agatha/events.h"
#include "agatha/ingest.h"
#include "agatha/kb_schema.h"
#include "agatha/ntriples.h"
#include "agatha/tagmap.h"
#include "json.hpp"

namespace agatha {

using json = nlohmann::ordered_json;

std::string ReadFile(const fs::path &path, std::string_view module) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(std::string(module), "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw Error("cli", "cannot write " + path.string());
}

FuzzyPolicy PipelineConfig::Policy() const {
  FuzzyPolicy policy;
  return fuzzy_max ? policy.Capped(*fuzzy_max) : policy;
}

namespace {

void Log(const LogSink &log, std::string_view level, std::string_view module,
         const std::string &message) {
  if (!log) return;
  json record;
  record["level"] = level;
  record["module"] = module;
  record["message"] = message;
  log(record.dump(-1, ' ', false, json::error_handler_t::replace));
}

// The config subset: `key = "string"`, `key = 12`, `key = ["a", "b"]` (a
// list may span lines), blank lines and '#' comments.
class ConfigParser {
 public:
  using Value = std::variant<std::string, long long, std::vector<std::string>>;

  ConfigParser(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  std::map<std::string, Value> Parse() {
    std::map<std::string, Value> values;
    while (true) {
      SkipBlank();
      if (AtEnd()) break;
      int key_line = line_;
      std::string key = ReadKey();
      SkipInline();
      if (AtEnd() || Peek() != '=') Fail("expected '=' after '" + key + "'");
      ++pos_;
      SkipInline();
      Value value = ReadValue();
      SkipInline();
      if (!AtEnd() && Peek() == '#') SkipComment();
      if (!AtEnd() && Peek() != '\n' && Peek() != '\r') Fail("trailing text after value");
      if (!values.emplace(key, std::move(value)).second) {
        line_ = key_line;
        Fail("duplicate key '" + key + "'");
      }
    }
    return values;
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw Error("config", std::string(source_) + ":" + std::to_string(line_) + ": " +
                              message);
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  void SkipInline() {
    while (!AtEnd() && (Peek() == ' ' || Peek() == '\t')) ++pos_;
  }

  void SkipComment() {
    while (!AtEnd() && Peek() != '\n') ++pos_;
  }

  // Whitespace, newlines and comments.
  void SkipBlank() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        SkipComment();
      } else {
        break;
      }
    }
  }

  std::string ReadKey() {
    size_t start = pos_;
    while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) || Peek() == '_')) {
      ++pos_;
    }
    if (pos_ == start) {
      if (Peek() == '[') Fail("tables are not supported");
      Fail("expected a key");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string ReadString() {
    ++pos_;
    std::string out;
    while (true) {
      if (AtEnd() || Peek() == '\n') Fail("unterminated string");
      char c = text_[pos_++];
      if (c == '"') return out;
      if (c == '\\') {
        if (AtEnd()) Fail("unterminated string");
        char e = text_[pos_++];
        if (e == '"' || e == '\\') {
          out.push_back(e);
        } else if (e == 'n') {
          out.push_back('\n');
        } else if (e == 't') {
          out.push_back('\t');
        } else {
          Fail(std::string("unknown escape \\") + e);
        }
        continue;
      }
      out.push_back(c);
    }
  }

  Value ReadValue() {
    if (AtEnd()) Fail("missing value");
    char c = Peek();
    if (c == '"') return ReadString();
    if (c == '[') {
      ++pos_;
      std::vector<std::string> items;
      while (true) {
        SkipBlank();
        if (AtEnd()) Fail("unterminated list");
        if (Peek() == ']') {
          ++pos_;
          return items;
        }
        if (Peek() != '"') Fail("lists hold strings only");
        items.push_back(ReadString());
        SkipBlank();
        if (!AtEnd() && Peek() == ',') ++pos_;
        else if (AtEnd() || Peek() != ']') Fail("expected ',' or ']' in list");
      }
    }
    size_t start = pos_;
    if (c == '-' || c == '+') ++pos_;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(Peek()))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") Fail("unsupported value");
    try {
      return std::stoll(digits);
    } catch (const std::exception &) {
      Fail("integer out of range");
    }
  }

  std::string_view text_;
  std::string_view source_;
  size_t pos_ = 0;
  int line_ = 1;
};

[[noreturn]] void KeyError(std::string_view source, const std::string &key,
                           const std::string &message) {
  throw Error("config", std::string(source) + ": " + key + ": " + message);
}

fs::path Resolve(const fs::path &base, const std::string &p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

}  // namespace

PipelineConfig ParseConfig(std::string_view text, const fs::path &base_dir,
                           std::string_view source_name) {
  ConfigParser parser(text, source_name);
  auto values = parser.Parse();
  PipelineConfig config;
  auto fail = [&](const std::string &key, const std::string &message) {
    KeyError(source_name, key, message);
  };
  auto str = [&](const std::string &key, const ConfigParser::Value &v) {
    if (auto *s = std::get_if<std::string>(&v)) return *s;
    KeyError(source_name, key, "expected a string");
  };
  auto num = [&](const std::string &key, const ConfigParser::Value &v) {
    if (auto *n = std::get_if<long long>(&v)) {
      if (*n < 0 || *n > 1000000) fail(key, "out of range");
      return static_cast<int>(*n);
    }
    KeyError(source_name, key, "expected an integer");
  };
  auto paths = [&](const std::string &key, const ConfigParser::Value &v) {
    std::vector<fs::path> out;
    if (auto *list = std::get_if<std::vector<std::string>>(&v)) {
      for (const std::string &s : *list) out.push_back(Resolve(base_dir, s));
      return out;
    }
    KeyError(source_name, key, "expected a list of strings");
  };

  for (const auto &[key, value] : values) {
    if (key == "corpus") {
      config.corpus = Resolve(base_dir, str(key, value));
    } else if (key == "raw") {
      config.raw = Resolve(base_dir, str(key, value));
    } else if (key == "pos_lexicon") {
      config.pos_lexicon = Resolve(base_dir, str(key, value));
    } else if (key == "gazetteers") {
      config.gazetteers = paths(key, value);
    } else if (key == "tagset") {
      config.tagset = str(key, value);
    } else if (key == "mapping_rules") {
      config.mapping_rules = Resolve(base_dir, str(key, value));
    } else if (key == "mapping_manifest") {
      config.mapping_manifest = Resolve(base_dir, str(key, value));
    } else if (key == "thesauri") {
      config.thesauri = paths(key, value);
    } else if (key == "thesaurus_manifests") {
      config.thesaurus_manifests = paths(key, value);
    } else if (key == "subclass_file") {
      config.subclass_file = Resolve(base_dir, str(key, value));
    } else if (key == "out") {
      config.out = Resolve(base_dir, str(key, value));
    } else if (key == "fuzzy_max") {
      config.fuzzy_max = num(key, value);
    } else if (key == "namespace") {
      config.resource_namespace = str(key, value);
    } else if (key == "workers") {
      config.workers = num(key, value);
    } else if (key == "language") {
      config.language = str(key, value);
    } else if (key == "case_id") {
      config.case_id = str(key, value);
    } else {
      fail(key, "unknown key");
    }
  }
  return config;
}

PipelineConfig LoadConfig(const fs::path &file) {
  std::string text = ReadFile(file, "config");
  fs::path base = file.has_parent_path() ? file.parent_path() : fs::path(".");
  return ParseConfig(text, base, file.string());
}

std::string RunStats::ToJson() const {
  json j;
  j["document_count"] = document_count;
  j["sentence_count"] = sentence_count;
  j["event_count"] = event_count;
  j["match_counts"] = {{std::string(MethodName(MatchMethod::kExact)), exact_matches},
                       {std::string(MethodName(MatchMethod::kLevenshtein)),
                        levenshtein_matches}};
  j["triple_count"] = triple_count;
  j["schema_triple_count"] = schema_triple_count;
  return j.dump(2) + "\n";
}

namespace {

// Runs fn(i) for i in [0, n) on up to `workers` threads. The first
// exception in index order is rethrown after all workers finish.
template <typename Fn>
void ParallelFor(size_t n, int workers, Fn &&fn) {
  size_t threads = workers > 0 ? static_cast<size_t>(workers)
                               : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread &t : pool) t.join();
  }
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<fs::path> ListFiles(const fs::path &dir, std::string_view extension) {
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<fs::path> CorpusFiles(const fs::path &corpus) {
  if (corpus.empty()) throw Error("config", "no corpus configured");
  if (fs::is_directory(corpus)) return ListFiles(corpus, ".tsv");
  if (!fs::exists(corpus)) throw Error("ingest", "corpus " + corpus.string() + " not found");
  return {corpus};
}

Thesaurus LoadThesauri(const PipelineConfig &config) {
  if (!config.thesaurus_manifests.empty() &&
      config.thesaurus_manifests.size() != config.thesauri.size()) {
    throw Error("config", "thesaurus_manifests must pair up with thesauri");
  }
  Thesaurus merged;
  for (size_t i = 0; i < config.thesauri.size(); ++i) {
    std::optional<fs::path> manifest;
    if (!config.thesaurus_manifests.empty()) manifest = config.thesaurus_manifests[i];
    merged.Merge(LoadThesaurus(config.thesauri[i], manifest));
  }
  return merged;
}

struct DocumentResult {
  std::vector<Event> events;
  EventMatches matches;
  std::vector<std::string> warnings;
};

}  // namespace

RunStats RunPipeline(const PipelineConfig &config, const LogSink &log) {
  if (config.tagset != "eagles" && config.tagset != "ud") {
    throw Error("config", "tagset must be \"eagles\" or \"ud\", got \"" + config.tagset + "\"");
  }
  if (config.fuzzy_max && *config.fuzzy_max < 0) {
    throw Error("config", "fuzzy_max must be non-negative");
  }
  ResourceMinter minter(config.resource_namespace);
  SchemaVocabulary vocabulary = SchemaVocabulary::Default();
  FuzzyPolicy policy = config.Policy();

  std::optional<MappingTable> table;
  if (config.tagset == "ud") {
    if (config.mapping_rules.empty() || config.mapping_manifest.empty()) {
      throw Error("config", "tagset \"ud\" needs mapping_rules and mapping_manifest");
    }
    table = LoadMappingTable(config.mapping_rules, config.mapping_manifest);
  }
  Thesaurus thesaurus = LoadThesauri(config);
  Thesaurus subclasses;
  if (!config.subclass_file.empty()) subclasses = LoadThesaurus(config.subclass_file);

  // Ingest is sequential so errors name the first bad file.
  std::vector<Document> docs;
  std::set<std::string> seen;
  for (const fs::path &file : CorpusFiles(config.corpus)) {
    ParseOptions options;
    options.source_name = file.string();
    options.validate = !table.has_value();
    std::vector<std::string> warnings;
    std::vector<Document> parsed = ParseCorpus(ReadFile(file, "ingest"), options, &warnings);
    for (const std::string &w : warnings) Log(log, "warning", "ingest", w);
    for (Document &doc : parsed) {
      if (!seen.insert(doc.doc_id).second) {
        throw Error("ingest", file.string() + ": duplicate doc_id '" + doc.doc_id + "'");
      }
      docs.push_back(std::move(doc));
    }
  }
  Log(log, "info", "ingest", "loaded " + std::to_string(docs.size()) + " documents");

  std::vector<DocumentResult> results(docs.size());
  ParallelFor(docs.size(), config.workers, [&](size_t i) {
    if (table) {
      docs[i] = ConvertDocument(docs[i], *table);
      auto violations = ValidateDocument(docs[i]);
      if (!violations.empty()) {
        std::string message = "document '" + docs[i].doc_id + "' after tag conversion:";
        for (const Violation &v : violations) message += " [" + v.ToString() + "]";
        throw Error("tagmap", message);
      }
    }
    results[i].events = ExtractEvents(docs[i], &results[i].warnings);
    results[i].matches = MatchEvents(results[i].events, thesaurus, policy);
  });

  RunStats stats;
  std::vector<Event> events;
  EventMatches matches;
  for (size_t i = 0; i < docs.size(); ++i) {
    for (const std::string &w : results[i].warnings) Log(log, "warning", "events", w);
    stats.document_count += 1;
    stats.sentence_count += static_cast<int>(docs[i].sentences.size());
    for (Event &e : results[i].events) events.push_back(std::move(e));
    for (auto &[id, list] : results[i].matches) {
      for (const SlotMatch &m : list) {
        (m.result.method == MatchMethod::kExact ? stats.exact_matches
                                                : stats.levenshtein_matches) += 1;
      }
      matches[id] = std::move(list);
    }
  }
  stats.event_count = static_cast<int>(events.size());

  // Population is the single serialized writer.
  TripleStore kb;
  Populate(&kb, events, matches, vocabulary, minter);
  TripleStore schema;
  LoadSchema(&schema, vocabulary, subclasses);
  stats.triple_count = kb.size();
  stats.schema_triple_count = schema.size();

  std::error_code ec;
  fs::create_directories(config.out, ec);
  if (ec) throw Error("cli", "cannot create " + config.out.string() + ": " + ec.message());
  WriteFile(config.out / "events.jsonl", EventsToJsonLines(events));
  WriteFile(config.out / "matches.jsonl", MatchesToJsonLines(matches));
  WriteFile(config.out / "kb.nt", SerializeNTriples(kb));
  WriteFile(config.out / "schema.nt", SerializeNTriples(schema));
  WriteFile(config.out / "stats.json", stats.ToJson());
  Log(log, "info", "kb",
      "wrote " + std::to_string(stats.triple_count) + " triples for " +
          std::to_string(stats.event_count) + " events");
  return stats;
}

std::string AnnotateDirectory(const PipelineConfig &config, const LogSink &log) {
  if (config.raw.empty()) throw Error("config", "no raw directory configured");
  if (!fs::is_directory(config.raw)) {
    throw Error("ingest", "raw directory " + config.raw.string() + " not found");
  }
  PosLexicon lexicon;
  if (!config.pos_lexicon.empty()) lexicon = LoadPosLexicon(config.pos_lexicon);
  std::vector<Gazetteer> gazetteers;
  for (const fs::path &g : config.gazetteers) gazetteers.push_back(LoadGazetteer(g));

  std::vector<std::pair<fs::path, std::string>> inputs;  // (file, case)
  for (const fs::path &f : ListFiles(config.raw, ".txt")) {
    inputs.emplace_back(f, config.case_id);
  }
  std::vector<fs::path> cases;
  for (const auto &entry : fs::directory_iterator(config.raw)) {
    if (entry.is_directory()) cases.push_back(entry.path());
  }
  std::sort(cases.begin(), cases.end());
  for (const fs::path &dir : cases) {
    for (const fs::path &f : ListFiles(dir, ".txt")) {
      inputs.emplace_back(f, dir.filename().string());
    }
  }

  std::vector<Document> docs(inputs.size());
  std::set<std::string> seen;
  for (const auto &[file, case_id] : inputs) {
    if (!seen.insert(file.stem().string()).second) {
      throw Error("ingest", file.string() + ": duplicate document name '" +
                                file.stem().string() + "'");
    }
  }
  ParallelFor(inputs.size(), config.workers, [&](size_t i) {
    DocumentInfo info{inputs[i].first.stem().string(), inputs[i].second, config.language};
    docs[i] = AnnotateBaseline(ReadFile(inputs[i].first, "ingest"), lexicon, gazetteers, info);
  });
  Log(log, "info", "ingest", "annotated " + std::to_string(docs.size()) + " documents");
  return SerializeCorpus(docs);
}

TripleStore LoadKnowledgeBase(const std::vector<fs::path> &files) {
  TripleStore store;
  for (const fs::path &f : files) {
    Graph graph = ParseNTriples(ReadFile(f, "kb"), f.string());
    std::vector<Triple> batch(graph.begin(), graph.end());
    store.Insert(batch);
  }
  return store;
}

std::string ExecuteQuery(TripleStore *store, const ParsedQuery &query) {
  switch (query.verb) {
    case QueryVerb::kSelect: {
      ResultTable table = Select(*store, query.where);
      std::string out;
      for (size_t i = 0; i < table.variables.size(); ++i) {
        if (i) out.push_back('\t');
        out += "?" + table.variables[i];
      }
      out.push_back('\n');
      for (const auto &row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
          if (i) out.push_back('\t');
          out += FormatTerm(row[i]);
        }
        out.push_back('\n');
      }
      return out;
    }
    case QueryVerb::kAsk:
      return Ask(*store, query.where) ? "YES\n" : "NO\n";
    case QueryVerb::kConstruct:
      return SerializeNTriples(Construct(*store, query.where, query.construct_template));
    case QueryVerb::kDescribe:
      return SerializeNTriples(Describe(*store, *query.describe_target));
    case QueryVerb::kInsert:
      return std::to_string(store->Insert(query.insert_triples)) + "\n";
    case QueryVerb::kDelete: {
      size_t removed = 0;
      if (query.where.patterns.size() == 1) {
        removed = store->Delete(query.where.patterns.front());
      } else {
        // Conjunctive delete: remove every instantiated pattern of every
        // solution.
        Graph doomed = Construct(*store, query.where, query.where.patterns);
        for (const Triple &t : doomed) {
          removed += store->Delete({t.subject, t.predicate, t.object});
        }
      }
      return std::to_string(removed) + "\n";
    }
  }
  throw InvariantError("unknown query verb");
}

}  // namespace agatha

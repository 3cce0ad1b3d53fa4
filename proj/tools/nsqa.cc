// Copyright 2026 The NSQA Authors.
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

// Command-line front end.
//
//   nsqa answer --kb data/toy_kb.nt --question data/questions.jsonl --id q1 --trace
//   nsqa eval   --kb data/toy_kb.nt --dataset data/questions.jsonl --out report.tsv
//   nsqa sparql --question data/questions.jsonl --id q1
//
// Exit codes: 0 ok, 1 question failed, 2 configuration error, 3 dataset error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nsqa/kb/ntriples.h"
#include "nsqa/logic/sparql.h"
#include "nsqa/pipeline/config.h"
#include "nsqa/pipeline/dataset.h"
#include "nsqa/pipeline/pipeline.h"

namespace {

constexpr int kConfigError = 2;
constexpr int kDatasetError = 3;

struct Loaded {
  nsqa::pipeline::PipelineConfig config;
  nsqa::pipeline::Resources resources;
  nsqa::kb::KnowledgeBase kb;
};

Loaded load_all(const std::optional<std::string> &config_path, const std::string &kb_path) {
  Loaded l;
  l.config = nsqa::pipeline::PipelineConfig::load(nsqa::pipeline::resolve_config_path(config_path));
  l.resources = nsqa::pipeline::Resources::load(l.config);
  const std::string path = kb_path.empty() ? l.config.kb : kb_path;
  if (path.empty()) throw nsqa::pipeline::ConfigError("no knowledge base given (--kb)");
  try {
    nsqa::kb::LoadStats stats;
    l.kb = nsqa::kb::load_ntriples(path, l.resources.prefixes, &stats);
    std::cerr << "loaded " << stats.triples << " triples from " << path << "\n";
  } catch (const nsqa::Error &e) {
    throw nsqa::pipeline::ConfigError(e.what());
  }
  return l;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Question answering over a local knowledge base from AMR parses"};
  app.require_subcommand(1);
  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "Config file (default: $NSQA_CONFIG or bundled)");

  std::string kb_path, question, dataset, out_path;
  std::optional<std::string> id;
  bool trace = false;

  auto *answer = app.add_subcommand("answer", "Answer one question");
  answer->add_option("--kb", kb_path, "N-Triples knowledge base")->required();
  answer->add_option("--question", question, "Record JSON, record file, .jsonl file or PENMAN")
      ->required();
  answer->add_option("--id", id, "Record id inside a .jsonl file");
  answer->add_flag("--trace", trace, "Print the reasoning trace");

  auto *eval = app.add_subcommand("eval", "Evaluate a JSON-Lines question set");
  eval->add_option("--kb", kb_path, "N-Triples knowledge base")->required();
  eval->add_option("--dataset", dataset, "Question set (.jsonl)")->required();
  eval->add_option("--out", out_path, "TSV report path");

  auto *sparql = app.add_subcommand("sparql", "Print the query of the best hypothesis");
  sparql->add_option("--question", question, "Record JSON, record file, .jsonl file or PENMAN")
      ->required();
  sparql->add_option("--id", id, "Record id inside a .jsonl file");
  sparql->add_option("--kb", kb_path, "N-Triples knowledge base (default: from config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kConfigError;
  }

  Loaded l;
  try {
    l = load_all(config_path, kb_path);
  } catch (const nsqa::Error &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*answer || *sparql) {
      const auto record = nsqa::pipeline::resolve_question(question, id);
      if (*sparql) {
        auto r = nsqa::pipeline::build_query(record, l.kb, l.resources, l.config);
        if (!r.ok()) {
          std::cerr << "error: " << r.error << "\n";
          return 1;
        }
        std::cout << nsqa::logic::to_sparql_document(r.hypotheses.front().query,
                                                     l.resources.prefixes);
        return 0;
      }
      auto r = nsqa::pipeline::answer_question(record, l.kb, l.resources, l.config);
      if (trace) std::cout << r.trace.str();
      if (!r.ok()) {
        std::cerr << "error: " << r.error << "\n";
        return 1;
      }
      for (const auto &a : r.answers) std::cout << a << "\n";
      std::cout << r.sparql << "\n";
      return 0;
    }

    const auto records = nsqa::pipeline::load_dataset(dataset);
    const auto run = nsqa::pipeline::evaluate_dataset(records, l.kb, l.resources, l.config);
    std::cout << nsqa::pipeline::report_table(run);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return kConfigError;
      }
      out << nsqa::pipeline::report_tsv(run, records);
    }
    return 0;
  } catch (const nsqa::pipeline::DatasetError &e) {
    std::cerr << "dataset error: " << e.what() << "\n";
    return kDatasetError;
  }
}

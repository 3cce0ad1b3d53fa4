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

#ifndef NSQA_PIPELINE_CONFIG_H_
#define NSQA_PIPELINE_CONFIG_H_

#include <optional>
#include <string>

#include "nsqa/common.h"
#include "nsqa/kb/term.h"
#include "nsqa/linkers/entity.h"
#include "nsqa/linkers/lexicon.h"
#include "nsqa/linkers/relation.h"
#include "nsqa/lnn/reasoner.h"
#include "nsqa/logic/rules.h"

namespace nsqa::pipeline {

class ConfigError : public Error {
 public:
  using Error::Error;
};

// JSON config. Relative paths are resolved against the config file's
// directory. Example: data/config.json.
struct PipelineConfig {
  std::string prefixes;
  std::string entity_lexicon;
  std::string type_lexicon;
  std::string alignment;
  std::string attribute_lexicon;
  std::string kb;  // optional default knowledge base

  size_t beam = 4;
  size_t top_k = 5;
  double tau_e = linkers::kDefaultEntityThreshold;
  linkers::ScoringWeights weights;
  lnn::ReasonerConfig reasoner;

  static PipelineConfig load(const std::string &path);
  static PipelineConfig parse(const std::string &json_text, const std::string &base_dir);
};

// --config value if given, else $NSQA_CONFIG, else the bundled default.
std::string resolve_config_path(const std::optional<std::string> &cli_value);
std::string default_config_path();

// Lexicons and tables named by the config.
struct Resources {
  kb::PrefixTable prefixes;
  linkers::Lexicon entities;
  linkers::Lexicon types;
  linkers::AlignmentTable alignment;
  logic::AttributeLexicon attributes;

  static Resources load(const PipelineConfig &config);
};

}  // namespace nsqa::pipeline

#endif  // NSQA_PIPELINE_CONFIG_H_

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

#include "nsqa/pipeline/config.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#ifndef NSQA_DEFAULT_CONFIG
#define NSQA_DEFAULT_CONFIG "data/config.json"
#endif

namespace nsqa::pipeline {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string resolve(const std::string &base, const std::string &p) {
  if (p.empty()) return p;
  fs::path path(p);
  if (path.is_absolute() || base.empty()) return path.string();
  return (fs::path(base) / path).lexically_normal().string();
}

template <typename T>
void read(const json &j, const char *key, T &out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

PipelineConfig PipelineConfig::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), fs::path(path).parent_path().string());
}

PipelineConfig PipelineConfig::parse(const std::string &json_text, const std::string &base_dir) {
  PipelineConfig c;
  try {
    const json j = json::parse(json_text);
    const std::pair<const char *, std::string *> paths[] = {
        {"prefixes", &c.prefixes},          {"entity_lexicon", &c.entity_lexicon},
        {"type_lexicon", &c.type_lexicon},  {"alignment", &c.alignment},
        {"attribute_lexicon", &c.attribute_lexicon}, {"kb", &c.kb}};
    for (auto [key, field] : paths) {
      read(j, key, *field);
      *field = resolve(base_dir, *field);
    }
    read(j, "beam", c.beam);
    read(j, "top_k", c.top_k);
    read(j, "tau_e", c.tau_e);
    read(j, "closed_world_output", c.reasoner.closed_world_output);
    read(j, "geographic_reasoning", c.reasoner.geographic_reasoning);
    if (j.contains("weights")) {
      const json &w = j.at("weights");
      read(w, "align", c.weights.align);
      read(w, "neural", c.weights.neural);
      read(w, "lexsim", c.weights.lexsim);
      read(w, "boost", c.weights.boost);
    }
    if (j.contains("holonym")) {
      const json &h = j.at("holonym");
      read(h, "depth", c.reasoner.holonym_depth);
      if (h.contains("relations")) {
        c.reasoner.holonym_relations.clear();
        for (const auto &r : h.at("relations")) {
          const std::string dir = r.value("direction", "forward");
          if (dir != "forward" && dir != "inverse") {
            throw ConfigError("holonym direction must be forward or inverse, got " + dir);
          }
          c.reasoner.holonym_relations.push_back(
              {kb::Term::iri(r.at("property").get<std::string>()), dir == "inverse"});
        }
      }
      if (h.contains("exclusive_types")) {
        c.reasoner.exclusive_types.clear();
        for (const auto &t : h.at("exclusive_types")) {
          c.reasoner.exclusive_types.push_back(kb::Term::iri(t.get<std::string>()));
        }
      }
    }
  } catch (const json::exception &e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  if (c.beam == 0 || c.top_k == 0) throw ConfigError("beam and top_k must be positive");
  if (c.tau_e < 0.0 || c.tau_e > 1.0) throw ConfigError("tau_e must lie in [0,1]");
  if (c.reasoner.geographic_reasoning && c.reasoner.holonym_relations.empty()) {
    throw ConfigError("geographic reasoning needs at least one holonym relation");
  }
  try {
    c.weights.validate();
  } catch (const Error &e) {
    throw ConfigError(e.what());
  }
  return c;
}

std::string default_config_path() { return NSQA_DEFAULT_CONFIG; }

std::string resolve_config_path(const std::optional<std::string> &cli_value) {
  if (cli_value && !cli_value->empty()) return *cli_value;
  if (const char *env = std::getenv("NSQA_CONFIG"); env != nullptr && *env != '\0') return env;
  return default_config_path();
}

Resources Resources::load(const PipelineConfig &config) {
  Resources r;
  try {
    r.prefixes = config.prefixes.empty() ? kb::PrefixTable::standard()
                                         : kb::PrefixTable::load(config.prefixes);
    if (!config.entity_lexicon.empty()) {
      r.entities = linkers::Lexicon::load(config.entity_lexicon, r.prefixes);
    }
    if (!config.type_lexicon.empty()) {
      r.types = linkers::Lexicon::load(config.type_lexicon, r.prefixes);
    }
    if (!config.alignment.empty()) {
      r.alignment = linkers::AlignmentTable::load(config.alignment, r.prefixes);
    }
    if (!config.attribute_lexicon.empty()) {
      r.attributes = logic::AttributeLexicon::load(config.attribute_lexicon, r.prefixes);
    }
  } catch (const ConfigError &) {
    throw;
  } catch (const Error &e) {
    throw ConfigError(e.what());
  }
  return r;
}

}  // namespace nsqa::pipeline

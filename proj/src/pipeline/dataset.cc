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

#include "nsqa/pipeline/dataset.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nsqa::pipeline {
namespace {

using json = nlohmann::json;

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool blank(const std::string &s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

}  // namespace

QuestionRecord parse_record(const std::string &json_text) {
  QuestionRecord r;
  try {
    const json j = json::parse(json_text);
    r.id = j.at("id").get<std::string>();
    r.text = j.value("text", "");
    r.amr = j.at("amr").get<std::string>();
    if (j.contains("gold_answers") && !j.at("gold_answers").is_null()) {
      r.gold_answers = j.at("gold_answers").get<std::vector<std::string>>();
    }
    if (j.contains("gold_sparql") && j.at("gold_sparql").is_string()) {
      r.gold_sparql = j.at("gold_sparql").get<std::string>();
    }
  } catch (const json::exception &e) {
    throw DatasetError(std::string("bad question record: ") + e.what());
  }
  return r;
}

std::vector<QuestionRecord> parse_dataset(const std::string &jsonl_text) {
  std::vector<QuestionRecord> out;
  std::istringstream in(jsonl_text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const DatasetError &e) {
      throw DatasetError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<QuestionRecord> load_dataset(const std::string &path) {
  try {
    return parse_dataset(slurp(path));
  } catch (const DatasetError &e) {
    throw DatasetError(path + ": " + e.what());
  }
}

QuestionRecord resolve_question(const std::string &arg, const std::optional<std::string> &id) {
  std::string text = arg;
  bool jsonl = false;
  if (std::filesystem::is_regular_file(arg)) {
    text = slurp(arg);
    jsonl = arg.ends_with(".jsonl");
  }
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw DatasetError("empty question");
  if (text[first] == '(' || text[first] == '#') {
    QuestionRecord r;
    r.id = id.value_or("q");
    r.amr = text;
    return r;
  }
  if (jsonl || id) {
    for (auto &r : parse_dataset(text)) {
      if (!id || r.id == *id) return r;
    }
    throw DatasetError("no record with id " + id.value_or("?"));
  }
  return parse_record(text);
}

}  // namespace nsqa::pipeline

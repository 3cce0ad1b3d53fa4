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

#include "nsqa/linkers/lexicon.h"

#include <cctype>
#include <fstream>

#include "nsqa/common.h"

namespace nsqa::linkers {

std::vector<std::vector<std::string>> read_tsv(const std::string &path, size_t columns) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != columns) {
      throw Error(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(columns) +
                  " tab-separated fields, got " + std::to_string(fields.size()));
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

kb::Term parse_iri(std::string_view text, const kb::PrefixTable &prefixes) {
  if (!text.empty() && text.front() == '<' && text.back() == '>') {
    return kb::Term::iri(prefixes.compact(text.substr(1, text.size() - 2)));
  }
  if (text.find(':') == std::string_view::npos) {
    throw Error("expected a prefixed name or <IRI>, got '" + std::string(text) + "'");
  }
  return kb::Term::iri(std::string(text));
}

double parse_unit_score(const std::string &text, const std::string &where) {
  double value = 0;
  try {
    size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception &) {
    throw Error(where + ": not a number: '" + text + "'");
  }
  if (value < 0.0 || value > 1.0) throw Error(where + ": score outside [0,1]: " + text);
  return value;
}

std::string normalize_mention(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out += static_cast<char>(std::tolower(u));
    } else if (std::isspace(u) || c == '_' || c == '-') {
      pending_space = true;
    }
    // other punctuation is dropped
  }
  return out;
}

Lexicon Lexicon::load(const std::string &path, const kb::PrefixTable &prefixes) {
  Lexicon lexicon;
  size_t row = 0;
  for (const auto &fields : read_tsv(path, 3)) {
    ++row;
    const std::string where = path + " row " + std::to_string(row);
    lexicon.add(fields[0], parse_iri(fields[1], prefixes), parse_unit_score(fields[2], where));
  }
  return lexicon;
}

void Lexicon::add(std::string_view surface, kb::Term iri, double score) {
  std::string key = normalize_mention(surface);
  entries_.emplace(key, LexiconEntry{key, std::move(iri), score});
}

std::vector<LexiconEntry> Lexicon::lookup(std::string_view surface) const {
  std::vector<LexiconEntry> out;
  auto [lo, hi] = entries_.equal_range(normalize_mention(surface));
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  return out;
}

AlignmentTable AlignmentTable::load(const std::string &path, const kb::PrefixTable &prefixes) {
  AlignmentTable table;
  size_t row = 0;
  for (const auto &fields : read_tsv(path, 3)) {
    ++row;
    const std::string where = path + " row " + std::to_string(row);
    table.add(fields[0], parse_iri(fields[1], prefixes), parse_unit_score(fields[2], where));
  }
  return table;
}

void AlignmentTable::add(std::string key, kb::Term relation, double probability) {
  entries_[std::move(key)].push_back({std::move(relation), probability});
}

const std::vector<AlignmentTable::Entry> *AlignmentTable::find(const std::string &key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace nsqa::linkers

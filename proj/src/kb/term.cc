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

#include "nsqa/kb/term.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "nsqa/common.h"

namespace nsqa::kb {

Term Term::iri(std::string name) {
  Term t;
  t.kind_ = Kind::Iri;
  t.value_ = std::move(name);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype, std::string lang) {
  Term t;
  t.kind_ = Kind::Literal;
  t.value_ = std::move(lexical);
  t.datatype_ = std::move(datatype);
  t.lang_ = std::move(lang);
  return t;
}

std::string Term::local_name() const {
  if (is_literal()) return value_;
  std::string_view v = value_;
  if (!v.empty() && v.front() == '<') {
    v = v.substr(1, v.size() - 2);
    size_t cut = v.find_last_of("/#");
    return std::string(cut == std::string_view::npos ? v : v.substr(cut + 1));
  }
  size_t colon = v.find(':');
  return std::string(colon == std::string_view::npos ? v : v.substr(colon + 1));
}

std::optional<double> Term::as_number() const {
  if (!is_literal() || value_.empty()) return std::nullopt;
  double out = 0;
  const char *begin = value_.data();
  const char *end = begin + value_.size();
  if (*begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return out;
}

std::string Term::str() const {
  if (is_iri()) return value_;
  std::string out = "\"";
  for (char c : value_) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  if (!lang_.empty()) {
    out += '@';
    out += lang_;
  } else if (!datatype_.empty()) {
    out += "^^";
    out += datatype_;
  }
  return out;
}

size_t TermHash::operator()(const Term &t) const {
  size_t h = std::hash<std::string>()(t.value());
  h ^= std::hash<std::string>()(t.datatype()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::string>()(t.lang()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<size_t>(t.kind());
}

bool is_numeric_datatype(std::string_view iri) {
  static const std::set<std::string_view> kNumeric = {
      "xsd:integer", "xsd:decimal",  "xsd:double",          "xsd:float",
      "xsd:int",     "xsd:long",     "xsd:short",           "xsd:nonNegativeInteger",
      "xsd:positiveInteger",         "xsd:nonPositiveInteger", "xsd:negativeInteger",
      "xsd:unsignedInt",             "xsd:unsignedLong"};
  return kNumeric.count(iri) != 0;
}

PrefixTable PrefixTable::standard() {
  PrefixTable table;
  table.add("dbr", "http://dbpedia.org/resource/");
  table.add("dbo", "http://dbpedia.org/ontology/");
  table.add("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
  table.add("rdfs", "http://www.w3.org/2000/01/rdf-schema#");
  table.add("xsd", "http://www.w3.org/2001/XMLSchema#");
  return table;
}

PrefixTable PrefixTable::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open prefix table: " + path);
  PrefixTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(path + ":" + std::to_string(lineno) + ": expected 'prefix<TAB>namespace'");
    }
    table.add(line.substr(0, tab), line.substr(tab + 1));
  }
  return table;
}

void PrefixTable::add(std::string prefix, std::string ns) {
  entries_.emplace_back(std::move(prefix), std::move(ns));
}

std::string PrefixTable::compact(std::string_view full_iri) const {
  const std::pair<std::string, std::string> *best = nullptr;
  for (const auto &entry : entries_) {
    const auto &ns = entry.second;
    if (full_iri.substr(0, ns.size()) == ns && (best == nullptr || ns.size() > best->second.size())) {
      best = &entry;
    }
  }
  if (best == nullptr) return "<" + std::string(full_iri) + ">";
  return best->first + ":" + std::string(full_iri.substr(best->second.size()));
}

std::string PrefixTable::expand(std::string_view name) const {
  if (!name.empty() && name.front() == '<') return std::string(name.substr(1, name.size() - 2));
  size_t colon = name.find(':');
  if (colon != std::string_view::npos) {
    std::string_view prefix = name.substr(0, colon);
    for (const auto &[p, ns] : entries_) {
      if (p == prefix) return ns + std::string(name.substr(colon + 1));
    }
  }
  throw Error("unknown prefix in '" + std::string(name) + "'");
}

}  // namespace nsqa::kb

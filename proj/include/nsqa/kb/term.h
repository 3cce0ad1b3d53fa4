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

#ifndef NSQA_KB_TERM_H_
#define NSQA_KB_TERM_H_

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsqa::kb {

// An RDF term. IRIs are kept in prefixed form ("dbr:Spain") when the prefix
// table knows the namespace, otherwise as "<http://...>". Literals compare by
// exact lexical form plus datatype and language tag.
class Term {
 public:
  enum class Kind { Iri, Literal };

  Term() = default;

  static Term iri(std::string name);
  static Term literal(std::string lexical, std::string datatype = {}, std::string lang = {});

  Kind kind() const { return kind_; }
  bool is_iri() const { return kind_ == Kind::Iri; }
  bool is_literal() const { return kind_ == Kind::Literal; }

  // IRI name or literal lexical form.
  const std::string &value() const { return value_; }
  const std::string &datatype() const { return datatype_; }
  const std::string &lang() const { return lang_; }

  // Part after the prefix colon (or after the last '/' or '#' for full IRIs).
  std::string local_name() const;

  // Numeric value of a literal whose lexical form parses as a number.
  std::optional<double> as_number() const;

  // Display / SPARQL-ish form: dbr:Spain, <http://x>, "4808"^^xsd:double.
  std::string str() const;

  auto operator<=>(const Term &) const = default;
  bool operator==(const Term &) const = default;

 private:
  Kind kind_ = Kind::Iri;
  std::string value_;
  std::string datatype_;
  std::string lang_;
};

struct TermHash {
  size_t operator()(const Term &t) const;
};

inline constexpr std::string_view kRdfType = "rdf:type";
inline constexpr std::string_view kSubClassOf = "rdfs:subClassOf";
inline constexpr std::string_view kDomain = "rdfs:domain";
inline constexpr std::string_view kRange = "rdfs:range";

// True for xsd numeric datatypes (xsd:integer, xsd:double, ...).
bool is_numeric_datatype(std::string_view iri);

// Maps namespace IRIs to short prefixes. Loaded from a TSV of
// `prefix \t namespace`, e.g. `dbr \t http://dbpedia.org/resource/`.
class PrefixTable {
 public:
  PrefixTable() = default;

  // dbr, dbo, rdf, rdfs, xsd with their standard namespaces.
  static PrefixTable standard();
  static PrefixTable load(const std::string &path);

  void add(std::string prefix, std::string ns);

  // "http://dbpedia.org/resource/Spain" -> "dbr:Spain"; unknown namespaces
  // come back wrapped in angle brackets.
  std::string compact(std::string_view full_iri) const;
  // Inverse of compact(); "<...>" is unwrapped, unknown prefixes throw.
  std::string expand(std::string_view name) const;

  const std::vector<std::pair<std::string, std::string>> &entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;  // prefix, namespace
};

}  // namespace nsqa::kb

#endif  // NSQA_KB_TERM_H_

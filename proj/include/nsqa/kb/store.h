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

#ifndef NSQA_KB_STORE_H_
#define NSQA_KB_STORE_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "nsqa/common.h"
#include "nsqa/kb/term.h"
#include "nsqa/lnn/bounds.h"

namespace nsqa::kb {

struct Triple {
  Term s;
  Term p;
  Term o;

  auto operator<=>(const Triple &) const = default;
  bool operator==(const Triple &) const = default;

  std::string str() const { return s.str() + " " + p.str() + " " + o.str(); }
};

enum class KbErrorKind { MalformedLine, CyclicSubclassHierarchy };

class KbError : public Error {
 public:
  KbError(KbErrorKind kind, size_t line, const std::string &detail);
  KbErrorKind kind() const { return kind_; }
  // 1-based line number for MalformedLine, 0 otherwise.
  size_t line() const { return line_; }

 private:
  KbErrorKind kind_;
  size_t line_;
};

// Immutable in-memory triple store. Terms are dictionary-encoded and the
// triples are held in three sorted permutations (SPO, POS, OSP) so every
// pattern with a bound prefix is a binary search. Class hierarchy and
// property domain/range come from the rdfs: triples in the same data.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // Duplicates are dropped. Throws KbError on a cyclic subclass hierarchy.
  static KnowledgeBase from_triples(std::vector<Triple> triples);

  size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }

  bool contains(const Triple &t) const;

  // Unset positions are wildcards. Results in SPO order.
  std::vector<Triple> match(const std::optional<Term> &s, const std::optional<Term> &p,
                            const std::optional<Term> &o) const;
  size_t count(const std::optional<Term> &s, const std::optional<Term> &p,
               const std::optional<Term> &o) const;

  // Objects of rdf:type for `t`, sorted.
  std::vector<Term> types_of(const Term &t) const;
  // Direct superclasses of `cls`, sorted.
  std::vector<Term> superclasses(const Term &cls) const;
  // Every predicate used in the data except rdf:type and the rdfs:
  // schema predicates, sorted.
  std::vector<Term> relations() const;

  std::optional<Term> domain(const Term &property) const;
  std::optional<Term> range(const Term &property) const;

  // Reflexive-transitive subclass reachability.
  bool isa_star(const Term &sub, const Term &super) const;

  const std::vector<Triple> &triples() const { return triples_; }

 private:
  using TermId = uint32_t;
  using IdTriple = std::array<TermId, 3>;

  std::optional<TermId> id_of(const Term &t) const;
  // Matching id triples in SPO order.
  std::vector<IdTriple> match_ids(std::optional<TermId> s, std::optional<TermId> p,
                                  std::optional<TermId> o) const;

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::vector<Triple> triples_;  // sorted
  std::vector<IdTriple> spo_;
  std::vector<IdTriple> pos_;  // stored permuted as (p, o, s)
  std::vector<IdTriple> osp_;  // stored permuted as (o, s, p)
  std::map<Term, std::vector<Term>> superclasses_;
  std::map<Term, Term> domain_;
  std::map<Term, Term> range_;
};

struct Variable {
  std::string name;  // without '?'

  auto operator<=>(const Variable &) const = default;
  bool operator==(const Variable &) const = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm s;
  PatternTerm p;
  PatternTerm o;
};

// Conjunction of triple patterns plus optional VALUES restrictions
// (variable -> allowed terms).
struct GraphPattern {
  std::vector<TriplePattern> triples;
  std::map<std::string, std::vector<Term>> values;
};

// Variable name -> bound term.
using Solution = std::map<std::string, Term>;

// All solutions of the pattern, sorted by (variable name, term). Joins
// proceed most-restrictive-pattern-first. Throws std::invalid_argument when
// a VALUES variable does not occur in any pattern.
std::vector<Solution> eval_bgp(const KnowledgeBase &kb, const GraphPattern &pattern);

// Open-world lookup of a ground triple: [1,1] when present, [0,1] otherwise.
lnn::TruthBounds ask(const KnowledgeBase &kb, const Triple &triple);

bool isa_star(const KnowledgeBase &kb, const Term &sub, const Term &super);

struct DomainRange {
  std::optional<Term> domain;
  std::optional<Term> range;
};
DomainRange domain_range(const KnowledgeBase &kb, const Term &property);

}  // namespace nsqa::kb

#endif  // NSQA_KB_STORE_H_

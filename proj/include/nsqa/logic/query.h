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

#ifndef NSQA_LOGIC_QUERY_H_
#define NSQA_LOGIC_QUERY_H_

#include <optional>
#include <string>
#include <vector>

#include "nsqa/kb/store.h"
#include "nsqa/kb/term.h"

namespace nsqa::logic {

using Arg = kb::PatternTerm;

inline Arg var(std::string name) { return kb::Variable{std::move(name)}; }
inline bool is_var(const Arg &a) { return std::holds_alternative<kb::Variable>(a); }
const std::string *var_name(const Arg &a);
const kb::Term *term_of(const Arg &a);
// "?x" or the term's display form.
std::string arg_str(const Arg &a);

enum class QueryKind { Select, Ask, Count };
std::string_view to_string(QueryKind kind);

struct Atom {
  kb::Term predicate;
  Arg subject;
  Arg object;
  bool negated = false;

  bool operator==(const Atom &) const = default;
  // "dbo:starring(?x, ?z)"
  std::string str() const;
};

struct TypeAtom {
  std::string var;
  kb::Term cls;

  bool operator==(const TypeAtom &) const = default;
};

enum class SortDirection { Asc, Desc };

struct SortConstruct {
  std::string var;
  SortDirection direction = SortDirection::Desc;
  size_t limit = 1;

  bool operator==(const SortConstruct &) const = default;
};

struct CountConstruct {
  std::string var;

  bool operator==(const CountConstruct &) const = default;
};

enum class Comparator { Lt, Le, Gt, Ge, Eq, Ne };
std::string_view to_string(Comparator cmp);

struct FilterConstruct {
  std::string var;
  Comparator cmp = Comparator::Eq;
  kb::Term literal;

  bool operator==(const FilterConstruct &) const = default;
  // Numeric comparison when both sides are numbers, lexical otherwise.
  bool accepts(const kb::Term &value) const;
};

// A conjunctive first-order query. Variables other than the target are
// existentially quantified.
struct LogicQuery {
  QueryKind kind = QueryKind::Select;
  std::string target;  // empty for Ask
  std::vector<Atom> atoms;
  std::vector<TypeAtom> type_atoms;
  std::optional<SortConstruct> sort;
  std::optional<CountConstruct> count;
  std::optional<FilterConstruct> filter;

  bool operator==(const LogicQuery &) const = default;

  // Variables in order of first appearance in atoms, then type atoms.
  std::vector<std::string> variables() const;
  bool has_type_atom(const std::string &v) const;

  // Joint pattern of positive atoms and type atoms.
  kb::GraphPattern pattern() const;

  // First-order rendering, e.g.
  // "exists z. (rdf:type(?x, dbo:Film) & dbo:starring(?x, ?z))".
  std::string str() const;
};

}  // namespace nsqa::logic

#endif  // NSQA_LOGIC_QUERY_H_

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

#include "nsqa/logic/query.h"

#include <algorithm>

namespace nsqa::logic {

const std::string *var_name(const Arg &a) {
  const auto *v = std::get_if<kb::Variable>(&a);
  return v == nullptr ? nullptr : &v->name;
}

const kb::Term *term_of(const Arg &a) { return std::get_if<kb::Term>(&a); }

std::string arg_str(const Arg &a) {
  if (const auto *v = var_name(a)) return "?" + *v;
  return std::get<kb::Term>(a).str();
}

std::string_view to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::Select: return "select";
    case QueryKind::Ask: return "ask";
    case QueryKind::Count: return "count";
  }
  return "?";
}

std::string_view to_string(Comparator cmp) {
  switch (cmp) {
    case Comparator::Lt: return "<";
    case Comparator::Le: return "<=";
    case Comparator::Gt: return ">";
    case Comparator::Ge: return ">=";
    case Comparator::Eq: return "=";
    case Comparator::Ne: return "!=";
  }
  return "?";
}

std::string Atom::str() const {
  std::string out = predicate.str() + "(" + arg_str(subject) + ", " + arg_str(object) + ")";
  return negated ? "~" + out : out;
}

bool FilterConstruct::accepts(const kb::Term &value) const {
  auto a = value.as_number();
  auto b = literal.as_number();
  int c;
  if (a && b) {
    c = *a < *b ? -1 : (*a > *b ? 1 : 0);
  } else {
    c = value.value().compare(literal.value());
    c = c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  switch (cmp) {
    case Comparator::Lt: return c < 0;
    case Comparator::Le: return c <= 0;
    case Comparator::Gt: return c > 0;
    case Comparator::Ge: return c >= 0;
    case Comparator::Eq: return c == 0;
    case Comparator::Ne: return c != 0;
  }
  return false;
}

std::vector<std::string> LogicQuery::variables() const {
  std::vector<std::string> out;
  auto note = [&](const std::string &v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto &a : atoms) {
    if (const auto *v = var_name(a.subject)) note(*v);
    if (const auto *v = var_name(a.object)) note(*v);
  }
  for (const auto &t : type_atoms) note(t.var);
  return out;
}

bool LogicQuery::has_type_atom(const std::string &v) const {
  return std::any_of(type_atoms.begin(), type_atoms.end(),
                     [&](const TypeAtom &t) { return t.var == v; });
}

kb::GraphPattern LogicQuery::pattern() const {
  kb::GraphPattern p;
  for (const auto &a : atoms) {
    if (a.negated) continue;
    p.triples.push_back({a.subject, a.predicate, a.object});
  }
  for (const auto &t : type_atoms) {
    p.triples.push_back({var(t.var), kb::Term::iri(std::string(kb::kRdfType)), t.cls});
  }
  return p;
}

std::string LogicQuery::str() const {
  std::vector<std::string> parts;
  for (const auto &t : type_atoms) parts.push_back("rdf:type(?" + t.var + ", " + t.cls.str() + ")");
  for (const auto &a : atoms) parts.push_back(a.str());
  std::string body;
  for (const auto &p : parts) {
    if (!body.empty()) body += " & ";
    body += p;
  }
  std::string quantified;
  for (const auto &v : variables()) {
    if (v == target) continue;
    if (!quantified.empty()) quantified += ' ';
    quantified += v;
  }
  std::string out = quantified.empty() ? "(" + body + ")" : "exists " + quantified + ". (" + body + ")";
  if (count) out = "count(?" + count->var + ", " + out + ")";
  if (sort) {
    out = std::string(sort->direction == SortDirection::Desc ? "argmax" : "argmin") + "(?" +
          sort->var + ", " + std::to_string(sort->limit) + ", " + out + ")";
  }
  if (filter) {
    out += " & filter(?" + filter->var + " " + std::string(to_string(filter->cmp)) + " " +
           filter->literal.str() + ")";
  }
  return out;
}

}  // namespace nsqa::logic

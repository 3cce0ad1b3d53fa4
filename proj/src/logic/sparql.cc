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

#include "nsqa/logic/sparql.h"

#include <algorithm>
#include <set>
#include <string_view>

namespace nsqa::logic {
namespace {

constexpr std::string_view kEscaped = "~!$&'()*+,;=/?#@%";

std::string arg_sparql(const Arg &a) {
  if (const auto *v = var_name(a)) return "?" + *v;
  return sparql_term(std::get<kb::Term>(a));
}

std::string triple_text(const std::string &s, const std::string &p, const std::string &o) {
  return s + " " + p + " " + o + " .";
}

std::string where_body(const LogicQuery &q) {
  std::vector<const Atom *> order;
  for (const auto &a : q.atoms) {
    if (!is_var(a.subject) || !is_var(a.object)) order.push_back(&a);
  }
  for (const auto &a : q.atoms) {
    if (is_var(a.subject) && is_var(a.object)) order.push_back(&a);
  }

  std::vector<std::string> lines;
  std::vector<bool> typed(q.type_atoms.size(), false);
  auto emit_types_for = [&](const std::string &v) {
    for (size_t i = 0; i < q.type_atoms.size(); ++i) {
      if (typed[i] || q.type_atoms[i].var != v) continue;
      typed[i] = true;
      lines.push_back(triple_text("?" + v, "rdf:type", sparql_term(q.type_atoms[i].cls)));
    }
  };
  for (const Atom *a : order) {
    if (const auto *v = var_name(a->subject)) emit_types_for(*v);
    std::string t = triple_text(arg_sparql(a->subject), sparql_term(a->predicate),
                                arg_sparql(a->object));
    lines.push_back(a->negated ? "FILTER NOT EXISTS { " + t + " }" : t);
  }
  for (size_t i = 0; i < q.type_atoms.size(); ++i) {
    if (!typed[i]) emit_types_for(q.type_atoms[i].var);
  }
  if (q.filter) {
    lines.push_back("FILTER(?" + q.filter->var + " " + std::string(to_string(q.filter->cmp)) +
                    " " + sparql_term(q.filter->literal) + ")");
  }
  std::string out = "{";
  for (const auto &l : lines) out += " " + l;
  return out + " }";
}

}  // namespace

std::string sparql_term(const kb::Term &term) {
  if (term.is_literal()) return term.str();
  const std::string &v = term.value();
  if (!v.empty() && v.front() == '<') return v;
  size_t colon = v.find(':');
  if (colon == std::string::npos) return v;
  std::string out = v.substr(0, colon + 1);
  std::string_view local = std::string_view(v).substr(colon + 1);
  for (size_t i = 0; i < local.size(); ++i) {
    char c = local[i];
    bool escape = kEscaped.find(c) != std::string_view::npos ||
                  (c == '.' && (i == 0 || i + 1 == local.size()));
    if (escape) out += '\\';
    out += c;
  }
  return out;
}

std::string to_sparql(const LogicQuery &q) {
  const std::string body = where_body(q);
  if (q.kind == QueryKind::Ask) return "ASK WHERE " + body;

  const auto vars = q.variables();
  if (q.kind == QueryKind::Count || q.count) {
    std::string counted = q.count ? q.count->var : q.target;
    std::string alias = "c";
    while (std::find(vars.begin(), vars.end(), alias) != vars.end()) alias += "c";
    return "SELECT (COUNT(DISTINCT ?" + counted + ") AS ?" + alias + ") WHERE " + body;
  }

  std::string head = "SELECT DISTINCT";
  if (!q.target.empty()) head += " ?" + q.target;
  for (const auto &v : vars) {
    if (v != q.target) head += " ?" + v;
  }
  std::string out = head + " WHERE " + body;
  if (q.sort) {
    out += std::string(" ORDER BY ") + (q.sort->direction == SortDirection::Desc ? "DESC" : "ASC") +
           "(?" + q.sort->var + ") LIMIT " + std::to_string(q.sort->limit);
  }
  return out;
}

std::string to_sparql_document(const LogicQuery &query, const kb::PrefixTable &prefixes) {
  std::string out;
  for (const auto &[prefix, ns] : prefixes.entries()) {
    out += "PREFIX " + prefix + ": <" + ns + ">\n";
  }
  return out + to_sparql(query) + "\n";
}

}  // namespace nsqa::logic

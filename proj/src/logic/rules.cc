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

#include "nsqa/logic/rules.h"

#include <algorithm>
#include <set>

#include "nsqa/linkers/lexicon.h"

namespace nsqa::logic {
namespace {

Arg arg_of(const linkers::TermRef &t) {
  if (t.iri) return *t.iri;
  return var(t.var);
}

}  // namespace

AttributeLexicon AttributeLexicon::load(const std::string &path, const kb::PrefixTable &prefixes) {
  AttributeLexicon lexicon;
  size_t row = 0;
  for (const auto &fields : linkers::read_tsv(path, 3)) {
    ++row;
    SortDirection dir;
    if (fields[2] == "desc") {
      dir = SortDirection::Desc;
    } else if (fields[2] == "asc") {
      dir = SortDirection::Asc;
    } else {
      throw Error(path + " row " + std::to_string(row) + ": direction must be asc or desc");
    }
    lexicon.add(fields[0], linkers::parse_iri(fields[1], prefixes), dir);
  }
  return lexicon;
}

void AttributeLexicon::add(std::string attribute, kb::Term property, SortDirection direction) {
  entries_[std::move(attribute)] = {std::move(property), direction};
}

const AttributeEntry *AttributeLexicon::find(const std::string &attribute) const {
  auto it = entries_.find(attribute);
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<SRuleResult> apply_s_rule(const amr::Graph &graph, const std::string &target,
                                        const std::vector<std::string> &query_vars,
                                        const AttributeLexicon &lexicon, Trace *trace) {
  for (const auto &node : graph.nodes()) {
    if (node.concept_name != "have-degree-91") continue;
    auto degree = graph.child(node.var, ":ARG3");
    std::string degree_concept = degree ? graph.node(*degree).concept_name : "";
    if (!degree) {
      if (auto attr = graph.attribute(node.var, ":ARG3")) degree_concept = *attr;
    }
    if (degree_concept == "more" || degree_concept == "less") {
      trace_add(trace, "unsupported: comparative (" + node.var + ")");
      return std::nullopt;
    }
    if (degree_concept != "most" && degree_concept != "least") continue;

    auto attribute = graph.child(node.var, ":ARG2");
    if (!attribute) throw UnknownAttributeError("have-degree-91 without :ARG2");
    const std::string lemma = linkers::strip_sense(graph.node(*attribute).concept_name);
    const AttributeEntry *entry = lexicon.find(lemma);
    if (entry == nullptr) throw UnknownAttributeError("no attribute lexicon entry for '" + lemma + "'");

    std::string subject = target;
    if (auto arg1 = graph.child(node.var, ":ARG1")) {
      if (std::find(query_vars.begin(), query_vars.end(), *arg1) != query_vars.end()) subject = *arg1;
    }
    const std::string stem = entry->property.local_name().substr(0, 4);
    std::string quantity = stem;
    for (int i = 2; std::find(query_vars.begin(), query_vars.end(), quantity) != query_vars.end() ||
                    graph.has_node(quantity);
         ++i) {
      quantity = stem + std::to_string(i);
    }
    SortDirection dir = entry->direction;
    if (degree_concept == "least") {
      dir = dir == SortDirection::Desc ? SortDirection::Asc : SortDirection::Desc;
    }
    SRuleResult result{{entry->property, var(subject), var(quantity), false}, {quantity, dir, 1}};
    trace_add(trace, "s-rule: " + lemma + " -> " + result.atom.str() + ", sort " +
                         (dir == SortDirection::Desc ? "desc" : "asc") + " limit 1");
    return result;
  }
  return std::nullopt;
}

bool is_cardinal(const amr::Graph &graph, bool count_flag) {
  if (count_flag) return true;
  const std::string &root = graph.root();
  return !root.empty() && graph.node(root).concept_name == "have-quant-91";
}

std::optional<std::string> drop_quant_triples(path::TripleSet &triples) {
  std::optional<std::string> quantified;
  std::erase_if(triples.triples, [&](const path::CollapsedTriple &t) {
    if (t.relation_label != "quant") return false;
    if (t.subject == triples.focus) {
      if (!quantified) quantified = t.object;
      return true;
    }
    if (t.object == triples.focus) {
      if (!quantified) quantified = t.subject;
      return true;
    }
    return false;
  });
  return quantified;
}

std::optional<CountConstruct> apply_c_rule(bool cardinal, const std::string &target,
                                           const std::vector<linkers::RelationBucket> &buckets,
                                           const kb::KnowledgeBase &kb) {
  if (!cardinal) return std::nullopt;
  for (const auto &b : buckets) {
    const bool touches = (!b.subject.linked() && b.subject.var == target) ||
                         (!b.object.linked() && b.object.var == target);
    if (!touches || b.candidates.empty()) continue;
    const auto dr = kb::domain_range(kb, b.candidates.front().relation);
    const bool numeric = (dr.domain && kb::is_numeric_datatype(dr.domain->value())) ||
                         (dr.range && kb::is_numeric_datatype(dr.range->value()));
    if (numeric) return std::nullopt;
    break;
  }
  return CountConstruct{target};
}

std::vector<kb::Term> minimal_types(const kb::Term &t, const kb::KnowledgeBase &kb) {
  const auto types = kb.types_of(t);
  std::vector<kb::Term> out;
  for (const auto &a : types) {
    bool has_sub = false;
    for (const auto &b : types) {
      if (!(a == b) && kb.isa_star(b, a)) has_sub = true;
    }
    if (!has_sub) out.push_back(a);
  }
  return out;
}

std::optional<LogicQuery> apply_t_rule(const std::vector<kb::Term> &answers,
                                       const LogicQuery &query,
                                       const std::vector<linkers::TypeLink> &type_links,
                                       const kb::KnowledgeBase &kb) {
  if (query.target.empty() || query.has_type_atom(query.target) || answers.empty()) {
    return std::nullopt;
  }
  std::set<std::vector<kb::Term>> signatures;
  std::map<kb::Term, size_t> votes;
  for (const auto &a : answers) {
    auto types = minimal_types(a, kb);
    for (const auto &t : types) ++votes[t];
    signatures.insert(std::move(types));
  }
  if (signatures.size() <= 1) return std::nullopt;

  std::optional<kb::Term> cls;
  for (const auto &link : type_links) {
    if (link.node == query.target) {
      cls = link.class_iri;
      break;
    }
  }
  if (!cls) {
    size_t best = 0;
    for (const auto &[t, n] : votes) {
      if (n > best) {
        best = n;
        cls = t;
      }
    }
  }
  if (!cls) return std::nullopt;
  LogicQuery amended = query;
  amended.type_atoms.push_back({query.target, *cls});
  return amended;
}

int position_compatibility(const linkers::TermRef &end, const std::optional<kb::Term> &declared,
                           const VarTypes &var_types, const kb::KnowledgeBase &kb) {
  if (!declared) return 1;
  const bool datatype = kb::is_numeric_datatype(declared->value()) ||
                        declared->value().rfind("xsd:", 0) == 0 ||
                        declared->value() == "rdf:langString";
  if (end.iri) {
    if (datatype) return end.iri->is_literal() ? 2 : 0;
    const auto types = kb.types_of(*end.iri);
    if (types.empty()) return 1;
    for (const auto &t : types) {
      if (kb.isa_star(t, *declared)) return 2;
    }
    return 0;
  }
  auto it = var_types.find(end.var);
  if (it == var_types.end() || datatype) return 1;
  if (kb.isa_star(it->second, *declared)) return 2;
  if (kb.isa_star(*declared, it->second)) return 1;
  return 0;
}

Atom orient_atom(const kb::Term &relation, const linkers::TermRef &subject,
                 const linkers::TermRef &object, const VarTypes &var_types,
                 const kb::KnowledgeBase &kb) {
  const auto dr = kb::domain_range(kb, relation);
  auto fit = [&](const linkers::TermRef &s, const linkers::TermRef &o) {
    return position_compatibility(s, dr.domain, var_types, kb) +
           position_compatibility(o, dr.range, var_types, kb);
  };
  auto evidence = [&](const linkers::TermRef &s, const linkers::TermRef &o) {
    int n = 0;
    if (s.iri && kb.count(*s.iri, relation, std::nullopt) > 0) ++n;
    if (o.iri && kb.count(std::nullopt, relation, *o.iri) > 0) ++n;
    return n;
  };
  const auto forward = std::make_pair(fit(subject, object), evidence(subject, object));
  const auto backward = std::make_pair(fit(object, subject), evidence(object, subject));
  if (backward > forward) return {relation, arg_of(object), arg_of(subject), false};
  return {relation, arg_of(subject), arg_of(object), false};
}

}  // namespace nsqa::logic

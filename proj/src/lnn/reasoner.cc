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

#include "nsqa/lnn/reasoner.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace nsqa::lnn {
namespace {

bool is_datatype(const kb::Term &cls) {
  return cls.value().rfind("xsd:", 0) == 0 || cls.value() == "rdf:langString";
}

void check_argument(const logic::Arg &arg, const std::optional<kb::Term> &declared,
                    const kb::KnowledgeBase &kb, TypeCheck &out) {
  const kb::Term *t = logic::term_of(arg);
  if (t == nullptr || !t->is_iri() || !declared || is_datatype(*declared)) return;
  const auto types = kb.types_of(*t);
  if (types.empty()) return;
  for (const auto &ty : types) {
    if (kb.isa_star(ty, *declared)) return;
  }
  out.keep = false;
  for (const auto &ty : types) {
    out.reasons.push_back("isa*(" + ty.str() + ", " + declared->str() + ") = false");
  }
}

std::string row_str(const kb::Solution &row) {
  std::string out;
  for (const auto &[v, t] : row) {
    if (!out.empty()) out += ", ";
    out += v + "=" + t.str();
  }
  return "(" + out + ")";
}

// Topmost node that still holds one value per row.
size_t row_body(const Network &net) {
  size_t id = net.root();
  while (!net.node(id).per_row && !net.node(id).children.empty()) id = net.node(id).children[0];
  return id;
}

struct Hop {
  kb::Term from;
  std::string relation;  // "dbo:country" or "^dbo:hasPart"
};

}  // namespace

std::vector<HolonymRelation> default_holonym_relations() {
  return {{kb::Term::iri("dbo:isPartOf"), false},
          {kb::Term::iri("dbo:country"), false},
          {kb::Term::iri("dbo:federalState"), false},
          {kb::Term::iri("dbo:hasPart"), true}};
}

TypeCheck check_type_consistency(const logic::LogicQuery &query, const kb::KnowledgeBase &kb) {
  TypeCheck out;
  for (const auto &atom : query.atoms) {
    const auto dr = kb::domain_range(kb, atom.predicate);
    check_argument(atom.subject, dr.domain, kb, out);
    check_argument(atom.object, dr.range, kb, out);
  }
  return out;
}

TruthBounds holonym_fallback(const logic::Atom &atom, const kb::KnowledgeBase &kb,
                             const ReasonerConfig &config, Trace *trace) {
  const kb::Term *s = logic::term_of(atom.subject);
  const kb::Term *o = logic::term_of(atom.object);
  if (s == nullptr || o == nullptr || !o->is_iri()) return TruthBounds::Unknown();

  std::vector<kb::Term> retrieved;
  for (const auto &t : kb.match(*s, atom.predicate, std::nullopt)) {
    if (t.o.is_iri()) retrieved.push_back(t.o);
  }
  std::string listed;
  for (const auto &r : retrieved) listed += (listed.empty() ? "" : ", ") + r.str();
  trace_add(trace, "retrieve " + atom.predicate.str() + "(" + s->str() + ", ?o) -> " +
                       (listed.empty() ? "none" : listed));
  if (retrieved.empty()) return TruthBounds::Unknown();

  for (const auto &start : retrieved) {
    // Breadth-first walk over the holonym relations, depth 0 included.
    std::map<kb::Term, Hop> parent;
    std::vector<kb::Term> order{start};
    std::deque<std::pair<kb::Term, size_t>> queue{{start, 0}};
    std::set<kb::Term> seen{start};
    while (!queue.empty()) {
      auto [x, depth] = queue.front();
      queue.pop_front();
      if (depth >= config.holonym_depth) continue;
      for (const auto &rel : config.holonym_relations) {
        std::vector<kb::Term> next;
        if (!rel.inverse) {
          for (const auto &t : kb.match(x, rel.property, std::nullopt)) next.push_back(t.o);
        } else {
          for (const auto &t : kb.match(std::nullopt, rel.property, x)) next.push_back(t.s);
        }
        for (const auto &y : next) {
          if (!y.is_iri() || !seen.insert(y).second) continue;
          parent[y] = {x, (rel.inverse ? "^" : "") + rel.property.str()};
          order.push_back(y);
          queue.push_back({y, depth + 1});
        }
      }
    }

    auto path_to = [&](const kb::Term &y) {
      std::vector<std::string> hops;
      for (kb::Term cur = y; parent.count(cur) != 0; cur = parent.at(cur).from) {
        const Hop &h = parent.at(cur);
        hops.push_back(h.from.str() + " " + h.relation + " " + cur.str());
      }
      std::reverse(hops.begin(), hops.end());
      return hops;
    };

    if (seen.count(*o) != 0) {
      for (const auto &h : path_to(*o)) trace_add(trace, "holonym " + h);
      trace_add(trace, "holonym: " + start.str() + " lies within " + o->str());
      return TruthBounds::True();
    }

    for (const auto &y : order) {
      std::optional<kb::Term> shared;
      for (const auto &cls : config.exclusive_types) {
        auto has = [&](const kb::Term &e) {
          for (const auto &t : kb.types_of(e)) {
            if (kb.isa_star(t, cls)) return true;
          }
          return false;
        };
        if (has(y) && has(*o)) {
          shared = cls;
          break;
        }
      }
      if (!shared) continue;

      for (const auto &h : path_to(y)) trace_add(trace, "holonym " + h);
      const std::string part_y = "partOf(" + start.str() + ", " + y.str() + ")";
      const std::string part_o = "partOf(" + start.str() + ", " + o->str() + ")";
      trace_add(trace, "inclusion-axiom: " + part_y + " & " + shared->str() + "(" + y.str() +
                           ") & " + shared->str() + "(" + o->str() + ") -> ~" + part_o);

      Network net;
      size_t p = net.add_predicate(atom.str(), atom);
      size_t py = net.add_predicate(part_y);
      size_t cy = net.add_predicate(shared->str() + "(" + y.str() + ")");
      size_t co = net.add_predicate(shared->str() + "(" + o->str() + ")");
      size_t po = net.add_predicate(part_o);
      size_t premise = net.add_and({py, cy, co});
      size_t axiom = net.add_implies(premise, net.add_not(po));
      size_t link = net.add_implies(p, po);
      net.set_root(p);
      net.tighten(py, 0, TruthBounds::True(), "holonym", trace);
      net.tighten(cy, 0, TruthBounds::True(), "ask", trace);
      net.tighten(co, 0, TruthBounds::True(), "ask", trace);
      net.tighten(axiom, 0, TruthBounds::True(), "inclusion-axiom", trace);
      net.tighten(link, 0, TruthBounds::True(), "inclusion-axiom", trace);
      return net.infer(trace, config.max_iterations);
    }
  }
  trace_add(trace, "holonym: no container path found");
  return TruthBounds::Unknown();
}

std::string AnswerSet::verdict(bool closed_world_output) const {
  if (truth.is_true()) return "true";
  if (truth.is_false()) return "false";
  return closed_world_output ? "false" : "unknown";
}

AnswerSet evaluate_query(const logic::LogicQuery &query, const kb::KnowledgeBase &kb,
                         const ReasonerConfig &config, Trace *trace) {
  AnswerSet out;
  out.kind = query.kind;
  Network net = build_network(query);
  auto rows = compute_global_bindings(net, kb);
  if (query.filter) {
    std::erase_if(rows, [&](const kb::Solution &row) {
      auto it = row.find(query.filter->var);
      return it == row.end() || !query.filter->accepts(it->second);
    });
  }
  trace_add(trace, "global bindings: " + std::to_string(rows.size()) + " row(s)");
  for (size_t i = 0; i < rows.size() && i < 10; ++i) trace_add(trace, "  " + row_str(rows[i]));
  out.bindings = rows;

  if (query.kind == logic::QueryKind::Ask) {
    if (!rows.empty()) {
      net.set_rows(rows);
      ground_all(net, kb, trace);
    } else {
      net.set_rows({kb::Solution{}});
      ground_all(net, kb, trace);
      for (size_t id = 0; id < net.size(); ++id) {
        const LnnNode &n = net.node(id);
        if (n.kind != NodeKind::Predicate || !n.atom) continue;
        if (!net.value(id).is_unknown()) continue;
        trace_add(trace, "ask " + n.label + " = " + net.value(id).str());
        if (!config.geographic_reasoning || n.atom->predicate.value() == kb::kRdfType) continue;
        if (logic::is_var(n.atom->subject) || logic::is_var(n.atom->object)) continue;
        TruthBounds b = holonym_fallback(*n.atom, kb, config, trace);
        if (b.is_decided()) net.tighten(id, 0, b, "holonym", trace);
      }
    }
    out.truth = net.infer(trace, config.max_iterations);
    return out;
  }

  if (rows.empty()) return out;
  net.set_rows(rows);
  ground_all(net, kb, trace);
  out.truth = net.infer(trace, config.max_iterations);

  const size_t body = row_body(net);
  std::vector<const kb::Solution *> accepted;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (net.value(body, r).lower >= 1.0 && rows[r].count(query.target) != 0) {
      accepted.push_back(&rows[r]);
    }
  }

  if (query.sort) {
    const auto &sv = query.sort->var;
    const bool desc = query.sort->direction == logic::SortDirection::Desc;
    std::erase_if(accepted, [&](const kb::Solution *r) {
      auto it = r->find(sv);
      return it == r->end() || !it->second.as_number();
    });
    std::stable_sort(accepted.begin(), accepted.end(), [&](const auto *a, const auto *b) {
      double x = *a->at(sv).as_number();
      double y = *b->at(sv).as_number();
      if (x != y) return desc ? x > y : x < y;
      return a->at(query.target) < b->at(query.target);
    });
    for (const auto *r : accepted) {
      const kb::Term &t = r->at(query.target);
      if (std::find(out.answers.begin(), out.answers.end(), t) != out.answers.end()) continue;
      if (out.answers.size() >= query.sort->limit) break;
      out.answers.push_back(t);
    }
  } else {
    std::set<kb::Term> distinct;
    for (const auto *r : accepted) distinct.insert(r->at(query.target));
    out.answers.assign(distinct.begin(), distinct.end());
  }

  if (query.count) {
    std::set<kb::Term> distinct;
    for (const auto *r : accepted) {
      auto it = r->find(query.count->var);
      if (it != r->end()) distinct.insert(it->second);
    }
    out.count = distinct.size();
    trace_add(trace, "count(?" + query.count->var + ") = " + std::to_string(*out.count));
  }
  return out;
}

AnswerSet evaluate(const std::vector<logic::LogicQuery> &hypotheses, const kb::KnowledgeBase &kb,
                   const ReasonerConfig &config) {
  Trace trace;
  std::optional<AnswerSet> fallback;
  size_t discarded = 0;
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    const auto &q = hypotheses[i];
    const std::string tag = "hypothesis " + std::to_string(i + 1);
    const TypeCheck check = check_type_consistency(q, kb);
    if (!check.keep) {
      std::string why;
      for (const auto &r : check.reasons) why += (why.empty() ? "" : "; ") + r;
      trace.add(tag + " " + q.str() + ": discarded (" + why + ")");
      ++discarded;
      continue;
    }
    trace.add(tag + " " + q.str() + ": evaluated");
    AnswerSet result;
    try {
      result = evaluate_query(q, kb, config, &trace);
    } catch (const ContradictionError &e) {
      trace.add(tag + ": contradiction, skipped (" + std::string(e.what()) + ")");
      continue;
    }
    result.chosen_hypothesis = i;
    const bool wins = q.kind == logic::QueryKind::Ask ? result.truth.is_decided()
                                                      : !result.bindings.empty();
    if (wins) {
      trace.add(tag + ": chosen");
      result.trace = std::move(trace);
      return result;
    }
    trace.add(tag + (q.kind == logic::QueryKind::Ask ? ": undecided " + result.truth.str()
                                                     : std::string(": no bindings")));
    if (!fallback) fallback = std::move(result);
  }
  if (hypotheses.empty() || discarded == hypotheses.size()) {
    throw AllHypothesesDiscarded("all " + std::to_string(hypotheses.size()) +
                                 " hypotheses were discarded by type checking");
  }
  AnswerSet out;
  if (fallback) {
    out = std::move(*fallback);
  } else {
    out.kind = hypotheses.front().kind;
  }
  out.trace = std::move(trace);
  return out;
}

}  // namespace nsqa::lnn

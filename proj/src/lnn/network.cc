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

#include "nsqa/lnn/network.h"

#include <algorithm>
#include <set>

namespace nsqa::lnn {
namespace {

bool is_functional(NodeKind k) {
  return k == NodeKind::Count || k == NodeKind::Sort || k == NodeKind::Filter;
}

std::string join_labels(const Network &net, const std::vector<size_t> &ids, std::string_view op) {
  std::string out;
  for (size_t id : ids) {
    if (!out.empty()) out += std::string(" ") + std::string(op) + " ";
    out += net.node(id).label;
  }
  return out;
}

void collect_pattern(const Network &net, size_t id, kb::GraphPattern &pattern) {
  const LnnNode &n = net.node(id);
  if (n.kind == NodeKind::Predicate) {
    if (n.atom) pattern.triples.push_back({n.atom->subject, n.atom->predicate, n.atom->object});
  } else if (n.kind == NodeKind::And) {
    for (size_t c : n.children) collect_pattern(net, c, pattern);
  }
}

std::vector<kb::Solution> bindings_of(const Network &net, size_t id, const kb::KnowledgeBase &kb) {
  const LnnNode &n = net.node(id);
  switch (n.kind) {
    case NodeKind::Predicate:
    case NodeKind::And: {
      kb::GraphPattern pattern;
      collect_pattern(net, id, pattern);
      if (pattern.triples.empty()) return {};
      return kb::eval_bgp(kb, pattern);
    }
    case NodeKind::Or: {
      std::set<kb::Solution> all;
      for (size_t c : n.children) {
        for (auto &s : bindings_of(net, c, kb)) all.insert(std::move(s));
      }
      return {all.begin(), all.end()};
    }
    case NodeKind::Exists:
    case NodeKind::Count:
    case NodeKind::Sort:
    case NodeKind::Filter:
      return bindings_of(net, n.children.front(), kb);
    case NodeKind::Not:
    case NodeKind::Implies:
      return {};
  }
  return {};
}

}  // namespace

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Predicate: return "predicate";
    case NodeKind::And: return "and";
    case NodeKind::Or: return "or";
    case NodeKind::Not: return "not";
    case NodeKind::Implies: return "implies";
    case NodeKind::Exists: return "exists";
    case NodeKind::Count: return "count";
    case NodeKind::Sort: return "sort";
    case NodeKind::Filter: return "filter";
  }
  return "?";
}

Network::Network() : rows_(1) {}

size_t Network::add(LnnNode node) {
  node.id = nodes_.size();
  node.per_row = node.kind != NodeKind::Exists && !is_functional(node.kind);
  for (size_t c : node.children) {
    if (c >= nodes_.size()) throw Error("network child must be added before its parent");
    if (!nodes_[c].per_row) node.per_row = false;
  }
  node.weights.assign(node.children.size(), 1.0);
  node.values.assign(node.per_row ? rows_.size() : 1, TruthBounds::Unknown());
  nodes_.push_back(std::move(node));
  root_ = nodes_.size() - 1;
  return root_;
}

size_t Network::add_predicate(std::string label, std::optional<logic::Atom> atom) {
  LnnNode n;
  n.kind = NodeKind::Predicate;
  n.label = std::move(label);
  n.atom = std::move(atom);
  return add(std::move(n));
}

size_t Network::add_and(std::vector<size_t> children) {
  LnnNode n;
  n.kind = NodeKind::And;
  n.label = "(" + join_labels(*this, children, "&") + ")";
  n.children = std::move(children);
  return add(std::move(n));
}

size_t Network::add_or(std::vector<size_t> children) {
  LnnNode n;
  n.kind = NodeKind::Or;
  n.label = "(" + join_labels(*this, children, "|") + ")";
  n.children = std::move(children);
  return add(std::move(n));
}

size_t Network::add_not(size_t child) {
  LnnNode n;
  n.kind = NodeKind::Not;
  n.label = "~" + node(child).label;
  n.children = {child};
  return add(std::move(n));
}

size_t Network::add_implies(size_t antecedent, size_t consequent) {
  LnnNode n;
  n.kind = NodeKind::Implies;
  n.label = "(" + node(antecedent).label + " -> " + node(consequent).label + ")";
  n.children = {antecedent, consequent};
  return add(std::move(n));
}

size_t Network::add_exists(std::vector<std::string> vars, size_t child) {
  LnnNode n;
  n.kind = NodeKind::Exists;
  std::string vs;
  for (const auto &v : vars) vs += (vs.empty() ? "" : ",") + v;
  n.label = "exists " + vs + ". " + node(child).label;
  n.vars = std::move(vars);
  n.children = {child};
  return add(std::move(n));
}

size_t Network::add_functional(NodeKind kind, std::string label, std::vector<std::string> vars,
                               size_t child) {
  if (!is_functional(kind)) throw Error("not a functional node kind");
  LnnNode n;
  n.kind = kind;
  n.label = std::move(label);
  n.vars = std::move(vars);
  n.children = {child};
  return add(std::move(n));
}

void Network::set_rows(std::vector<kb::Solution> rows) {
  rows_ = std::move(rows);
  for (auto &n : nodes_) n.values.assign(n.per_row ? rows_.size() : 1, TruthBounds::Unknown());
}

size_t Network::value_count(size_t id) const { return nodes_.at(id).values.size(); }

TruthBounds Network::value(size_t id, size_t row) const {
  const auto &v = nodes_.at(id).values;
  if (v.empty()) return TruthBounds::Unknown();
  return v.size() == 1 ? v[0] : v.at(row);
}

TruthBounds Network::child_value(size_t c, size_t row) const { return value(c, row); }

bool Network::tighten(size_t id, size_t row, TruthBounds b, std::string_view rule, Trace *trace) {
  auto &values = nodes_.at(id).values;
  if (values.empty()) return false;
  TruthBounds &slot = values.size() == 1 ? values[0] : values.at(row);
  const TruthBounds before = slot;
  const TruthBounds after = before.tightened(clamp(b));
  if (after == before) return false;
  slot = after;
  ++step_;
  std::string where = nodes_[id].label;
  if (values.size() > 1) where += " @row" + std::to_string(row);
  trace_add(trace, "STEP " + std::to_string(step_) + " | " + where + " | " + before.str() +
                       " → " + after.str() + " | " + std::string(rule));
  if (after.is_contradiction()) {
    throw ContradictionError(id, "contradiction at " + nodes_[id].label + ": " + after.str());
  }
  return true;
}

bool Network::tighten_child(size_t c, size_t row, TruthBounds b, std::string_view rule,
                            Trace *trace) {
  return tighten(c, row, b, rule, trace);
}

bool Network::upward_pass(Trace *trace) {
  bool changed = false;
  for (size_t id = 0; id < nodes_.size(); ++id) {
    const LnnNode &n = nodes_[id];
    switch (n.kind) {
      case NodeKind::Predicate:
        break;
      case NodeKind::And:
      case NodeKind::Or:
        for (size_t r = 0; r < value_count(id); ++r) {
          const bool is_and = n.kind == NodeKind::And;
          TruthBounds acc = is_and ? TruthBounds::True() : TruthBounds::False();
          for (size_t c : n.children) {
            TruthBounds v = child_value(c, r);
            acc.lower = is_and ? std::min(acc.lower, v.lower) : std::max(acc.lower, v.lower);
            acc.upper = is_and ? std::min(acc.upper, v.upper) : std::max(acc.upper, v.upper);
          }
          changed |= tighten(id, r, acc, is_and ? "upward-and" : "upward-or", trace);
        }
        break;
      case NodeKind::Not:
        for (size_t r = 0; r < value_count(id); ++r) {
          TruthBounds v = child_value(n.children[0], r);
          changed |= tighten(id, r, {1.0 - v.upper, 1.0 - v.lower}, "negation", trace);
        }
        break;
      case NodeKind::Implies:
        for (size_t r = 0; r < value_count(id); ++r) {
          TruthBounds a = child_value(n.children[0], r);
          TruthBounds b = child_value(n.children[1], r);
          changed |= tighten(id, r,
                             {std::max(1.0 - a.upper, b.lower), std::max(1.0 - a.lower, b.upper)},
                             "upward-implies", trace);
        }
        break;
      case NodeKind::Exists: {
        const size_t c = n.children[0];
        const size_t rows = value_count(c);
        if (rows == 0) break;
        TruthBounds acc = TruthBounds::False();
        for (size_t r = 0; r < rows; ++r) {
          TruthBounds v = child_value(c, r);
          acc.lower = std::max(acc.lower, v.lower);
          acc.upper = std::max(acc.upper, v.upper);
        }
        changed |= tighten(id, 0, acc, "exists", trace);
        break;
      }
      case NodeKind::Count:
      case NodeKind::Sort:
      case NodeKind::Filter:
        changed |= tighten(id, 0, child_value(n.children[0], 0), "functional", trace);
        break;
    }
  }
  return changed;
}

bool Network::downward_pass(Trace *trace) {
  bool changed = false;
  for (size_t k = nodes_.size(); k-- > 0;) {
    const LnnNode &n = nodes_[k];
    const std::vector<size_t> children = n.children;
    switch (n.kind) {
      case NodeKind::Predicate:
        break;
      case NodeKind::And:
        for (size_t r = 0; r < value_count(k); ++r) {
          const TruthBounds self = value(k, r);
          for (size_t i = 0; i < children.size(); ++i) {
            TruthBounds v = child_value(children[i], r);
            double others = 1.0;
            for (size_t j = 0; j < children.size(); ++j) {
              if (j != i) others = std::min(others, child_value(children[j], r).lower);
            }
            if (self.lower > v.lower) {
              changed |= tighten_child(children[i], r, {self.lower, 1.0},
                                       "conjunction-elimination", trace);
            }
            if (others > self.upper) {
              changed |= tighten_child(children[i], r, {0.0, self.upper}, "downward-and", trace);
            }
          }
        }
        break;
      case NodeKind::Or:
        for (size_t r = 0; r < value_count(k); ++r) {
          const TruthBounds self = value(k, r);
          for (size_t i = 0; i < children.size(); ++i) {
            double others = 0.0;
            for (size_t j = 0; j < children.size(); ++j) {
              if (j != i) others = std::max(others, child_value(children[j], r).upper);
            }
            changed |= tighten_child(children[i], r, {0.0, self.upper}, "downward-or", trace);
            if (others < self.lower) {
              changed |= tighten_child(children[i], r, {self.lower, 1.0},
                                       "disjunctive-syllogism", trace);
            }
          }
        }
        break;
      case NodeKind::Not:
        for (size_t r = 0; r < value_count(k); ++r) {
          const TruthBounds self = value(k, r);
          changed |= tighten_child(children[0], r, {1.0 - self.upper, 1.0 - self.lower},
                                   "negation", trace);
        }
        break;
      case NodeKind::Implies:
        for (size_t r = 0; r < value_count(k); ++r) {
          const TruthBounds self = value(k, r);
          const size_t a = children[0];
          const size_t b = children[1];
          changed |= tighten_child(a, r, {1.0 - self.upper, 1.0}, "downward-implies", trace);
          changed |= tighten_child(b, r, {0.0, self.upper}, "downward-implies", trace);
          const TruthBounds av = child_value(a, r);
          const TruthBounds bv = child_value(b, r);
          if (bv.upper < self.lower) {
            changed |= tighten_child(a, r, {0.0, 1.0 - self.lower}, "modus-tollens", trace);
          }
          if (1.0 - av.lower < self.lower) {
            changed |= tighten_child(b, r, {self.lower, 1.0}, "modus-ponens", trace);
          }
        }
        break;
      case NodeKind::Exists: {
        const TruthBounds self = value(k, 0);
        const size_t c = children[0];
        const size_t rows = value_count(c);
        for (size_t r = 0; r < rows; ++r) {
          changed |= tighten_child(c, r, {0.0, self.upper}, "downward-exists", trace);
        }
        if (self.lower > 0.0 && rows > 0) {
          size_t open = 0, last = 0;
          for (size_t r = 0; r < rows; ++r) {
            if (child_value(c, r).upper >= self.lower) {
              ++open;
              last = r;
            }
          }
          if (open == 1) {
            changed |= tighten_child(c, last, {self.lower, 1.0}, "downward-exists", trace);
          }
        }
        break;
      }
      case NodeKind::Count:
      case NodeKind::Sort:
      case NodeKind::Filter:
        changed |= tighten_child(children[0], 0, value(k, 0), "functional", trace);
        break;
    }
  }
  return changed;
}

TruthBounds Network::infer(Trace *trace, size_t max_iterations) {
  iterations_ = 0;
  while (iterations_ < max_iterations) {
    ++iterations_;
    bool changed = upward_pass(trace);
    changed |= downward_pass(trace);
    if (!changed) break;
  }
  return value(root_, 0);
}

Network build_network(const logic::LogicQuery &query) {
  Network net;
  std::vector<size_t> leaves;
  for (const auto &a : query.atoms) {
    logic::Atom positive = a;
    positive.negated = false;
    size_t leaf = net.add_predicate(positive.str(), positive);
    leaves.push_back(a.negated ? net.add_not(leaf) : leaf);
  }
  for (const auto &t : query.type_atoms) {
    logic::Atom atom{kb::Term::iri(std::string(kb::kRdfType)), logic::var(t.var), t.cls, false};
    leaves.push_back(net.add_predicate(atom.str(), atom));
  }
  size_t body = leaves.size() == 1 ? leaves[0] : net.add_and(leaves);

  std::vector<std::string> bound;
  for (const auto &v : query.variables()) {
    if (v != query.target) bound.push_back(v);
  }
  size_t top = body;
  if (!bound.empty()) top = net.add_exists(bound, body);
  if (query.filter) {
    top = net.add_functional(NodeKind::Filter, "filter(?" + query.filter->var + ")",
                             {query.filter->var}, top);
  }
  if (query.count) {
    top = net.add_functional(NodeKind::Count, "count(?" + query.count->var + ")",
                             {query.count->var}, top);
  }
  if (query.sort) {
    top = net.add_functional(NodeKind::Sort, "sort(?" + query.sort->var + ")",
                             {query.sort->var}, top);
  }
  net.set_root(top);
  return net;
}

std::vector<kb::Solution> compute_global_bindings(const Network &net, const kb::KnowledgeBase &kb) {
  if (net.size() == 0) return {};
  return bindings_of(net, net.root(), kb);
}

std::optional<kb::Triple> instantiate(const logic::Atom &atom, const kb::Solution &row) {
  auto resolve = [&](const logic::Arg &a) -> std::optional<kb::Term> {
    if (const auto *v = logic::var_name(a)) {
      auto it = row.find(*v);
      if (it == row.end()) return std::nullopt;
      return it->second;
    }
    return std::get<kb::Term>(a);
  };
  auto s = resolve(atom.subject);
  auto o = resolve(atom.object);
  if (!s || !o) return std::nullopt;
  return kb::Triple{*s, atom.predicate, *o};
}

void ground_predicate(Network &net, size_t leaf, const kb::KnowledgeBase &kb, Trace *trace) {
  const LnnNode &n = net.node(leaf);
  if (n.kind != NodeKind::Predicate || !n.atom) return;
  const logic::Atom atom = *n.atom;
  for (size_t r = 0; r < net.value_count(leaf); ++r) {
    auto triple = instantiate(atom, net.rows().empty() ? kb::Solution{} : net.rows()[r]);
    if (!triple) continue;
    net.tighten(leaf, r, kb::ask(kb, *triple), "ask", trace);
  }
}

void ground_all(Network &net, const kb::KnowledgeBase &kb, Trace *trace) {
  for (size_t id = 0; id < net.size(); ++id) ground_predicate(net, id, kb, trace);
}

}  // namespace nsqa::lnn

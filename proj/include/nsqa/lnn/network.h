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

// Logic network with interval truth values. Each node mirrors one
// sub-formula of a query. Nodes below an existential quantifier hold one
// bounds value per grounding row (a solution of the global query); the
// quantifier and anything above it hold a single value.
//
// Connectives use min/max semantics: And = min, Or = max, Not = 1 - x,
// Implies(a, b) = Or(Not a, b). Inference alternates an upward pass
// (children -> parent) with a downward pass (parent -> children) until
// nothing changes; bounds are only ever intersected, never widened.

#ifndef NSQA_LNN_NETWORK_H_
#define NSQA_LNN_NETWORK_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsqa/common.h"
#include "nsqa/kb/store.h"
#include "nsqa/lnn/bounds.h"
#include "nsqa/logic/query.h"

namespace nsqa::lnn {

enum class NodeKind { Predicate, And, Or, Not, Implies, Exists, Count, Sort, Filter };
std::string_view to_string(NodeKind kind);

struct LnnNode {
  size_t id = 0;
  NodeKind kind = NodeKind::Predicate;
  std::string label;
  std::vector<size_t> children;
  // Per-input weights. Kept for the network shape only; the bounds
  // arithmetic does not use them.
  std::vector<double> weights;
  std::optional<logic::Atom> atom;  // predicate leaves grounded in the KB
  std::vector<std::string> vars;    // quantified / functional variables
  bool per_row = true;
  std::vector<TruthBounds> values;
};

class ContradictionError : public Error {
 public:
  ContradictionError(size_t node, const std::string &detail)
      : Error(detail), node_(node) {}
  size_t node() const { return node_; }

 private:
  size_t node_;
};

class Network {
 public:
  Network();

  size_t add_predicate(std::string label, std::optional<logic::Atom> atom = std::nullopt);
  size_t add_and(std::vector<size_t> children);
  size_t add_or(std::vector<size_t> children);
  size_t add_not(size_t child);
  size_t add_implies(size_t antecedent, size_t consequent);
  size_t add_exists(std::vector<std::string> vars, size_t child);
  // Count, Sort or Filter over `child`; truth passes through unchanged.
  size_t add_functional(NodeKind kind, std::string label, std::vector<std::string> vars,
                        size_t child);

  void set_root(size_t id) { root_ = id; }
  size_t root() const { return root_; }
  size_t size() const { return nodes_.size(); }
  const LnnNode &node(size_t id) const { return nodes_.at(id); }
  const std::vector<LnnNode> &nodes() const { return nodes_; }

  // Grounding rows; resets every value to [0,1]. Defaults to one empty row.
  void set_rows(std::vector<kb::Solution> rows);
  const std::vector<kb::Solution> &rows() const { return rows_; }
  size_t value_count(size_t id) const;

  TruthBounds value(size_t id, size_t row = 0) const;
  // Intersects the stored bounds with `b`, tracing any change under
  // `rule`. Throws ContradictionError when the result is empty.
  bool tighten(size_t id, size_t row, TruthBounds b, std::string_view rule, Trace *trace);

  // One sweep each; return whether any bounds changed.
  bool upward_pass(Trace *trace = nullptr);
  bool downward_pass(Trace *trace = nullptr);
  // Alternates both passes until a fixpoint; returns the root value.
  TruthBounds infer(Trace *trace = nullptr, size_t max_iterations = 100);
  size_t last_iterations() const { return iterations_; }

 private:
  size_t add(LnnNode node);
  // Value of child `c` as seen from row `row` of a parent.
  TruthBounds child_value(size_t c, size_t row) const;
  bool tighten_child(size_t c, size_t row, TruthBounds b, std::string_view rule, Trace *trace);

  std::vector<LnnNode> nodes_;
  std::vector<kb::Solution> rows_;
  size_t root_ = 0;
  size_t step_ = 0;
  size_t iterations_ = 0;
};

// Mirrors the query: an And of its atoms and type atoms (a lone atom is
// its own root), wrapped in Exists over the non-target variables when
// there are any, then Count / Sort / Filter nodes.
Network build_network(const logic::LogicQuery &query);

// Solutions of the joint pattern of the positive leaves. Under an Or the
// branch tables are evaluated separately and united.
std::vector<kb::Solution> compute_global_bindings(const Network &net, const kb::KnowledgeBase &kb);

// Substitutes `row` into the atom; nullopt when a variable stays unbound.
std::optional<kb::Triple> instantiate(const logic::Atom &atom, const kb::Solution &row);

// Asks the KB for every row of a predicate leaf ([1,1] present, [0,1]
// absent or not fully bound).
void ground_predicate(Network &net, size_t leaf, const kb::KnowledgeBase &kb, Trace *trace = nullptr);
void ground_all(Network &net, const kb::KnowledgeBase &kb, Trace *trace = nullptr);

}  // namespace nsqa::lnn

#endif  // NSQA_LNN_NETWORK_H_

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

#include "nsqa/path/triples.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

namespace nsqa::path {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string join(const std::vector<std::string> &parts, char sep) {
  std::string out;
  for (const auto &p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// Attaches a new amr-unknown to the root frame's first free :ARGn slot.
std::string attach_artificial_unknown(amr::Graph &graph) {
  const std::string &root = graph.root();
  if (root.empty() || !graph.is_frame(root)) {
    throw NoFocusError("no amr-unknown and the root is not a frame to attach one to");
  }
  for (int k = 0; k <= 9; ++k) {
    std::string role = ":ARG" + std::to_string(k);
    if (graph.child(root, role)) continue;
    std::string var = graph.fresh_var("u");
    graph.add_node(var, std::string(amr::kUnknownConcept));
    graph.add_edge({root, role, var, false});
    return var;
  }
  throw NoFocusError("root frame has no free argument slot for an artificial amr-unknown");
}

bool has_quant_edge(const amr::Graph &graph, const std::string &var) {
  for (const auto &e : graph.edges()) {
    if (e.role == ":quant" && (e.source == var || e.target == var)) return true;
  }
  return false;
}

// Neighbour along a :mod edge in either direction, smallest variable first.
std::optional<std::string> mod_neighbour(const amr::Graph &graph, const std::string &var) {
  std::optional<std::string> best;
  for (const auto &e : graph.edges()) {
    if (e.role != ":mod") continue;
    const std::string *other = nullptr;
    if (e.source == var) other = &e.target;
    if (e.target == var) other = &e.source;
    if (other != nullptr && (!best || *other < *best)) best = *other;
  }
  return best;
}

}  // namespace

std::string role_label(std::string_view role) {
  if (!role.empty() && role.front() == ':') role.remove_prefix(1);
  return std::string(role);
}

Focus preprocess_question_structure(const amr::Graph &graph, amr::QuestionMode mode,
                                    const std::vector<std::string> &entity_nodes) {
  Focus focus;
  focus.graph = graph;
  amr::Graph &g = focus.graph;
  focus.targets = entity_nodes;

  auto use_unknown = [&](const std::string &unknown) {
    focus.count_flag = has_quant_edge(g, unknown);
    focus.node = unknown;
    if (auto b = mod_neighbour(g, unknown)) focus.node = *b;
  };

  const auto unknowns = g.unknown_nodes();
  switch (mode) {
    case amr::QuestionMode::Imperative: {
      const std::string root = g.root();
      auto q = g.child(root, ":ARG1");
      if (!q) throw NoFocusError("imperative root " + root + " has no :ARG1");
      g.remove_node(root);
      g.set_root(*q);
      focus.node = *q;
      break;
    }
    case amr::QuestionMode::Interrogative: {
      if (!unknowns.empty()) {
        use_unknown(unknowns.front());
      } else if (entity_nodes.size() >= 2) {
        focus.node = entity_nodes.front();
      } else if (entity_nodes.size() == 1) {
        focus.node = attach_artificial_unknown(g);
        focus.artificial = true;
      } else {
        throw NoFocusError("yes/no question without linked entities");
      }
      break;
    }
    case amr::QuestionMode::Inquisitive: {
      if (!unknowns.empty()) {
        use_unknown(unknowns.front());
      } else {
        focus.node = attach_artificial_unknown(g);
        focus.artificial = true;
      }
      break;
    }
  }
  std::erase(focus.targets, focus.node);
  return focus;
}

std::vector<CollapsedTriple> collapse_path(const amr::Path &path, const amr::Graph &graph) {
  std::vector<CollapsedTriple> out;
  std::string anchor = path.start;
  std::vector<std::string> segments;
  bool have_predicate = false;
  std::string subject_role;

  for (size_t i = 0; i < path.steps.size(); ++i) {
    const amr::PathStep &step = path.steps[i];
    const bool last = i + 1 == path.steps.size();
    const bool core = amr::is_core_role(step.role);
    if (!last && graph.is_frame(step.node)) {
      if (!have_predicate) {
        // Edge from the anchor into the first predicate: an argument slot
        // when the frame points at the anchor.
        if (core) {
          if (!step.forward) subject_role = lower(role_label(step.role));
        } else {
          segments.push_back(role_label(step.role));
        }
      } else if (!core) {
        segments.push_back(role_label(step.role));
      }
      segments.push_back(graph.node(step.node).concept_name);
      have_predicate = true;
      continue;
    }

    CollapsedTriple triple;
    triple.subject = anchor;
    triple.object = step.node;
    if (!have_predicate) {
      segments.push_back(role_label(step.role));
    } else if (core) {
      if (step.forward) triple.object_role = lower(role_label(step.role));
    } else {
      segments.push_back(role_label(step.role));
    }
    triple.subject_role = have_predicate ? subject_role : std::string();
    triple.segments = segments;
    triple.relation_label = join(segments, '|');
    out.push_back(std::move(triple));

    anchor = step.node;
    segments.clear();
    subject_role.clear();
    have_predicate = false;
  }
  return out;
}

TripleSet triples_from_focus(const Focus &focus) {
  TripleSet set;
  set.focus = focus.node;
  set.count_flag = focus.count_flag;
  set.artificial_focus = focus.artificial;
  set.graph = focus.graph;

  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto &target : focus.targets) {
    amr::Path path = amr::shortest_path(set.graph, focus.node, target);
    const size_t path_index = set.paths.size();
    set.paths.push_back(path);
    for (auto &triple : collapse_path(path, set.graph)) {
      auto key = std::make_tuple(triple.subject, triple.relation_label, triple.object);
      if (!seen.insert(key).second) continue;
      triple.path_index = path_index;
      set.triples.push_back(std::move(triple));
    }
  }
  return set;
}

TripleSet generate_triples(const amr::Graph &graph, const std::vector<std::string> &entity_nodes,
                           amr::QuestionMode mode) {
  return triples_from_focus(preprocess_question_structure(graph, mode, entity_nodes));
}

}  // namespace nsqa::path

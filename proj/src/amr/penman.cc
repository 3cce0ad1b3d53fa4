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

#include "nsqa/amr/penman.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace nsqa::amr {
namespace {

// Roles that end in "-of" without being inversions.
bool is_inverted_role(std::string_view role) {
  static const std::set<std::string_view> kNotInverted = {
      ":consist-of", ":prep-out-of", ":prep-on-behalf-of"};
  if (role.size() <= 3 || role.substr(role.size() - 3) != "-of") return false;
  return kNotInverted.count(role) == 0;
}

bool looks_like_var(std::string_view token) {
  if (token.empty() || !std::islower(static_cast<unsigned char>(token[0]))) return false;
  return std::all_of(token.begin() + 1, token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_token_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '"';
}

class PenmanReader {
 public:
  explicit PenmanReader(std::string_view text) : text_(text) {}

  Graph read() {
    skip_space();
    if (at_end()) fail(PenmanErrorKind::Syntax, pos_, "empty input");
    if (peek() == ')') fail(PenmanErrorKind::UnbalancedParens, pos_, "unexpected ')'");
    if (peek() != '(') fail(PenmanErrorKind::Syntax, pos_, "expected '('");
    std::string root = read_node();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') fail(PenmanErrorKind::UnbalancedParens, pos_, "unexpected ')'");
      fail(PenmanErrorKind::Syntax, pos_, "trailing content after graph");
    }
    graph_.set_root(root);
    finalize();
    return std::move(graph_);
  }

 private:
  enum class ItemKind { Edge, Literal, Bare };

  // Role/value pairs are collected first and resolved once every variable
  // is known, since reentrancies may point forward.
  struct Item {
    size_t offset;
    std::string owner;
    std::string role;
    ItemKind kind;
    std::string value;  // child var, literal text, or bare token
  };

  [[noreturn]] void fail(PenmanErrorKind kind, size_t offset, const std::string &detail) {
    throw PenmanError(kind, offset, detail);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        size_t eol = text_.find('\n', pos_);
        std::string_view comment =
            text_.substr(pos_, eol == std::string_view::npos ? std::string_view::npos : eol - pos_);
        constexpr std::string_view kSnt = "# ::snt ";
        if (comment.substr(0, kSnt.size()) == kSnt) {
          graph_.sentence = std::string(comment.substr(kSnt.size()));
        }
        pos_ = eol == std::string_view::npos ? text_.size() : eol + 1;
      } else {
        break;
      }
    }
  }

  std::string read_token(bool stop_at_slash) {
    size_t start = pos_;
    while (!at_end() && is_token_char(peek()) && !(stop_at_slash && peek() == '/')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_literal() {
    size_t start = pos_;
    ++pos_;  // opening quote
    std::string out;
    while (!at_end() && peek() != '"') {
      if (peek() == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += peek();
      ++pos_;
    }
    if (at_end()) fail(PenmanErrorKind::Syntax, start, "unterminated string literal");
    ++pos_;  // closing quote
    return out;
  }

  std::string read_node() {
    const size_t open = pos_;
    ++pos_;  // '('
    skip_space();
    const size_t var_offset = pos_;
    std::string var = read_token(/*stop_at_slash=*/true);
    if (var.empty()) {
      if (at_end()) fail(PenmanErrorKind::UnbalancedParens, open, "unclosed '('");
      fail(PenmanErrorKind::Syntax, pos_, "expected variable");
    }
    skip_space();
    if (at_end()) fail(PenmanErrorKind::UnbalancedParens, open, "unclosed '('");
    if (peek() != '/') fail(PenmanErrorKind::Syntax, pos_, "expected '/' after variable " + var);
    ++pos_;
    skip_space();
    std::string concept_name = read_token(/*stop_at_slash=*/false);
    if (concept_name.empty()) {
      if (at_end()) fail(PenmanErrorKind::UnbalancedParens, open, "unclosed '('");
      fail(PenmanErrorKind::Syntax, pos_, "expected concept for " + var);
    }
    if (graph_.has_node(var)) {
      fail(PenmanErrorKind::DuplicateVariableDefinition, var_offset,
           "variable '" + var + "' defined twice");
    }
    graph_.add_node(var, concept_name);

    while (true) {
      skip_space();
      if (at_end()) fail(PenmanErrorKind::UnbalancedParens, open, "unclosed '('");
      char c = peek();
      if (c == ')') {
        ++pos_;
        return var;
      }
      if (c != ':') fail(PenmanErrorKind::Syntax, pos_, "expected role or ')'");
      const size_t role_offset = pos_;
      std::string role = read_token(/*stop_at_slash=*/false);
      if (role.size() < 2) fail(PenmanErrorKind::Syntax, role_offset, "empty role");
      skip_space();
      if (at_end()) fail(PenmanErrorKind::UnbalancedParens, open, "unclosed '('");
      c = peek();
      if (c == '(') {
        std::string child = read_node();
        items_.push_back({role_offset, var, role, ItemKind::Edge, child});
      } else if (c == '"') {
        items_.push_back({role_offset, var, role, ItemKind::Literal, read_literal()});
      } else if (c == ')') {
        fail(PenmanErrorKind::Syntax, pos_, "role " + role + " has no value");
      } else {
        const size_t token_offset = pos_;
        std::string token = read_token(/*stop_at_slash=*/false);
        if (token.empty()) fail(PenmanErrorKind::Syntax, pos_, "expected value");
        items_.push_back({token_offset, var, role, ItemKind::Bare, token});
      }
    }
  }

  void add_edge(const Item &item, const std::string &child) {
    Edge edge;
    if (is_inverted_role(item.role)) {
      edge = Edge{child, item.role.substr(0, item.role.size() - 3), item.owner, true};
    } else {
      edge = Edge{item.owner, item.role, child, false};
    }
    graph_.add_edge(std::move(edge));
    edge_offsets_.push_back(item.offset);
  }

  void finalize() {
    std::stable_sort(items_.begin(), items_.end(),
                     [](const Item &a, const Item &b) { return a.offset < b.offset; });
    for (const auto &item : items_) {
      switch (item.kind) {
        case ItemKind::Edge:
          add_edge(item, item.value);
          break;
        case ItemKind::Literal:
          graph_.find(item.owner)->attributes.push_back({item.role, item.value, true});
          break;
        case ItemKind::Bare:
          if (graph_.has_node(item.value)) {
            add_edge(item, item.value);
          } else if (looks_like_var(item.value)) {
            fail(PenmanErrorKind::DanglingReentrancy, item.offset,
                 "variable '" + item.value + "' is never defined");
          } else {
            graph_.find(item.owner)->attributes.push_back({item.role, item.value, false});
          }
          break;
      }
    }
    check_acyclic();
  }

  void check_acyclic() {
    // Iterative DFS with colours; a grey target is a back edge.
    std::unordered_map<std::string, int> colour;
    const auto &edges = graph_.edges();
    std::unordered_map<std::string, std::vector<size_t>> out;
    for (size_t i = 0; i < edges.size(); ++i) out[edges[i].source].push_back(i);
    for (const auto &n : graph_.nodes()) {
      if (colour[n.var] != 0) continue;
      std::vector<std::pair<std::string, size_t>> stack{{n.var, 0}};
      colour[n.var] = 1;
      while (!stack.empty()) {
        auto &[v, next] = stack.back();
        const auto &succ = out[v];
        if (next == succ.size()) {
          colour[v] = 2;
          stack.pop_back();
          continue;
        }
        size_t ei = succ[next++];
        const std::string &w = edges[ei].target;
        if (colour[w] == 1) {
          fail(PenmanErrorKind::CyclicGraph, edge_offsets_[ei],
               "edge " + edges[ei].source + " " + edges[ei].role + " " + w + " closes a cycle");
        }
        if (colour[w] == 0) {
          colour[w] = 1;
          stack.emplace_back(w, 0);
        }
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  Graph graph_;
  std::vector<Item> items_;
  std::vector<size_t> edge_offsets_;
};

std::string quote(const std::string &value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

class PenmanWriter {
 public:
  explicit PenmanWriter(const Graph &graph) : graph_(graph) {}

  std::string write() {
    if (graph_.root().empty()) throw Error("cannot serialize a graph without a root");
    orient();
    std::string out;
    write_node(graph_.root(), out);
    return out;
  }

 private:
  // Chooses for every edge the endpoint it hangs from. The surface form is
  // kept where the parent is reachable from the root; edges stranded by
  // graph surgery are flipped until everything is reachable.
  void orient() {
    const auto &edges = graph_.edges();
    parent_of_.resize(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) parent_of_[i] = edges[i].surface_parent();
    while (true) {
      std::unordered_set<std::string> reached{graph_.root()};
      bool grew = true;
      while (grew) {
        grew = false;
        for (size_t i = 0; i < edges.size(); ++i) {
          if (reached.count(parent_of_[i]) == 0) continue;
          const std::string &other =
              parent_of_[i] == edges[i].source ? edges[i].target : edges[i].source;
          grew |= reached.insert(other).second;
        }
      }
      bool flipped = false;
      for (size_t i = 0; i < edges.size() && !flipped; ++i) {
        const std::string &other =
            parent_of_[i] == edges[i].source ? edges[i].target : edges[i].source;
        if (reached.count(parent_of_[i]) == 0 && reached.count(other) != 0) {
          parent_of_[i] = other;
          flipped = true;
        }
      }
      if (!flipped) break;
    }
  }

  void write_node(const std::string &var, std::string &out) {
    const Node &node = graph_.node(var);
    defined_.insert(var);
    out += '(';
    out += var;
    out += " / ";
    out += node.concept_name;
    for (const auto &attr : node.attributes) {
      out += ' ';
      out += attr.role;
      out += ' ';
      out += attr.quoted ? quote(attr.value) : attr.value;
    }
    const auto &edges = graph_.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
      if (parent_of_[i] != var) continue;
      const Edge &e = edges[i];
      const bool from_source = e.source == var;
      const std::string &child = from_source ? e.target : e.source;
      out += ' ';
      out += e.role;
      if (!from_source) out += "-of";
      out += ' ';
      if (defined_.count(child) != 0) {
        out += child;
      } else {
        write_node(child, out);
      }
    }
    out += ')';
  }

  const Graph &graph_;
  std::vector<std::string> parent_of_;
  std::unordered_set<std::string> defined_;
};

}  // namespace

std::string_view to_string(PenmanErrorKind kind) {
  switch (kind) {
    case PenmanErrorKind::UnbalancedParens: return "UnbalancedParens";
    case PenmanErrorKind::DuplicateVariableDefinition: return "DuplicateVariableDefinition";
    case PenmanErrorKind::DanglingReentrancy: return "DanglingReentrancy";
    case PenmanErrorKind::Syntax: return "Syntax";
    case PenmanErrorKind::CyclicGraph: return "CyclicGraph";
  }
  return "?";
}

PenmanError::PenmanError(PenmanErrorKind kind, size_t offset, const std::string &detail)
    : Error(std::string(to_string(kind)) + " at byte " + std::to_string(offset) + ": " + detail),
      kind_(kind),
      offset_(offset) {}

Graph parse_penman(std::string_view text) { return PenmanReader(text).read(); }

std::string serialize_penman(const Graph &graph) { return PenmanWriter(graph).write(); }

}  // namespace nsqa::amr

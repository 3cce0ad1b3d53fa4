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

#include "nsqa/kb/store.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace nsqa::kb {

KbError::KbError(KbErrorKind kind, size_t line, const std::string &detail)
    : Error(detail), kind_(kind), line_(line) {}

namespace {

bool is_schema_predicate(const Term &p) {
  const std::string &v = p.value();
  return v == kRdfType || v.rfind("rdfs:", 0) == 0;
}

// Range of entries in a permuted index whose first `k` ids equal `key`.
template <typename Index>
auto prefix_range(const Index &index, const std::array<uint32_t, 3> &key, int k) {
  auto less = [k](const std::array<uint32_t, 3> &a, const std::array<uint32_t, 3> &b) {
    for (int i = 0; i < k; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };
  return std::equal_range(index.begin(), index.end(), key, less);
}

}  // namespace

KnowledgeBase KnowledgeBase::from_triples(std::vector<Triple> triples) {
  KnowledgeBase kb;
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  kb.triples_ = std::move(triples);

  auto intern = [&kb](const Term &t) {
    auto [it, inserted] = kb.ids_.emplace(t, static_cast<TermId>(kb.terms_.size()));
    if (inserted) kb.terms_.push_back(t);
    return it->second;
  };
  kb.spo_.reserve(kb.triples_.size());
  for (const auto &t : kb.triples_) {
    IdTriple ids{intern(t.s), intern(t.p), intern(t.o)};
    kb.spo_.push_back(ids);
    kb.pos_.push_back({ids[1], ids[2], ids[0]});
    kb.osp_.push_back({ids[2], ids[0], ids[1]});

    const std::string &p = t.p.value();
    if (p == kSubClassOf) {
      kb.superclasses_[t.s].push_back(t.o);
    } else if (p == kDomain && kb.domain_.count(t.s) == 0) {
      kb.domain_.emplace(t.s, t.o);
    } else if (p == kRange && kb.range_.count(t.s) == 0) {
      kb.range_.emplace(t.s, t.o);
    }
  }
  std::sort(kb.spo_.begin(), kb.spo_.end());
  std::sort(kb.pos_.begin(), kb.pos_.end());
  std::sort(kb.osp_.begin(), kb.osp_.end());

  // The subclass graph must be a DAG.
  std::map<Term, int> colour;
  std::function<void(const Term &)> visit = [&](const Term &c) {
    colour[c] = 1;
    auto it = kb.superclasses_.find(c);
    if (it != kb.superclasses_.end()) {
      for (const auto &sup : it->second) {
        if (colour[sup] == 1) {
          throw KbError(KbErrorKind::CyclicSubclassHierarchy, 0,
                        "subclass cycle through " + c.str() + " and " + sup.str());
        }
        if (colour[sup] == 0) visit(sup);
      }
    }
    colour[c] = 2;
  };
  for (const auto &[cls, _] : kb.superclasses_) {
    if (colour[cls] == 0) visit(cls);
  }
  return kb;
}

std::optional<KnowledgeBase::TermId> KnowledgeBase::id_of(const Term &t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<KnowledgeBase::IdTriple> KnowledgeBase::match_ids(std::optional<TermId> s,
                                                              std::optional<TermId> p,
                                                              std::optional<TermId> o) const {
  std::vector<IdTriple> out;
  if (!s && !p && !o) return spo_;
  if (s) {
    if (o && !p) {
      auto [lo, hi] = prefix_range(osp_, {*o, *s, 0}, 2);
      for (auto it = lo; it != hi; ++it) out.push_back({(*it)[1], (*it)[2], (*it)[0]});
    } else {
      int k = p ? (o ? 3 : 2) : 1;
      auto [lo, hi] = prefix_range(spo_, {*s, p.value_or(0), o.value_or(0)}, k);
      out.assign(lo, hi);
    }
  } else if (p) {
    int k = o ? 2 : 1;
    auto [lo, hi] = prefix_range(pos_, {*p, o.value_or(0), 0}, k);
    for (auto it = lo; it != hi; ++it) out.push_back({(*it)[2], (*it)[0], (*it)[1]});
  } else {
    auto [lo, hi] = prefix_range(osp_, {*o, 0, 0}, 1);
    for (auto it = lo; it != hi; ++it) out.push_back({(*it)[1], (*it)[2], (*it)[0]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool KnowledgeBase::contains(const Triple &t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

std::vector<Triple> KnowledgeBase::match(const std::optional<Term> &s,
                                         const std::optional<Term> &p,
                                         const std::optional<Term> &o) const {
  std::optional<TermId> si, pi, oi;
  if (s && !(si = id_of(*s))) return {};
  if (p && !(pi = id_of(*p))) return {};
  if (o && !(oi = id_of(*o))) return {};
  std::vector<Triple> out;
  for (const auto &ids : match_ids(si, pi, oi)) {
    out.push_back({terms_[ids[0]], terms_[ids[1]], terms_[ids[2]]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

size_t KnowledgeBase::count(const std::optional<Term> &s, const std::optional<Term> &p,
                            const std::optional<Term> &o) const {
  std::optional<TermId> si, pi, oi;
  if (s && !(si = id_of(*s))) return 0;
  if (p && !(pi = id_of(*p))) return 0;
  if (o && !(oi = id_of(*o))) return 0;
  if (!si && !pi && !oi) return spo_.size();
  if (si && oi && !pi) {
    auto [lo, hi] = prefix_range(osp_, {*oi, *si, 0}, 2);
    return static_cast<size_t>(hi - lo);
  }
  if (si) {
    int k = pi ? (oi ? 3 : 2) : 1;
    auto [lo, hi] = prefix_range(spo_, {*si, pi.value_or(0), oi.value_or(0)}, k);
    return static_cast<size_t>(hi - lo);
  }
  if (pi) {
    auto [lo, hi] = prefix_range(pos_, {*pi, oi.value_or(0), 0}, oi ? 2 : 1);
    return static_cast<size_t>(hi - lo);
  }
  auto [lo, hi] = prefix_range(osp_, {*oi, 0, 0}, 1);
  return static_cast<size_t>(hi - lo);
}

std::vector<Term> KnowledgeBase::types_of(const Term &t) const {
  std::vector<Term> out;
  for (const auto &triple : match(t, Term::iri(std::string(kRdfType)), std::nullopt)) {
    out.push_back(triple.o);
  }
  return out;
}

std::vector<Term> KnowledgeBase::superclasses(const Term &cls) const {
  auto it = superclasses_.find(cls);
  if (it == superclasses_.end()) return {};
  std::vector<Term> out = it->second;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> KnowledgeBase::relations() const {
  std::set<Term> seen;
  for (const auto &t : triples_) {
    if (!is_schema_predicate(t.p)) seen.insert(t.p);
  }
  return {seen.begin(), seen.end()};
}

std::optional<Term> KnowledgeBase::domain(const Term &property) const {
  auto it = domain_.find(property);
  return it == domain_.end() ? std::nullopt : std::optional<Term>(it->second);
}

std::optional<Term> KnowledgeBase::range(const Term &property) const {
  auto it = range_.find(property);
  return it == range_.end() ? std::nullopt : std::optional<Term>(it->second);
}

bool KnowledgeBase::isa_star(const Term &sub, const Term &super) const {
  if (sub == super) return true;
  std::set<Term> seen{sub};
  std::deque<Term> queue{sub};
  while (!queue.empty()) {
    Term c = queue.front();
    queue.pop_front();
    auto it = superclasses_.find(c);
    if (it == superclasses_.end()) continue;
    for (const auto &sup : it->second) {
      if (sup == super) return true;
      if (seen.insert(sup).second) queue.push_back(sup);
    }
  }
  return false;
}

namespace {

class BgpSolver {
 public:
  BgpSolver(const KnowledgeBase &kb, const GraphPattern &pattern) : kb_(kb), pattern_(pattern) {
    for (const auto &[var, terms] : pattern.values) {
      values_[var] = std::set<Term>(terms.begin(), terms.end());
    }
  }

  std::vector<Solution> solve() {
    std::vector<bool> done(pattern_.triples.size(), false);
    Solution bindings;
    search(done, bindings, pattern_.triples.size());
    std::sort(solutions_.begin(), solutions_.end());
    solutions_.erase(std::unique(solutions_.begin(), solutions_.end()), solutions_.end());
    return solutions_;
  }

 private:
  std::optional<Term> resolve(const PatternTerm &pt, const Solution &bindings) const {
    if (const auto *t = std::get_if<Term>(&pt)) return *t;
    auto it = bindings.find(std::get<Variable>(pt).name);
    if (it == bindings.end()) return std::nullopt;
    return it->second;
  }

  // Binds `pt` to `value`; false on conflict with an earlier binding in the
  // same triple or with a VALUES restriction.
  bool bind(const PatternTerm &pt, const Term &value, Solution &bindings) const {
    const auto *var = std::get_if<Variable>(&pt);
    if (var == nullptr) return std::get<Term>(pt) == value;
    auto it = bindings.find(var->name);
    if (it != bindings.end()) return it->second == value;
    auto allowed = values_.find(var->name);
    if (allowed != values_.end() && allowed->second.count(value) == 0) return false;
    bindings.emplace(var->name, value);
    return true;
  }

  void search(std::vector<bool> &done, Solution &bindings, size_t remaining) {
    if (remaining == 0) {
      solutions_.push_back(bindings);
      return;
    }
    size_t best = pattern_.triples.size();
    size_t best_count = 0;
    for (size_t i = 0; i < pattern_.triples.size(); ++i) {
      if (done[i]) continue;
      const auto &tp = pattern_.triples[i];
      size_t c = kb_.count(resolve(tp.s, bindings), resolve(tp.p, bindings), resolve(tp.o, bindings));
      if (best == pattern_.triples.size() || c < best_count) {
        best = i;
        best_count = c;
      }
    }
    if (best_count == 0) return;
    const auto &tp = pattern_.triples[best];
    done[best] = true;
    for (const auto &t : kb_.match(resolve(tp.s, bindings), resolve(tp.p, bindings),
                                   resolve(tp.o, bindings))) {
      Solution next = bindings;
      if (bind(tp.s, t.s, next) && bind(tp.p, t.p, next) && bind(tp.o, t.o, next)) {
        search(done, next, remaining - 1);
      }
    }
    done[best] = false;
  }

  const KnowledgeBase &kb_;
  const GraphPattern &pattern_;
  std::map<std::string, std::set<Term>> values_;
  std::vector<Solution> solutions_;
};

}  // namespace

std::vector<Solution> eval_bgp(const KnowledgeBase &kb, const GraphPattern &pattern) {
  std::set<std::string> pattern_vars;
  for (const auto &tp : pattern.triples) {
    for (const PatternTerm *pt : {&tp.s, &tp.p, &tp.o}) {
      if (const auto *v = std::get_if<Variable>(pt)) pattern_vars.insert(v->name);
    }
  }
  for (const auto &[var, _] : pattern.values) {
    if (pattern_vars.count(var) == 0) {
      throw std::invalid_argument("VALUES variable ?" + var + " does not occur in the pattern");
    }
  }
  return BgpSolver(kb, pattern).solve();
}

lnn::TruthBounds ask(const KnowledgeBase &kb, const Triple &triple) {
  return kb.contains(triple) ? lnn::TruthBounds::True() : lnn::TruthBounds::Unknown();
}

bool isa_star(const KnowledgeBase &kb, const Term &sub, const Term &super) {
  return kb.isa_star(sub, super);
}

DomainRange domain_range(const KnowledgeBase &kb, const Term &property) {
  return {kb.domain(property), kb.range(property)};
}

}  // namespace nsqa::kb

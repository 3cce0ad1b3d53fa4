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

#include <gtest/gtest.h>

#include <random>

#include "nsqa/lnn/bounds.h"
#include "nsqa/lnn/network.h"
#include "nsqa/lnn/reasoner.h"
#include "testing.h"

namespace nsqa::lnn {
namespace {

using testing::K3;
kb::Term iri(const std::string &s) { return kb::Term::iri(s); }
logic::Atom atom(const std::string &p, logic::Arg s, logic::Arg o) {
  return {iri(p), std::move(s), std::move(o), false};
}

TEST(Bounds, Basics) {
  EXPECT_TRUE(TruthBounds::True().is_decided());
  EXPECT_TRUE(TruthBounds::Unknown().is_unknown());
  EXPECT_EQ(TruthBounds::Unknown().tightened(TruthBounds::True()), TruthBounds::True());
  EXPECT_TRUE(TruthBounds::True().tightened(TruthBounds::False()).is_contradiction());
  EXPECT_TRUE((TruthBounds{0.2, 0.7}).within(TruthBounds::Unknown()));
  EXPECT_FALSE(TruthBounds::Unknown().within(TruthBounds{0.2, 0.7}));
  EXPECT_EQ(clamp({-0.5, 1.5}), TruthBounds::Unknown());
  EXPECT_EQ(TruthBounds::True().str(), "[1,1]");
}

TEST(Network, TightenIsIntersectionAndTraced) {
  Network net;
  size_t p = net.add_predicate("p");
  net.set_root(p);
  Trace trace;
  EXPECT_TRUE(net.tighten(p, 0, {0.3, 1.0}, "given", &trace));
  EXPECT_FALSE(net.tighten(p, 0, {0.0, 1.0}, "given", &trace));
  EXPECT_EQ(net.value(p), (TruthBounds{0.3, 1.0}));
  ASSERT_EQ(trace.size(), 1u);
  EXPECT_EQ(trace.lines()[0], "STEP 1 | p | [0,1] → [0.3,1] | given");
  EXPECT_THROW(net.tighten(p, 0, {0.0, 0.1}, "given", &trace), ContradictionError);
}

TEST(Network, ModusTollens) {
  Network net;
  size_t a = net.add_predicate("a");
  size_t b = net.add_predicate("b");
  size_t imp = net.add_implies(a, b);
  net.set_root(imp);
  net.tighten(imp, 0, TruthBounds::True(), "axiom", nullptr);
  net.tighten(b, 0, TruthBounds::False(), "given", nullptr);
  Trace trace;
  net.infer(&trace);
  EXPECT_EQ(net.value(a), TruthBounds::False());
  EXPECT_TRUE(trace.contains("modus-tollens"));
}

TEST(Network, ModusPonensAndConjunctionElimination) {
  Network net;
  size_t a = net.add_predicate("a");
  size_t b = net.add_predicate("b");
  size_t c = net.add_predicate("c");
  size_t both = net.add_and({a, b});
  size_t imp = net.add_implies(both, c);
  net.set_root(imp);
  net.tighten(imp, 0, TruthBounds::True(), "axiom", nullptr);
  net.tighten(a, 0, TruthBounds::True(), "given", nullptr);
  net.tighten(b, 0, TruthBounds::True(), "given", nullptr);
  Trace trace;
  net.infer(&trace);
  EXPECT_EQ(net.value(c), TruthBounds::True());
  EXPECT_TRUE(trace.contains("modus-ponens"));

  Network n2;
  size_t x = n2.add_predicate("x");
  size_t y = n2.add_predicate("y");
  size_t and2 = n2.add_and({x, y});
  n2.set_root(and2);
  n2.tighten(and2, 0, TruthBounds::True(), "given", nullptr);
  Trace t2;
  n2.infer(&t2);
  EXPECT_EQ(n2.value(x), TruthBounds::True());
  EXPECT_TRUE(t2.contains("conjunction-elimination"));
}

TEST(Network, DisjunctiveSyllogism) {
  Network net;
  size_t a = net.add_predicate("a");
  size_t b = net.add_predicate("b");
  size_t o = net.add_or({a, b});
  net.set_root(o);
  net.tighten(o, 0, TruthBounds::True(), "given", nullptr);
  net.tighten(a, 0, TruthBounds::False(), "given", nullptr);
  Trace trace;
  net.infer(&trace);
  EXPECT_EQ(net.value(b), TruthBounds::True());
  EXPECT_TRUE(trace.contains("disjunctive-syllogism"));
}

TEST(Network, ContradictionSurfaces) {
  Network net;
  size_t a = net.add_predicate("a");
  size_t n = net.add_not(a);
  size_t both = net.add_and({a, n});
  net.set_root(both);
  net.tighten(both, 0, TruthBounds::True(), "given", nullptr);
  EXPECT_THROW(net.infer(), ContradictionError);
}

TEST(Network, BuildFromQuery) {
  logic::LogicQuery q;
  q.target = "z";
  q.atoms = {atom("dbo:starring", logic::var("x"), logic::var("z")),
             atom("dbo:country", logic::var("x"), iri("dbr:Spain"))};
  q.type_atoms = {{"x", iri("dbo:Film")}};
  Network net = build_network(q);
  const LnnNode &root = net.node(net.root());
  EXPECT_EQ(root.kind, NodeKind::Exists);
  EXPECT_EQ(root.vars, std::vector<std::string>{"x"});
  size_t leaves = 0;
  for (const auto &n : net.nodes()) leaves += n.kind == NodeKind::Predicate;
  EXPECT_EQ(leaves, 3u);

  const auto rows = compute_global_bindings(net, testing::toy().kb);
  EXPECT_FALSE(rows.empty());
  for (const auto &r : rows) {
    auto t = instantiate(q.atoms[1], r);
    ASSERT_TRUE(t);
    EXPECT_TRUE(testing::toy().kb.contains(*t));
  }
}

// Property: one upward pass from classical leaves reproduces the strong
// Kleene tables.
TEST(Network, UpwardMatchesKleene) {
  std::mt19937 rng(41);
  for (int round = 0; round < 2000; ++round) {
    testing::RandomFormula f = testing::random_formula(rng);
    std::vector<K3> v;
    for (size_t leaf : f.leaves) {
      v.push_back(testing::random_k3(rng));
      f.net.tighten(leaf, 0, testing::bounds_of(v.back()), "given", nullptr);
    }
    f.net.upward_pass();
    EXPECT_EQ(testing::k3_of(f.net.value(f.net.root())), f.eval(v)) << "round " << round;
  }
}

// Property: with the root also asserted, inference never widens any
// bounds and stops at a fixpoint.
TEST(Network, DownwardNeverWidens) {
  std::mt19937 rng(43);
  for (int round = 0; round < 2000; ++round) {
    testing::RandomFormula f = testing::random_formula(rng);
    for (size_t leaf : f.leaves) {
      if (rng() % 2) f.net.tighten(leaf, 0, testing::bounds_of(testing::random_k3(rng)), "given", nullptr);
    }
    try {
      f.net.tighten(f.net.root(), 0, testing::bounds_of(testing::random_k3(rng)), "given", nullptr);
      f.net.upward_pass();
    } catch (const ContradictionError &) {
      continue;
    }
    std::vector<TruthBounds> before;
    for (size_t id = 0; id < f.net.size(); ++id) before.push_back(f.net.value(id));
    try {
      f.net.downward_pass();
    } catch (const ContradictionError &) {
      continue;
    }
    for (size_t id = 0; id < f.net.size(); ++id) {
      ASSERT_TRUE(f.net.value(id).within(before[id])) << "round " << round << " node " << id;
    }
    try {
      f.net.infer();
    } catch (const ContradictionError &) {
      continue;
    }
    EXPECT_LT(f.net.last_iterations(), 100u);
    EXPECT_FALSE(f.net.upward_pass());
    EXPECT_FALSE(f.net.downward_pass());
  }
}

TEST(Reasoner, TypeConsistency) {
  const auto &kb = testing::toy().kb;
  logic::LogicQuery q;
  q.kind = logic::QueryKind::Ask;
  q.atoms = {atom("dbo:starring", iri("dbr:Neymar"), iri("dbr:Real_Madrid_C"))};
  TypeCheck check = check_type_consistency(q, kb);
  EXPECT_FALSE(check.keep);
  EXPECT_NE(std::find(check.reasons.begin(), check.reasons.end(),
                      "isa*(dbo:SoccerClub, dbo:Actor) = false"),
            check.reasons.end());
  q.atoms = {atom("dbo:club", iri("dbr:Neymar"), iri("dbr:Real_Madrid_C"))};
  EXPECT_TRUE(check_type_consistency(q, kb).keep);
}

TEST(Reasoner, HolonymFallbackFalse) {
  const auto &kb = testing::toy().kb;
  Trace trace;
  TruthBounds b = holonym_fallback(atom("dbo:birthPlace", iri("dbr:Michael_Jordan"), iri("dbr:Canada")),
                                   kb, ReasonerConfig{}, &trace);
  EXPECT_EQ(b, TruthBounds::False());
  EXPECT_TRUE(trace.contains("retrieve dbo:birthPlace(dbr:Michael_Jordan, ?o) -> dbr:Brooklyn"));
  EXPECT_TRUE(trace.contains("holonym dbr:Brooklyn dbo:country dbr:United_States"));
  EXPECT_TRUE(trace.contains("modus-tollens"));
}

TEST(Reasoner, HolonymFallbackTrueThroughContainment) {
  const auto &kb = testing::toy().kb;
  Trace trace;
  TruthBounds b = holonym_fallback(
      atom("dbo:birthPlace", iri("dbr:Michael_Jordan"), iri("dbr:United_States")), kb,
      ReasonerConfig{}, &trace);
  EXPECT_EQ(b, TruthBounds::True());
  // Unrelated retrieval stays unknown.
  EXPECT_TRUE(holonym_fallback(atom("dbo:birthPlace", iri("dbr:Tracy_Bond"), iri("dbr:Canada")), kb,
                               ReasonerConfig{}, nullptr)
                  .is_unknown());
}

TEST(Reasoner, GeographicReasoningCanBeDisabled) {
  const auto &kb = testing::toy().kb;
  logic::LogicQuery q;
  q.kind = logic::QueryKind::Ask;
  q.atoms = {atom("dbo:birthPlace", iri("dbr:Michael_Jordan"), iri("dbr:Canada"))};
  ReasonerConfig on;
  EXPECT_EQ(evaluate_query(q, kb, on).verdict(), "false");
  ReasonerConfig off;
  off.geographic_reasoning = false;
  AnswerSet a = evaluate_query(q, kb, off);
  EXPECT_EQ(a.verdict(), "unknown");
  EXPECT_EQ(a.verdict(true), "false");
}

TEST(Reasoner, EvaluateSkipsDiscardedHypotheses) {
  const auto &kb = testing::toy().kb;
  logic::LogicQuery bad;
  bad.kind = logic::QueryKind::Ask;
  bad.atoms = {atom("dbo:starring", iri("dbr:Neymar"), iri("dbr:Real_Madrid_C"))};
  logic::LogicQuery good = bad;
  good.atoms[0].predicate = iri("dbo:club");
  AnswerSet a = evaluate({bad, good}, kb, ReasonerConfig{});
  EXPECT_EQ(a.chosen_hypothesis, 1u);
  EXPECT_EQ(a.verdict(), "true");
  EXPECT_THROW(evaluate({bad}, kb, ReasonerConfig{}), AllHypothesesDiscarded);
}

TEST(Reasoner, SelectSortCount) {
  const auto &kb = testing::toy().kb;
  logic::LogicQuery q;
  q.target = "m";
  q.atoms = {atom("dbo:locatedInArea", logic::var("m"), iri("dbr:Italy")),
             atom("dbo:elevation", logic::var("m"), logic::var("elev"))};
  q.sort = logic::SortConstruct{"elev", logic::SortDirection::Asc, 2};
  AnswerSet a = evaluate_query(q, kb, ReasonerConfig{});
  EXPECT_EQ(a.answers, (std::vector<kb::Term>{iri("dbr:Monte_Cimone"), iri("dbr:Mount_Etna")}));

  logic::LogicQuery c;
  c.kind = logic::QueryKind::Count;
  c.target = "t";
  c.atoms = {atom("dbo:knownFor", iri("dbr:Albert_Einstein"), logic::var("t"))};
  c.count = logic::CountConstruct{"t"};
  EXPECT_EQ(evaluate_query(c, kb, ReasonerConfig{}).count, 4u);
}

}  // namespace
}  // namespace nsqa::lnn

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

#include "nsqa/amr/penman.h"
#include "nsqa/path/triples.h"
#include "testing.h"

namespace nsqa::path {
namespace {

std::vector<std::string> labels(const TripleSet &set) {
  std::vector<std::string> out;
  for (const auto &t : set.triples) out.push_back(t.str());
  return out;
}

TEST(Triples, StarringExample) {
  amr::Graph g = amr::parse_penman(testing::toy().question("q1").amr);
  TripleSet set = generate_triples(g, {"c", "p2"}, amr::QuestionMode::Inquisitive);
  EXPECT_EQ(set.focus, "z");
  EXPECT_FALSE(set.count_flag);
  EXPECT_EQ(labels(set),
            (std::vector<std::string>{"z star-01 x", "x mod c", "x produce-01 p2"}));
  EXPECT_EQ(set.triples[0].subject_role, "arg1");
  EXPECT_EQ(set.triples[0].object_role, "arg2");
  EXPECT_EQ(set.triples[2].subject_role, "arg1");
  EXPECT_EQ(set.triples[2].object_role, "arg0");
  EXPECT_EQ(set.triples[2].path_index, 1u);
  EXPECT_EQ(set.paths.size(), 2u);
}

TEST(Triples, CollapsesNonCoreChain) {
  amr::Graph g = amr::parse_penman(testing::toy().question("q2").amr);
  TripleSet set = generate_triples(g, {"c"}, amr::QuestionMode::Inquisitive);
  ASSERT_EQ(set.triples.size(), 1u);
  EXPECT_EQ(set.focus, "e");
  EXPECT_EQ(set.triples[0].relation_label, "location|pay-01|instrument");
  EXPECT_EQ(set.triples[0].segments,
            (std::vector<std::string>{"location", "pay-01", "instrument"}));
}

TEST(Triples, ImperativeDropsTheCommand) {
  amr::Graph g = amr::parse_penman(testing::toy().question("q3").amr);
  TripleSet set = generate_triples(g, {"p2"}, amr::QuestionMode::Imperative);
  EXPECT_EQ(set.focus, "p");
  EXPECT_FALSE(set.graph.has_node("l"));
  EXPECT_EQ(labels(set), std::vector<std::string>{"p child p2"});
}

TEST(Triples, QuantMarksCount) {
  amr::Graph g = amr::parse_penman(testing::toy().question("q4").amr);
  TripleSet set = generate_triples(g, {"p"}, amr::QuestionMode::Inquisitive);
  EXPECT_TRUE(set.count_flag);
  EXPECT_EQ(set.focus, "a");
  EXPECT_EQ(labels(set), (std::vector<std::string>{"a quant t", "t come-up-11 p"}));
}

TEST(Triples, YesNoWithTwoEntities) {
  amr::Graph g = amr::parse_penman(testing::toy().question("q6").amr);
  TripleSet set = generate_triples(g, {"p", "c"}, amr::QuestionMode::Interrogative);
  EXPECT_EQ(set.focus, "p");
  EXPECT_EQ(labels(set), std::vector<std::string>{"p bear-02|location c"});
  EXPECT_EQ(set.triples[0].subject_role, "arg1");
  EXPECT_EQ(set.triples[0].object_role, "");
}

TEST(Triples, ArtificialUnknownTakesFirstFreeArg) {
  amr::Graph g = amr::parse_penman(
      "(m / marry-01 :ARG1 (p / person :name (n / name :op1 \"James\" :op2 \"Bond\")))");
  TripleSet set = generate_triples(g, {"p"}, amr::QuestionMode::Inquisitive);
  EXPECT_TRUE(set.artificial_focus);
  EXPECT_EQ(set.graph.child("m", ":ARG0"), set.focus);
  ASSERT_EQ(set.triples.size(), 1u);
  EXPECT_EQ(set.triples[0].subject_role, "arg0");
  EXPECT_EQ(set.triples[0].object_role, "arg1");
}

TEST(Triples, NoFocusErrors) {
  amr::Graph g = amr::parse_penman("(c / country :name (n / name :op1 \"Spain\"))");
  EXPECT_THROW(generate_triples(g, {"c"}, amr::QuestionMode::Inquisitive), NoFocusError);
  amr::Graph h = amr::parse_penman("(l / list-01 :mode imperative)");
  EXPECT_THROW(generate_triples(h, {}, amr::QuestionMode::Imperative), NoFocusError);
}

// Property: on random graphs with a single amr-unknown the triples are
// the collapsed lexicographically-first shortest paths.
TEST(Triples, RandomGraphsMatchOracle) {
  std::mt19937 rng(21);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    amr::Graph g = testing::random_amr(rng, {.min_nodes = 2, .max_nodes = 10});
    const auto &nodes = g.nodes();
    const std::string unknown = nodes[rng() % nodes.size()].var;
    g.find(unknown)->concept_name = std::string(amr::kUnknownConcept);
    // The :mod neighbour with the smallest variable, if any, is the focus.
    std::string focus;
    for (const auto &e : g.edges()) {
      if (e.role != ":mod") continue;
      const std::string *o = e.source == unknown   ? &e.target
                             : e.target == unknown ? &e.source
                                                   : nullptr;
      if (o && (focus.empty() || *o < focus)) focus = *o;
    }
    if (focus.empty()) focus = unknown;
    std::vector<std::string> targets;
    for (const auto &n : nodes) {
      if (n.var != unknown && rng() % 3 == 0) targets.push_back(n.var);
    }
    TripleSet set = generate_triples(g, targets, amr::QuestionMode::Inquisitive);
    ASSERT_EQ(set.focus, focus);
    EXPECT_EQ(testing::as_oracle(set.triples), testing::oracle_triples(g, focus, targets))
        << amr::serialize_penman(g);
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

}  // namespace
}  // namespace nsqa::path

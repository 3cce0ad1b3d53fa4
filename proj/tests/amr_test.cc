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

#include "nsqa/amr/graph.h"
#include "nsqa/amr/path.h"
#include "nsqa/amr/penman.h"
#include "testing.h"

namespace nsqa::amr {
namespace {

constexpr const char *kStarring =
    "(s / star-01 :ARG1 (z / person :ARG0-of (a / act-01) :mod (u / amr-unknown)) "
    ":ARG2 (x / movie :mod (c / country :name (n / name :op1 \"Spain\")) "
    ":ARG1-of (p / produce-01 :ARG0 (p2 / person :name (n2 / name :op1 \"Benicio\" "
    ":op2 \"del\" :op3 \"Toro\")))))";

PenmanErrorKind error_kind(const std::string &text) {
  try {
    parse_penman(text);
  } catch (const PenmanError &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return PenmanErrorKind::Syntax;
}

TEST(Penman, ParsesNodesEdgesAndInversions) {
  Graph g = parse_penman(kStarring);
  EXPECT_EQ(g.root(), "s");
  EXPECT_EQ(g.nodes().size(), 10u);
  EXPECT_EQ(g.node("x").concept_name, "movie");
  // z :ARG0-of a is stored canonically as a :ARG0 z.
  EXPECT_EQ(g.child("a", ":ARG0"), "z");
  EXPECT_EQ(g.child("p", ":ARG1"), "x");
  EXPECT_EQ(name_of(g, "p2"), "Benicio del Toro");
  EXPECT_EQ(name_of(g, "c"), "Spain");
  EXPECT_FALSE(name_of(g, "z"));
  EXPECT_EQ(g.unknown_nodes(), std::vector<std::string>{"u"});
}

TEST(Penman, Reentrancy) {
  Graph g = parse_penman("(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))");
  EXPECT_EQ(g.nodes().size(), 3u);
  EXPECT_EQ(g.child("g", ":ARG0"), "b");
  // Forward references resolve too.
  Graph h = parse_penman("(w / want-01 :ARG1 (g / go-02 :ARG0 b) :ARG0 (b / boy))");
  EXPECT_TRUE(isomorphic(g, h));
}

TEST(Penman, ConsistOfIsNotAnInversion) {
  Graph g = parse_penman("(t / team :consist-of (p / person))");
  EXPECT_EQ(g.child("t", ":consist-of"), "p");
}

TEST(Penman, CommentsAndSentence) {
  Graph g = parse_penman("# ::snt Who is it?\n# other\n(a / amr-unknown)");
  EXPECT_EQ(g.sentence, "Who is it?");
  EXPECT_EQ(g.root(), "a");
}

TEST(Penman, Errors) {
  EXPECT_EQ(error_kind("(a / b :ARG0 (c / d)"), PenmanErrorKind::UnbalancedParens);
  EXPECT_EQ(error_kind("(a / b))"), PenmanErrorKind::UnbalancedParens);
  EXPECT_EQ(error_kind("(a / b :ARG0 (a / c))"), PenmanErrorKind::DuplicateVariableDefinition);
  EXPECT_EQ(error_kind("(a / b :ARG0 q)"), PenmanErrorKind::DanglingReentrancy);
  EXPECT_EQ(error_kind("(a / b :ARG0 (c / d :ARG1 a))"), PenmanErrorKind::CyclicGraph);
  EXPECT_EQ(error_kind("(a b)"), PenmanErrorKind::Syntax);
  EXPECT_EQ(error_kind(""), PenmanErrorKind::Syntax);
}

TEST(Penman, ErrorOffsetPointsIntoText) {
  const std::string text = "(a / b :ARG0 (a / c))";
  try {
    parse_penman(text);
    FAIL();
  } catch (const PenmanError &e) {
    EXPECT_LT(e.offset(), text.size());
    EXPECT_EQ(e.offset(), 14u);  // the second "a"
  }
}

TEST(Penman, QuotedStringsRoundTrip) {
  Graph g = parse_penman(R"((n / name :op1 "say \"hi\"" :op2 "a\\b"))");
  EXPECT_EQ(g.attribute("n", ":op1"), "say \"hi\"");
  EXPECT_EQ(g.attribute("n", ":op2"), "a\\b");
  EXPECT_TRUE(isomorphic(g, parse_penman(serialize_penman(g))));
}

TEST(Penman, RoundTripFixtures) {
  for (const auto &q : testing::toy().questions) {
    Graph g = parse_penman(q.amr);
    EXPECT_TRUE(isomorphic(g, parse_penman(serialize_penman(g)))) << q.id;
  }
}

TEST(Penman, RoundTripRandomGraphs) {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    Graph g = testing::random_amr(rng);
    ASSERT_TRUE(g.is_acyclic());
    const std::string text = serialize_penman(g);
    Graph back = parse_penman(text);
    ASSERT_TRUE(isomorphic(g, back)) << text;
    EXPECT_EQ(serialize_penman(back), text);
  }
}

TEST(Penman, SerializeAfterRemovingRootFlipsStrandedEdges) {
  Graph g = parse_penman("(l / list-01 :ARG1 (p / person :child-of (q / person)))");
  g.remove_node("l");
  g.set_root("p");
  Graph back = parse_penman(serialize_penman(g));
  EXPECT_TRUE(isomorphic(g, back));
}

TEST(Graph, QuestionMode) {
  EXPECT_EQ(detect_question_mode(parse_penman("(b / bear-02 :mode interrogative)")),
            QuestionMode::Interrogative);
  EXPECT_EQ(detect_question_mode(parse_penman("(l / list-01 :mode imperative)")),
            QuestionMode::Imperative);
  EXPECT_EQ(detect_question_mode(parse_penman(kStarring)), QuestionMode::Inquisitive);
}

TEST(Graph, FrameAndCoreRoles) {
  EXPECT_TRUE(is_frame_concept("star-01"));
  EXPECT_TRUE(is_frame_concept("come-up-11"));
  EXPECT_FALSE(is_frame_concept("movie"));
  EXPECT_FALSE(is_frame_concept("-01"));
  EXPECT_TRUE(is_core_role(":ARG0"));
  EXPECT_FALSE(is_core_role(":ARG0-of"));
  EXPECT_FALSE(is_core_role(":mod"));
}

TEST(Graph, RemoveNodeDropsIncidentEdges) {
  Graph g = parse_penman(kStarring);
  const size_t edges = g.edges().size();
  g.remove_node("x");
  EXPECT_FALSE(g.has_node("x"));
  EXPECT_EQ(g.edges().size(), edges - 3);
  EXPECT_THROW(g.node("x"), Error);
  EXPECT_EQ(g.fresh_var("u"), "u2");
}

TEST(Path, ShortestPathInExample) {
  Graph g = parse_penman(kStarring);
  EXPECT_EQ(shortest_path(g, "z", "c").str(), "z :ARG1-of s :ARG2 x :mod c");
  EXPECT_EQ(shortest_path(g, "z", "p2").str(), "z :ARG1-of s :ARG2 x :ARG1-of p :ARG0 p2");
  EXPECT_EQ(shortest_path(g, "z", "z").length(), 0u);
}

TEST(Path, Disconnected) {
  Graph g = parse_penman("(a / b :ARG0 (c / d))");
  g.add_node("e", "f");
  EXPECT_THROW(shortest_path(g, "a", "e"), NoPathError);
  EXPECT_THROW(shortest_path(g, "a", "zz"), NoPathError);
}

TEST(Path, MatchesSimplePathOracle) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = testing::random_amr(rng, {.max_nodes = 9});
    const auto &nodes = g.nodes();
    const std::string from = nodes[rng() % nodes.size()].var;
    const std::string to = nodes[rng() % nodes.size()].var;
    EXPECT_EQ(shortest_path(g, from, to), testing::oracle_shortest_path(g, from, to))
        << serialize_penman(g) << " " << from << " -> " << to;
  }
}

}  // namespace
}  // namespace nsqa::amr

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

#include <cstdio>
#include <fstream>

#include "nsqa/amr/penman.h"
#include "nsqa/linkers/entity.h"
#include "nsqa/linkers/lexicon.h"
#include "nsqa/linkers/relation.h"
#include "nsqa/path/triples.h"
#include "testing.h"

namespace nsqa::linkers {
namespace {

kb::Term iri(const std::string &s) { return kb::Term::iri(s); }

TEST(Lexicon, NormalizeMention) {
  EXPECT_EQ(normalize_mention("Benicio  del_Toro"), "benicio del toro");
  EXPECT_EQ(normalize_mention("Saint-Germain!"), "saint germain");
  EXPECT_EQ(normalize_mention("  "), "");
}

TEST(Lexicon, LoadRejectsBadRows) {
  const std::string path = ::testing::TempDir() + "/bad_lexicon.tsv";
  {
    std::ofstream out(path);
    out << "# comment\n\nSpain\tdbr:Spain\t1.0\nItaly\tdbr:Italy\n";
  }
  try {
    Lexicon::load(path, kb::PrefixTable::standard());
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find(":4"), std::string::npos) << e.what();
  }
  {
    std::ofstream out(path);
    out << "Spain\tdbr:Spain\t1.5\n";
  }
  EXPECT_THROW(Lexicon::load(path, kb::PrefixTable::standard()), Error);
  std::remove(path.c_str());
}

TEST(Lexicon, FixtureLoads) {
  const auto &res = testing::toy().resources;
  ASSERT_EQ(res.entities.lookup("Spain").size(), 1u);
  EXPECT_EQ(res.entities.lookup("SPAIN")[0].iri, iri("dbr:Spain"));
  ASSERT_NE(res.alignment.find("play-01.arg0.arg2"), nullptr);
  EXPECT_EQ(res.alignment.find("play-01.arg0.arg2")->size(), 2u);
  EXPECT_EQ(res.alignment.find("nothing"), nullptr);
}

TEST(EntityLinking, TokenJaccard) {
  EXPECT_DOUBLE_EQ(token_jaccard("a b", "a b"), 1.0);
  EXPECT_DOUBLE_EQ(token_jaccard("a b", "b c"), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(token_jaccard("", ""), 1.0);
  EXPECT_DOUBLE_EQ(token_jaccard("a", ""), 0.0);
}

TEST(EntityLinking, Singularize) {
  EXPECT_EQ(singularize("movies"), "movie");
  EXPECT_EQ(singularize("countries"), "country");
  EXPECT_EQ(singularize("actors"), "actor");
  EXPECT_EQ(singularize("class"), "class");
  EXPECT_EQ(singularize("genus"), "genus");
  EXPECT_EQ(singularize("analysis"), "analysis");
  EXPECT_EQ(singularize("series"), "series");
  EXPECT_EQ(singularize("gas"), "gas");
  EXPECT_EQ(singularize("movie"), "movie");
}

TEST(EntityLinking, ExactAndFuzzy) {
  Lexicon lex;
  lex.add("Benicio del Toro", iri("dbr:Benicio_del_Toro"), 1.0);
  lex.add("Real Madrid", iri("dbr:Real_Madrid_C"), 0.6);
  lex.add("Real Madrid", iri("dbr:Real_Madrid_CF"), 0.9);
  lex.add("Spain", iri("dbr:Spain"), 1.0);
  amr::Graph g = amr::parse_penman(
      "(a / and :op1 (p / person :name (n / name :op1 \"Benicio\" :op2 \"Del\" :op3 \"Toro\" "
      ":op4 \"Jr\")) :op2 (t / team :name (n2 / name :op1 \"Real\" :op2 \"Madrid\")) "
      ":op3 (c / country :name (n3 / name :op1 \"Atlantis\")))");
  Trace trace;
  auto links = link_entities(g, lex, 0.7, &trace);
  ASSERT_EQ(links.size(), 2u);
  EXPECT_EQ(links[0].node, "p");
  EXPECT_EQ(links[0].iri, iri("dbr:Benicio_del_Toro"));
  EXPECT_DOUBLE_EQ(links[0].score, 0.75);  // 3 of 4 tokens
  EXPECT_EQ(links[1].iri, iri("dbr:Real_Madrid_CF"));
  EXPECT_TRUE(trace.contains("unlinked mention c \"Atlantis\""));
  // Above the threshold nothing fuzzy links.
  EXPECT_EQ(link_entities(g, lex, 0.8).size(), 1u);
}

TEST(EntityLinking, TiesGoToSmallerIri) {
  Lexicon lex;
  lex.add("Paris", iri("dbr:Paris_b"), 0.5);
  lex.add("Paris", iri("dbr:Paris_a"), 0.5);
  amr::Graph g = amr::parse_penman("(c / city :name (n / name :op1 \"Paris\"))");
  EXPECT_EQ(link_entities(g, lex)[0].iri, iri("dbr:Paris_a"));
}

TEST(TypeLinking, PlainConceptsOnly) {
  Lexicon types;
  types.add("movie", iri("dbo:Film"), 1.0);
  types.add("person", iri("dbo:Person"), 1.0);
  types.add("country", iri("dbo:Country"), 1.0);
  amr::Graph g = amr::parse_penman(
      "(s / star-01 :ARG1 (z / persons) :ARG2 (x / movies :mod (c / country :name "
      "(n / name :op1 \"Spain\"))) :ARG0 (u / amr-unknown))");
  auto links = link_types(g, types);
  ASSERT_EQ(links.size(), 2u);
  EXPECT_EQ(links[0].node, "z");
  EXPECT_EQ(links[0].class_iri, iri("dbo:Person"));
  EXPECT_EQ(links[1].node, "x");
  EXPECT_EQ(links[1].class_iri, iri("dbo:Film"));
}

TEST(RelationScoring, TrigramDice) {
  EXPECT_DOUBLE_EQ(trigram_dice("star", "star"), 1.0);
  EXPECT_DOUBLE_EQ(trigram_dice("star", "starring"), 2.0 * 2 / (2 + 6));
  EXPECT_DOUBLE_EQ(trigram_dice("ab", "ab"), 1.0);
  EXPECT_DOUBLE_EQ(trigram_dice("ab", "abc"), 0.0);
  EXPECT_DOUBLE_EQ(trigram_dice("play", "club"), 0.0);
  EXPECT_EQ(strip_sense("star-01"), "star");
  EXPECT_EQ(strip_sense("movie"), "movie");
}

TEST(RelationScoring, WeightsValidate) {
  ScoringWeights w;
  EXPECT_NO_THROW(w.validate());
  w.align = 0.9;
  EXPECT_THROW(w.validate(), Error);
  w = {};
  w.boost = -0.1;
  EXPECT_THROW(w.validate(), Error);
}

path::CollapsedTriple triple(std::string label, std::vector<std::string> segments,
                             std::string sr = "", std::string orole = "") {
  path::CollapsedTriple t;
  t.subject = "s";
  t.object = "o";
  t.relation_label = std::move(label);
  t.segments = std::move(segments);
  t.subject_role = std::move(sr);
  t.object_role = std::move(orole);
  return t;
}

TEST(RelationScoring, AlignmentKeyOrder) {
  AlignmentTable table;
  table.add("star-01.arg1.arg2", iri("dbo:starring"), 1.0);
  table.add("star-01", iri("dbo:starring"), 0.3);
  table.add("location|pay-01|instrument", iri("dbo:currency"), 0.9);
  table.add("pay-01", iri("dbo:currency"), 0.2);
  table.add("location", iri("dbo:locatedInArea"), 0.5);
  EXPECT_DOUBLE_EQ(
      alignment_score(triple("star-01", {"star-01"}, "arg1", "arg2"), iri("dbo:starring"), table),
      1.0);
  // Without both roles the role key is skipped and the label is used.
  EXPECT_DOUBLE_EQ(
      alignment_score(triple("star-01", {"star-01"}, "arg1", ""), iri("dbo:starring"), table), 0.3);
  EXPECT_DOUBLE_EQ(alignment_score(triple("location|pay-01|instrument",
                                          {"location", "pay-01", "instrument"}),
                                   iri("dbo:currency"), table),
                   0.9);
  // Falls back to the best segment.
  EXPECT_DOUBLE_EQ(alignment_score(triple("location|pay-01|time", {"location", "pay-01", "time"}),
                                   iri("dbo:locatedInArea"), table),
                   0.5);
  EXPECT_DOUBLE_EQ(alignment_score(triple("poss", {"poss"}), iri("dbo:currency"), table), 0.0);
}

TEST(RelationScoring, BucketOnToyKb) {
  const auto &t = testing::toy();
  auto t1 = triple("play-01", {"play-01"}, "arg0", "arg2");
  TermRef s{"n", iri("dbr:Neymar")};
  TermRef o{"t", iri("dbr:Real_Madrid_C")};
  RelationBucket b = score_relation_candidates(t1, s, o, t.kb, t.resources.alignment);
  ASSERT_GE(b.candidates.size(), 2u);
  EXPECT_LE(b.candidates.size(), 10u);
  EXPECT_EQ(b.candidates[0].relation, iri("dbo:starring"));
  EXPECT_DOUBLE_EQ(b.candidates[0].weight, 0.4);
  EXPECT_EQ(b.candidates[1].relation, iri("dbo:club"));
  EXPECT_DOUBLE_EQ(b.candidates[1].boost, 1.0);
  EXPECT_NEAR(b.candidates[1].weight, 0.4 * 0.2 + 0.3, 1e-12);
  for (size_t i = 1; i < b.candidates.size(); ++i) {
    const auto &x = b.candidates[i - 1];
    const auto &y = b.candidates[i];
    EXPECT_TRUE(x.weight > y.weight || (x.weight == y.weight && x.relation < y.relation));
    EXPECT_GT(y.weight, 0.0);
  }
}

TEST(RelationScoring, EmptyBucketThrows) {
  const auto &t = testing::toy();
  auto t1 = triple("zzz", {"zzz"});
  RelationScoring scoring;
  scoring.weights = {1.0, 0.0, 0.0, 0.0};
  EXPECT_THROW(score_relation_candidates(t1, {"a", std::nullopt}, {"b", std::nullopt}, t.kb,
                                         t.resources.alignment, scoring),
               EmptyBucketError);
}

TEST(RelationScoring, PluggableScorers) {
  const auto &t = testing::toy();
  RelationScoring scoring;
  scoring.weights = {0.0, 1.0, 0.0, 0.0};
  scoring.neural = [](const path::CollapsedTriple &, const kb::Term &r) {
    return r.value() == "dbo:spouse" ? 2.0 : 0.0;  // clamped to 1
  };
  auto b = score_relation_candidates(triple("x", {"x"}), {"a", std::nullopt},
                                     {"b", std::nullopt}, t.kb, t.resources.alignment, scoring);
  ASSERT_EQ(b.candidates.size(), 1u);
  EXPECT_EQ(b.candidates[0].relation, iri("dbo:spouse"));
  EXPECT_DOUBLE_EQ(b.candidates[0].weight, 1.0);
}

}  // namespace
}  // namespace nsqa::linkers

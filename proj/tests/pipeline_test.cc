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

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

#include "nsqa/pipeline/config.h"
#include "nsqa/pipeline/dataset.h"
#include "nsqa/pipeline/metrics.h"
#include "nsqa/pipeline/pipeline.h"
#include "testing.h"

namespace nsqa::pipeline {
namespace {

PipelineResult run(const QuestionRecord &r) {
  const auto &t = testing::toy();
  return answer_question(r, t.kb, t.resources, t.config);
}

TEST(Config, FixtureResolvesRelativePaths) {
  const auto &c = testing::toy().config;
  EXPECT_EQ(c.kb, testing::data_path("toy_kb.nt"));
  EXPECT_EQ(c.top_k, 16u);
  EXPECT_DOUBLE_EQ(c.weights.align, 0.4);
  EXPECT_EQ(c.reasoner.holonym_relations.size(), 4u);
  EXPECT_TRUE(c.reasoner.holonym_relations[3].inverse);
}

TEST(Config, Rejects) {
  EXPECT_THROW(PipelineConfig::parse("{", "/tmp"), ConfigError);
  EXPECT_THROW(PipelineConfig::parse(R"({"weights": {"align": 0.9, "lexsim": 0.9}})", "/tmp"),
               ConfigError);
  EXPECT_THROW(PipelineConfig::parse(R"({"beam": 0})", "/tmp"), ConfigError);
  EXPECT_THROW(PipelineConfig::parse(
                   R"({"holonym": {"relations": [{"property": "dbo:x", "direction": "up"}]}})", "/tmp"),
               ConfigError);
  EXPECT_THROW(PipelineConfig::load("/nonexistent/config.json"), ConfigError);
}

TEST(Config, ResolutionOrder) {
  EXPECT_EQ(resolve_config_path(std::string("/a.json")), "/a.json");
  setenv("NSQA_CONFIG", "/b.json", 1);
  EXPECT_EQ(resolve_config_path(std::nullopt), "/b.json");
  unsetenv("NSQA_CONFIG");
  EXPECT_EQ(resolve_config_path(std::nullopt), default_config_path());
}

TEST(Dataset, ParseAndErrors) {
  auto records = parse_dataset(
      "{\"id\": \"a\", \"amr\": \"(x / y)\", \"gold_answers\": [\"dbr:X\"]}\n\n"
      "{\"id\": \"b\", \"amr\": \"(x / y)\"}\n");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(*records[0].gold_answers, std::vector<std::string>{"dbr:X"});
  EXPECT_FALSE(records[1].gold_answers);
  EXPECT_THROW(parse_dataset("{\"id\": \"a\"}\n"), DatasetError);
  EXPECT_THROW(parse_dataset("not json\n"), DatasetError);
  EXPECT_THROW(load_dataset("/nonexistent.jsonl"), DatasetError);
}

TEST(Dataset, ResolveQuestion) {
  auto r = resolve_question("(a / amr-unknown)", std::nullopt);
  EXPECT_EQ(r.amr, "(a / amr-unknown)");
  auto q = resolve_question(testing::data_path("questions.jsonl"), std::string("q3"));
  EXPECT_EQ(q.id, "q3");
  EXPECT_THROW(resolve_question(testing::data_path("questions.jsonl"), std::string("zz")),
               DatasetError);
}

TEST(Metrics, Conventions) {
  EXPECT_DOUBLE_EQ(score_question("a", {}, {}).f1, 1.0);
  EXPECT_DOUBLE_EQ(score_question("a", {"x"}, {}).f1, 0.0);
  EXPECT_DOUBLE_EQ(score_question("a", {}, {"x"}).f1, 0.0);
  auto s = score_question("a", {"x", "y"}, {"x"});
  EXPECT_DOUBLE_EQ(s.precision, 1.0);
  EXPECT_DOUBLE_EQ(s.recall, 0.5);
  EXPECT_DOUBLE_EQ(s.f1, 2.0 / 3.0);
}

TEST(Metrics, FixtureMacroF1) {
  std::ifstream in(testing::test_data_path("metrics_fixture.jsonl"));
  std::string line;
  std::vector<QuestionScore> scores;
  std::vector<nlohmann::json> rows;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    auto gold = j["gold"].get<std::set<std::string>>();
    auto sys = j["system"].get<std::set<std::string>>();
    scores.push_back(score_question(j["id"], gold, sys));
    rows.push_back(j);
  }
  ASSERT_EQ(scores.size(), 3u);
  // Aggregation sorts by id, whatever the input order.
  std::swap(scores[0], scores[2]);
  Metrics m = aggregate(scores);
  EXPECT_EQ(m.macro_f1, 0.5);
  EXPECT_EQ(m.macro_f1_qald, m.macro_f1);
  for (size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(m.per_question[i].id, rows[i]["id"]);
    EXPECT_NEAR(m.per_question[i].f1, rows[i]["f1"].get<double>(), 1e-12);
    EXPECT_NEAR(m.per_question[i].precision, rows[i]["precision"].get<double>(), 1e-12);
  }
}

TEST(Pipeline, AllFixtureQuestionsAnswerGold) {
  for (const auto &q : testing::toy().questions) {
    auto r = run(q);
    ASSERT_TRUE(r.ok()) << q.id << ": " << r.error;
    std::set<std::string> got(r.answers.begin(), r.answers.end());
    std::set<std::string> gold(q.gold_answers->begin(), q.gold_answers->end());
    EXPECT_EQ(got, gold) << q.id << "\n" << r.trace.str();
    if (q.gold_sparql) EXPECT_EQ(r.sparql, *q.gold_sparql) << q.id;
  }
}

TEST(Pipeline, ExtraQuestions) {
  for (const auto &q : load_dataset(testing::test_data_path("extra_questions.jsonl"))) {
    auto r = run(q);
    ASSERT_TRUE(r.ok()) << q.id << ": " << r.error;
    EXPECT_EQ(r.answers, *q.gold_answers) << q.id << "\n" << r.trace.str();
  }
}

TEST(Pipeline, NumericRelationSuppressesCount) {
  auto q = load_dataset(testing::test_data_path("extra_questions.jsonl"))[1];
  auto r = run(q);
  EXPECT_EQ(r.kind, logic::QueryKind::Select);
  EXPECT_TRUE(r.trace.contains("c-rule: relation is numeric, no count"));
  EXPECT_EQ(r.sparql, "SELECT DISTINCT ?p WHERE { dbr:Iraq dbo:populationTotal ?p . }");
}

TEST(Pipeline, ImperativeUsesKbEvidenceForDirection) {
  auto r = run(testing::toy().question("q3"));
  EXPECT_EQ(r.sparql,
            "SELECT DISTINCT ?p WHERE { dbr:Margaret_Thatcher dbo:child ?p . ?p rdf:type dbo:Person . }");
}

TEST(Pipeline, SuperlativeQuery) {
  auto r = run(testing::toy().question("q5"));
  EXPECT_EQ(r.sparql,
            "SELECT DISTINCT ?m ?elev WHERE { ?m rdf:type dbo:Mountain . ?m dbo:locatedInArea dbr:Italy . "
            "?m dbo:elevation ?elev . } ORDER BY DESC(?elev) LIMIT 1");
}

TEST(Pipeline, ErrorsAreReportedPerQuestion) {
  QuestionRecord nobody{"e1", "", "(p / person :name (n / name :op1 \"Nobody\"))", {}, {}};
  auto r = run(nobody);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.answers.empty());
  QuestionRecord broken{"e2", "", "(p / person", {}, {}};
  EXPECT_FALSE(run(broken).ok());
}

TEST(Pipeline, EvaluateDatasetNeedsGold) {
  const auto &t = testing::toy();
  std::vector<QuestionRecord> records = {t.question("q1")};
  records[0].gold_answers.reset();
  EXPECT_THROW(evaluate_dataset(records, t.kb, t.resources, t.config), MissingGoldError);
}

TEST(Pipeline, EvaluateDatasetReports) {
  const auto &t = testing::toy();
  auto run = evaluate_dataset(t.questions, t.kb, t.resources, t.config);
  EXPECT_EQ(run.metrics.macro_f1, 1.0);
  const std::string tsv = report_tsv(run, t.questions);
  EXPECT_TRUE(tsv.starts_with("id\tprecision\trecall\tf1\t"));
  EXPECT_NE(tsv.find("# macro_f1_qald\t1"), std::string::npos) << tsv;
  EXPECT_NE(report_table(run).find("F1-QALD"), std::string::npos);
}

TEST(Pipeline, BuildQueryOnly) {
  const auto &t = testing::toy();
  auto r = build_query(t.question("q8"), t.kb, t.resources, t.config);
  EXPECT_EQ(r.sparql, *t.question("q8").gold_sparql);
  EXPECT_TRUE(r.answers.empty());
}

}  // namespace
}  // namespace nsqa::pipeline

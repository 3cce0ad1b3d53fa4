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

#include "nsqa/pipeline/pipeline.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "nsqa/amr/penman.h"
#include "nsqa/linkers/entity.h"
#include "nsqa/linkers/relation.h"
#include "nsqa/logic/rules.h"
#include "nsqa/logic/sparql.h"
#include "nsqa/path/triples.h"

namespace nsqa::pipeline {
namespace {

struct Prepared {
  std::vector<logic::Hypothesis> hypotheses;
  std::vector<linkers::TypeLink> type_links;
  logic::QueryKind kind = logic::QueryKind::Select;
};

Prepared prepare(const QuestionRecord &record, const kb::KnowledgeBase &kb,
                 const Resources &res, const PipelineConfig &config, Trace &trace) {
  Prepared out;
  amr::Graph graph = amr::parse_penman(record.amr);
  const amr::QuestionMode mode = amr::detect_question_mode(graph);
  trace.add("mode: " + std::string(amr::to_string(mode)));

  const auto entities = linkers::link_entities(graph, res.entities, config.tau_e, &trace);
  if (entities.empty()) throw Error("no entity could be linked");
  out.type_links = linkers::link_types(graph, res.types);
  for (const auto &t : out.type_links) {
    trace.add("type " + t.node + " (" + graph.node(t.node).concept_name + ") -> " + t.class_iri.str());
  }

  std::map<std::string, kb::Term> linked;
  std::vector<std::string> entity_nodes;
  for (const auto &e : entities) {
    if (linked.emplace(e.node, e.iri).second) entity_nodes.push_back(e.node);
  }

  path::TripleSet triples = path::generate_triples(graph, entity_nodes, mode);
  trace.add("focus: " + triples.focus + (triples.artificial_focus ? " (artificial)" : ""));
  for (const auto &p : triples.paths) trace.add("path: " + p.str());

  const bool cardinal = logic::is_cardinal(triples.graph, triples.count_flag);
  std::string target = triples.focus;
  if (cardinal) {
    if (auto quantified = logic::drop_quant_triples(triples)) {
      target = *quantified;
      trace.add("c-rule: cardinal question, target " + target);
    }
  }
  for (const auto &t : triples.triples) trace.add("triple: " + t.str());
  if (triples.triples.empty()) throw Error("no triples between the focus and the entities");

  auto ref = [&](const std::string &var) {
    linkers::TermRef r{var, std::nullopt};
    if (auto it = linked.find(var); it != linked.end()) r.iri = it->second;
    return r;
  };
  linkers::RelationScoring scoring;
  scoring.weights = config.weights;
  std::vector<linkers::RelationBucket> buckets;
  std::vector<std::string> query_vars;
  auto note_var = [&](const linkers::TermRef &r) {
    if (!r.linked() && std::find(query_vars.begin(), query_vars.end(), r.var) == query_vars.end()) {
      query_vars.push_back(r.var);
    }
  };
  for (const auto &t : triples.triples) {
    auto bucket = linkers::score_relation_candidates(t, ref(t.subject), ref(t.object), kb,
                                                     res.alignment, scoring, buckets.size());
    note_var(bucket.subject);
    note_var(bucket.object);
    std::string line = "bucket " + std::to_string(buckets.size() + 1) + " (" + t.str() + "):";
    for (size_t j = 0; j < bucket.candidates.size() && j < 3; ++j) {
      line += " " + bucket.candidates[j].relation.str() + " " +
              format_number(bucket.candidates[j].weight, 3);
    }
    trace.add(line);
    buckets.push_back(std::move(bucket));
  }

  const bool ask = mode == amr::QuestionMode::Interrogative;
  logic::QueryTemplate tmpl;
  tmpl.target = ask ? std::string() : target;
  if (!ask && std::find(query_vars.begin(), query_vars.end(), target) == query_vars.end()) {
    throw Error("question target " + target + " is not part of any triple");
  }

  if (!ask) {
    if (auto s = logic::apply_s_rule(triples.graph, target, query_vars, res.attributes, &trace)) {
      tmpl.extra_atoms.push_back(s->atom);
      tmpl.sort = s->sort;
    }
    tmpl.count = logic::apply_c_rule(cardinal, target, buckets, kb);
    if (cardinal && !tmpl.count) trace.add("c-rule: relation is numeric, no count");
  }
  tmpl.kind = ask ? logic::QueryKind::Ask
                  : (tmpl.count ? logic::QueryKind::Count : logic::QueryKind::Select);
  out.kind = tmpl.kind;

  for (const auto &t : out.type_links) {
    if (std::find(query_vars.begin(), query_vars.end(), t.node) == query_vars.end()) continue;
    tmpl.var_types.emplace(t.node, t.class_iri);
    tmpl.type_atoms.push_back({t.node, t.class_iri});
  }

  out.hypotheses = logic::generate_hypotheses(buckets, tmpl, kb, config.beam);
  if (out.hypotheses.size() > config.top_k) out.hypotheses.resize(config.top_k);
  for (size_t i = 0; i < out.hypotheses.size(); ++i) {
    const auto &h = out.hypotheses[i];
    trace.add("candidate " + std::to_string(i + 1) + " score " + format_number(h.score, 4) + ": " +
              logic::to_sparql(h.query));
  }
  return out;
}

std::vector<std::string> render(const lnn::AnswerSet &a, const PipelineConfig &config) {
  switch (a.kind) {
    case logic::QueryKind::Ask:
      return {a.verdict(config.reasoner.closed_world_output)};
    case logic::QueryKind::Count:
      if (a.count) return {std::to_string(*a.count)};
      return {};
    case logic::QueryKind::Select:
      break;
  }
  std::vector<std::string> out;
  for (const auto &t : a.answers) out.push_back(t.str());
  return out;
}

std::string join(const std::vector<std::string> &items, const std::string &sep) {
  std::string out;
  for (const auto &s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

}  // namespace

PipelineResult build_query(const QuestionRecord &record, const kb::KnowledgeBase &kb,
                           const Resources &resources, const PipelineConfig &config) {
  PipelineResult result;
  result.id = record.id;
  try {
    Prepared p = prepare(record, kb, resources, config, result.trace);
    result.kind = p.kind;
    result.hypotheses = std::move(p.hypotheses);
    if (!result.hypotheses.empty()) result.sparql = logic::to_sparql(result.hypotheses[0].query);
  } catch (const std::exception &e) {
    result.error = e.what();
    result.trace.add(std::string("error: ") + e.what());
  }
  return result;
}

PipelineResult answer_question(const QuestionRecord &record, const kb::KnowledgeBase &kb,
                               const Resources &resources, const PipelineConfig &config) {
  PipelineResult result;
  result.id = record.id;
  try {
    Prepared p = prepare(record, kb, resources, config, result.trace);
    result.kind = p.kind;
    result.hypotheses = std::move(p.hypotheses);

    std::vector<logic::LogicQuery> queries;
    for (const auto &h : result.hypotheses) queries.push_back(h.query);
    lnn::AnswerSet answer = lnn::evaluate(queries, kb, config.reasoner);
    for (const auto &line : answer.trace.lines()) result.trace.add(line);
    answer.trace = Trace();

    const size_t chosen = answer.chosen_hypothesis.value_or(0);
    logic::LogicQuery final_query = queries.at(chosen);
    if (answer.kind == logic::QueryKind::Select && answer.chosen_hypothesis) {
      if (auto amended = logic::apply_t_rule(answer.answers, final_query, p.type_links, kb)) {
        result.trace.add("t-rule: answers are type-heterogeneous, adding rdf:type(?" +
                         amended->type_atoms.back().var + ", " +
                         amended->type_atoms.back().cls.str() + ")");
        lnn::AnswerSet again = lnn::evaluate_query(*amended, kb, config.reasoner, &result.trace);
        again.chosen_hypothesis = answer.chosen_hypothesis;
        answer = std::move(again);
        final_query = *amended;
      }
    }
    result.chosen_hypothesis = answer.chosen_hypothesis;
    result.sparql = logic::to_sparql(final_query);
    result.answers = render(answer, config);
    result.answer_set = std::move(answer);
    result.trace.add("answer: " + join(result.answers, ", "));
  } catch (const std::exception &e) {
    result.error = e.what();
    result.answers.clear();
    result.trace.add(std::string("error: ") + e.what());
  }
  return result;
}

EvaluationRun evaluate_dataset(const std::vector<QuestionRecord> &records,
                               const kb::KnowledgeBase &kb, const Resources &resources,
                               const PipelineConfig &config) {
  for (const auto &r : records) {
    if (!r.gold_answers) throw MissingGoldError(r.id);
  }
  EvaluationRun run;
  std::vector<QuestionScore> scores;
  for (const auto &r : records) {
    PipelineResult res = answer_question(r, kb, resources, config);
    const std::set<std::string> gold(r.gold_answers->begin(), r.gold_answers->end());
    const std::set<std::string> system(res.answers.begin(), res.answers.end());
    scores.push_back(score_question(r.id, gold, system));
    run.results.push_back(std::move(res));
  }
  std::sort(run.results.begin(), run.results.end(),
            [](const PipelineResult &a, const PipelineResult &b) { return a.id < b.id; });
  run.metrics = aggregate(std::move(scores));
  return run;
}

std::string report_tsv(const EvaluationRun &run, const std::vector<QuestionRecord> &records) {
  std::map<std::string, const QuestionRecord *> by_id;
  for (const auto &r : records) by_id[r.id] = &r;
  std::map<std::string, const PipelineResult *> results;
  for (const auto &r : run.results) results[r.id] = &r;

  std::string out = "id\tprecision\trecall\tf1\tanswers\tgold\tsparql\terror\n";
  for (const auto &s : run.metrics.per_question) {
    const PipelineResult *res = results.count(s.id) ? results[s.id] : nullptr;
    const QuestionRecord *rec = by_id.count(s.id) ? by_id[s.id] : nullptr;
    out += s.id + "\t" + format_number(s.precision) + "\t" + format_number(s.recall) + "\t" +
           format_number(s.f1) + "\t" + (res ? join(res->answers, " ") : "") + "\t" +
           (rec && rec->gold_answers ? join(*rec->gold_answers, " ") : "") + "\t" +
           (res ? res->sparql : "") + "\t" + (res ? res->error : "") + "\n";
  }
  out += "# macro_precision\t" + format_number(run.metrics.macro_precision) + "\n";
  out += "# macro_recall\t" + format_number(run.metrics.macro_recall) + "\n";
  out += "# macro_f1\t" + format_number(run.metrics.macro_f1) + "\n";
  out += "# macro_f1_qald\t" + format_number(run.metrics.macro_f1_qald) + "\n";
  return out;
}

std::string report_table(const EvaluationRun &run) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %9s %9s %9s\n", "id", "P", "R", "F1");
  out += line;
  for (const auto &s : run.metrics.per_question) {
    std::snprintf(line, sizeof line, "%-12s %9.4f %9.4f %9.4f\n", s.id.c_str(), s.precision,
                  s.recall, s.f1);
    out += line;
  }
  std::snprintf(line, sizeof line, "%-12s %9.4f %9.4f %9.4f\n", "macro", run.metrics.macro_precision,
                run.metrics.macro_recall, run.metrics.macro_f1);
  out += line;
  std::snprintf(line, sizeof line, "%-12s %29.4f\n", "F1-QALD", run.metrics.macro_f1_qald);
  out += line;
  return out;
}

}  // namespace nsqa::pipeline

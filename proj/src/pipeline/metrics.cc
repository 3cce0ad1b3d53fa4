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

#include "nsqa/pipeline/metrics.h"

#include <algorithm>

namespace nsqa::pipeline {

QuestionScore score_question(const std::string &id, const std::set<std::string> &gold,
                             const std::set<std::string> &system) {
  QuestionScore s;
  s.id = id;
  if (gold.empty() && system.empty()) {
    s.precision = s.recall = s.f1 = 1.0;
    return s;
  }
  if (gold.empty() || system.empty()) return s;
  size_t hit = 0;
  for (const auto &a : system) hit += gold.count(a);
  s.precision = static_cast<double>(hit) / static_cast<double>(system.size());
  s.recall = static_cast<double>(hit) / static_cast<double>(gold.size());
  if (s.precision + s.recall > 0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

Metrics aggregate(std::vector<QuestionScore> scores) {
  Metrics m;
  std::sort(scores.begin(), scores.end(),
            [](const QuestionScore &a, const QuestionScore &b) { return a.id < b.id; });
  m.per_question = std::move(scores);
  if (m.per_question.empty()) return m;
  // Summing in id order keeps the result independent of input order.
  for (const auto &s : m.per_question) {
    m.macro_precision += s.precision;
    m.macro_recall += s.recall;
    m.macro_f1 += s.f1;
  }
  const double n = static_cast<double>(m.per_question.size());
  m.macro_precision /= n;
  m.macro_recall /= n;
  m.macro_f1 /= n;
  m.macro_f1_qald = m.macro_f1;
  return m;
}

}  // namespace nsqa::pipeline

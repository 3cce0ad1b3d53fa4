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

#include "nsqa/linkers/entity.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace nsqa::linkers {
namespace {

std::set<std::string> tokens(std::string_view text) {
  std::set<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.insert(tok);
  return out;
}

// Higher score wins; ties go to the smaller IRI.
bool better(double score, const kb::Term &iri, double best_score, const kb::Term &best_iri) {
  if (score != best_score) return score > best_score;
  return iri < best_iri;
}

}  // namespace

double token_jaccard(std::string_view a, std::string_view b) {
  const auto ta = tokens(a);
  const auto tb = tokens(b);
  if (ta.empty() && tb.empty()) return 1.0;
  size_t common = 0;
  for (const auto &t : ta) common += tb.count(t);
  return static_cast<double>(common) / static_cast<double>(ta.size() + tb.size() - common);
}

std::string singularize(std::string_view word) {
  static const std::set<std::string, std::less<>> kKeep = {
      "news", "series", "species", "physics", "mathematics", "politics", "athletics", "chess"};
  std::string w(word);
  if (kKeep.count(w) != 0 || w.size() <= 3 || w.back() != 's') return w;
  if (w.ends_with("ss") || w.ends_with("us") || w.ends_with("is")) return w;
  // Singulars that themselves end in "-ie".
  static const std::set<std::string, std::less<>> kIe = {
      "movie", "cookie", "zombie", "rookie", "selfie", "calorie", "prairie", "pie", "tie", "lie"};
  if (w.ends_with("ies") && kIe.count(w.substr(0, w.size() - 1)) == 0) {
    return w.substr(0, w.size() - 3) + "y";
  }
  w.pop_back();
  return w;
}

std::vector<EntityLink> link_entities(const amr::Graph &graph, const Lexicon &lexicon,
                                      double threshold, Trace *trace) {
  std::vector<EntityLink> links;
  for (const auto &node : graph.nodes()) {
    auto mention = amr::name_of(graph, node.var);
    if (!mention) continue;
    const std::string key = normalize_mention(*mention);

    bool found = false;
    EntityLink best{node.var, *mention, {}, 0.0};
    for (const auto &entry : lexicon.lookup(key)) {
      if (!found || better(entry.score, entry.iri, best.score, best.iri)) {
        best.iri = entry.iri;
        best.score = entry.score;
        found = true;
      }
    }
    if (!found) {
      for (const auto &[surface, entry] : lexicon.entries()) {
        const double j = token_jaccard(key, surface);
        if (j < threshold) continue;
        const double score = entry.score * j;
        if (!found || better(score, entry.iri, best.score, best.iri)) {
          best.iri = entry.iri;
          best.score = score;
          found = true;
        }
      }
    }
    if (found) {
      trace_add(trace, "link " + node.var + " \"" + *mention + "\" -> " + best.iri.str() +
                           " (" + format_number(best.score, 3) + ")");
      links.push_back(std::move(best));
    } else {
      trace_add(trace, "unlinked mention " + node.var + " \"" + *mention + "\"");
    }
  }
  return links;
}

std::vector<TypeLink> link_types(const amr::Graph &graph, const Lexicon &type_lexicon) {
  std::vector<TypeLink> links;
  for (const auto &node : graph.nodes()) {
    if (amr::is_frame_concept(node.concept_name) || node.concept_name == amr::kUnknownConcept ||
        node.concept_name == "name" || graph.child(node.var, ":name")) {
      continue;
    }
    auto entries = type_lexicon.lookup(singularize(node.concept_name));
    if (entries.empty()) entries = type_lexicon.lookup(node.concept_name);
    if (entries.empty()) continue;
    auto best = std::min_element(entries.begin(), entries.end(), [](const auto &a, const auto &b) {
      return better(a.score, a.iri, b.score, b.iri);
    });
    links.push_back({node.var, best->iri, best->score});
  }
  return links;
}

}  // namespace nsqa::linkers

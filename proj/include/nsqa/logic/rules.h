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

// Rewrite rules applied while turning triples into logic: superlatives
// (sort), cardinality questions (count), answer-type homogeneity (type
// constraint), plus atom orientation against domain/range declarations.

#ifndef NSQA_LOGIC_RULES_H_
#define NSQA_LOGIC_RULES_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsqa/amr/graph.h"
#include "nsqa/common.h"
#include "nsqa/kb/store.h"
#include "nsqa/linkers/entity.h"
#include "nsqa/linkers/relation.h"
#include "nsqa/logic/query.h"
#include "nsqa/path/triples.h"

namespace nsqa::logic {

struct AttributeEntry {
  kb::Term property;
  SortDirection direction = SortDirection::Desc;
};

// Gradable attribute lemma -> numeric property and sort direction
// ("high" -> dbo:elevation, desc). TSV: `attribute \t IRI \t asc|desc`.
class AttributeLexicon {
 public:
  static AttributeLexicon load(const std::string &path, const kb::PrefixTable &prefixes);

  void add(std::string attribute, kb::Term property, SortDirection direction);
  const AttributeEntry *find(const std::string &attribute) const;

 private:
  std::map<std::string, AttributeEntry> entries_;
};

class UnknownAttributeError : public Error {
 public:
  using Error::Error;
};

struct SRuleResult {
  Atom atom;  // property(?subject, ?quantity)
  SortConstruct sort;
};

// Superlative handling on have-degree-91 with :ARG3 "most". The property
// is attached to the :ARG1 variable when it is one of `query_vars`, else
// to `target`. `query_vars` also keeps the new variable name fresh.
// Comparatives ("more") are reported in the trace and yield nothing.
std::optional<SRuleResult> apply_s_rule(const amr::Graph &graph, const std::string &target,
                                        const std::vector<std::string> &query_vars,
                                        const AttributeLexicon &lexicon, Trace *trace = nullptr);

// Answer-type heuristic: cardinal when the unknown hangs off :quant or the
// root is have-quant-91.
bool is_cardinal(const amr::Graph &graph, bool count_flag);

// Removes the focus-side :quant triples; returns the quantified node,
// which becomes the query target.
std::optional<std::string> drop_quant_triples(path::TripleSet &triples);

// Count(target) unless the target's best relation already yields a
// number (numeric domain or range).
std::optional<CountConstruct> apply_c_rule(bool cardinal, const std::string &target,
                                           const std::vector<linkers::RelationBucket> &buckets,
                                           const kb::KnowledgeBase &kb);

// Most specific asserted types of `t`: those with no strict subclass
// among the other asserted types.
std::vector<kb::Term> minimal_types(const kb::Term &t, const kb::KnowledgeBase &kb);

// When the target is untyped and the answers differ in their most
// specific types, returns the query with a type atom for the target: the
// target's TypeLink class if any, else the majority type.
std::optional<LogicQuery> apply_t_rule(const std::vector<kb::Term> &answers,
                                       const LogicQuery &query,
                                       const std::vector<linkers::TypeLink> &type_links,
                                       const kb::KnowledgeBase &kb);

// Variable -> linked class, used for orientation.
using VarTypes = std::map<std::string, kb::Term>;

// 2 when the endpoint provably fits `declared`, 1 when nothing rules it
// out, 0 when it cannot fit.
int position_compatibility(const linkers::TermRef &end, const std::optional<kb::Term> &declared,
                           const VarTypes &var_types, const kb::KnowledgeBase &kb);

// Builds relation(subject, object) or relation(object, subject),
// whichever fits domain/range better; ties go to the orientation with KB
// evidence for a linked endpoint, then to the path direction.
Atom orient_atom(const kb::Term &relation, const linkers::TermRef &subject,
                 const linkers::TermRef &object, const VarTypes &var_types,
                 const kb::KnowledgeBase &kb);

}  // namespace nsqa::logic

#endif  // NSQA_LOGIC_RULES_H_

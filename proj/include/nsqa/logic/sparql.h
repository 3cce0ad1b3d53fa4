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

#ifndef NSQA_LOGIC_SPARQL_H_
#define NSQA_LOGIC_SPARQL_H_

#include <string>

#include "nsqa/kb/term.h"
#include "nsqa/logic/query.h"

namespace nsqa::logic {

// Term in SPARQL syntax; reserved characters in prefixed local names are
// backslash-escaped: dbr:Che_(2008_film) -> dbr:Che_\(2008_film\).
std::string sparql_term(const kb::Term &term);

// Single-line query text, e.g.
//   SELECT DISTINCT ?z ?x WHERE { ?x rdf:type dbo:Film . ... }
// Atoms touching a constant come first, then the rest, each group in
// bucket order. A type atom is written just before the first atom that
// has its variable as subject, or at the end.
std::string to_sparql(const LogicQuery &query);

// to_sparql preceded by one PREFIX line per prefix table entry.
std::string to_sparql_document(const LogicQuery &query, const kb::PrefixTable &prefixes);

}  // namespace nsqa::logic

#endif  // NSQA_LOGIC_SPARQL_H_

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

#ifndef NSQA_KB_NTRIPLES_H_
#define NSQA_KB_NTRIPLES_H_

#include <string>
#include <string_view>
#include <vector>

#include "nsqa/kb/store.h"
#include "nsqa/kb/term.h"

namespace nsqa::kb {

struct LoadStats {
  size_t lines = 0;
  size_t triples = 0;     // distinct triples in the store
  size_t duplicates = 0;  // repeated lines dropped
};

// N-Triples subset: one `<s> <p> <o> .` per line, where the object may be a
// literal ("x", "x"@en, "x"^^<dt>); blank lines and '#' comments are
// skipped. IRIs are compacted with `prefixes`. Throws KbError
// (MalformedLine) with the 1-based line number.
std::vector<Triple> parse_ntriples(std::string_view text, const PrefixTable &prefixes);

KnowledgeBase load_ntriples(const std::string &path, const PrefixTable &prefixes,
                            LoadStats *stats = nullptr);

}  // namespace nsqa::kb

#endif  // NSQA_KB_NTRIPLES_H_

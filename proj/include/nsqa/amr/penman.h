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

// Reader and writer for the PENMAN subset used by the question fixtures:
//
//   node  := '(' var '/' concept { role value } ')'
//   value := node | '"' literal '"' | token
//
// A bare token that names a variable defined anywhere in the graph is a
// reentrancy; a bare token shaped like a variable (letter + digits) that is
// never defined is a dangling reentrancy; anything else is an unquoted
// constant such as `interrogative` or `-`. Roles ending in "-of" are
// inverted into canonical direction. Lines starting with '#' are comments;
// "# ::snt <text>" sets the sentence.

#ifndef NSQA_AMR_PENMAN_H_
#define NSQA_AMR_PENMAN_H_

#include <string>
#include <string_view>

#include "nsqa/amr/graph.h"

namespace nsqa::amr {

enum class PenmanErrorKind {
  UnbalancedParens,
  DuplicateVariableDefinition,
  DanglingReentrancy,
  Syntax,
  CyclicGraph,
};

std::string_view to_string(PenmanErrorKind kind);

class PenmanError : public Error {
 public:
  PenmanError(PenmanErrorKind kind, size_t offset, const std::string &detail);

  PenmanErrorKind kind() const { return kind_; }
  // Byte offset into the parsed text.
  size_t offset() const { return offset_; }

 private:
  PenmanErrorKind kind_;
  size_t offset_;
};

Graph parse_penman(std::string_view text);

// Single-line PENMAN. Each node is defined at its first visit in a
// depth-first walk from the root; later visits emit the bare variable.
std::string serialize_penman(const Graph &graph);

}  // namespace nsqa::amr

#endif  // NSQA_AMR_PENMAN_H_

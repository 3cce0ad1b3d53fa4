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

#ifndef NSQA_COMMON_H_
#define NSQA_COMMON_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nsqa {

// Base class for every error raised by the pipeline stages. Stage-specific
// subclasses live next to the code that throws them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered log of reasoning and pipeline events. Stages append one line per
// event; the pipeline keeps the whole log with each result.
class Trace {
 public:
  void add(std::string line) { lines_.push_back(std::move(line)); }

  const std::vector<std::string> &lines() const { return lines_; }
  bool empty() const { return lines_.empty(); }
  size_t size() const { return lines_.size(); }

  // True when some line contains `needle`.
  bool contains(std::string_view needle) const;

  std::string str() const;

 private:
  std::vector<std::string> lines_;
};

// Appends to `trace` when it is non-null.
inline void trace_add(Trace *trace, std::string line) {
  if (trace != nullptr) trace->add(std::move(line));
}

// Formats a double with the shortest representation that round-trips
// through the fixed-precision printers used in reports ("0.5", "1", "0.333").
std::string format_number(double value, int precision = 6);

}  // namespace nsqa

#endif  // NSQA_COMMON_H_

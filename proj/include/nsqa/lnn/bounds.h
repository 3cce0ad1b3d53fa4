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

#ifndef NSQA_LNN_BOUNDS_H_
#define NSQA_LNN_BOUNDS_H_

#include <string>

namespace nsqa::lnn {

// Interval [lower, upper] on the truth value of a statement. [1,1] is true,
// [0,0] false, [0,1] unknown (open world). lower > upper is a contradiction;
// it is representable so that it can be detected after tightening.
struct TruthBounds {
  double lower = 0.0;
  double upper = 1.0;

  static constexpr TruthBounds True() { return {1.0, 1.0}; }
  static constexpr TruthBounds False() { return {0.0, 0.0}; }
  static constexpr TruthBounds Unknown() { return {0.0, 1.0}; }

  bool is_true() const { return lower >= 1.0 && upper >= 1.0; }
  bool is_false() const { return upper <= 0.0 && lower <= 0.0; }
  bool is_unknown() const { return lower <= 0.0 && upper >= 1.0; }
  bool is_contradiction() const { return lower > upper; }
  // True or false, i.e. a point interval at 0 or 1.
  bool is_decided() const { return is_true() || is_false(); }

  // Intersection; may produce a contradiction.
  TruthBounds tightened(const TruthBounds &other) const;
  // this ⊆ other (both consistent).
  bool within(const TruthBounds &other) const;

  std::string str() const;

  bool operator==(const TruthBounds &) const = default;
};

TruthBounds clamp(TruthBounds b);

}  // namespace nsqa::lnn

#endif  // NSQA_LNN_BOUNDS_H_

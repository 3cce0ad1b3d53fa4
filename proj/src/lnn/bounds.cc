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

#include "nsqa/lnn/bounds.h"

#include <algorithm>

#include "nsqa/common.h"

namespace nsqa::lnn {

TruthBounds TruthBounds::tightened(const TruthBounds &other) const {
  return {std::max(lower, other.lower), std::min(upper, other.upper)};
}

bool TruthBounds::within(const TruthBounds &other) const {
  return lower >= other.lower && upper <= other.upper;
}

std::string TruthBounds::str() const {
  return "[" + format_number(lower, 3) + "," + format_number(upper, 3) + "]";
}

TruthBounds clamp(TruthBounds b) {
  b.lower = std::clamp(b.lower, 0.0, 1.0);
  b.upper = std::clamp(b.upper, 0.0, 1.0);
  return b;
}

}  // namespace nsqa::lnn

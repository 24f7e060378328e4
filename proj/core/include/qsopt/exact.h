// Copyright 2026 The qsopt Authors.
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
// Brute-force ground truth by exhaustive enumeration.

#ifndef QSOPT_EXACT_H_
#define QSOPT_EXACT_H_

#include <vector>

#include "qsopt/oracle.h"

namespace qsopt {

struct ExactResult {
  double value = 0.0;
  // Every member attaining value (exact double equality), in enumeration
  // order sorted by bitmask-lexicographic set order.
  std::vector<SubsetBits> optimizers;
};

ExactResult ExactOptimize(const SetFunction& f, Direction direction,
                          const IntervalLattice& within,
                          int cap = kDefaultEnumerationCap);
inline ExactResult ExactOptimize(const SetFunction& f, Direction direction,
                                 int cap = kDefaultEnumerationCap) {
  return ExactOptimize(f, direction, IntervalLattice::Full(f.ground_size()),
                       cap);
}

// All X with no strictly improving single flip, in increasing bitmask order.
std::vector<SubsetBits> EnumerateLocalOptima(const SetFunction& f,
                                             Direction kind,
                                             int cap = kDefaultEnumerationCap);

// True iff some S_A in argmin_{S <= A} F and S_B in argmin_{S <= B} F have
// S_A <= S_B. Requires A <= B.
bool NestedArgminCheck(const SetFunction& f, const SubsetBits& a,
                       const SubsetBits& b, int cap = kDefaultEnumerationCap);

}  // namespace qsopt

#endif  // QSOPT_EXACT_H_

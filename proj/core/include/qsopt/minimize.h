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
// Lattice-reduction minimization (UQSFMin).
//
// From a start set X_0 the algorithm repeats, with both scans evaluated
// against the frozen working set of the current iteration:
//   U_t = { u not in X_t : F(u | X_t) < 0 },      Y_t = X_t | U_t
//   D_t = { d in X_t     : F(d | Y_t - d) > 0 },  X_{t+1} = Y_t - D_t
// until U_t and D_t are both empty. Run from the empty set it yields Q+, from
// the ground set S+; for a quasi-submodular F every local (hence global)
// minimum lies in [Q+, S+], and both endpoints are local minima.

#ifndef QSOPT_MINIMIZE_H_
#define QSOPT_MINIMIZE_H_

#include <cstdint>
#include <vector>

#include "qsopt/oracle.h"

namespace qsopt {

struct MinIteration {
  int t = 0;
  SubsetBits added;    // U_t
  SubsetBits removed;  // D_t
  double value = 0.0;  // F(X_t)
  // Oracle cost so far (evaluations + 2 per marginal query), including this
  // iteration's scans.
  std::int64_t eval_calls = 0;
};

struct MinTrace {
  SubsetBits start;
  SubsetBits result;
  // One record per scan; the last one has U_t = D_t = {}.
  std::vector<MinIteration> iterations;

  int iteration_count() const { return static_cast<int>(iterations.size()); }
  std::int64_t eval_calls() const {
    return iterations.empty() ? 0 : iterations.back().eval_calls;
  }
};

struct MinResult {
  SubsetBits result;
  MinTrace trace;
};

// Throws InvariantViolation if more than n + 1 scans are needed.
MinResult Uqsfmin(const SetFunction& f, const SubsetBits& start);

struct MinLatticeResult {
  IntervalLattice lattice;  // [Q+, S+]
  MinTrace from_empty;
  MinTrace from_full;
};

// Runs Uqsfmin from {} and from N. Throws InvariantViolation if Q+ is not a
// subset of S+.
MinLatticeResult MinLattice(const SetFunction& f);

}  // namespace qsopt

#endif  // QSOPT_MINIMIZE_H_

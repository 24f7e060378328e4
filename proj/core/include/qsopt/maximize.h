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
// Crossover lattice reduction for maximization (UQSFMax), and its use as a
// prefilter in front of another maximizer.
//
// Starting from [X_0, Y_0] = [{}, N], each iteration scans the free elements
// Y_t - X_t against the frozen pair (X_t, Y_t):
//   U_t = { u : F(u | Y_t - u) > 0 },  X_{t+1} = X_t | U_t
//   D_t = { d : F(d | X_t) < 0 },      Y_{t+1} = Y_t - D_t
// and stops when neither endpoint moves. For quasi-submodular F the lattice
// stays non-empty, shrinks monotonically, and keeps every local and global
// maximum. The endpoints themselves need not be local maxima.

#ifndef QSOPT_MAXIMIZE_H_
#define QSOPT_MAXIMIZE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qsopt/baselines.h"
#include "qsopt/oracle.h"

namespace qsopt {

struct MaxIteration {
  int t = 0;
  SubsetBits added;    // U_t
  SubsetBits removed;  // D_t
  double fx = 0.0;     // F(X_t)
  double fy = 0.0;     // F(Y_t)
  std::int64_t eval_calls = 0;
};

struct MaxTrace {
  std::vector<MaxIteration> iterations;
  // Informational only; computed outside the counted oracle.
  bool lower_is_local_max = false;
  bool upper_is_local_max = false;

  int iteration_count() const { return static_cast<int>(iterations.size()); }
  std::int64_t eval_calls() const {
    return iterations.empty() ? 0 : iterations.back().eval_calls;
  }
};

struct MaxResult {
  IntervalLattice lattice;  // [X+, Y+]
  MaxTrace trace;
};

// Throws InvariantViolation if U_t and D_t intersect or more than n + 1 scans
// are needed.
MaxResult Uqsfmax(const SetFunction& f);

// G(T) = F(fixed | T) over the free elements of a lattice, relabelled 1..m in
// increasing global-id order. Cursors forward to the wrapped function's
// cursor, so fast marginals survive the restriction.
class RestrictedFunction : public SetFunction {
 public:
  RestrictedFunction(const SetFunction& f, const IntervalLattice& lattice);

  int ground_size() const override { return static_cast<int>(free_.size()); }
  double Evaluate(const SubsetBits& local) const override;
  std::string name() const override { return f_.name() + "|restricted"; }
  bool has_fast_marginals() const override { return f_.has_fast_marginals(); }
  std::unique_ptr<MarginalCursor> NewCursor(
      const SubsetBits& start) const override;

  SubsetBits ToGlobal(const SubsetBits& local) const;
  int global_id(int local_id) const { return free_[local_id - 1]; }

 private:
  const SetFunction& f_;
  SubsetBits fixed_;
  std::vector<int> free_;
};

using Maximizer = std::function<BaselineResult(const SetFunction&)>;

struct PrefixResult {
  SubsetBits set;
  double value = 0.0;
  IntervalLattice lattice;
  MaxTrace trace;
  // Result of the inner maximizer mapped back to global ids; empty when the
  // lattice was a point and the inner run was skipped.
  std::optional<BaselineResult> inner;
  std::int64_t eval_calls = 0;
};

// Runs Uqsfmax, fixes X+ in and N - Y+ out, maximizes the restriction to the
// free elements with inner, and returns the better of that and F(X+).
PrefixResult UPrefix(const SetFunction& f, const Maximizer& inner);

}  // namespace qsopt

#endif  // QSOPT_MAXIMIZE_H_

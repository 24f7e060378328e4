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
#include "qsopt/minimize.h"

#include <stdexcept>

#include "qsopt/errors.h"

namespace qsopt {

MinResult Uqsfmin(const SetFunction& f, const SubsetBits& start) {
  const int n = f.ground_size();
  if (start.capacity() != n) {
    throw std::invalid_argument("uqsfmin: start set capacity " +
                                std::to_string(start.capacity()) +
                                " != n = " + std::to_string(n));
  }
  CountingOracle counted(f);
  MinTrace trace;
  trace.start = start;

  auto cursor = counted.NewCursor(start);
  for (int t = 0;; ++t) {
    if (t > n + 1) {
      throw InvariantViolation("uqsfmin: no fixpoint after " +
                               std::to_string(n + 2) + " iterations");
    }
    const SubsetBits x = cursor->set();
    MinIteration record;
    record.t = t;
    record.value = counted.Evaluate(x);

    SubsetBits added(n);
    for (int id = 1; id <= n; ++id) {
      if (!x.Contains(id) && cursor->Gain(id) < 0.0) added.Add(id);
    }
    added.ForEach([&](int id) { cursor->Add(id); });  // cursor at Y_t

    SubsetBits removed(n);
    x.ForEach([&](int id) {
      if (cursor->DropGain(id) > 0.0) removed.Add(id);
    });
    removed.ForEach([&](int id) { cursor->Remove(id); });  // X_{t+1}

    record.added = added;
    record.removed = removed;
    record.eval_calls = counted.eval_equivalents();
    trace.iterations.push_back(std::move(record));

    if (added.IsEmpty() && removed.IsEmpty()) break;
  }
  trace.result = cursor->set();
  return {trace.result, std::move(trace)};
}

MinLatticeResult MinLattice(const SetFunction& f) {
  const int n = f.ground_size();
  MinResult up = Uqsfmin(f, SubsetBits::Empty(n));
  MinResult down = Uqsfmin(f, SubsetBits::Full(n));
  if (!up.result.IsSubsetOf(down.result)) {
    throw InvariantViolation("min lattice is empty: Q+ = " +
                             up.result.ToString() + " is not a subset of S+ = " +
                             down.result.ToString());
  }
  return {IntervalLattice(up.result, down.result), std::move(up.trace),
          std::move(down.trace)};
}

}  // namespace qsopt

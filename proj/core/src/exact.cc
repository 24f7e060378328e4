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
#include "qsopt/exact.h"

#include <algorithm>
#include <stdexcept>

#include "qsopt/errors.h"
#include "qsopt/functions.h"

namespace qsopt {
namespace {

bool SetLess(const SubsetBits& x, const SubsetBits& y) {
  // Compare as binary numbers, highest id most significant.
  for (int id = x.capacity(); id >= 1; --id) {
    const bool a = x.Contains(id);
    const bool b = y.Contains(id);
    if (a != b) return b;
  }
  return false;
}

}  // namespace

ExactResult ExactOptimize(const SetFunction& f, Direction direction,
                          const IntervalLattice& within, int cap) {
  if (within.capacity() != f.ground_size()) {
    throw std::invalid_argument("exact: lattice capacity mismatch");
  }
  ExactResult best;
  bool first = true;
  ForEachInLattice(
      within,
      [&](const SubsetBits& s) {
        const double v = f.Evaluate(s);
        const bool better =
            direction == Direction::kMin ? v < best.value : v > best.value;
        if (first || better) {
          best.value = v;
          best.optimizers.clear();
          best.optimizers.push_back(s);
          first = false;
        } else if (v == best.value) {
          best.optimizers.push_back(s);
        }
      },
      cap);
  std::sort(best.optimizers.begin(), best.optimizers.end(), SetLess);
  return best;
}

std::vector<SubsetBits> EnumerateLocalOptima(const SetFunction& f,
                                             Direction kind, int cap) {
  const int n = f.ground_size();
  if (n > cap) {
    throw CapExceeded("local optima: n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  }
  const std::vector<double> table = Tabulate(f, std::max(cap, n));
  std::vector<SubsetBits> out;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    bool local = true;
    for (int i = 0; i < n && local; ++i) {
      const double other = table[mask ^ (std::uint64_t{1} << i)];
      local = kind == Direction::kMin ? other >= table[mask]
                                      : other <= table[mask];
    }
    if (local) out.push_back(SubsetBits::FromMask(n, mask));
  }
  return out;
}

bool NestedArgminCheck(const SetFunction& f, const SubsetBits& a,
                       const SubsetBits& b, int cap) {
  if (!a.IsSubsetOf(b)) {
    throw std::invalid_argument("nested argmin: A = " + a.ToString() +
                                " is not a subset of B = " + b.ToString());
  }
  const int n = f.ground_size();
  const ExactResult in_a =
      ExactOptimize(f, Direction::kMin, IntervalLattice(SubsetBits(n), a), cap);
  const ExactResult in_b =
      ExactOptimize(f, Direction::kMin, IntervalLattice(SubsetBits(n), b), cap);
  for (const SubsetBits& sa : in_a.optimizers) {
    for (const SubsetBits& sb : in_b.optimizers) {
      if (sa.IsSubsetOf(sb)) return true;
    }
  }
  return false;
}

}  // namespace qsopt

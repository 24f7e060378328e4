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
// Maximization comparators: deterministic and randomized double greedy,
// best-of-random-orders double greedy ("rp"), randomized local search
// ("rls") and best-of-trials randomized double greedy ("rg").
//
// Randomized runs derive trial k's generator as Rng(seed, k), k = 1, 2, ...,
// so every result is a pure function of (F, parameters, seed).

#ifndef QSOPT_BASELINES_H_
#define QSOPT_BASELINES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qsopt/oracle.h"

namespace qsopt {

inline constexpr int kDefaultTrials = 10;
inline constexpr int kDefaultRestarts = 10;

struct BaselineResult {
  SubsetBits set;
  double value = 0.0;  // F(set) as evaluated
  std::int64_t oracle_calls = 0;
  std::uint64_t seed = 0;
};

// One pass over order with S1 = {} and S2 = N. Deterministic mode keeps i
// (S1 += i) iff F(i | S1) + F(i | S2 - i) >= 0, otherwise drops it (S2 -= i).
// Randomized mode keeps i with probability a / (a + b), a = max(F(i|S1), 0),
// b = max(-F(i|S2 - i), 0), and keeps it when a + b = 0.
BaselineResult DoubleGreedy(const SetFunction& f, const std::vector<int>& order,
                            bool randomized, std::uint64_t seed = 0);

// Best of `trials` deterministic double-greedy runs over random orders.
BaselineResult RandomPermutationGreedy(const SetFunction& f, int trials,
                                       std::uint64_t seed);
// Best over `restarts` steepest-ascent 1-flip hill climbs from uniformly
// random starts; each climb ends at a local maximum.
BaselineResult RandomizedLocalSearch(const SetFunction& f, int restarts,
                                     std::uint64_t seed);
// Hill climb from a given start.
BaselineResult LocalSearchFrom(const SetFunction& f, const SubsetBits& start);
// Best of `trials` randomized double-greedy runs in id order.
BaselineResult RandomizedBidirectionalGreedy(const SetFunction& f, int trials,
                                             std::uint64_t seed);

}  // namespace qsopt

#endif  // QSOPT_BASELINES_H_

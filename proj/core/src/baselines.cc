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
#include "qsopt/baselines.h"

#include <numeric>
#include <stdexcept>

#include "qsopt/rng.h"

namespace qsopt {
namespace {

void CheckPermutation(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("double greedy: order has " +
                                std::to_string(order.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int id : order) {
    if (id < 1 || id > n || seen[static_cast<std::size_t>(id)]) {
      throw std::invalid_argument(
          "double greedy: order is not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(id)] = true;
  }
}

void CheckCount(int count, const char* what) {
  if (count < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

BaselineResult Climb(const SetFunction& f, CountingOracle& counted,
                     SubsetBits start) {
  const int n = f.ground_size();
  auto cursor = counted.NewCursor(start);
  while (true) {
    int best_id = 0;
    double best_gain = 0.0;
    for (int id = 1; id <= n; ++id) {
      const double gain = cursor->set().Contains(id) ? -cursor->DropGain(id)
                                                     : cursor->Gain(id);
      if (gain > best_gain) {
        best_gain = gain;
        best_id = id;
      }
    }
    if (best_id == 0) break;
    if (cursor->set().Contains(best_id)) {
      cursor->Remove(best_id);
    } else {
      cursor->Add(best_id);
    }
  }
  BaselineResult result;
  result.set = cursor->set();
  result.value = counted.Evaluate(result.set);
  return result;
}

}  // namespace

BaselineResult DoubleGreedy(const SetFunction& f, const std::vector<int>& order,
                            bool randomized, std::uint64_t seed) {
  const int n = f.ground_size();
  CheckPermutation(order, n);
  CountingOracle counted(f);
  auto low = counted.NewCursor(SubsetBits::Empty(n));
  auto high = counted.NewCursor(SubsetBits::Full(n));
  Rng coin(seed);
  for (int id : order) {
    const double gain_low = low->Gain(id);
    const double gain_high = high->DropGain(id);  // F(i | S2 - i)
    bool keep;
    if (randomized) {
      const double a = std::max(gain_low, 0.0);
      const double b = std::max(-gain_high, 0.0);
      keep = (a + b == 0.0) || coin.Bernoulli(a / (a + b));
    } else {
      keep = gain_low + gain_high >= 0.0;
    }
    if (keep) {
      low->Add(id);
    } else {
      high->Remove(id);
    }
  }
  BaselineResult result;
  result.set = low->set();
  result.value = counted.Evaluate(result.set);
  result.oracle_calls = counted.eval_equivalents();
  result.seed = seed;
  return result;
}

BaselineResult RandomPermutationGreedy(const SetFunction& f, int trials,
                                       std::uint64_t seed) {
  CheckCount(trials, "rp trials");
  BaselineResult best;
  std::int64_t calls = 0;
  for (int k = 1; k <= trials; ++k) {
    Rng rng(seed, static_cast<std::uint64_t>(k));
    BaselineResult r =
        DoubleGreedy(f, rng.Permutation(f.ground_size()), false, 0);
    calls += r.oracle_calls;
    if (k == 1 || r.value > best.value) best = std::move(r);
  }
  best.oracle_calls = calls;
  best.seed = seed;
  return best;
}

BaselineResult LocalSearchFrom(const SetFunction& f, const SubsetBits& start) {
  CountingOracle counted(f);
  BaselineResult r = Climb(f, counted, start);
  r.oracle_calls = counted.eval_equivalents();
  return r;
}

BaselineResult RandomizedLocalSearch(const SetFunction& f, int restarts,
                                     std::uint64_t seed) {
  CheckCount(restarts, "rls restarts");
  const int n = f.ground_size();
  CountingOracle counted(f);
  BaselineResult best;
  for (int k = 1; k <= restarts; ++k) {
    Rng rng(seed, static_cast<std::uint64_t>(k));
    SubsetBits start(n);
    for (int id = 1; id <= n; ++id) {
      if (rng.Bernoulli(0.5)) start.Add(id);
    }
    BaselineResult r = Climb(f, counted, std::move(start));
    if (k == 1 || r.value > best.value) best = std::move(r);
  }
  best.oracle_calls = counted.eval_equivalents();
  best.seed = seed;
  return best;
}

BaselineResult RandomizedBidirectionalGreedy(const SetFunction& f, int trials,
                                             std::uint64_t seed) {
  CheckCount(trials, "rg trials");
  std::vector<int> order(static_cast<std::size_t>(f.ground_size()));
  std::iota(order.begin(), order.end(), 1);
  BaselineResult best;
  std::int64_t calls = 0;
  for (int k = 1; k <= trials; ++k) {
    BaselineResult r =
        DoubleGreedy(f, order, true, DeriveSeed(seed, static_cast<std::uint64_t>(k)));
    calls += r.oracle_calls;
    if (k == 1 || r.value > best.value) best = std::move(r);
  }
  best.oracle_calls = calls;
  best.seed = seed;
  return best;
}

}  // namespace qsopt

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
#include "qsopt/rng.h"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace qsopt {

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed;
  const std::uint64_t a = SplitMix64(state);
  state = a ^ (stream * 0xd1b54a32d192ed03ULL);
  return SplitMix64(state);
}

double Rng::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::Uniform(double lo, double hi) {
  return lo + (hi - lo) * Uniform01();
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::Below(0)");
  // 2^64 mod bound; values below it would bias the low residues.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = engine_();
  while (x < threshold) x = engine_();
  return x % bound;
}

std::int64_t Rng::IntInRange(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::IntInRange: hi < lo");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(Below(span));
}

std::vector<double> Rng::UniformVector(std::size_t count, double lo,
                                       double hi) {
  std::vector<double> out(count);
  for (double& v : out) v = Uniform(lo, hi);
  return out;
}

std::vector<int> Rng::Permutation(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(Below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(j)]);
  }
  return order;
}

}  // namespace qsopt

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
// Portable seeded randomness.
//
// Every random draw in the library goes through Rng so that instances and
// baseline runs are reproducible across platforms and standard libraries:
// the engine is std::mt19937_64 (whose output sequence is fixed by the
// standard) and all distributions are implemented here rather than with
// <random>'s implementation-defined distribution objects.
//
// Stream splitting: a generator for stream s under seed S is seeded with
// DeriveSeed(S, s), a SplitMix64 mix of the two words. Instance generators
// use stream 1 for their first parameter array, 2 for the second, and so on;
// randomized baselines use stream k for trial k.

#ifndef QSOPT_RNG_H_
#define QSOPT_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace qsopt {

// One SplitMix64 step; advances state.
std::uint64_t SplitMix64(std::uint64_t& state);
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(DeriveSeed(seed, stream)) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double Uniform01();
  double Uniform(double lo, double hi);
  // Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform integer in [lo, hi].
  std::int64_t IntInRange(std::int64_t lo, std::int64_t hi);
  bool Bernoulli(double p) { return Uniform01() < p; }

  std::vector<double> UniformVector(std::size_t count, double lo, double hi);
  // Uniformly random ordering of 1..n (Fisher-Yates).
  std::vector<int> Permutation(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qsopt

#endif  // QSOPT_RNG_H_

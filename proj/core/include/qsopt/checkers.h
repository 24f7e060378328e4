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
// Exhaustive property checkers with counterexample witnesses.
//
// Each checker tabulates F once (2^n evaluations) and then works on bitmasks.
// Enumeration order is canonical (first set by increasing bitmask, then the
// second set by increasing bitmask) and the first violation found is the
// witness, so witnesses are deterministic.

#ifndef QSOPT_CHECKERS_H_
#define QSOPT_CHECKERS_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsopt/oracle.h"

namespace qsopt {

inline constexpr int kSubmodularCap = 14;
inline constexpr int kQsbCap = 12;
inline constexpr int kSsbcCap = 14;
inline constexpr int kWeakMarginalCap = 14;

// Violations of the submodular inequality smaller than this are ignored.
inline constexpr double kSubmodularSlack = 1e-12;

struct Witness {
  // Which implication failed, e.g. "submodular", "qsb-weak", "ssbc-strict".
  std::string condition;
  // (X, Y) for submodular / qsb, (A, B) for ssbc / weak-marginal.
  SubsetBits first;
  SubsetBits second;
  // The element i for ssbc / weak-marginal; 0 when unused.
  int element = 0;
  // submodular, qsb: F(X), F(Y), F(X & Y), F(X | Y).
  // ssbc:            F(A), F(B), F(A + i), F(B + i).
  // weak-marginal:   F(A), F(A + i), F(B), F(B + i).
  std::array<double, 4> values{};
};

struct PropertyVerdict {
  bool holds = true;
  std::optional<Witness> witness;

  std::string Describe() const;
};

// Diminishing returns F(i | A) >= F(i | B) for all A <= B <= N - i, reported
// in the pairwise form F(X) + F(Y) >= F(X & Y) + F(X | Y) with X = A + i,
// Y = B.
PropertyVerdict IsSubmodular(const SetFunction& f);
// Both implications of
//   F(X & Y) >= F(X)  =>  F(Y) >= F(X | Y)
//   F(X & Y) >  F(X)  =>  F(Y) >  F(X | Y)
// over all ordered pairs (X, Y).
PropertyVerdict IsQuasiSubmodular(const SetFunction& f);
// Single sub-crossing: for all A <= B, i not in B,
//   F(A) >= F(B)  =>  F(A + i) >= F(B + i)   (and strictly).
PropertyVerdict SatisfiesSsbc(const SetFunction& f);
// F(i | A) <= 0 => F(i | B) <= 0 and F(i | A) < 0 => F(i | B) < 0.
PropertyVerdict SatisfiesWeakMarginal(const SetFunction& f);

// Same checks on a value table (index = bitmask) of length 2^n.
PropertyVerdict IsSubmodular(const std::vector<double>& table);
PropertyVerdict IsQuasiSubmodular(const std::vector<double>& table);
PropertyVerdict SatisfiesSsbc(const std::vector<double>& table);
PropertyVerdict SatisfiesWeakMarginal(const std::vector<double>& table);

// No single-element flip strictly improves F(X) (uses n + 1 evaluations).
bool IsLocalMin(const SetFunction& f, const SubsetBits& x);
bool IsLocalMax(const SetFunction& f, const SubsetBits& x);

}  // namespace qsopt

#endif  // QSOPT_CHECKERS_H_

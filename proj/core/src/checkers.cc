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
#include "qsopt/checkers.h"

#include <cstdint>
#include <sstream>

#include "qsopt/errors.h"
#include "qsopt/functions.h"

namespace qsopt {
namespace {

using Mask = std::uint64_t;

int TableSize(const std::vector<double>& table, int cap, const char* what) {
  const std::size_t size = table.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    throw std::invalid_argument(std::string(what) +
                                ": table length must be 2^n, n >= 1");
  }
  int n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  }
  return n;
}

std::vector<double> TabulateCapped(const SetFunction& f, int cap,
                                   const char* what) {
  if (f.ground_size() > cap) {
    throw CapExceeded(std::string(what) + ": n = " +
                      std::to_string(f.ground_size()) + " exceeds cap " +
                      std::to_string(cap));
  }
  return Tabulate(f, cap);
}

PropertyVerdict Violation(int n, std::string condition, Mask first,
                          Mask second, int element,
                          std::array<double, 4> values) {
  PropertyVerdict v;
  v.holds = false;
  v.witness = Witness{std::move(condition), SubsetBits::FromMask(n, first),
                      SubsetBits::FromMask(n, second), element, values};
  return v;
}

// Calls visit(a, b) for every pair A <= B <= universe, A by increasing mask,
// B by increasing mask. Returns early when visit returns false.
template <typename Visit>
bool ForEachNestedPair(Mask universe, Visit&& visit) {
  for (Mask a = 0;; a = (a - universe) & universe) {
    const Mask rest = universe & ~a;
    // Supersets of a inside universe, in increasing order.
    for (Mask extra = 0;; extra = (extra - rest) & rest) {
      if (!visit(a, a | extra)) return false;
      if (extra == rest) break;
    }
    if (a == universe) break;
  }
  return true;
}

}  // namespace

std::string PropertyVerdict::Describe() const {
  if (holds) return "holds";
  std::ostringstream out;
  out.precision(17);
  const Witness& w = *witness;
  out << "violated (" << w.condition << "): ";
  if (w.condition == "submodular" || w.condition.rfind("qsb", 0) == 0) {
    out << "X=" << w.first.ToString() << " Y=" << w.second.ToString()
        << " F(X)=" << w.values[0] << " F(Y)=" << w.values[1]
        << " F(X&Y)=" << w.values[2] << " F(X|Y)=" << w.values[3];
  } else if (w.condition.rfind("ssbc", 0) == 0) {
    out << "A=" << w.first.ToString() << " B=" << w.second.ToString()
        << " i=" << w.element << " F(A)=" << w.values[0]
        << " F(B)=" << w.values[1] << " F(A+i)=" << w.values[2]
        << " F(B+i)=" << w.values[3];
  } else {
    out << "A=" << w.first.ToString() << " B=" << w.second.ToString()
        << " i=" << w.element << " F(i|A)=" << w.values[1] - w.values[0]
        << " F(i|B)=" << w.values[3] - w.values[2];
  }
  return out.str();
}

PropertyVerdict IsSubmodular(const std::vector<double>& f) {
  const int n = TableSize(f, kSubmodularCap, "is_submodular");
  const Mask full = (Mask{1} << n) - 1;
  for (Mask x = 0; x <= full; ++x) {
    for (int i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(x & bit)) continue;
      const Mask a = x & ~bit;
      const Mask rest = full & ~x;
      // y = a | extra with extra avoiding i, in increasing order.
      for (Mask extra = 0;; extra = (extra - rest) & rest) {
        const Mask y = a | extra;
        const double lhs = f[x] + f[y];
        const double rhs = f[x & y] + f[x | y];
        if (lhs < rhs - kSubmodularSlack) {
          return Violation(n, "submodular", x, y, i + 1,
                           {f[x], f[y], f[x & y], f[x | y]});
        }
        if (extra == rest) break;
      }
    }
  }
  return {};
}

PropertyVerdict IsQuasiSubmodular(const std::vector<double>& f) {
  const int n = TableSize(f, kQsbCap, "is_quasi_submodular");
  const Mask full = (Mask{1} << n) - 1;
  for (Mask x = 0; x <= full; ++x) {
    for (Mask y = 0; y <= full; ++y) {
      const double meet = f[x & y];
      const double join = f[x | y];
      if (meet >= f[x] && !(f[y] >= join)) {
        return Violation(n, "qsb-weak", x, y, 0, {f[x], f[y], meet, join});
      }
      if (meet > f[x] && !(f[y] > join)) {
        return Violation(n, "qsb-strict", x, y, 0, {f[x], f[y], meet, join});
      }
    }
  }
  return {};
}

PropertyVerdict SatisfiesSsbc(const std::vector<double>& f) {
  const int n = TableSize(f, kSsbcCap, "satisfies_ssbc");
  const Mask full = (Mask{1} << n) - 1;
  PropertyVerdict verdict;
  ForEachNestedPair(full, [&](Mask a, Mask b) {
    for (int i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if (b & bit) continue;
      const double fa = f[a], fb = f[b], fai = f[a | bit], fbi = f[b | bit];
      if (fa >= fb && !(fai >= fbi)) {
        verdict = Violation(n, "ssbc-weak", a, b, i + 1, {fa, fb, fai, fbi});
        return false;
      }
      if (fa > fb && !(fai > fbi)) {
        verdict = Violation(n, "ssbc-strict", a, b, i + 1, {fa, fb, fai, fbi});
        return false;
      }
    }
    return true;
  });
  return verdict;
}

PropertyVerdict SatisfiesWeakMarginal(const std::vector<double>& f) {
  const int n = TableSize(f, kWeakMarginalCap, "satisfies_weak_marginal");
  const Mask full = (Mask{1} << n) - 1;
  PropertyVerdict verdict;
  ForEachNestedPair(full, [&](Mask a, Mask b) {
    for (int i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if (b & bit) continue;
      const double gain_a = f[a | bit] - f[a];
      const double gain_b = f[b | bit] - f[b];
      const std::array<double, 4> values{f[a], f[a | bit], f[b], f[b | bit]};
      if (gain_a <= 0.0 && !(gain_b <= 0.0)) {
        verdict = Violation(n, "weak-marginal", a, b, i + 1, values);
        return false;
      }
      if (gain_a < 0.0 && !(gain_b < 0.0)) {
        verdict = Violation(n, "weak-marginal-strict", a, b, i + 1, values);
        return false;
      }
    }
    return true;
  });
  return verdict;
}

PropertyVerdict IsSubmodular(const SetFunction& f) {
  return IsSubmodular(TabulateCapped(f, kSubmodularCap, "is_submodular"));
}

PropertyVerdict IsQuasiSubmodular(const SetFunction& f) {
  return IsQuasiSubmodular(TabulateCapped(f, kQsbCap, "is_quasi_submodular"));
}

PropertyVerdict SatisfiesSsbc(const SetFunction& f) {
  return SatisfiesSsbc(TabulateCapped(f, kSsbcCap, "satisfies_ssbc"));
}

PropertyVerdict SatisfiesWeakMarginal(const SetFunction& f) {
  return SatisfiesWeakMarginal(
      TabulateCapped(f, kWeakMarginalCap, "satisfies_weak_marginal"));
}

bool IsLocalMin(const SetFunction& f, const SubsetBits& x) {
  const double fx = f.Evaluate(x);
  for (int id = 1; id <= f.ground_size(); ++id) {
    const SubsetBits flipped = x.Contains(id) ? x.Without(id) : x.With(id);
    if (f.Evaluate(flipped) < fx) return false;
  }
  return true;
}

bool IsLocalMax(const SetFunction& f, const SubsetBits& x) {
  const double fx = f.Evaluate(x);
  for (int id = 1; id <= f.ground_size(); ++id) {
    const SubsetBits flipped = x.Contains(id) ? x.Without(id) : x.With(id);
    if (f.Evaluate(flipped) > fx) return false;
  }
  return true;
}

}  // namespace qsopt

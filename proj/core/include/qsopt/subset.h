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

// Ground-set, subset and set-interval-lattice primitives.
//
// Elements are identified by 1-based ids 1..n at every interface; storage is
// 0-based internally.

#ifndef QSOPT_SUBSET_H_
#define QSOPT_SUBSET_H_

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qsopt {

// Largest number of free elements enumerate-style routines accept by default
// (2^25 ~ 33M sets).
inline constexpr int kDefaultEnumerationCap = 25;

class GroundSet {
 public:
  explicit GroundSet(int n);
  int size() const { return n_; }

 private:
  int n_;
};

// Fixed-capacity bit vector representing a subset of {1..capacity}.
class SubsetBits {
 public:
  SubsetBits() = default;
  explicit SubsetBits(int capacity);

  static SubsetBits Empty(int n) { return SubsetBits(n); }
  static SubsetBits Full(int n);
  static SubsetBits FromElements(int n, const std::vector<int>& ids);
  // Bit k-1 of mask represents element k. Requires n <= 64.
  static SubsetBits FromMask(int n, std::uint64_t mask);
  // Parses the set literal format "{1,3,7}" / "{}".
  static SubsetBits Parse(std::string_view text, int n);

  int capacity() const { return capacity_; }
  bool Contains(int id) const;
  void Add(int id);
  void Remove(int id);
  SubsetBits With(int id) const;
  SubsetBits Without(int id) const;

  int Cardinality() const;
  bool IsEmpty() const;
  bool IsSubsetOf(const SubsetBits& other) const;

  std::uint64_t ToMask() const;
  std::vector<int> Elements() const;
  std::string ToString() const;

  // Calls fn(id) for each member in increasing id order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<int>(w * 64) + bit + 1);
        bits &= bits - 1;
      }
    }
  }

  friend SubsetBits Union(const SubsetBits& x, const SubsetBits& y);
  friend SubsetBits Intersection(const SubsetBits& x, const SubsetBits& y);
  friend SubsetBits Difference(const SubsetBits& x, const SubsetBits& y);
  friend bool operator==(const SubsetBits& x, const SubsetBits& y) = default;

 private:
  void CheckId(int id) const;

  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

SubsetBits Union(const SubsetBits& x, const SubsetBits& y);
SubsetBits Intersection(const SubsetBits& x, const SubsetBits& y);
SubsetBits Difference(const SubsetBits& x, const SubsetBits& y);
inline bool IsSubset(const SubsetBits& x, const SubsetBits& y) {
  return x.IsSubsetOf(y);
}
inline int Cardinality(const SubsetBits& x) { return x.Cardinality(); }

// Set interval lattice [lower, upper] = { U | lower <= U <= upper }.
class IntervalLattice {
 public:
  IntervalLattice(SubsetBits lower, SubsetBits upper);
  static IntervalLattice Full(int n) {
    return {SubsetBits::Empty(n), SubsetBits::Full(n)};
  }

  const SubsetBits& lower() const { return lower_; }
  const SubsetBits& upper() const { return upper_; }
  int capacity() const { return lower_.capacity(); }

  bool IsNonEmpty() const { return lower_.IsSubsetOf(upper_); }
  bool Contains(const SubsetBits& x) const;
  // |upper \ lower|; the lattice has 2^FreeCount() members.
  int FreeCount() const;
  SubsetBits FreeElements() const;
  // Every member of this lattice is also a member of outer.
  bool IsWithin(const IntervalLattice& outer) const;
  std::string ToString() const;

  friend bool operator==(const IntervalLattice&,
                         const IntervalLattice&) = default;

 private:
  SubsetBits lower_;
  SubsetBits upper_;
};

// Visits every member of the lattice exactly once (Gray-code order). Throws
// CapExceeded if FreeCount() > cap.
void ForEachInLattice(const IntervalLattice& lattice,
                      const std::function<void(const SubsetBits&)>& visit,
                      int cap = kDefaultEnumerationCap);
std::vector<SubsetBits> EnumerateLattice(const IntervalLattice& lattice,
                                         int cap = kDefaultEnumerationCap);

}  // namespace qsopt

#endif  // QSOPT_SUBSET_H_

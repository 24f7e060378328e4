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

#include "qsopt/subset.h"

#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "qsopt/errors.h"

namespace qsopt {
namespace {

std::size_t WordCount(int capacity) {
  return static_cast<std::size_t>((capacity + 63) / 64);
}

void CheckSameCapacity(const SubsetBits& x, const SubsetBits& y) {
  if (x.capacity() != y.capacity()) {
    throw std::invalid_argument("subset capacity mismatch: " +
                                std::to_string(x.capacity()) + " vs " +
                                std::to_string(y.capacity()));
  }
}

}  // namespace

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ground set needs n >= 1");
}

SubsetBits::SubsetBits(int capacity)
    : capacity_(capacity), words_(WordCount(capacity), 0) {
  if (capacity < 0) throw std::invalid_argument("negative subset capacity");
}

SubsetBits SubsetBits::Full(int n) {
  SubsetBits s(n);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
  if (n % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (1ULL << (n % 64)) - 1;
  }
  return s;
}

SubsetBits SubsetBits::FromElements(int n, const std::vector<int>& ids) {
  SubsetBits s(n);
  for (int id : ids) s.Add(id);
  return s;
}

SubsetBits SubsetBits::FromMask(int n, std::uint64_t mask) {
  if (n > 64) throw std::invalid_argument("FromMask requires n <= 64");
  if (n < 64 && (mask >> n) != 0) {
    throw std::out_of_range("mask has bits beyond capacity");
  }
  SubsetBits s(n);
  if (n > 0) s.words_[0] = mask;
  return s;
}

SubsetBits SubsetBits::Parse(std::string_view text, int n) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
      v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
      v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw FormatError("set literal must look like {1,2,3}: '" +
                      std::string(text) + "'");
  }
  text = trim(text.substr(1, text.size() - 2));
  SubsetBits s(n);
  if (text.empty()) return s;
  while (true) {
    const std::size_t comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    int id = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), id);
    if (ec != std::errc() || ptr != token.data() + token.size() || id < 1 ||
        id > n) {
      throw FormatError("bad element id in set literal: '" +
                        std::string(token) + "'");
    }
    s.Add(id);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return s;
}

void SubsetBits::CheckId(int id) const {
  if (id < 1 || id > capacity_) {
    throw std::out_of_range("element id " + std::to_string(id) +
                            " outside 1.." + std::to_string(capacity_));
  }
}

bool SubsetBits::Contains(int id) const {
  CheckId(id);
  const int k = id - 1;
  return (words_[k / 64] >> (k % 64)) & 1ULL;
}

void SubsetBits::Add(int id) {
  CheckId(id);
  const int k = id - 1;
  words_[k / 64] |= 1ULL << (k % 64);
}

void SubsetBits::Remove(int id) {
  CheckId(id);
  const int k = id - 1;
  words_[k / 64] &= ~(1ULL << (k % 64));
}

SubsetBits SubsetBits::With(int id) const {
  SubsetBits s = *this;
  s.Add(id);
  return s;
}

SubsetBits SubsetBits::Without(int id) const {
  SubsetBits s = *this;
  s.Remove(id);
  return s;
}

int SubsetBits::Cardinality() const {
  int count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool SubsetBits::IsEmpty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool SubsetBits::IsSubsetOf(const SubsetBits& other) const {
  CheckSameCapacity(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::uint64_t SubsetBits::ToMask() const {
  if (capacity_ > 64) throw std::invalid_argument("ToMask requires n <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::vector<int> SubsetBits::Elements() const {
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(Cardinality()));
  ForEach([&](int id) { ids.push_back(id); });
  return ids;
}

std::string SubsetBits::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int id) {
    if (!first) out += ',';
    out += std::to_string(id);
    first = false;
  });
  out += '}';
  return out;
}

SubsetBits Union(const SubsetBits& x, const SubsetBits& y) {
  CheckSameCapacity(x, y);
  SubsetBits s = x;
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] |= y.words_[w];
  return s;
}

SubsetBits Intersection(const SubsetBits& x, const SubsetBits& y) {
  CheckSameCapacity(x, y);
  SubsetBits s = x;
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] &= y.words_[w];
  return s;
}

SubsetBits Difference(const SubsetBits& x, const SubsetBits& y) {
  CheckSameCapacity(x, y);
  SubsetBits s = x;
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    s.words_[w] &= ~y.words_[w];
  }
  return s;
}

IntervalLattice::IntervalLattice(SubsetBits lower, SubsetBits upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  CheckSameCapacity(lower_, upper_);
}

bool IntervalLattice::Contains(const SubsetBits& x) const {
  return lower_.IsSubsetOf(x) && x.IsSubsetOf(upper_);
}

int IntervalLattice::FreeCount() const {
  if (!IsNonEmpty()) throw std::invalid_argument("empty lattice " + ToString());
  return Difference(upper_, lower_).Cardinality();
}

SubsetBits IntervalLattice::FreeElements() const {
  if (!IsNonEmpty()) throw std::invalid_argument("empty lattice " + ToString());
  return Difference(upper_, lower_);
}

bool IntervalLattice::IsWithin(const IntervalLattice& outer) const {
  return outer.lower().IsSubsetOf(lower_) && upper_.IsSubsetOf(outer.upper());
}

std::string IntervalLattice::ToString() const {
  return "[" + lower_.ToString() + "," + upper_.ToString() + "]";
}

void ForEachInLattice(const IntervalLattice& lattice,
                      const std::function<void(const SubsetBits&)>& visit,
                      int cap) {
  const std::vector<int> free = lattice.FreeElements().Elements();
  const int k = static_cast<int>(free.size());
  if (k > cap) {
    throw CapExceeded("lattice has " + std::to_string(k) +
                      " free elements, enumeration cap is " +
                      std::to_string(cap));
  }
  SubsetBits current = lattice.lower();
  visit(current);
  const std::uint64_t total = 1ULL << k;
  for (std::uint64_t g = 1; g < total; ++g) {
    const int id = free[static_cast<std::size_t>(std::countr_zero(g))];
    if (current.Contains(id)) {
      current.Remove(id);
    } else {
      current.Add(id);
    }
    visit(current);
  }
}

std::vector<SubsetBits> EnumerateLattice(const IntervalLattice& lattice,
                                         int cap) {
  std::vector<SubsetBits> members;
  ForEachInLattice(
      lattice, [&](const SubsetBits& s) { members.push_back(s); }, cap);
  return members;
}

}  // namespace qsopt

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
// Value-oracle contract for set functions F: 2^N -> R.
//
// Algorithms never need more than F(X) and single-element marginal gains
// around a working set, so the contract is SetFunction::Evaluate plus a
// MarginalCursor: a mutable view anchored at a working set X that answers
// F(i | X) and F(i | X - i) and can move X one element at a time. Families
// with closed-form marginals override NewCursor to maintain summary
// statistics incrementally; everyone else gets a cursor that evaluates F.

#ifndef QSOPT_ORACLE_H_
#define QSOPT_ORACLE_H_

#include <cstdint>
#include <memory>
#include <string>

#include "qsopt/subset.h"

namespace qsopt {

enum class Direction { kMin, kMax };

inline const char* DirectionName(Direction d) {
  return d == Direction::kMin ? "min" : "max";
}

class MarginalCursor {
 public:
  virtual ~MarginalCursor() = default;

  const SubsetBits& set() const { return set_; }

  // F(id | X) = F(X + id) - F(X); requires id not in X.
  double Gain(int id) const;
  // F(id | X - id) = F(X) - F(X - id); requires id in X.
  double DropGain(int id) const;

  void Add(int id);
  void Remove(int id);

 protected:
  explicit MarginalCursor(SubsetBits start) : set_(std::move(start)) {}

  virtual double GainImpl(int id) const = 0;
  virtual double DropGainImpl(int id) const = 0;
  // Called after set_ has been updated.
  virtual void OnAdd(int id) = 0;
  virtual void OnRemove(int id) = 0;

 private:
  SubsetBits set_;
};

class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual int ground_size() const = 0;
  // Deterministic: the same X always yields the same double.
  virtual double Evaluate(const SubsetBits& x) const = 0;
  virtual std::string name() const = 0;

  // True when NewCursor answers marginals without calling Evaluate.
  virtual bool has_fast_marginals() const { return false; }
  virtual std::unique_ptr<MarginalCursor> NewCursor(
      const SubsetBits& start) const;
};

// Cursor for functions without closed-form marginals: two evaluations per
// query, with F(X) cached between moves.
class EvaluatingCursor : public MarginalCursor {
 public:
  EvaluatingCursor(const SetFunction& f, SubsetBits start);

 protected:
  double GainImpl(int id) const override;
  double DropGainImpl(int id) const override;
  void OnAdd(int) override { stale_ = true; }
  void OnRemove(int) override { stale_ = true; }

 private:
  double Current() const;

  const SetFunction& f_;
  mutable double value_ = 0.0;
  mutable bool stale_ = true;
};

// F(X + i) - F(X), via the function's cursor.
double MarginalGain(const SetFunction& f, int id, const SubsetBits& x);
// F(X) - F(X - d), via the function's cursor.
double DropMarginal(const SetFunction& f, int id, const SubsetBits& x);

// Wraps a SetFunction and counts queries without changing any returned value.
// Cursors handed out by NewCursor report into this object's counters and must
// not outlive it. Not thread-safe: each run owns its own CountingOracle.
class CountingOracle : public SetFunction {
 public:
  explicit CountingOracle(const SetFunction& inner) : inner_(inner) {}

  int ground_size() const override { return inner_.ground_size(); }
  double Evaluate(const SubsetBits& x) const override;
  std::string name() const override { return inner_.name(); }
  bool has_fast_marginals() const override {
    return inner_.has_fast_marginals();
  }
  std::unique_ptr<MarginalCursor> NewCursor(
      const SubsetBits& start) const override;

  std::int64_t eval_calls() const { return eval_calls_; }
  std::int64_t marginal_calls() const { return marginal_calls_; }
  // Worst-case evaluation cost: one per Evaluate, two per marginal query.
  std::int64_t eval_equivalents() const {
    return eval_calls_ + 2 * marginal_calls_;
  }

 private:
  friend class CountingCursor;

  const SetFunction& inner_;
  mutable std::int64_t eval_calls_ = 0;
  mutable std::int64_t marginal_calls_ = 0;
};

}  // namespace qsopt

#endif  // QSOPT_ORACLE_H_

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
#include "qsopt/maximize.h"

#include <stdexcept>

#include "qsopt/errors.h"

namespace qsopt {
namespace {

// 1-flip check through a cursor, so fast marginals keep it O(n). For
// evaluating cursors the signs match IsLocalMax exactly.
bool CursorIsLocalMax(const SetFunction& f, const SubsetBits& x) {
  const auto cursor = f.NewCursor(x);
  for (int id = 1; id <= f.ground_size(); ++id) {
    if (x.Contains(id) ? cursor->DropGain(id) < 0 : cursor->Gain(id) > 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

MaxResult Uqsfmax(const SetFunction& f) {
  const int n = f.ground_size();
  CountingOracle counted(f);
  auto lower = counted.NewCursor(SubsetBits::Empty(n));
  auto upper = counted.NewCursor(SubsetBits::Full(n));
  MaxTrace trace;

  for (int t = 0;; ++t) {
    if (t > n + 1) {
      throw InvariantViolation("uqsfmax: no fixpoint after " +
                               std::to_string(n + 2) + " iterations");
    }
    const SubsetBits& x = lower->set();
    const SubsetBits& y = upper->set();
    MaxIteration record;
    record.t = t;
    record.fx = counted.Evaluate(x);
    record.fy = counted.Evaluate(y);

    SubsetBits added(n);
    SubsetBits removed(n);
    Difference(y, x).ForEach([&](int id) {
      if (upper->DropGain(id) > 0.0) added.Add(id);
      if (lower->Gain(id) < 0.0) removed.Add(id);
    });
    if (!Intersection(added, removed).IsEmpty()) {
      throw InvariantViolation(
          "uqsfmax: working lattice became empty; U_t and D_t share " +
          Intersection(added, removed).ToString());
    }
    record.added = added;
    record.removed = removed;
    record.eval_calls = counted.eval_equivalents();
    trace.iterations.push_back(std::move(record));

    if (added.IsEmpty() && removed.IsEmpty()) break;
    added.ForEach([&](int id) { lower->Add(id); });
    removed.ForEach([&](int id) { upper->Remove(id); });
  }

  IntervalLattice lattice(lower->set(), upper->set());
  trace.lower_is_local_max = CursorIsLocalMax(f, lattice.lower());
  trace.upper_is_local_max = CursorIsLocalMax(f, lattice.upper());
  return {std::move(lattice), std::move(trace)};
}

namespace {

class RestrictedCursor : public MarginalCursor {
 public:
  RestrictedCursor(const RestrictedFunction& g, SubsetBits local,
                   std::unique_ptr<MarginalCursor> inner)
      : MarginalCursor(std::move(local)), g_(g), inner_(std::move(inner)) {}

 protected:
  double GainImpl(int id) const override {
    return inner_->Gain(g_.global_id(id));
  }
  double DropGainImpl(int id) const override {
    return inner_->DropGain(g_.global_id(id));
  }
  void OnAdd(int id) override { inner_->Add(g_.global_id(id)); }
  void OnRemove(int id) override { inner_->Remove(g_.global_id(id)); }

 private:
  const RestrictedFunction& g_;
  std::unique_ptr<MarginalCursor> inner_;
};

}  // namespace

RestrictedFunction::RestrictedFunction(const SetFunction& f,
                                       const IntervalLattice& lattice)
    : f_(f), fixed_(lattice.lower()), free_(lattice.FreeElements().Elements()) {
  if (lattice.capacity() != f.ground_size()) {
    throw std::invalid_argument("restricted: lattice capacity mismatch");
  }
  if (free_.empty()) {
    throw std::invalid_argument("restricted: lattice has no free elements");
  }
}

SubsetBits RestrictedFunction::ToGlobal(const SubsetBits& local) const {
  if (local.capacity() != ground_size()) {
    throw std::invalid_argument("restricted: local set capacity mismatch");
  }
  SubsetBits global = fixed_;
  local.ForEach([&](int id) { global.Add(global_id(id)); });
  return global;
}

double RestrictedFunction::Evaluate(const SubsetBits& local) const {
  return f_.Evaluate(ToGlobal(local));
}

std::unique_ptr<MarginalCursor> RestrictedFunction::NewCursor(
    const SubsetBits& start) const {
  return std::make_unique<RestrictedCursor>(*this, start,
                                            f_.NewCursor(ToGlobal(start)));
}

PrefixResult UPrefix(const SetFunction& f, const Maximizer& inner) {
  MaxResult reduced = Uqsfmax(f);
  CountingOracle counted(f);
  const SubsetBits& lower = reduced.lattice.lower();
  PrefixResult out{lower, counted.Evaluate(lower), reduced.lattice,
                   std::move(reduced.trace), std::nullopt, 0};
  std::int64_t inner_calls = 0;
  if (out.lattice.FreeCount() > 0) {
    const RestrictedFunction restricted(f, out.lattice);
    BaselineResult local = inner(restricted);
    inner_calls = local.oracle_calls;
    local.set = restricted.ToGlobal(local.set);
    if (local.value > out.value) {
      out.set = local.set;
      out.value = local.value;
    }
    out.inner = std::move(local);
  }
  out.eval_calls = out.trace.eval_calls() + counted.eval_equivalents() +
                   inner_calls;
  return out;
}

}  // namespace qsopt

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
#include "qsopt/oracle.h"

#include <stdexcept>

namespace qsopt {

double MarginalCursor::Gain(int id) const {
  if (set_.Contains(id)) {
    throw std::invalid_argument("Gain: element " + std::to_string(id) +
                                " already in working set");
  }
  return GainImpl(id);
}

double MarginalCursor::DropGain(int id) const {
  if (!set_.Contains(id)) {
    throw std::invalid_argument("DropGain: element " + std::to_string(id) +
                                " not in working set");
  }
  return DropGainImpl(id);
}

void MarginalCursor::Add(int id) {
  if (set_.Contains(id)) return;
  set_.Add(id);
  OnAdd(id);
}

void MarginalCursor::Remove(int id) {
  if (!set_.Contains(id)) return;
  set_.Remove(id);
  OnRemove(id);
}

std::unique_ptr<MarginalCursor> SetFunction::NewCursor(
    const SubsetBits& start) const {
  return std::make_unique<EvaluatingCursor>(*this, start);
}

EvaluatingCursor::EvaluatingCursor(const SetFunction& f, SubsetBits start)
    : MarginalCursor(std::move(start)), f_(f) {
  if (set().capacity() != f.ground_size()) {
    throw std::invalid_argument("cursor start set has wrong capacity");
  }
}

double EvaluatingCursor::Current() const {
  if (stale_) {
    value_ = f_.Evaluate(set());
    stale_ = false;
  }
  return value_;
}

double EvaluatingCursor::GainImpl(int id) const {
  return f_.Evaluate(set().With(id)) - Current();
}

double EvaluatingCursor::DropGainImpl(int id) const {
  return Current() - f_.Evaluate(set().Without(id));
}

double MarginalGain(const SetFunction& f, int id, const SubsetBits& x) {
  return f.NewCursor(x)->Gain(id);
}

double DropMarginal(const SetFunction& f, int id, const SubsetBits& x) {
  return f.NewCursor(x)->DropGain(id);
}

class CountingCursor : public MarginalCursor {
 public:
  CountingCursor(const CountingOracle& owner,
                 std::unique_ptr<MarginalCursor> inner)
      : MarginalCursor(inner->set()), owner_(owner), inner_(std::move(inner)) {}

 protected:
  double GainImpl(int id) const override {
    ++owner_.marginal_calls_;
    return inner_->Gain(id);
  }
  double DropGainImpl(int id) const override {
    ++owner_.marginal_calls_;
    return inner_->DropGain(id);
  }
  void OnAdd(int id) override { inner_->Add(id); }
  void OnRemove(int id) override { inner_->Remove(id); }

 private:
  const CountingOracle& owner_;
  std::unique_ptr<MarginalCursor> inner_;
};

double CountingOracle::Evaluate(const SubsetBits& x) const {
  ++eval_calls_;
  return inner_.Evaluate(x);
}

std::unique_ptr<MarginalCursor> CountingOracle::NewCursor(
    const SubsetBits& start) const {
  return std::make_unique<CountingCursor>(*this, inner_.NewCursor(start));
}

}  // namespace qsopt

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
#include "qsopt/functions.h"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qsopt/checkers.h"
#include "qsopt/errors.h"
#include "qsopt/rng.h"

namespace qsopt {
namespace {

void CheckCursorStart(const SetFunction& f, const SubsetBits& start) {
  if (start.capacity() != f.ground_size()) {
    throw std::invalid_argument("cursor start set has capacity " +
                                std::to_string(start.capacity()) +
                                ", function has n = " +
                                std::to_string(f.ground_size()));
  }
}

void CheckEval(const SetFunction& f, const SubsetBits& x) {
  if (x.capacity() != f.ground_size()) {
    throw std::invalid_argument(f.name() + ": evaluated on a set of capacity " +
                                std::to_string(x.capacity()) + ", n = " +
                                std::to_string(f.ground_size()));
  }
}

std::size_t Idx(int id) { return static_cast<std::size_t>(id - 1); }

// ---------------------------------------------------------------- Iwata

class IwataCursor : public MarginalCursor {
 public:
  IwataCursor(int n, SubsetBits start)
      : MarginalCursor(std::move(start)), n_(n) {
    set().ForEach([&](int id) {
      ++k_;
      linear_ += 5LL * id - 2LL * n_;
    });
  }

 protected:
  double GainImpl(int id) const override {
    const std::int64_t k = k_;
    return static_cast<double>((k + 1) * (n_ - k - 1) - k * (n_ - k) -
                               (5LL * id - 2LL * n_));
  }
  double DropGainImpl(int id) const override {
    const std::int64_t k = k_;
    return static_cast<double>(k * (n_ - k) - (k - 1) * (n_ - k + 1) -
                               (5LL * id - 2LL * n_));
  }
  void OnAdd(int id) override {
    ++k_;
    linear_ += 5LL * id - 2LL * n_;
  }
  void OnRemove(int id) override {
    --k_;
    linear_ -= 5LL * id - 2LL * n_;
  }

 private:
  std::int64_t n_;
  std::int64_t k_ = 0;
  std::int64_t linear_ = 0;
};

// ---------------------------------------------------------------- COM

// sqrt(s + w) - sqrt(s) without cancellation.
double SqrtStep(long double s, double w) {
  const long double lo = std::sqrt(std::max<long double>(s, 0.0L));
  const long double hi = std::sqrt(std::max<long double>(s + w, 0.0L));
  if (lo + hi == 0.0L) return 0.0;
  return static_cast<double>(w / (lo + hi));
}

class ComCursor : public MarginalCursor {
 public:
  ComCursor(const ComFunction& f, SubsetBits start)
      : MarginalCursor(std::move(start)), f_(f) {
    set().ForEach([&](int id) { s1_ += f_.w1()[Idx(id)]; });
  }

 protected:
  double GainImpl(int id) const override {
    return SqrtStep(s1_, f_.w1()[Idx(id)]) - f_.w2()[Idx(id)];
  }
  double DropGainImpl(int id) const override {
    const double w = f_.w1()[Idx(id)];
    return SqrtStep(s1_ - w, w) - f_.w2()[Idx(id)];
  }
  void OnAdd(int id) override { s1_ += f_.w1()[Idx(id)]; }
  void OnRemove(int id) override { s1_ -= f_.w1()[Idx(id)]; }

 private:
  const ComFunction& f_;
  long double s1_ = 0.0L;
};

// ---------------------------------------------------------------- half-products

// Fenwick tree over element ids 1..n.
class PrefixSums {
 public:
  explicit PrefixSums(int n) : tree_(static_cast<std::size_t>(n) + 1, 0.0L) {}
  void Add(int id, long double v) {
    for (std::size_t i = static_cast<std::size_t>(id); i < tree_.size();
         i += i & (~i + 1)) {
      tree_[i] += v;
    }
  }
  // Sum over ids 1..id.
  long double Prefix(int id) const {
    long double s = 0.0L;
    for (std::size_t i = static_cast<std::size_t>(id); i > 0; i -= i & (~i + 1)) {
      s += tree_[i];
    }
    return s;
  }

 private:
  std::vector<long double> tree_;
};

class HalfProductsCursor : public MarginalCursor {
 public:
  HalfProductsCursor(const NegHalfProductsFunction& f, SubsetBits start)
      : MarginalCursor(std::move(start)),
        f_(f),
        a_sums_(f.ground_size()),
        b_sums_(f.ground_size()) {
    set().ForEach([&](int id) { Insert(id, 1.0L); });
  }

 protected:
  // Both directions reduce to the same interaction with the other members.
  double GainImpl(int id) const override { return -Interaction(id); }
  double DropGainImpl(int id) const override { return -Interaction(id); }
  void OnAdd(int id) override { Insert(id, 1.0L); }
  void OnRemove(int id) override { Insert(id, -1.0L); }

 private:
  void Insert(int id, long double sign) {
    a_sums_.Add(id, sign * f_.a()[Idx(id)]);
    b_sums_.Add(id, sign * f_.b()[Idx(id)]);
  }
  // F(id | X - id) for the un-negated half-products F.
  double Interaction(int id) const {
    const long double a_below = a_sums_.Prefix(id - 1);
    const long double b_above =
        b_sums_.Prefix(f_.ground_size()) - b_sums_.Prefix(id);
    const long double a = f_.a()[Idx(id)];
    const long double b = f_.b()[Idx(id)];
    return static_cast<double>(b * a_below + a * b_above + a * b -
                               f_.c()[Idx(id)]);
  }

  const NegHalfProductsFunction& f_;
  PrefixSums a_sums_;
  PrefixSums b_sums_;
};

// ---------------------------------------------------------------- facility

class FacilityCursor : public MarginalCursor {
 public:
  FacilityCursor(const FacilityLocationFunction& f, SubsetBits start)
      : MarginalCursor(std::move(start)),
        f_(f),
        best_(static_cast<std::size_t>(f.columns()), 0.0),
        second_(static_cast<std::size_t>(f.columns()), 0.0),
        owner_(static_cast<std::size_t>(f.columns()), 0) {
    for (int j = 0; j < f_.columns(); ++j) RescanColumn(j);
  }

 protected:
  double GainImpl(int id) const override {
    double gain = 0.0;
    for (int j = 0; j < f_.columns(); ++j) {
      gain += std::max(0.0, f_.weight(id, j) - best_[Col(j)]);
    }
    return gain + f_.sigma()[Idx(id)];
  }
  double DropGainImpl(int id) const override {
    double gain = 0.0;
    for (int j = 0; j < f_.columns(); ++j) {
      if (owner_[Col(j)] == id) gain += best_[Col(j)] - second_[Col(j)];
    }
    return gain + f_.sigma()[Idx(id)];
  }
  void OnAdd(int id) override {
    for (int j = 0; j < f_.columns(); ++j) {
      const double v = f_.weight(id, j);
      if (v > best_[Col(j)]) {
        second_[Col(j)] = best_[Col(j)];
        best_[Col(j)] = v;
        owner_[Col(j)] = id;
      } else if (v > second_[Col(j)]) {
        second_[Col(j)] = v;
      }
    }
  }
  void OnRemove(int id) override {
    for (int j = 0; j < f_.columns(); ++j) {
      if (owner_[Col(j)] == id || f_.weight(id, j) >= second_[Col(j)]) {
        RescanColumn(j);
      }
    }
  }

 private:
  static std::size_t Col(int j) { return static_cast<std::size_t>(j); }

  void RescanColumn(int j) {
    double best = 0.0;
    double second = 0.0;
    int owner = 0;
    set().ForEach([&](int id) {
      const double v = f_.weight(id, j);
      if (v > best) {
        second = best;
        best = v;
        owner = id;
      } else if (v > second) {
        second = v;
      }
    });
    best_[Col(j)] = best;
    second_[Col(j)] = second;
    owner_[Col(j)] = owner;
  }

  const FacilityLocationFunction& f_;
  std::vector<double> best_;
  std::vector<double> second_;
  std::vector<int> owner_;
};

// ---------------------------------------------------------------- determinant

Eigen::MatrixXd Principal(const DeterminantFunction& f,
                          const std::vector<int>& ids) {
  const auto k = static_cast<Eigen::Index>(ids.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      sub(r, c) = f.entry(ids[static_cast<std::size_t>(r)],
                          ids[static_cast<std::size_t>(c)]);
    }
  }
  return sub;
}

// Refactorizes K_X lazily after the working set moves; a batch of moves
// followed by a scan of queries costs one O(|X|^3) factorization.
class DeterminantCursor : public MarginalCursor {
 public:
  DeterminantCursor(const DeterminantFunction& f, SubsetBits start)
      : MarginalCursor(std::move(start)), f_(f) {}

 protected:
  double GainImpl(int id) const override {
    Refresh();
    if (members_.empty()) return f_.entry(id, id) - 1.0;
    Eigen::VectorXd k(static_cast<Eigen::Index>(members_.size()));
    for (std::size_t r = 0; r < members_.size(); ++r) {
      k(static_cast<Eigen::Index>(r)) = f_.entry(members_[r], id);
    }
    const Eigen::VectorXd y = llt_.matrixL().solve(k);
    const double schur = f_.entry(id, id) - y.squaredNorm();
    return det_ * (schur - 1.0);
  }
  double DropGainImpl(int id) const override {
    Refresh();
    const auto pos = static_cast<Eigen::Index>(
        std::lower_bound(members_.begin(), members_.end(), id) -
        members_.begin());
    // det(K_{X-d}) = det(K_X) * (K_X^{-1})_{dd}.
    return det_ * (1.0 - inverse_(pos, pos));
  }
  void OnAdd(int) override { stale_ = true; }
  void OnRemove(int) override { stale_ = true; }

 private:
  void Refresh() const {
    if (!stale_) return;
    members_ = set().Elements();
    det_ = 1.0;
    if (!members_.empty()) {
      llt_.compute(Principal(f_, members_));
      if (llt_.info() != Eigen::Success) {
        throw std::runtime_error("determinant: principal submatrix on " +
                                 set().ToString() + " is not positive definite");
      }
      const auto& l = llt_.matrixLLT();
      for (Eigen::Index i = 0; i < l.rows(); ++i) det_ *= l(i, i) * l(i, i);
      inverse_ = llt_.solve(
          Eigen::MatrixXd::Identity(l.rows(), l.rows()));
    }
    stale_ = false;
  }

  const DeterminantFunction& f_;
  mutable bool stale_ = true;
  mutable std::vector<int> members_;
  mutable Eigen::LLT<Eigen::MatrixXd> llt_;
  mutable Eigen::MatrixXd inverse_;
  mutable double det_ = 1.0;
};

// ---------------------------------------------------------------- Cobb-Douglas

class CobbDouglasCursor : public MarginalCursor {
 public:
  CobbDouglasCursor(const CobbDouglasFunction& f, SubsetBits start)
      : MarginalCursor(std::move(start)), f_(f) {
    set().ForEach([&](int id) { Insert(id, +1); });
  }

 protected:
  double GainImpl(int id) const override {
    if (zeros_ > 0) return 0.0;
    const double t = f_.log_term(id);
    const double fx = std::exp(static_cast<double>(log_sum_));
    if (std::isinf(t)) return -fx;
    return fx * std::expm1(t);
  }
  double DropGainImpl(int id) const override {
    const double t = f_.log_term(id);
    if (std::isinf(t)) {
      // F(X) = 0; F(X - d) is non-zero only if d was the sole zero factor.
      return zeros_ == 1 ? -std::exp(static_cast<double>(log_sum_)) : 0.0;
    }
    if (zeros_ > 0) return 0.0;
    // F(X) - F(X - d) = F(X - d) * (w^alpha - 1).
    return std::exp(static_cast<double>(log_sum_ - t)) * std::expm1(t);
  }
  void OnAdd(int id) override { Insert(id, +1); }
  void OnRemove(int id) override { Insert(id, -1); }

 private:
  void Insert(int id, int sign) {
    const double t = f_.log_term(id);
    if (std::isinf(t)) {
      zeros_ += sign;
    } else {
      log_sum_ += sign * static_cast<long double>(t);
    }
  }

  const CobbDouglasFunction& f_;
  long double log_sum_ = 0.0L;
  int zeros_ = 0;
};

}  // namespace

// ---------------------------------------------------------------- tabular

TabularFunction::TabularFunction(std::vector<double> values)
    : n_(0), values_(std::move(values)) {
  const std::size_t size = values_.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    throw std::invalid_argument(
        "tabular function needs 2^n values with n >= 1, got " +
        std::to_string(size));
  }
  while ((std::size_t{1} << n_) < size) ++n_;
  if (n_ > kMaxTabularSize) {
    throw std::invalid_argument("tabular function limited to n <= " +
                                std::to_string(kMaxTabularSize));
  }
}

double TabularFunction::Evaluate(const SubsetBits& x) const {
  CheckEval(*this, x);
  return values_[x.ToMask()];
}

// ---------------------------------------------------------------- Iwata

IwataFunction::IwataFunction(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("iwata: n must be >= 1");
}

double IwataFunction::Evaluate(const SubsetBits& x) const {
  CheckEval(*this, x);
  std::int64_t k = 0;
  std::int64_t linear = 0;
  x.ForEach([&](int id) {
    ++k;
    linear += 5LL * id - 2LL * n_;
  });
  return static_cast<double>(k * (n_ - k) - linear);
}

std::unique_ptr<MarginalCursor> IwataFunction::NewCursor(
    const SubsetBits& start) const {
  CheckCursorStart(*this, start);
  return std::make_unique<IwataCursor>(n_, start);
}

// ---------------------------------------------------------------- COM

ComFunction::ComFunction(std::vector<double> w1, std::vector<double> w2)
    : w1_(std::move(w1)), w2_(std::move(w2)) {
  if (w1_.empty() || w1_.size() != w2_.size()) {
    throw std::invalid_argument("com: w1 and w2 must be non-empty, same size");
  }
  for (double v : w1_) {
    if (!(v >= 0.0)) throw std::invalid_argument("com: w1 must be >= 0");
  }
}

double ComFunction::Evaluate(const SubsetBits& x) const {
  CheckEval(*this, x);
  long double inside = 0.0L;
  long double outside = 0.0L;
  for (int id = 1; id <= ground_size(); ++id) {
    if (x.Contains(id)) {
      inside += w1_[Idx(id)];
    } else {
      outside += w2_[Idx(id)];
    }
  }
  return static_cast<double>(std::sqrt(inside) + outside);
}

std::unique_ptr<MarginalCursor> ComFunction::NewCursor(
    const SubsetBits& start) const {
  CheckCursorStart(*this, start);
  return std::make_unique<ComCursor>(*this, start);
}

// ---------------------------------------------------------------- half-products

NegHalfProductsFunction::NegHalfProductsFunction(std::vector<double> a,
                                                 std::vector<double> b,
                                                 std::vector<double> c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.empty() || a_.size() != b_.size() || a_.size() != c_.size()) {
    throw std::invalid_argument("half_products: a, b, c must match in size");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!(a_[i] >= 0.0) || !(b_[i] >= 0.0)) {
      throw std::invalid_argument("half_products: a and b must be >= 0");
    }
  }
}

double NegHalfProductsFunction::Evaluate(const SubsetBits& x) const {
  CheckEval(*this, x);
  long double a_prefix = 0.0L;
  long double total = 0.0L;
  x.ForEach([&](int j) {
    a_prefix += a_[Idx(j)];
    total += a_prefix * b_[Idx(j)] - c_[Idx(j)];
  });
  return static_cast<double>(-total);
}

std::unique_ptr<MarginalCursor> NegHalfProductsFunction::NewCursor(
    const SubsetBits& start) const {
  CheckCursorStart(*this, start);
  return std::make_unique<HalfProductsCursor>(*this, start);
}

// ---------------------------------------------------------------- facility

FacilityLocationFunction::FacilityLocationFunction(int n, int d,
                                                   std::vector<double> m,
                                                   std::vector<double> sigma)
    : n_(n), d_(d), m_(std::move(m)), sigma_(std::move(sigma)) {
  if (n < 1 || d < 1) throw std::invalid_argument("facility: n, d >= 1");
  if (m_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(d) ||
      sigma_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("facility: M must be n x d, sigma length n");
  }
  for (double v : m_) {
    if (!(v >= 0.0)) throw std::invalid_argument("facility: M must be >= 0");
  }
}

double FacilityLocationFunction::Evaluate(const SubsetBits& x) const {
  CheckEval(*this, x);
  const std::vector<int> ids = x.Elements();
  double total = 0.0;
  for (int j = 0; j < d_; ++j) {
    double best = 0.0;
    for (int id : ids) best = std::max(best, weight(id, j));
    total += best;
  }
  for (int id : ids) total += sigma_[Idx(id)];
  return total;
}

std::unique_ptr<MarginalCursor> FacilityLocationFunction::NewCursor(
    const SubsetBits& start) const {
  CheckCursorStart(*this, start);
  return std::make_unique<FacilityCursor>(*this, start);
}

// ---------------------------------------------------------------- determinant

DeterminantFunction::DeterminantFunction(int n, std::vector<double> kernel)
    : n_(n), kernel_(std::move(kernel)) {
  if (n < 1) throw std::invalid_argument("determinant: n must be >= 1");
  if (kernel_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("determinant: kernel must be n x n");
  }
  for (int r = 1; r <= n; ++r) {
    for (int c = r + 1; c <= n; ++c) {
      if (entry(r, c) != entry(c, r)) {
        throw std::invalid_argument("determinant: kernel must be symmetric");
      }
    }
  }
}

double DeterminantFunction::Evaluate(const SubsetBits& x) const {
  CheckEval(*this, x);
  const std::vector<int> ids = x.Elements();
  if (ids.empty()) return 1.0;
  Eigen::LLT<Eigen::MatrixXd> llt(Principal(*this, ids));
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("determinant: principal submatrix on " +
                             x.ToString() + " is not positive definite");
  }
  double det = 1.0;
  const auto& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) det *= l(i, i) * l(i, i);
  return det;
}

std::unique_ptr<MarginalCursor> DeterminantFunction::NewCursor(
    const SubsetBits& start) const {
  CheckCursorStart(*this, start);
  return std::make_unique<DeterminantCursor>(*this, start);
}

// ---------------------------------------------------------------- Cobb-Douglas

CobbDouglasFunction::CobbDouglasFunction(std::vector<double> w,
                                         std::vector<double> alpha)
    : w_(std::move(w)), alpha_(std::move(alpha)) {
  if (w_.empty() || w_.size() != alpha_.size()) {
    throw std::invalid_argument("cobb_douglas: w and alpha must match");
  }
  log_terms_.resize(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!(w_[i] >= 0.0) || !(alpha_[i] >= 0.0)) {
      throw std::invalid_argument("cobb_douglas: w, alpha must be >= 0");
    }
    if (alpha_[i] == 0.0) {
      log_terms_[i] = 0.0;  // w^0 = 1, including 0^0
    } else if (w_[i] == 0.0) {
      log_terms_[i] = -std::numeric_limits<double>::infinity();
    } else {
      log_terms_[i] = alpha_[i] * std::log(w_[i]);
    }
  }
}

double CobbDouglasFunction::Evaluate(const SubsetBits& x) const {
  CheckEval(*this, x);
  long double log_sum = 0.0L;
  bool zero = false;
  x.ForEach([&](int id) {
    const double t = log_terms_[Idx(id)];
    if (std::isinf(t)) {
      zero = true;
    } else {
      log_sum += t;
    }
  });
  return zero ? 0.0 : std::exp(static_cast<double>(log_sum));
}

std::unique_ptr<MarginalCursor> CobbDouglasFunction::NewCursor(
    const SubsetBits& start) const {
  CheckCursorStart(*this, start);
  return std::make_unique<CobbDouglasCursor>(*this, start);
}

// ---------------------------------------------------------------- generators

std::unique_ptr<IwataFunction> MakeIwata(int n) {
  return std::make_unique<IwataFunction>(n);
}

std::unique_ptr<ComFunction> MakeCom(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("com: n must be >= 1");
  const auto size = static_cast<std::size_t>(n);
  auto w1 = Rng(seed, 1).UniformVector(size, 0.0, 1.0);
  auto w2 = Rng(seed, 2).UniformVector(size, 0.0, 1.0);
  return std::make_unique<ComFunction>(std::move(w1), std::move(w2));
}

std::unique_ptr<NegHalfProductsFunction> MakeHalfProducts(int n,
                                                          std::uint64_t seed,
                                                          double c_max) {
  if (n < 1) throw std::invalid_argument("half_products: n must be >= 1");
  if (c_max <= 0.0) c_max = n / 2.0;
  const auto size = static_cast<std::size_t>(n);
  auto a = Rng(seed, 1).UniformVector(size, 0.0, 1.0);
  auto b = Rng(seed, 2).UniformVector(size, 0.0, 1.0);
  auto c = Rng(seed, 3).UniformVector(size, 0.0, c_max);
  return std::make_unique<NegHalfProductsFunction>(std::move(a), std::move(b),
                                                   std::move(c));
}

std::unique_ptr<FacilityLocationFunction> MakePerturbedFacility(
    int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("facility: n, d >= 1");
  auto m = Rng(seed, 1).UniformVector(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(d), 0.5, 1.0);
  auto sigma = Rng(seed, 2).UniformVector(static_cast<std::size_t>(n), -0.01,
                                          0.01);
  return std::make_unique<FacilityLocationFunction>(n, d, std::move(m),
                                                    std::move(sigma));
}

std::unique_ptr<DeterminantFunction> MakeDeterminant(int n, std::uint64_t seed,
                                                     double ridge) {
  if (n < 1) throw std::invalid_argument("determinant: n must be >= 1");
  if (!(ridge > 0.0)) throw std::invalid_argument("determinant: ridge > 0");
  const auto size = static_cast<std::size_t>(n);
  const std::vector<double> g = Rng(seed, 1).UniformVector(size * size, 0.0, 1.0);
  std::vector<double> k(size * size, 0.0);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = r; c < size; ++c) {
      double dot = 0.0;
      for (std::size_t t = 0; t < size; ++t) dot += g[r * size + t] * g[c * size + t];
      k[r * size + c] = dot;
      k[c * size + r] = dot;
    }
    k[r * size + r] += n * ridge;
  }
  return std::make_unique<DeterminantFunction>(n, std::move(k));
}

std::unique_ptr<CobbDouglasFunction> MakeCobbDouglas(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("cobb_douglas: n must be >= 1");
  const auto size = static_cast<std::size_t>(n);
  auto w = Rng(seed, 1).UniformVector(size, 0.5, 2.0);
  auto alpha = Rng(seed, 2).UniformVector(size, 0.0, 1.0);
  return std::make_unique<CobbDouglasFunction>(std::move(w), std::move(alpha));
}

std::unique_ptr<TabularFunction> MakeTabular(std::vector<double> values) {
  return std::make_unique<TabularFunction>(std::move(values));
}

std::unique_ptr<TabularFunction> MakeRandomQsb(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxTabularSize) {
    throw std::invalid_argument("random qsb: need 1 <= n <= " +
                                std::to_string(kMaxTabularSize));
  }
  Rng pick(seed, 1);
  bool coverage = pick.Bernoulli(0.5);
  const bool cut = pick.Bernoulli(0.5);
  const bool budget = pick.Bernoulli(0.5);
  const bool modular = pick.Bernoulli(0.5);
  if (!coverage && !cut && !budget && !modular) coverage = true;

  const std::uint64_t size = 1ULL << n;
  std::vector<std::int64_t> v(size, 0);

  if (coverage) {
    Rng rng(seed, 2);
    const int items = n + static_cast<int>(rng.IntInRange(1, n));
    std::vector<std::uint64_t> covers(static_cast<std::size_t>(items), 0);
    std::vector<std::int64_t> weight(static_cast<std::size_t>(items));
    for (int j = 0; j < items; ++j) {
      weight[static_cast<std::size_t>(j)] = rng.IntInRange(1, 5);
      for (int i = 0; i < n; ++i) {
        if (rng.Bernoulli(0.35)) covers[static_cast<std::size_t>(j)] |= 1ULL << i;
      }
    }
    for (std::uint64_t mask = 0; mask < size; ++mask) {
      for (int j = 0; j < items; ++j) {
        if (covers[static_cast<std::size_t>(j)] & mask) {
          v[mask] += weight[static_cast<std::size_t>(j)];
        }
      }
    }
  }
  if (cut) {
    Rng rng(seed, 3);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!rng.Bernoulli(0.4)) continue;
        const std::int64_t w = rng.IntInRange(1, 4);
        for (std::uint64_t mask = 0; mask < size; ++mask) {
          if (((mask >> i) & 1) != ((mask >> j) & 1)) v[mask] += w;
        }
      }
    }
  }
  if (budget) {
    Rng rng(seed, 4);
    const std::int64_t cap = rng.IntInRange(1, 2 * n);
    std::vector<std::int64_t> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = rng.IntInRange(1, 4);
    for (std::uint64_t mask = 0; mask < size; ++mask) {
      std::int64_t s = 0;
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1) s += w[static_cast<std::size_t>(i)];
      }
      v[mask] += std::min(s, cap);
    }
  }
  if (modular) {
    Rng rng(seed, 5);
    std::vector<std::int64_t> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = rng.IntInRange(-6, 6);
    for (std::uint64_t mask = 0; mask < size; ++mask) {
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1) v[mask] += w[static_cast<std::size_t>(i)];
      }
    }
  }

  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  Rng shape(seed, 6);
  const std::int64_t center = shape.IntInRange(*lo, *hi);
  const int scale_bits = static_cast<int>(shape.IntInRange(0, 5));
  const double shift = static_cast<double>(shape.IntInRange(-10, 10));
  std::vector<double> values(size);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    const std::int64_t z = v[mask] - center;
    values[mask] =
        std::ldexp(static_cast<double>(z * z * z + z), -scale_bits) + shift;
  }
  auto f = std::make_unique<TabularFunction>(std::move(values));
  if (n <= kSsbcCap) {
    const PropertyVerdict verdict = SatisfiesSsbc(*f);
    if (!verdict.holds) {
      throw InvariantViolation("random qsb generator produced a function "
                               "violating single sub-crossing: " +
                               verdict.Describe());
    }
  }
  return f;
}

std::vector<double> Tabulate(const SetFunction& f, int cap) {
  const int n = f.ground_size();
  if (n > cap || n > 63) {
    throw CapExceeded("cannot tabulate n = " + std::to_string(n) +
                      " (cap " + std::to_string(cap) + ")");
  }
  const std::uint64_t size = 1ULL << n;
  std::vector<double> values(size);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    values[mask] = f.Evaluate(SubsetBits::FromMask(n, mask));
  }
  return values;
}

}  // namespace qsopt

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
// Benchmark set-function families and seeded instance generators.
//
// Every family is quasi-submodular: Iwata, COM and facility location are
// submodular, the determinant and Cobb-Douglas functions are monotone
// transforms of submodular / modular log-forms, and half-products is exposed
// as its negation, which is submodular for non-negative a, b.

#ifndef QSOPT_FUNCTIONS_H_
#define QSOPT_FUNCTIONS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qsopt/oracle.h"

namespace qsopt {

inline constexpr int kMaxTabularSize = 20;

// Explicit table of 2^n values indexed by bitmask (bit k-1 <=> element k).
class TabularFunction : public SetFunction {
 public:
  explicit TabularFunction(std::vector<double> values);

  int ground_size() const override { return n_; }
  double Evaluate(const SubsetBits& x) const override;
  std::string name() const override { return "tabular"; }

  const std::vector<double>& values() const { return values_; }
  double at(std::uint64_t mask) const { return values_[mask]; }

 private:
  int n_;
  std::vector<double> values_;
};

// F(X) = |X| |N \ X| - sum_{i in X} (5i - 2n).
class IwataFunction : public SetFunction {
 public:
  explicit IwataFunction(int n);

  int ground_size() const override { return n_; }
  double Evaluate(const SubsetBits& x) const override;
  std::string name() const override { return "iwata"; }
  bool has_fast_marginals() const override { return true; }
  std::unique_ptr<MarginalCursor> NewCursor(
      const SubsetBits& start) const override;

 private:
  int n_;
};

// Concave over modular: F(X) = sqrt(w1(X)) + w2(N \ X).
class ComFunction : public SetFunction {
 public:
  ComFunction(std::vector<double> w1, std::vector<double> w2);

  int ground_size() const override { return static_cast<int>(w1_.size()); }
  double Evaluate(const SubsetBits& x) const override;
  std::string name() const override { return "com"; }
  bool has_fast_marginals() const override { return true; }
  std::unique_ptr<MarginalCursor> NewCursor(
      const SubsetBits& start) const override;

  const std::vector<double>& w1() const { return w1_; }
  const std::vector<double>& w2() const { return w2_; }

 private:
  std::vector<double> w1_;
  std::vector<double> w2_;
};

// Negated half-products: -F(X) with
//   F(X) = sum_{i <= j, i, j in X} a(i) b(j) - c(X),
// diagonal terms a(i) b(i) included.
class NegHalfProductsFunction : public SetFunction {
 public:
  NegHalfProductsFunction(std::vector<double> a, std::vector<double> b,
                          std::vector<double> c);

  int ground_size() const override { return static_cast<int>(a_.size()); }
  double Evaluate(const SubsetBits& x) const override;
  std::string name() const override { return "half_products"; }
  bool has_fast_marginals() const override { return true; }
  std::unique_ptr<MarginalCursor> NewCursor(
      const SubsetBits& start) const override;

  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }
  const std::vector<double>& c() const { return c_; }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> c_;
};

// Perturbed facility location: F(X) = sum_j max_{i in X} M(i, j) + sigma(X),
// with the max over an empty X taken as 0. M is n x d, row-major, entries
// must be non-negative.
class FacilityLocationFunction : public SetFunction {
 public:
  FacilityLocationFunction(int n, int d, std::vector<double> m,
                           std::vector<double> sigma);

  int ground_size() const override { return n_; }
  double Evaluate(const SubsetBits& x) const override;
  std::string name() const override { return "perturbed_facility"; }
  bool has_fast_marginals() const override { return true; }
  std::unique_ptr<MarginalCursor> NewCursor(
      const SubsetBits& start) const override;

  int columns() const { return d_; }
  double weight(int id, int column) const {
    return m_[static_cast<std::size_t>(id - 1) * d_ + column];
  }
  const std::vector<double>& matrix() const { return m_; }
  const std::vector<double>& sigma() const { return sigma_; }

 private:
  int n_;
  int d_;
  std::vector<double> m_;
  std::vector<double> sigma_;
};

// F(X) = det(K_X) for a symmetric positive definite K (row-major), F({}) = 1.
class DeterminantFunction : public SetFunction {
 public:
  DeterminantFunction(int n, std::vector<double> kernel);

  int ground_size() const override { return n_; }
  double Evaluate(const SubsetBits& x) const override;
  std::string name() const override { return "determinant"; }
  bool has_fast_marginals() const override { return true; }
  std::unique_ptr<MarginalCursor> NewCursor(
      const SubsetBits& start) const override;

  const std::vector<double>& kernel() const { return kernel_; }
  double entry(int row_id, int col_id) const {
    return kernel_[static_cast<std::size_t>(row_id - 1) * n_ + (col_id - 1)];
  }

 private:
  int n_;
  std::vector<double> kernel_;
};

// Cobb-Douglas product over the members of X:
//   F(X) = prod_{i in X} w(i)^alpha(i),  F({}) = 1,
// evaluated through the log-sum sum_{i in X} alpha(i) ln w(i).
class CobbDouglasFunction : public SetFunction {
 public:
  CobbDouglasFunction(std::vector<double> w, std::vector<double> alpha);

  int ground_size() const override { return static_cast<int>(w_.size()); }
  double Evaluate(const SubsetBits& x) const override;
  std::string name() const override { return "cobb_douglas"; }
  bool has_fast_marginals() const override { return true; }
  std::unique_ptr<MarginalCursor> NewCursor(
      const SubsetBits& start) const override;

  const std::vector<double>& w() const { return w_; }
  const std::vector<double>& alpha() const { return alpha_; }
  // alpha(i) ln w(i); -inf when w(i) = 0 < alpha(i).
  double log_term(int id) const { return log_terms_[id - 1]; }

 private:
  std::vector<double> w_;
  std::vector<double> alpha_;
  std::vector<double> log_terms_;
};

// Seeded generators. Parameter arrays are drawn from Rng(seed, s) with s = 1,
// 2, ... in the order the arrays are listed.
std::unique_ptr<IwataFunction> MakeIwata(int n);
// w1, w2 ~ U[0,1]^n.
std::unique_ptr<ComFunction> MakeCom(int n, std::uint64_t seed);
// a, b ~ U[0,1]^n, c ~ U[0, c_max]^n. c_max <= 0 selects n / 2.
std::unique_ptr<NegHalfProductsFunction> MakeHalfProducts(int n,
                                                          std::uint64_t seed,
                                                          double c_max = 0.0);
// M ~ U[0.5,1]^{n x d}, sigma ~ U[-0.01,0.01]^n.
std::unique_ptr<FacilityLocationFunction> MakePerturbedFacility(
    int n, int d, std::uint64_t seed);
// K = G G^T + n * ridge * I with G ~ U[0,1]^{n x n}.
std::unique_ptr<DeterminantFunction> MakeDeterminant(int n, std::uint64_t seed,
                                                     double ridge = 1e-3);
// w ~ U[0.5,2]^n, alpha ~ U[0,1]^n.
std::unique_ptr<CobbDouglasFunction> MakeCobbDouglas(int n, std::uint64_t seed);
std::unique_ptr<TabularFunction> MakeTabular(std::vector<double> values);

// Random quasi-submodular table for tests. Draws an integer-valued submodular
// function (a random mix of weighted coverage, graph cut, budget-additive and
// signed modular terms), then applies a random strictly increasing cubic
// t(v) = ((v - m)^3 + (v - m)) / 2^k + shift. Quasi-submodularity only
// depends on the order of values, so t preserves it while usually destroying
// submodularity. All arithmetic is exact in doubles, and distinct values are
// at least 2^-5 apart. For n <= 14 the result is re-verified exhaustively.
std::unique_ptr<TabularFunction> MakeRandomQsb(int n, std::uint64_t seed);

// Values of f on all 2^n subsets in bitmask order; n <= cap.
std::vector<double> Tabulate(const SetFunction& f, int cap = kMaxTabularSize);

}  // namespace qsopt

#endif  // QSOPT_FUNCTIONS_H_

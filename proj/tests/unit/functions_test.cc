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

#include <cmath>
#include <functional>
#include <string>

#include "gtest/gtest.h"
#include "qsopt/checkers.h"
#include "qsopt/errors.h"
#include "test_util.h"

namespace qsopt {
namespace {

using testing::Set;

TEST(IwataTest, ClosedForm) {
  const auto f = MakeIwata(5);
  EXPECT_EQ(f->Evaluate(Set(5, {})), 0.0);
  EXPECT_EQ(f->Evaluate(Set(5, {5})), -11.0);
  EXPECT_EQ(f->Evaluate(SubsetBits::Full(5)), -25.0);
  EXPECT_EQ(f->Evaluate(Set(5, {2, 3, 4, 5})), -26.0);
}

TEST(ComTest, HandValues) {
  const ComFunction f({0.25}, {0.3});
  EXPECT_DOUBLE_EQ(f.Evaluate(Set(1, {1})), 0.5);
  EXPECT_DOUBLE_EQ(f.Evaluate(Set(1, {})), 0.3);
  const auto g = MakeCom(7, 11);
  double w2 = 0.0, w1 = 0.0;
  for (int i = 0; i < 7; ++i) {
    w1 += g->w1()[i];
    w2 += g->w2()[i];
  }
  EXPECT_NEAR(g->Evaluate(SubsetBits::Empty(7)), w2, 1e-12);
  EXPECT_NEAR(g->Evaluate(SubsetBits::Full(7)), std::sqrt(w1), 1e-12);
}

TEST(HalfProductsTest, HandValues) {
  const NegHalfProductsFunction f({1, 1}, {1, 1}, {0, 0});
  EXPECT_EQ(f.Evaluate(Set(2, {})), 0.0);
  EXPECT_DOUBLE_EQ(f.Evaluate(Set(2, {1, 2})), -3.0);
  const NegHalfProductsFunction g({0.5}, {0.4}, {0.1});
  EXPECT_NEAR(g.Evaluate(Set(1, {1})), -0.1, 1e-15);
}

TEST(FacilityTest, HandValues) {
  const FacilityLocationFunction f(2, 1, {0.5, 0.9}, {0.0, 0.0});
  EXPECT_EQ(f.Evaluate(Set(2, {})), 0.0);
  EXPECT_DOUBLE_EQ(f.Evaluate(Set(2, {1, 2})), 0.9);
  EXPECT_DOUBLE_EQ(f.Evaluate(Set(2, {1})), 0.5);
  EXPECT_THROW(FacilityLocationFunction(1, 1, {-0.1}, {0.0}), std::exception);
}

TEST(DeterminantTest, HandValues) {
  const DeterminantFunction f(2, {2, 1, 1, 2});
  EXPECT_EQ(f.Evaluate(Set(2, {})), 1.0);
  EXPECT_DOUBLE_EQ(f.Evaluate(Set(2, {1})), 2.0);
  EXPECT_NEAR(f.Evaluate(Set(2, {1, 2})), 3.0, 1e-12);
  EXPECT_THROW(DeterminantFunction(2, {2, 1, 0, 2}), std::exception);
}

TEST(CobbDouglasTest, HandValues) {
  const CobbDouglasFunction f({2}, {1});
  EXPECT_EQ(f.Evaluate(Set(1, {})), 1.0);
  EXPECT_DOUBLE_EQ(f.Evaluate(Set(1, {1})), 2.0);
  const CobbDouglasFunction g({2, 0.5}, {1, 1});
  EXPECT_DOUBLE_EQ(g.Evaluate(Set(2, {1, 2})), 1.0);
  const CobbDouglasFunction zero({0, 2}, {0.5, 1});
  EXPECT_EQ(zero.Evaluate(Set(2, {1, 2})), 0.0);
  EXPECT_EQ(MarginalGain(zero, 1, Set(2, {2})), -2.0);
}

TEST(TabularTest, SmallTables) {
  EXPECT_EQ(testing::QsbNotSubmodular()->Evaluate(Set(2, {2})), 1.5);
  EXPECT_EQ(testing::TwoPeaks()->Evaluate(Set(2, {1, 2})), 1.0);
  EXPECT_THROW(MakeTabular({1, 2, 3}), std::exception);
}

struct Case {
  std::string name;
  std::function<std::unique_ptr<SetFunction>()> make;
};

class FastMarginalTest : public ::testing::TestWithParam<Case> {};

// Incremental cursors must agree with differences of full evaluations along
// a random walk of additions and removals.
TEST_P(FastMarginalTest, AgreesWithEvaluation) {
  const auto f = GetParam().make();
  ASSERT_TRUE(f->has_fast_marginals());
  const int n = f->ground_size();
  Rng rng(99);
  SubsetBits x = testing::RandomSubset(n, rng);
  auto cursor = f->NewCursor(x);
  for (int step = 0; step < 1000; ++step) {
    const int id = static_cast<int>(rng.Below(n)) + 1;
    const double fx = f->Evaluate(x);
    double want, got;
    if (x.Contains(id)) {
      want = fx - f->Evaluate(x.Without(id));
      got = cursor->DropGain(id);
    } else {
      want = f->Evaluate(x.With(id)) - fx;
      got = cursor->Gain(id);
    }
    const double scale = std::max({1.0, std::abs(fx), std::abs(want)});
    ASSERT_NEAR(got, want, 1e-9 * scale) << "step " << step << " id " << id;
    if (rng.Bernoulli(0.5)) {
      if (x.Contains(id)) {
        x.Remove(id);
        cursor->Remove(id);
      } else {
        x.Add(id);
        cursor->Add(id);
      }
    }
    ASSERT_EQ(cursor->set(), x);
  }
}

// Gains along any insertion order sum to F(N) - F(∅).
TEST_P(FastMarginalTest, Telescopes) {
  const auto f = GetParam().make();
  const int n = f->ground_size();
  Rng rng(5);
  auto cursor = f->NewCursor(SubsetBits::Empty(n));
  double sum = 0.0;
  for (int id : rng.Permutation(n)) {
    sum += cursor->Gain(id);
    cursor->Add(id);
  }
  const double want =
      f->Evaluate(SubsetBits::Full(n)) - f->Evaluate(SubsetBits::Empty(n));
  EXPECT_NEAR(sum, want, 1e-9 * std::max(1.0, std::abs(want)));
}

INSTANTIATE_TEST_SUITE_P(
    Families, FastMarginalTest,
    ::testing::Values(
        Case{"iwata", [] { return std::unique_ptr<SetFunction>(MakeIwata(40)); }},
        Case{"com", [] { return std::unique_ptr<SetFunction>(MakeCom(40, 1)); }},
        Case{"half_products",
             [] { return std::unique_ptr<SetFunction>(MakeHalfProducts(40, 2)); }},
        Case{"facility",
             [] {
               return std::unique_ptr<SetFunction>(
                   MakePerturbedFacility(30, 25, 3));
             }},
        Case{"determinant",
             [] { return std::unique_ptr<SetFunction>(MakeDeterminant(20, 4)); }},
        Case{"cobb_douglas",
             [] { return std::unique_ptr<SetFunction>(MakeCobbDouglas(40, 5)); }}),
    [](const auto& info) { return info.param.name; });

TEST(GeneratorTest, Deterministic) {
  EXPECT_EQ(MakeCom(10, 7)->w1(), MakeCom(10, 7)->w1());
  EXPECT_NE(MakeCom(10, 7)->w1(), MakeCom(10, 8)->w1());
  EXPECT_EQ(MakeDeterminant(6, 1)->kernel(), MakeDeterminant(6, 1)->kernel());
  EXPECT_EQ(MakeRandomQsb(6, 3)->values(), MakeRandomQsb(6, 3)->values());
}

TEST(GeneratorTest, FamiliesSatisfySsbcAtSmallN) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ASSERT_TRUE(SatisfiesSsbc(*MakeCom(n, seed)).holds);
      ASSERT_TRUE(SatisfiesSsbc(*MakeHalfProducts(n, seed)).holds);
      ASSERT_TRUE(SatisfiesSsbc(*MakePerturbedFacility(n, 40, seed)).holds);
      ASSERT_TRUE(SatisfiesSsbc(*MakeDeterminant(n, seed)).holds);
      ASSERT_TRUE(SatisfiesSsbc(*MakeCobbDouglas(n, seed)).holds);
    }
    ASSERT_TRUE(SatisfiesSsbc(*MakeIwata(n)).holds);
  }
}

// Gaussian elimination with partial pivoting, independent of the Cholesky
// path used by the library.
double EliminationDeterminant(std::vector<double> a, int n) {
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
    }
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(a[c * n + k], a[p * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      const double m = a[r * n + c] / a[c * n + c];
      for (int k = c; k < n; ++k) a[r * n + k] -= m * a[c * n + k];
    }
  }
  return det;
}

TEST(DeterminantTest, FullSetMatchesElimination) {
  for (int n : {3, 8, 30}) {
    const auto f = MakeDeterminant(n, static_cast<std::uint64_t>(n));
    const double want = EliminationDeterminant(f->kernel(), n);
    EXPECT_NEAR(f->Evaluate(SubsetBits::Full(n)) / want, 1.0, 1e-6);
  }
}

TEST(GeneratorTest, HalfProductsDefaultCap) {
  const auto f = MakeHalfProducts(10, 1);
  for (double c : f->c()) {
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 5.0);
  }
}

TEST(RandomQsbTest, PassesChecker) {
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto f = MakeRandomQsb(n, seed);
      EXPECT_TRUE(IsQuasiSubmodular(*f).holds) << n << " " << seed;
    }
  }
}

// The transform should usually break submodularity, otherwise the generator
// would only exercise the submodular special case.
TEST(RandomQsbTest, MostlyNotSubmodular) {
  int non_submodular = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    non_submodular += IsSubmodular(*MakeRandomQsb(6, seed)).holds ? 0 : 1;
  }
  EXPECT_GE(non_submodular, 25);
}

TEST(TabulateTest, MatchesEvaluateAndCaps) {
  const auto f = MakeIwata(4);
  const auto t = Tabulate(*f);
  ASSERT_EQ(t.size(), 16u);
  EXPECT_EQ(t[0b1111], f->Evaluate(SubsetBits::Full(4)));
  EXPECT_THROW(Tabulate(*MakeIwata(30)), CapExceeded);
}

}  // namespace
}  // namespace qsopt

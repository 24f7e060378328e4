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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Criteria are computed first and printed in
// order at the end, because the oracle-budget check aggregates runs from the
// others.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "qsopt/baselines.h"
#include "qsopt/checkers.h"
#include "qsopt/exact.h"
#include "qsopt/functions.h"
#include "qsopt/harness.h"
#include "qsopt/maximize.h"
#include "qsopt/minimize.h"
#include "qsopt/rng.h"

namespace qsopt {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

// Runs collected for the iteration and oracle-budget bounds.
struct BudgetLedger {
  int runs = 0;
  int violations = 0;
  std::string first;

  void Record(const std::string& what, int n, int iterations,
              std::int64_t evals) {
    ++runs;
    const std::int64_t budget = 4LL * n * n + 8LL * n;
    if (iterations > n + 1 || evals > budget) {
      if (violations++ == 0) {
        first = Format("%s n=%d iterations=%d evals=%lld", what.c_str(), n,
                       iterations, static_cast<long long>(evals));
      }
    }
  }
};

struct MonotoneLedger {
  int runs = 0;
  int violations = 0;
  std::string first;

  void Fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
};

BudgetLedger budget;
MonotoneLedger monotone;

// Strict decrease of F(X_t) between consecutive scans that changed X.
void CheckMinTrace(const MinTrace& t, const std::string& what) {
  ++monotone.runs;
  for (std::size_t k = 1; k < t.iterations.size(); ++k) {
    if (!(t.iterations[k].value < t.iterations[k - 1].value)) {
      monotone.Fail(what + Format(" uqsfmin t=%zu", k));
    }
  }
}

// Strict increase of each endpoint that moved.
void CheckMaxTrace(const MaxTrace& t, const std::string& what) {
  ++monotone.runs;
  for (std::size_t k = 0; k + 1 < t.iterations.size(); ++k) {
    const MaxIteration& a = t.iterations[k];
    const MaxIteration& b = t.iterations[k + 1];
    const bool ok = (a.added.IsEmpty() || b.fx > a.fx) &&
                    (a.removed.IsEmpty() || b.fy > a.fy) &&
                    (!a.added.IsEmpty() || !a.removed.IsEmpty());
    if (!ok) monotone.Fail(what + Format(" uqsfmax t=%zu", k));
  }
}

struct Reduced {
  MinLatticeResult min;
  MaxResult max;
};

Reduced ReduceAndRecord(const SetFunction& f, const std::string& what) {
  const int n = f.ground_size();
  Reduced r{MinLattice(f), Uqsfmax(f)};
  budget.Record(what + " min/empty", n, r.min.from_empty.iteration_count(),
                r.min.from_empty.eval_calls());
  budget.Record(what + " min/full", n, r.min.from_full.iteration_count(),
                r.min.from_full.eval_calls());
  budget.Record(what + " max", n, r.max.trace.iteration_count(),
                r.max.trace.eval_calls());
  CheckMinTrace(r.min.from_empty, what);
  CheckMinTrace(r.min.from_full, what);
  CheckMaxTrace(r.max.trace, what);
  return r;
}

Outcome Counterexamples() {
  Outcome o;
  const auto p1 = MakeTabular({1.0, 0.0, 1.5, 1.0});
  const PropertyVerdict qsb = IsQuasiSubmodular(*p1);
  const PropertyVerdict sub = IsSubmodular(*p1);
  const bool witness_ok = !sub.holds && sub.witness &&
                          sub.witness->first.ToString() == "{1}" &&
                          sub.witness->second.ToString() == "{2}";
  const auto peaks = MakeTabular({1.0, 1.5, 1.5, 1.0});
  const MaxResult max = Uqsfmax(*peaks);
  const auto local = EnumerateLocalOptima(*peaks, Direction::kMax);
  const bool lattice_ok = max.lattice.ToString() == "[{},{1,2}]";
  const bool local_ok = local.size() == 2 && local[0].ToString() == "{1}" &&
                        local[1].ToString() == "{2}";
  o.pass = qsb.holds && witness_ok && lattice_ok && local_ok;
  o.detail = Format("qsb=%s submodular=%s witness=%s lattice=%s local_max=%zu",
                    qsb.holds ? "true" : "false", sub.holds ? "true" : "false",
                    witness_ok ? "X={1},Y={2}" : "wrong",
                    max.lattice.ToString().c_str(), local.size());
  return o;
}

Outcome Containment() {
  Outcome o;
  int bad_min = 0, bad_max = 0, bad_endpoint = 0, bad_chain = 0;
  std::size_t local_min = 0, local_max = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + k % 10;
    const auto f = MakeRandomQsb(n, 1000 + static_cast<std::uint64_t>(k));
    const std::string what = Format("qsb n=%d seed=%d", n, 1000 + k);
    const Reduced r = ReduceAndRecord(*f, what);

    auto mins = EnumerateLocalOptima(*f, Direction::kMin);
    auto global_min = ExactOptimize(*f, Direction::kMin).optimizers;
    mins.insert(mins.end(), global_min.begin(), global_min.end());
    local_min += mins.size();
    for (const SubsetBits& s : mins) bad_min += r.min.lattice.Contains(s) ? 0 : 1;

    auto maxs = EnumerateLocalOptima(*f, Direction::kMax);
    auto global_max = ExactOptimize(*f, Direction::kMax).optimizers;
    maxs.insert(maxs.end(), global_max.begin(), global_max.end());
    local_max += maxs.size();
    for (const SubsetBits& s : maxs) bad_max += r.max.lattice.Contains(s) ? 0 : 1;

    if (!IsLocalMin(*f, r.min.lattice.lower()) ||
        !IsLocalMin(*f, r.min.lattice.upper())) {
      ++bad_endpoint;
    }

    SubsetBits x = SubsetBits::Empty(n), y = SubsetBits::Full(n);
    for (const MaxIteration& it : r.max.trace.iterations) {
      if (!x.IsSubsetOf(y)) ++bad_chain;
      x = Union(x, it.added);
      y = Difference(y, it.removed);
    }
    if (!x.IsSubsetOf(y)) ++bad_chain;
  }
  o.pass = bad_min + bad_max + bad_endpoint + bad_chain == 0;
  o.detail = Format(
      "200 instances; minima outside [Q+,S+]: %d/%zu, maxima outside "
      "[X+,Y+]: %d/%zu, non-local endpoints: %d, X_t not in Y_t: %d",
      bad_min, local_min, bad_max, local_max, bad_endpoint, bad_chain);
  return o;
}

// Benchmark families at n = 100 feed the monotonicity and budget ledgers.
void FamilyRunsAt100() {
  ExperimentConfig config;
  config.master_seed = 2024;
  for (Family family : {Family::kIwata, Family::kCom, Family::kHalfProducts,
                        Family::kPerturbedFacility, Family::kDeterminant,
                        Family::kCobbDouglas}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = Instantiate(CellSpec(config, family, 100, trial));
      ReduceAndRecord(*f, Format("%s n=100 trial=%d",
                                 std::string(FamilyName(family)).c_str(), trial));
    }
  }
}

Outcome Monotonicity() {
  Outcome o;
  o.pass = monotone.violations == 0;
  o.detail = Format("%d traces, %d violations%s%s", monotone.runs,
                    monotone.violations, monotone.first.empty() ? "" : "; first: ",
                    monotone.first.c_str());
  return o;
}

Outcome Budget() {
  Outcome o;
  o.pass = budget.violations == 0;
  o.detail = Format("%d runs, %d over n+1 scans or 4n^2+8n evaluations%s%s",
                    budget.runs, budget.violations,
                    budget.first.empty() ? "" : "; first: ", budget.first.c_str());
  return o;
}

Outcome Equivalence() {
  Outcome o;
  int disagreements = 0, chain = 0, qsb_true = 0;
  for (int k = 0; k < 500; ++k) {
    Rng rng(77, static_cast<std::uint64_t>(k));
    const int n = 1 + k % 6;
    std::vector<double> t(std::size_t{1} << n);
    switch (k % 4) {
      case 0:  // arbitrary values spaced 1e-6 apart
        for (double& v : t) v = static_cast<double>(rng.Below(1'000'000)) * 1e-6;
        break;
      case 1:  // small integers, many ties
        for (double& v : t) v = static_cast<double>(rng.Below(3));
        break;
      case 2:  // quasi-submodular
        t = MakeRandomQsb(n, static_cast<std::uint64_t>(k))->values();
        break;
      default: {  // quasi-submodular with one value disturbed
        t = MakeRandomQsb(n, static_cast<std::uint64_t>(k))->values();
        t[rng.Below(t.size())] += rng.Uniform(-4.0, 4.0);
      }
    }
    const bool qsb = IsQuasiSubmodular(t).holds;
    const bool ssbc = SatisfiesSsbc(t).holds;
    disagreements += qsb != ssbc;
    chain += ssbc && !SatisfiesWeakMarginal(t).holds;
    qsb_true += qsb;
  }
  o.pass = disagreements == 0 && chain == 0;
  o.detail = Format(
      "500 tables (%d quasi-submodular); qsb/ssbc disagreements: %d, "
      "ssbc without weak marginal: %d",
      qsb_true, disagreements, chain);
  return o;
}

Outcome ReductionRates() {
  Outcome o;
  struct Target {
    Family family;
    int n;
    int trials;
    std::function<bool(double max_rate, double min_rate)> ok;
    const char* bound;
  };
  const std::vector<Target> targets = {
      {Family::kIwata, 5000, 1,
       [](double mx, double mn) { return mx >= 0.99 && mn >= 0.99; }, ">=0.99/>=0.99"},
      {Family::kCom, 5000, 3,
       [](double mx, double mn) { return mx >= 0.95 && mn >= 0.99; }, ">=0.95/>=0.99"},
      {Family::kCobbDouglas, 5000, 3,
       [](double mx, double mn) { return mx == 1.0 && mn == 1.0; }, "=1/=1"},
      {Family::kDeterminant, 100, 10,
       [](double mx, double mn) {
         return std::abs(mx - 0.87) <= 0.15 && std::abs(mn - 0.726) <= 0.15;
       },
       "0.87+-0.15/0.726+-0.15"},
      {Family::kHalfProducts, 100, 10,
       [](double mx, double mn) {
         return std::abs(mx - 0.512) <= 0.15 && std::abs(mn - 0.488) <= 0.15;
       },
       "0.512+-0.15/0.488+-0.15"},
      {Family::kPerturbedFacility, 100, 10,
       [](double mx, double mn) { return mx >= 0.95 && mn >= 0.95; }, ">=0.95/>=0.95"},
  };
  ExperimentConfig config;
  config.master_seed = 7;
  std::ostringstream detail;
  for (const Target& t : targets) {
    double max_sum = 0.0, min_sum = 0.0;
    for (int trial = 0; trial < t.trials; ++trial) {
      const auto f = Instantiate(CellSpec(config, t.family, t.n, trial));
      const Reduced r = ReduceAndRecord(
          *f, Format("%s n=%d trial=%d", std::string(FamilyName(t.family)).c_str(),
                     t.n, trial));
      max_sum += ReductionRate(r.max.lattice, t.n);
      min_sum += ReductionRate(r.min.lattice, t.n);
    }
    const double mx = max_sum / t.trials, mn = min_sum / t.trials;
    const bool ok = t.ok(mx, mn);
    o.pass = o.pass && ok;
    detail << FamilyName(t.family) << ' ' << Format("%.3f/%.3f", mx, mn)
           << (ok ? "" : Format(" (want %s)", t.bound)) << "; ";
  }
  o.detail = "max/min " + detail.str();
  return o;
}

Outcome RatioPattern() {
  Outcome o;
  ExperimentConfig config;
  config.experiments = {"ratio"};
  config.families = {Family::kIwata, Family::kCom, Family::kHalfProducts,
                     Family::kPerturbedFacility};
  config.sizes = {12, 16};
  config.family_sizes["iwata"] = {12, 13, 14, 15, 16};
  config.trials = 25;
  config.master_seed = 99;
  const int iwata_trials = 10;

  std::map<std::pair<std::string, std::string>, std::pair<double, int>> sums;
  std::map<std::string, int> instances;
  int failures = 0;
  for (const bool iwata : {true, false}) {
    ExperimentConfig c = config;
    if (iwata) {
      c.families = {Family::kIwata};
      c.trials = iwata_trials;
    } else {
      c.families.erase(c.families.begin());
    }
    const RunReport report = RunRatioExperiment(c);
    failures += static_cast<int>(report.failures.size());
    for (const ReportRow& row : report.rows) {
      if (row.algorithm == "rp") ++instances[row.family];
      if (!row.ratio) continue;
      auto& s = sums[{row.family, row.algorithm}];
      s.first += *row.ratio;
      ++s.second;
    }
  }
  std::ostringstream detail;
  for (const std::string family : {"iwata", "com", "half_products", "perturbed_facility"}) {
    detail << family << '[' << instances[family] << "]:";
    if (instances[family] < 50) o.pass = false;
    for (const std::string alg : {"rp", "rls", "rg"}) {
      const auto plain = sums[{family, alg}];
      const auto pre = sums[{family, "u" + alg}];
      const double mp = plain.second ? plain.first / plain.second : 0.0;
      const double mu = pre.second ? pre.first / pre.second : 0.0;
      bool ok = plain.second > 0 && pre.second > 0 && mu >= mp - 0.02;
      if (family != "half_products") ok = ok && mu >= 0.97;
      o.pass = o.pass && ok;
      detail << ' ' << alg << Format("=%.3f/u%.3f", mp, mu) << (ok ? "" : "!");
    }
    detail << "; ";
  }
  o.pass = o.pass && failures == 0;
  o.detail = detail.str() + Format("failures=%d", failures);
  return o;
}

std::vector<double> CutTable(int n, Rng& rng) {
  std::vector<double> w(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Bernoulli(0.5)) w[i * n + j] = rng.Uniform01();
    }
  }
  std::vector<double> t(std::size_t{1} << n, 0.0);
  for (std::uint64_t m = 0; m < t.size(); ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (((m >> i) & 1) != ((m >> j) & 1)) t[m] += w[i * n + j];
      }
    }
  }
  return t;
}

Outcome DoubleGreedySanity() {
  Outcome o;
  double sum = 0.0, worst = 1.0;
  int invalid = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 6 + k % 7;
    const std::uint64_t seed = 500 + static_cast<std::uint64_t>(k);
    std::unique_ptr<SetFunction> f;
    switch (k % 3) {
      case 0: f = MakeCom(n, seed); break;
      case 1: f = MakePerturbedFacility(n, 20, seed); break;
      default: {
        Rng rng(seed);
        f = MakeTabular(CutTable(n, rng));
      }
    }
    const auto table = Tabulate(*f);
    if (!IsSubmodular(table).holds ||
        *std::min_element(table.begin(), table.end()) < 0.0) {
      ++invalid;
      continue;
    }
    const double exact = ExactOptimize(*f, Direction::kMax).value;
    const double value = RandomizedBidirectionalGreedy(*f, 1, seed).value;
    const double ratio = exact > 0.0 ? value / exact : 1.0;
    sum += ratio;
    worst = std::min(worst, ratio);
  }
  const double mean = sum / (200 - invalid);
  o.pass = invalid == 0 && mean >= 0.33;
  o.detail = Format("200 instances (com/facility/cut), mean ratio %.4f, worst "
                    "%.4f, invalid instances %d",
                    mean, worst, invalid);
  return o;
}

Outcome NestedMinimizers() {
  Outcome o;
  int checks = 0, failed = 0;
  for (int k = 0; k < 50; ++k) {
    const auto f = MakeRandomQsb(8, 3000 + static_cast<std::uint64_t>(k));
    Rng rng(31, static_cast<std::uint64_t>(k));
    for (int p = 0; p < 50; ++p) {
      SubsetBits a(8), b(8);
      for (int i = 1; i <= 8; ++i) {
        if (rng.Bernoulli(0.6)) {
          b.Add(i);
          if (rng.Bernoulli(0.5)) a.Add(i);
        }
      }
      ++checks;
      failed += NestedArgminCheck(*f, a, b) ? 0 : 1;
    }
  }
  o.pass = failed == 0;
  o.detail = Format("%d (A,B) pairs over 50 instances, %d failed", checks, failed);
  return o;
}

std::string MaskedCsv(const fs::path& path) {
  std::ifstream in(path);
  std::string line, out;
  std::vector<bool> masked;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (masked.empty()) {
      for (const std::string& c : cells) masked.push_back(c.rfind("wall_ms", 0) == 0);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += (i < masked.size() && masked[i]) ? "*" : cells[i];
      out += ',';
    }
    out += '\n';
  }
  return out;
}

Outcome BenchDeterminism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "qsopt_acceptance_bench";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "config.json") << R"({
  "experiments": ["reduction", "ratio", "timing"],
  "families": ["iwata", "com", "half_products", "perturbed_facility", "determinant"],
  "sizes": [12],
  "family_sizes": {"com": [12, 200]},
  "facility_d": 50,
  "trials": 3,
  "timing_repeats": 2,
  "baseline_trials": 4
})";
  std::vector<std::string> files;
  for (const char* run : {"run1", "run2"}) {
    const std::string config = (dir / "config.json").string();
    const std::string out = (dir / run).string();
    const char* argv[] = {"qsopt", "--seed", "12345", "--quiet", "bench",
                          "--config", config.c_str(), "--out", out.c_str()};
    std::ostringstream sink;
    const int code = RunQsopt(9, argv, sink, sink);
    if (code != 0) {
      o.pass = false;
      o.detail = Format("bench exited with %d: %s", code, sink.str().c_str());
      return o;
    }
  }
  int compared = 0, differing = 0;
  for (const auto& entry : fs::directory_iterator(dir / "run1")) {
    const fs::path other = dir / "run2" / entry.path().filename();
    ++compared;
    if (!fs::exists(other) || MaskedCsv(entry.path()) != MaskedCsv(other)) {
      ++differing;
    }
  }
  o.pass = compared == 6 && differing == 0;
  o.detail = Format("%d report files compared with wall-time columns masked, %d differ",
                    compared, differing);
  fs::remove_all(dir);
  return o;
}

template <typename Fn>
Outcome Timed(Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  o.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return o;
}

Outcome WithLimit(Outcome o, double limit_seconds) {
  if (o.seconds >= limit_seconds) {
    o.pass = false;
    o.detail += Format(" [over %.0f s limit]", limit_seconds);
  }
  return o;
}

}  // namespace
}  // namespace qsopt

int main() {
  using namespace qsopt;
  std::map<int, Outcome> results;
  std::map<int, std::string> titles = {
      {1, "counterexample suite"},
      {2, "lattice containment on random quasi-submodular instances"},
      {3, "strict monotonicity of traces"},
      {4, "iteration and oracle budgets"},
      {5, "quasi-submodular / single sub-crossing equivalence"},
      {6, "lattice reduction rates"},
      {7, "approximation-ratio pattern of prefiltered baselines"},
      {8, "randomized double greedy on nonnegative submodular"},
      {9, "nested minimizers"},
      {10, "bench determinism"},
  };
  results[1] = WithLimit(Timed(Counterexamples), 1.0);
  results[2] = WithLimit(Timed(Containment), 120.0);
  results[5] = Timed(Equivalence);
  const Outcome family_runs = Timed([] {
    FamilyRunsAt100();
    return Outcome{};
  });
  results[6] = WithLimit(Timed(ReductionRates), 600.0);
  results[3] = Timed(Monotonicity);
  results[3].seconds += family_runs.seconds;
  if (!family_runs.pass) {
    results[3].pass = false;
    results[3].detail += "; " + family_runs.detail;
  }
  results[4] = Timed(Budget);
  results[7] = Timed(RatioPattern);
  results[8] = Timed(DoubleGreedySanity);
  results[9] = Timed(NestedMinimizers);
  results[10] = Timed(BenchDeterminism);

  int failed = 0;
  for (const auto& [id, o] : results) {
    std::printf("AC%-2d %s  %s: %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL",
                titles[id].c_str(), o.detail.c_str(), o.seconds);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}

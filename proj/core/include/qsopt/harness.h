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
// Experiment harness: lattice-reduction rates, approximation ratios against
// exact optima, and running times, over seeded benchmark instances.

#ifndef QSOPT_HARNESS_H_
#define QSOPT_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qsopt/baselines.h"
#include "qsopt/function_spec.h"
#include "qsopt/maximize.h"

namespace qsopt {

enum class ReportFormat { kCsv, kJson };

// Config file: a JSON object with these fields (all optional except
// families and sizes).
struct ExperimentConfig {
  std::vector<std::string> experiments{"reduction"};  // reduction|ratio|timing
  std::vector<Family> families;
  std::vector<int> sizes;
  // Per-family override of sizes, keyed by family tag.
  std::map<std::string, std::vector<int>> family_sizes;
  int facility_d = 400;
  int trials = 1;  // instances per (family, n) cell
  std::uint64_t master_seed = 0;
  std::vector<std::string> algorithms{"rp", "rls", "rg"};
  int baseline_trials = kDefaultTrials;
  int enumeration_cap = kDefaultEnumerationCap;
  int timing_repeats = 3;
  int threads = 1;
  std::string output_dir = ".";
  ReportFormat format = ReportFormat::kCsv;

  std::vector<int> SizesFor(Family family) const;
};

// Throws FormatError on malformed or invalid configs.
ExperimentConfig ParseExperimentConfig(std::string_view json);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);
void ValidateConfig(const ExperimentConfig& config);

// Seed of the trial-th (0-based) instance in cell (family, n).
std::uint64_t InstanceSeed(std::uint64_t master_seed, Family family, int n,
                           int trial);
FunctionSpec CellSpec(const ExperimentConfig& config, Family family, int n,
                      int trial);

// Baseline maximizer by CLI name: rp | rls | rg | dg.
Maximizer BaselineByName(std::string_view name, int trials, std::uint64_t seed);

// (n - free elements) / n.
double ReductionRate(const IntervalLattice& lattice, int n);

inline constexpr std::string_view kReportCsvHeader =
    "family,n,seed,algorithm,direction,value,exact_value,ratio,"
    "reduction_rate,iterations,eval_calls,wall_ms";

struct ReportRow {
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  Direction direction = Direction::kMax;
  double value = 0.0;
  std::optional<double> exact_value;
  std::optional<double> ratio;
  std::optional<double> reduction_rate;
  int iterations = 0;
  std::int64_t eval_calls = 0;
  double wall_ms = 0.0;
  // Exact optimum not positive, so no ratio; written as "NA".
  bool flagged = false;
};

struct CellSummary {
  std::string family;
  int n = 0;
  std::string algorithm;
  Direction direction = Direction::kMax;
  int runs = 0;
  std::optional<double> rate_mean, rate_min, rate_max;
  std::optional<double> ratio_mean;
  int ratio_count = 0;
  int flagged = 0;
  double wall_ms_mean = 0.0;
  double wall_ms_median = 0.0;
  double eval_calls_mean = 0.0;
};

struct RunFailure {
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  std::string message;
  bool invariant = false;  // a proven containment or bound failed
};

struct RunReport {
  std::string experiment;
  std::vector<ReportRow> rows;
  std::vector<CellSummary> cells;
  std::vector<RunFailure> failures;

  bool has_invariant_failure() const;
};

RunReport RunReductionExperiment(const ExperimentConfig& config);
RunReport RunRatioExperiment(const ExperimentConfig& config);
RunReport RunTimingExperiment(const ExperimentConfig& config);
// Dispatches on "reduction" | "ratio" | "timing".
RunReport RunExperiment(const ExperimentConfig& config,
                        std::string_view experiment);

// Groups rows by (family, n, algorithm, direction) in first-seen order.
std::vector<CellSummary> Summarize(const std::vector<ReportRow>& rows);

void WriteReportCsv(const RunReport& report, std::ostream& out);
void WriteSummaryCsv(const RunReport& report, std::ostream& out);
void WriteReportJson(const RunReport& report, std::ostream& out);

// Runs every configured experiment and writes <experiment>.csv and
// <experiment>_summary.csv (or <experiment>.json) into out_dir. Returns the
// reports in config order.
std::vector<RunReport> RunBench(const ExperimentConfig& config,
                                const std::filesystem::path& out_dir);

}  // namespace qsopt

#endif  // QSOPT_HARNESS_H_

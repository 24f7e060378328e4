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

#include "qsopt/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>
#include "qsopt/errors.h"
#include "qsopt/exact.h"
#include "qsopt/minimize.h"
#include "qsopt/rng.h"

namespace qsopt {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t NameStream(std::string_view name) {
  // FNV-1a; stable across platforms.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Instance {
  Family family;
  int n;
  int trial;
  FunctionSpec spec;
};

std::vector<Instance> Instances(const ExperimentConfig& config) {
  std::vector<Instance> out;
  for (Family family : config.families) {
    for (int n : config.SizesFor(family)) {
      for (int trial = 0; trial < config.trials; ++trial) {
        out.push_back({family, n, trial, CellSpec(config, family, n, trial)});
      }
    }
  }
  return out;
}

struct TaskOutput {
  std::vector<ReportRow> rows;
  std::vector<RunFailure> failures;
};

// Runs fn(i) for i in [0, count) on up to `threads` workers; outputs are kept
// by index so the merged report is in canonical order.
std::vector<TaskOutput> RunTasks(std::size_t count, int threads,
                                 const std::function<TaskOutput(std::size_t)>& fn) {
  std::vector<TaskOutput> outputs(count);
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) outputs[i] = fn(i);
    return outputs;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) outputs[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return outputs;
}

// Wraps one instance's work, turning exceptions into recorded failures.
TaskOutput Guarded(const Instance& inst,
                   const std::function<void(TaskOutput&)>& body) {
  TaskOutput out;
  try {
    body(out);
  } catch (const InvariantViolation& e) {
    out.rows.clear();
    out.failures.push_back({std::string(FamilyName(inst.family)), inst.n,
                            inst.spec.seed, e.what(), true});
  } catch (const std::exception& e) {
    out.rows.clear();
    out.failures.push_back({std::string(FamilyName(inst.family)), inst.n,
                            inst.spec.seed, e.what(), false});
  }
  return out;
}

RunReport Merge(std::string experiment, std::vector<TaskOutput> outputs) {
  RunReport report;
  report.experiment = std::move(experiment);
  for (auto& o : outputs) {
    for (auto& r : o.rows) report.rows.push_back(std::move(r));
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  report.cells = Summarize(report.rows);
  return report;
}

ReportRow BaseRow(const Instance& inst, std::string algorithm,
                  Direction direction) {
  ReportRow row;
  row.family = std::string(FamilyName(inst.family));
  row.n = inst.n;
  row.seed = inst.spec.seed;
  row.algorithm = std::move(algorithm);
  row.direction = direction;
  return row;
}

void SetRatio(ReportRow& row, double exact) {
  row.exact_value = exact;
  if (exact > 0.0) {
    row.ratio = row.value / exact;
  } else {
    row.flagged = true;
  }
}

std::uint64_t AlgorithmSeed(std::uint64_t instance_seed,
                            std::string_view algorithm) {
  return DeriveSeed(instance_seed, NameStream(algorithm));
}

}  // namespace

std::vector<int> ExperimentConfig::SizesFor(Family family) const {
  const auto it = family_sizes.find(std::string(FamilyName(family)));
  return it != family_sizes.end() ? it->second : sizes;
}

ExperimentConfig ParseExperimentConfig(std::string_view text) {
  using nlohmann::json;
  ExperimentConfig config;
  try {
    const json doc = json::parse(text.begin(), text.end());
    if (!doc.is_object()) throw FormatError("config must be a JSON object");
    if (doc.contains("experiments")) {
      config.experiments = doc.at("experiments").get<std::vector<std::string>>();
    }
    for (const auto& tag : doc.at("families").get<std::vector<std::string>>()) {
      config.families.push_back(ParseFamily(tag));
    }
    if (doc.contains("sizes")) config.sizes = doc.at("sizes").get<std::vector<int>>();
    if (doc.contains("family_sizes")) {
      for (const auto& [tag, sizes] : doc.at("family_sizes").items()) {
        ParseFamily(tag);
        config.family_sizes[tag] = sizes.get<std::vector<int>>();
      }
    }
    config.facility_d = doc.value("facility_d", config.facility_d);
    config.trials = doc.value("trials", config.trials);
    config.master_seed = doc.value("master_seed", config.master_seed);
    if (doc.contains("algorithms")) {
      config.algorithms = doc.at("algorithms").get<std::vector<std::string>>();
    }
    config.baseline_trials = doc.value("baseline_trials", config.baseline_trials);
    config.enumeration_cap = doc.value("enumeration_cap", config.enumeration_cap);
    config.timing_repeats = doc.value("timing_repeats", config.timing_repeats);
    config.threads = doc.value("threads", config.threads);
    config.output_dir = doc.value("output_dir", config.output_dir);
    const std::string format = doc.value("format", std::string("csv"));
    if (format == "csv") {
      config.format = ReportFormat::kCsv;
    } else if (format == "json") {
      config.format = ReportFormat::kJson;
    } else {
      throw FormatError("format must be csv or json, got '" + format + "'");
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed experiment config: ") + e.what());
  }
  ValidateConfig(config);
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseExperimentConfig(buffer.str());
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.families.empty()) throw FormatError("config: no families");
  if (config.trials < 1) throw FormatError("config: trials must be >= 1");
  if (config.baseline_trials < 1) {
    throw FormatError("config: baseline_trials must be >= 1");
  }
  if (config.timing_repeats < 1) {
    throw FormatError("config: timing_repeats must be >= 1");
  }
  if (config.enumeration_cap < 0 || config.enumeration_cap > 40) {
    throw FormatError("config: enumeration_cap must be in [0, 40]");
  }
  if (config.facility_d < 1) throw FormatError("config: facility_d must be >= 1");
  for (const auto& e : config.experiments) {
    if (e != "reduction" && e != "ratio" && e != "timing") {
      throw FormatError("config: unknown experiment '" + e + "'");
    }
  }
  for (const auto& a : config.algorithms) {
    if (a != "rp" && a != "rls" && a != "rg" && a != "dg") {
      throw FormatError("config: unknown algorithm '" + a + "'");
    }
  }
  for (Family family : config.families) {
    if (family == Family::kTabular) {
      throw FormatError("config: tabular instances cannot be generated");
    }
    const std::vector<int> sizes = config.SizesFor(family);
    if (sizes.empty()) {
      throw FormatError("config: no sizes for family " +
                        std::string(FamilyName(family)));
    }
    for (int n : sizes) {
      if (n < 1) throw FormatError("config: sizes must be >= 1");
    }
  }
}

std::uint64_t InstanceSeed(std::uint64_t master_seed, Family family, int n,
                           int trial) {
  std::uint64_t s = DeriveSeed(master_seed, static_cast<std::uint64_t>(family) + 1);
  s = DeriveSeed(s, static_cast<std::uint64_t>(n));
  return DeriveSeed(s, static_cast<std::uint64_t>(trial));
}

FunctionSpec CellSpec(const ExperimentConfig& config, Family family, int n,
                      int trial) {
  FunctionSpec spec;
  spec.family = family;
  spec.n = n;
  // Iwata ignores the seed, but baseline seeds derive from it, so trials of
  // a deterministic family still differ.
  spec.seed = InstanceSeed(config.master_seed, family, n, trial);
  spec.facility_d = config.facility_d;
  return spec;
}

Maximizer BaselineByName(std::string_view name, int trials, std::uint64_t seed) {
  if (name == "rp") {
    return [=](const SetFunction& f) {
      return RandomPermutationGreedy(f, trials, seed);
    };
  }
  if (name == "rls") {
    return [=](const SetFunction& f) {
      return RandomizedLocalSearch(f, trials, seed);
    };
  }
  if (name == "rg") {
    return [=](const SetFunction& f) {
      return RandomizedBidirectionalGreedy(f, trials, seed);
    };
  }
  if (name == "dg") {
    return [](const SetFunction& f) {
      std::vector<int> order(static_cast<std::size_t>(f.ground_size()));
      std::iota(order.begin(), order.end(), 1);
      return DoubleGreedy(f, order, false);
    };
  }
  throw std::invalid_argument("unknown baseline '" + std::string(name) + "'");
}

double ReductionRate(const IntervalLattice& lattice, int n) {
  if (n < 1) throw std::invalid_argument("reduction rate needs n >= 1");
  return static_cast<double>(n - lattice.FreeCount()) / n;
}

bool RunReport::has_invariant_failure() const {
  return std::any_of(failures.begin(), failures.end(),
                     [](const RunFailure& f) { return f.invariant; });
}

RunReport RunReductionExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  const std::vector<Instance> instances = Instances(config);
  auto outputs = RunTasks(instances.size(), config.threads, [&](std::size_t i) {
    const Instance& inst = instances[i];
    return Guarded(inst, [&](TaskOutput& out) {
      const auto f = Instantiate(inst.spec);

      auto start = Clock::now();
      const MinLatticeResult min = MinLattice(*f);
      ReportRow min_row = BaseRow(inst, "uqsfmin", Direction::kMin);
      min_row.wall_ms = MillisSince(start);
      min_row.value = std::min(f->Evaluate(min.lattice.lower()),
                               f->Evaluate(min.lattice.upper()));
      min_row.reduction_rate = ReductionRate(min.lattice, inst.n);
      min_row.iterations = min.from_empty.iteration_count() +
                           min.from_full.iteration_count();
      min_row.eval_calls =
          min.from_empty.eval_calls() + min.from_full.eval_calls();

      start = Clock::now();
      const MaxResult max = Uqsfmax(*f);
      ReportRow max_row = BaseRow(inst, "uqsfmax", Direction::kMax);
      max_row.wall_ms = MillisSince(start);
      max_row.value = std::max(f->Evaluate(max.lattice.lower()),
                               f->Evaluate(max.lattice.upper()));
      max_row.reduction_rate = ReductionRate(max.lattice, inst.n);
      max_row.iterations = max.trace.iteration_count();
      max_row.eval_calls = max.trace.eval_calls();

      out.rows.push_back(std::move(min_row));
      out.rows.push_back(std::move(max_row));
    });
  });
  return Merge("reduction", std::move(outputs));
}

RunReport RunRatioExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  const std::vector<Instance> instances = Instances(config);
  auto outputs = RunTasks(instances.size(), config.threads, [&](std::size_t i) {
    const Instance& inst = instances[i];
    return Guarded(inst, [&](TaskOutput& out) {
      const auto f = Instantiate(inst.spec);
      const MaxResult reduced = Uqsfmax(*f);
      const double exact = ExactOptimize(*f, Direction::kMax, reduced.lattice,
                                         config.enumeration_cap)
                               .value;
      for (const std::string& alg : config.algorithms) {
        const std::uint64_t seed = AlgorithmSeed(inst.spec.seed, alg);
        const Maximizer inner = BaselineByName(alg, config.baseline_trials, seed);

        auto start = Clock::now();
        const BaselineResult plain = inner(*f);
        ReportRow plain_row = BaseRow(inst, alg, Direction::kMax);
        plain_row.wall_ms = MillisSince(start);
        plain_row.value = plain.value;
        plain_row.eval_calls = plain.oracle_calls;
        SetRatio(plain_row, exact);

        start = Clock::now();
        const PrefixResult pre = UPrefix(*f, inner);
        ReportRow pre_row = BaseRow(inst, "u" + alg, Direction::kMax);
        pre_row.wall_ms = MillisSince(start);
        pre_row.value = pre.value;
        pre_row.eval_calls = pre.eval_calls;
        pre_row.reduction_rate = ReductionRate(pre.lattice, inst.n);
        pre_row.iterations = pre.trace.iteration_count();
        SetRatio(pre_row, exact);

        out.rows.push_back(std::move(plain_row));
        out.rows.push_back(std::move(pre_row));
      }
    });
  });
  return Merge("ratio", std::move(outputs));
}

RunReport RunTimingExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  const std::vector<Instance> instances = Instances(config);
  // Timings are only meaningful without competing workers.
  auto outputs = RunTasks(instances.size(), 1, [&](std::size_t i) {
    const Instance& inst = instances[i];
    return Guarded(inst, [&](TaskOutput& out) {
      const auto f = Instantiate(inst.spec);
      for (const std::string& alg : config.algorithms) {
        const std::uint64_t seed = AlgorithmSeed(inst.spec.seed, alg);
        const Maximizer inner = BaselineByName(alg, config.baseline_trials, seed);
        for (const bool prefixed : {false, true}) {
          auto run = [&](ReportRow& row) {
            if (prefixed) {
              const PrefixResult r = UPrefix(*f, inner);
              row.value = r.value;
              row.eval_calls = r.eval_calls;
              row.reduction_rate = ReductionRate(r.lattice, inst.n);
              row.iterations = r.trace.iteration_count();
            } else {
              const BaselineResult r = inner(*f);
              row.value = r.value;
              row.eval_calls = r.oracle_calls;
            }
          };
          ReportRow warmup;
          run(warmup);
          for (int rep = 0; rep < config.timing_repeats; ++rep) {
            ReportRow row =
                BaseRow(inst, prefixed ? "u" + alg : alg, Direction::kMax);
            const auto start = Clock::now();
            run(row);
            row.wall_ms = MillisSince(start);
            out.rows.push_back(std::move(row));
          }
        }
      }
    });
  });
  return Merge("timing", std::move(outputs));
}

RunReport RunExperiment(const ExperimentConfig& config,
                        std::string_view experiment) {
  if (experiment == "reduction") return RunReductionExperiment(config);
  if (experiment == "ratio") return RunRatioExperiment(config);
  if (experiment == "timing") return RunTimingExperiment(config);
  throw FormatError("unknown experiment '" + std::string(experiment) + "'");
}

std::vector<CellSummary> Summarize(const std::vector<ReportRow>& rows) {
  std::vector<CellSummary> cells;
  std::vector<std::vector<const ReportRow*>> members;
  for (const ReportRow& row : rows) {
    auto it = std::find_if(cells.begin(), cells.end(), [&](const CellSummary& c) {
      return c.family == row.family && c.n == row.n &&
             c.algorithm == row.algorithm && c.direction == row.direction;
    });
    if (it == cells.end()) {
      CellSummary c;
      c.family = row.family;
      c.n = row.n;
      c.algorithm = row.algorithm;
      c.direction = row.direction;
      cells.push_back(c);
      members.emplace_back();
      it = cells.end() - 1;
    }
    members[static_cast<std::size_t>(it - cells.begin())].push_back(&row);
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    CellSummary& c = cells[k];
    const auto& group = members[k];
    c.runs = static_cast<int>(group.size());
    double rate_sum = 0.0, ratio_sum = 0.0, wall_sum = 0.0, calls_sum = 0.0;
    int rate_count = 0;
    std::vector<double> walls;
    for (const ReportRow* r : group) {
      if (r->reduction_rate) {
        const double v = *r->reduction_rate;
        rate_sum += v;
        ++rate_count;
        c.rate_min = c.rate_min ? std::min(*c.rate_min, v) : v;
        c.rate_max = c.rate_max ? std::max(*c.rate_max, v) : v;
      }
      if (r->ratio) {
        ratio_sum += *r->ratio;
        ++c.ratio_count;
      }
      if (r->flagged) ++c.flagged;
      wall_sum += r->wall_ms;
      calls_sum += static_cast<double>(r->eval_calls);
      walls.push_back(r->wall_ms);
    }
    if (rate_count > 0) c.rate_mean = rate_sum / rate_count;
    if (c.ratio_count > 0) c.ratio_mean = ratio_sum / c.ratio_count;
    c.wall_ms_mean = wall_sum / c.runs;
    c.eval_calls_mean = calls_sum / c.runs;
    std::sort(walls.begin(), walls.end());
    const std::size_t mid = walls.size() / 2;
    c.wall_ms_median = walls.size() % 2 == 1
                           ? walls[mid]
                           : 0.5 * (walls[mid - 1] + walls[mid]);
  }
  return cells;
}

void WriteReportCsv(const RunReport& report, std::ostream& out) {
  out << kReportCsvHeader << '\n';
  char wall[32];
  for (const ReportRow& r : report.rows) {
    std::snprintf(wall, sizeof(wall), "%.3f", r.wall_ms);
    out << r.family << ',' << r.n << ',' << r.seed << ',' << r.algorithm << ','
        << DirectionName(r.direction) << ',' << Fmt(r.value) << ','
        << (r.exact_value ? Fmt(*r.exact_value) : "") << ','
        << (r.flagged ? "NA" : r.ratio ? Fmt(*r.ratio) : "") << ','
        << (r.reduction_rate ? Fmt(*r.reduction_rate) : "") << ','
        << r.iterations << ',' << r.eval_calls << ',' << wall << '\n';
  }
}

void WriteSummaryCsv(const RunReport& report, std::ostream& out) {
  out << "family,n,algorithm,direction,runs,rate_mean,rate_min,rate_max,"
         "ratio_mean,ratio_count,flagged,wall_ms_mean,wall_ms_median,"
         "eval_calls_mean\n";
  auto opt = [](const std::optional<double>& v) { return v ? Fmt(*v) : ""; };
  char wall[64];
  for (const CellSummary& c : report.cells) {
    std::snprintf(wall, sizeof(wall), "%.3f,%.3f", c.wall_ms_mean,
                  c.wall_ms_median);
    out << c.family << ',' << c.n << ',' << c.algorithm << ','
        << DirectionName(c.direction) << ',' << c.runs << ','
        << opt(c.rate_mean) << ',' << opt(c.rate_min) << ','
        << opt(c.rate_max) << ',' << opt(c.ratio_mean) << ','
        << c.ratio_count << ',' << c.flagged << ',' << wall << ','
        << Fmt(c.eval_calls_mean) << '\n';
  }
}

void WriteReportJson(const RunReport& report, std::ostream& out) {
  using nlohmann::json;
  auto opt = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  json doc;
  doc["experiment"] = report.experiment;
  doc["rows"] = json::array();
  for (const ReportRow& r : report.rows) {
    doc["rows"].push_back({{"family", r.family},
                           {"n", r.n},
                           {"seed", r.seed},
                           {"algorithm", r.algorithm},
                           {"direction", DirectionName(r.direction)},
                           {"value", r.value},
                           {"exact_value", opt(r.exact_value)},
                           {"ratio", opt(r.ratio)},
                           {"flagged", r.flagged},
                           {"reduction_rate", opt(r.reduction_rate)},
                           {"iterations", r.iterations},
                           {"eval_calls", r.eval_calls},
                           {"wall_ms", r.wall_ms}});
  }
  doc["cells"] = json::array();
  for (const CellSummary& c : report.cells) {
    doc["cells"].push_back({{"family", c.family},
                            {"n", c.n},
                            {"algorithm", c.algorithm},
                            {"direction", DirectionName(c.direction)},
                            {"runs", c.runs},
                            {"rate_mean", opt(c.rate_mean)},
                            {"rate_min", opt(c.rate_min)},
                            {"rate_max", opt(c.rate_max)},
                            {"ratio_mean", opt(c.ratio_mean)},
                            {"ratio_count", c.ratio_count},
                            {"flagged", c.flagged},
                            {"wall_ms_mean", c.wall_ms_mean},
                            {"wall_ms_median", c.wall_ms_median},
                            {"eval_calls_mean", c.eval_calls_mean}});
  }
  doc["failures"] = json::array();
  for (const RunFailure& f : report.failures) {
    doc["failures"].push_back({{"family", f.family},
                               {"n", f.n},
                               {"seed", f.seed},
                               {"message", f.message},
                               {"invariant", f.invariant}});
  }
  out << doc.dump(2) << '\n';
}

std::vector<RunReport> RunBench(const ExperimentConfig& config,
                                const std::filesystem::path& out_dir) {
  ValidateConfig(config);
  std::filesystem::create_directories(out_dir);
  std::vector<RunReport> reports;
  for (const std::string& experiment : config.experiments) {
    RunReport report = RunExperiment(config, experiment);
    if (config.format == ReportFormat::kJson) {
      std::ofstream out(out_dir / (experiment + ".json"));
      WriteReportJson(report, out);
    } else {
      std::ofstream rows(out_dir / (experiment + ".csv"));
      WriteReportCsv(report, rows);
      std::ofstream summary(out_dir / (experiment + "_summary.csv"));
      WriteSummaryCsv(report, summary);
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace qsopt

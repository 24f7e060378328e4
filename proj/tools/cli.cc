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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsopt/baselines.h"
#include "qsopt/checkers.h"
#include "qsopt/errors.h"
#include "qsopt/exact.h"
#include "qsopt/function_spec.h"
#include "qsopt/harness.h"
#include "qsopt/maximize.h"
#include "qsopt/minimize.h"

namespace qsopt {
namespace {

using nlohmann::json;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  bool quiet = false;
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Set literals contain commas, so they are always quoted in CSV.
std::string Quoted(const SubsetBits& s) { return '"' + s.ToString() + '"'; }

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  return out;
}

void WriteMinTrace(const MinTrace& trace, std::ostream& out) {
  for (const MinIteration& it : trace.iterations) {
    out << it.t << ',' << Quoted(it.added) << ',' << Quoted(it.removed) << ','
        << Num(it.value) << ',' << it.eval_calls << '\n';
  }
}

void WriteMaxTrace(const MaxTrace& trace, std::ostream& out) {
  out << "t,added,removed,fx,fy,eval_calls\n";
  for (const MaxIteration& it : trace.iterations) {
    out << it.t << ',' << Quoted(it.added) << ',' << Quoted(it.removed) << ','
        << Num(it.fx) << ',' << Num(it.fy) << ',' << it.eval_calls << '\n';
  }
}

int Check(const GlobalOptions& g, const std::string& spec_path,
          const std::string& property, std::ostream& out) {
  const auto f = Instantiate(LoadSpec(spec_path));
  std::vector<std::pair<std::string, PropertyVerdict>> verdicts;
  if (property == "all" || property == "submodular") {
    verdicts.emplace_back("submodular", IsSubmodular(*f));
  }
  if (property == "all" || property == "qsb") {
    verdicts.emplace_back("quasi_submodular", IsQuasiSubmodular(*f));
  }
  if (property == "all" || property == "ssbc") {
    verdicts.emplace_back("ssbc", SatisfiesSsbc(*f));
  }
  if (property == "all" || property == "weak-marginal") {
    verdicts.emplace_back("weak_marginal", SatisfiesWeakMarginal(*f));
  }
  if (g.format == "json") {
    json doc = json::object();
    for (const auto& [name, v] : verdicts) {
      json entry = {{"holds", v.holds}};
      if (v.witness) {
        entry["condition"] = v.witness->condition;
        entry["first"] = v.witness->first.ToString();
        entry["second"] = v.witness->second.ToString();
        if (v.witness->element != 0) entry["element"] = v.witness->element;
        entry["values"] = v.witness->values;
      }
      doc[name] = entry;
    }
    out << doc.dump() << '\n';
  } else {
    for (const auto& [name, v] : verdicts) {
      out << name << ": " << (v.holds ? "true" : "false");
      if (!v.holds) out << "  " << v.Describe();
      out << '\n';
    }
  }
  return kExitOk;
}

int Min(const GlobalOptions& g, const std::string& spec_path,
        const std::string& start, const std::string& trace_path,
        std::ostream& out) {
  const auto f = Instantiate(LoadSpec(spec_path));
  const int n = f->ground_size();
  std::vector<const MinTrace*> traces;
  std::optional<MinLatticeResult> lattice;
  std::optional<MinResult> single;
  if (start.empty()) {
    lattice = MinLattice(*f);
    traces = {&lattice->from_empty, &lattice->from_full};
  } else {
    const SubsetBits x0 = start == "empty"  ? SubsetBits::Empty(n)
                          : start == "full" ? SubsetBits::Full(n)
                                            : SubsetBits::Parse(start, n);
    single = Uqsfmin(*f, x0);
    traces = {&single->trace};
  }
  if (!trace_path.empty()) {
    std::ofstream trace = OpenOutput(trace_path);
    trace << "t,added,removed,value,eval_calls\n";
    for (const MinTrace* t : traces) WriteMinTrace(*t, trace);
  }
  if (g.quiet) return kExitOk;
  if (lattice) {
    const IntervalLattice& l = lattice->lattice;
    if (g.format == "json") {
      out << json{{"q_plus", l.lower().ToString()},
                  {"s_plus", l.upper().ToString()},
                  {"free", l.FreeCount()},
                  {"reduction_rate", ReductionRate(l, n)}}
                 .dump()
          << '\n';
    } else {
      out << "Q+=" << l.lower().ToString() << " S+=" << l.upper().ToString()
          << " free=" << l.FreeCount()
          << " reduction_rate=" << Num(ReductionRate(l, n)) << '\n';
    }
  } else {
    const bool local = IsLocalMin(*f, single->result);
    const double value = f->Evaluate(single->result);
    if (g.format == "json") {
      out << json{{"result", single->result.ToString()},
                  {"value", value},
                  {"is_local_min", local}}
                 .dump()
          << '\n';
    } else {
      out << "result=" << single->result.ToString() << " value=" << Num(value)
          << " is_local_min=" << (local ? "true" : "false") << '\n';
    }
  }
  return kExitOk;
}

int Max(const GlobalOptions& g, const std::string& spec_path,
        const std::string& trace_path, std::ostream& out) {
  const auto f = Instantiate(LoadSpec(spec_path));
  const MaxResult r = Uqsfmax(*f);
  if (!trace_path.empty()) {
    std::ofstream trace = OpenOutput(trace_path);
    WriteMaxTrace(r.trace, trace);
  }
  if (g.quiet) return kExitOk;
  const IntervalLattice& l = r.lattice;
  const double rate = ReductionRate(l, f->ground_size());
  if (g.format == "json") {
    out << json{{"x_plus", l.lower().ToString()},
                {"y_plus", l.upper().ToString()},
                {"free", l.FreeCount()},
                {"reduction_rate", rate},
                {"x_plus_is_local_max", r.trace.lower_is_local_max},
                {"y_plus_is_local_max", r.trace.upper_is_local_max}}
               .dump()
        << '\n';
  } else {
    out << "X+=" << l.lower().ToString() << " Y+=" << l.upper().ToString()
        << " free=" << l.FreeCount() << " reduction_rate=" << Num(rate)
        << '\n';
  }
  return kExitOk;
}

int Baseline(const GlobalOptions& g, const std::string& spec_path,
             const std::string& alg, int trials, bool prefilter,
             std::ostream& out) {
  const auto f = Instantiate(LoadSpec(spec_path));
  const Maximizer inner = BaselineByName(alg, trials, g.seed.value_or(0));
  SubsetBits set;
  double value = 0.0;
  std::int64_t calls = 0;
  if (prefilter) {
    const PrefixResult r = UPrefix(*f, inner);
    set = r.set;
    value = r.value;
    calls = r.eval_calls;
  } else {
    const BaselineResult r = inner(*f);
    set = r.set;
    value = r.value;
    calls = r.oracle_calls;
  }
  if (g.quiet) return kExitOk;
  const std::string name = (prefilter ? "u" : "") + alg;
  if (g.format == "json") {
    out << json{{"algorithm", name},
                {"set", set.ToString()},
                {"value", value},
                {"oracle_calls", calls}}
               .dump()
        << '\n';
  } else {
    out << "algorithm=" << name << " set=" << set.ToString()
        << " value=" << Num(value) << " oracle_calls=" << calls << '\n';
  }
  return kExitOk;
}

int Exact(const GlobalOptions& g, const std::string& spec_path,
          const std::string& direction, const std::string& within_from,
          int cap, std::ostream& out) {
  const auto f = Instantiate(LoadSpec(spec_path));
  const Direction dir = direction == "min" ? Direction::kMin : Direction::kMax;
  IntervalLattice within = IntervalLattice::Full(f->ground_size());
  if (within_from == "min-lattice") {
    within = MinLattice(*f).lattice;
  } else if (within_from == "max-lattice") {
    within = Uqsfmax(*f).lattice;
  }
  const ExactResult r = ExactOptimize(*f, dir, within, cap);
  if (g.quiet) return kExitOk;
  std::vector<std::string> sets;
  for (const SubsetBits& s : r.optimizers) sets.push_back(s.ToString());
  if (g.format == "json") {
    out << json{{"direction", direction},
                {"within", within.ToString()},
                {"value", r.value},
                {"optimizers", sets}}
               .dump()
        << '\n';
  } else {
    out << "value=" << Num(r.value) << " optimizers=";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      out << (i ? ";" : "") << sets[i];
    }
    out << " within=" << within.ToString() << '\n';
  }
  return kExitOk;
}

int Bench(const GlobalOptions& g, bool format_given,
          const std::string& config_path, const std::string& out_dir,
          std::ostream& out, std::ostream& err) {
  ExperimentConfig config = LoadExperimentConfig(config_path);
  if (g.seed) config.master_seed = *g.seed;
  if (format_given) {
    config.format = g.format == "json" ? ReportFormat::kJson : ReportFormat::kCsv;
  }
  const std::string dir = out_dir.empty() ? config.output_dir : out_dir;
  const std::vector<RunReport> reports = RunBench(config, dir);
  bool invariant = false;
  for (const RunReport& r : reports) {
    for (const RunFailure& f : r.failures) {
      err << r.experiment << ": " << f.family << " n=" << f.n
          << " seed=" << f.seed << (f.invariant ? " INVARIANT: " : ": ")
          << f.message << '\n';
    }
    invariant = invariant || r.has_invariant_failure();
    if (!g.quiet) {
      out << r.experiment << ": " << r.rows.size() << " rows, "
          << r.failures.size() << " failures\n";
    }
  }
  return invariant ? kExitInvariant : kExitOk;
}

int Gen(const GlobalOptions& g, const std::string& family, int n, double c_max,
        int d, double ridge, const std::string& out_path, std::ostream& out) {
  FunctionSpec spec;
  spec.family = ParseFamily(family);
  if (spec.family == Family::kTabular) {
    throw FormatError("gen cannot produce tabular specs; write values by hand");
  }
  spec.n = n;
  spec.seed = g.seed.value_or(0);
  spec.c_max = c_max;
  spec.facility_d = d;
  spec.ridge = ridge;
  Instantiate(spec);  // validate before writing
  if (out_path.empty()) {
    out << ToJson(spec);
  } else {
    SaveSpec(spec, out_path);
  }
  return kExitOk;
}

}  // namespace

int RunQsopt(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Quasi-submodular set-function optimization", "qsopt"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "Seed for randomized algorithms")
          ->capture_default_str();
  CLI::Option* format_opt =
      app.add_option("--format", g.format, "Output format")
          ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--quiet", g.quiet, "Suppress summaries on stdout");

  std::string spec_path, trace_path, start, property = "all";
  auto* check = app.add_subcommand("check", "Check submodularity-type properties");
  check->add_option("--spec", spec_path, "Function spec (JSON)")->required();
  check->add_option("--property", property)
      ->check(CLI::IsMember({"all", "submodular", "qsb", "ssbc", "weak-marginal"}));

  auto* min = app.add_subcommand("min", "Lattice reduction for minimization");
  min->add_option("--spec", spec_path, "Function spec (JSON)")->required();
  min->add_option("--start", start,
                  "empty, full or a set literal; default runs both ends");
  min->add_option("--trace", trace_path, "Trace CSV output");

  auto* max = app.add_subcommand("max", "Lattice reduction for maximization");
  max->add_option("--spec", spec_path, "Function spec (JSON)")->required();
  max->add_option("--trace", trace_path, "Trace CSV output");

  std::string alg;
  int trials = kDefaultTrials;
  bool prefilter = false;
  auto* baseline = app.add_subcommand("baseline", "Run a maximization baseline");
  baseline->add_option("--spec", spec_path, "Function spec (JSON)")->required();
  baseline->add_option("--alg", alg)
      ->required()
      ->check(CLI::IsMember({"rp", "rls", "rg", "dg"}));
  baseline->add_option("--trials", trials, "Trials or restarts")
      ->check(CLI::PositiveNumber);
  baseline->add_flag("--prefilter", prefilter, "Reduce the lattice first");
  // Accept --seed after the subcommand as well.
  baseline->add_option("--seed", seed);

  std::string direction, within_from = "full";
  int cap = kDefaultEnumerationCap;
  auto* exact = app.add_subcommand("exact", "Exhaustive optimization");
  exact->add_option("--spec", spec_path, "Function spec (JSON)")->required();
  exact->add_option("--direction", direction)
      ->required()
      ->check(CLI::IsMember({"min", "max"}));
  exact->add_option("--within-from", within_from)
      ->check(CLI::IsMember({"full", "min-lattice", "max-lattice"}));
  exact->add_option("--cap", cap, "Maximum free elements to enumerate");

  std::string config_path, out_dir;
  auto* bench = app.add_subcommand("bench", "Run configured experiments");
  bench->add_option("--config", config_path, "Experiment config (JSON)")
      ->required();
  bench->add_option("--out", out_dir, "Report directory");

  std::string family;
  int n = 0, d = 400;
  double c_max = 0.0, ridge = 1e-3;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated function spec");
  gen->add_option("--family", family)->required();
  gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--c-max", c_max, "half_products: c upper bound");
  gen->add_option("--d", d, "perturbed_facility: columns");
  gen->add_option("--ridge", ridge, "determinant: diagonal ridge per n");
  gen->add_option("--out", gen_out, "Spec output path; stdout if omitted");
  gen->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }
  if (seed_opt->count() > 0 || baseline->count("--seed") > 0 ||
      gen->count("--seed") > 0) {
    g.seed = seed;
  }

  try {
    if (*check) return Check(g, spec_path, property, out);
    if (*min) return Min(g, spec_path, start, trace_path, out);
    if (*max) return Max(g, spec_path, trace_path, out);
    if (*baseline) return Baseline(g, spec_path, alg, trials, prefilter, out);
    if (*exact) return Exact(g, spec_path, direction, within_from, cap, out);
    if (*bench) {
      return Bench(g, format_opt->count() > 0, config_path, out_dir, out, err);
    }
    if (*gen) return Gen(g, family, n, c_max, d, ridge, gen_out, out);
  } catch (const InvariantViolation& e) {
    err << "qsopt: invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "qsopt: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace qsopt

// alloc-lab: command-line surface over the allocation analysis library.
//
// Subcommands: eval, optimize, bounds, regions, sweep, mc, verify.
// Output modes: plain text (default), --json (schema_version 1), --csv.
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include "alloclab/bounds.hpp"
#include "alloclab/evaluator.hpp"
#include "alloclab/fixtures.hpp"
#include "alloclab/montecarlo.hpp"
#include "alloclab/optimizer.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

using namespace alloclab;
using ojson = nlohmann::ordered_json;

namespace {

// ---- output plumbing -------------------------------------------------------

enum class OutputMode { text, json, csv };

struct Record {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> results;
  // Optional tabular payload; all rows share `columns`.
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string provenance = "exact";  // exact | float | montecarlo
};

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit(const Record& rec, OutputMode mode) {
  if (mode == OutputMode::json) {
    ojson j;
    j["schema_version"] = "1";
    j["command"] = rec.command;
    ojson inputs = ojson::object();
    for (const auto& [k, v] : rec.inputs) inputs[k] = v;
    j["inputs"] = std::move(inputs);
    ojson results = ojson::object();
    for (const auto& [k, v] : rec.results) results[k] = v;
    if (!rec.columns.empty()) {
      ojson arr = ojson::array();
      for (const auto& row : rec.rows) {
        ojson obj = ojson::object();
        for (std::size_t i = 0; i < rec.columns.size(); ++i) obj[rec.columns[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      results["rows"] = std::move(arr);
    }
    j["results"] = std::move(results);
    j["provenance"] = rec.provenance;
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (mode == OutputMode::csv) {
    if (!rec.columns.empty()) {
      for (std::size_t i = 0; i < rec.columns.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << csv_escape(rec.columns[i]);
      }
      std::cout << '\n';
      for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) std::cout << ',';
          std::cout << csv_escape(row[i]);
        }
        std::cout << '\n';
      }
    } else {
      for (std::size_t i = 0; i < rec.results.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << csv_escape(rec.results[i].first);
      }
      std::cout << '\n';
      for (std::size_t i = 0; i < rec.results.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << csv_escape(rec.results[i].second);
      }
      std::cout << '\n';
    }
    return;
  }
  for (const auto& [k, v] : rec.results) std::cout << k << " = " << v << "\n";
  if (!rec.columns.empty()) {
    for (std::size_t i = 0; i < rec.columns.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << rec.columns[i];
    }
    std::cout << '\n';
    for (const auto& row : rec.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << row[i];
      }
      std::cout << '\n';
    }
  }
}

// ---- parsing helpers -------------------------------------------------------

Fraction parse_frac(const char* flag, const std::string& text) {
  try {
    return Fraction::parse(text);
  } catch (const DomainError& e) {
    throw DomainError(std::string(flag) + ": " + e.what());
  }
}

Allocation parse_alloc(const std::string& text) {
  if (text.empty()) throw DomainError("--alloc: allocation must list at least one amount");
  std::vector<Fraction> xs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string part = comma == std::string::npos ? text.substr(start)
                                                  : text.substr(start, comma - start);
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    xs.push_back(parse_frac("--alloc", part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  try {
    return Allocation(std::move(xs));
  } catch (const DomainError& e) {
    throw DomainError(std::string("--alloc: ") + e.what());
  }
}

std::pair<std::string, std::string> value_cells(const EvalResult& res) {
  if (res.mode == EvalMode::exact) {
    return {res.exact.str(), res.exact.decimal_sig(15)};
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", res.value);
  return {"", buf};
}

const char* provenance_of(EvalMode mode) {
  switch (mode) {
    case EvalMode::exact: return "exact";
    case EvalMode::float64: return "float";
    case EvalMode::montecarlo: return "montecarlo";
  }
  return "exact";
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::uint32_t default_thread_count() {
  if (const char* env = std::getenv("ALLOC_LAB_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || parsed < 1) {
      throw DomainError("ALLOC_LAB_THREADS must be a positive integer");
    }
    return static_cast<std::uint32_t>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

void add_value_results(Record& rec, const EvalResult& res) {
  const auto [exact, dec] = value_cells(res);
  rec.results.emplace_back("value", exact);
  rec.results.emplace_back("value_dec", dec);
  rec.results.emplace_back("mode", to_string(res.mode));
  if (res.mode != EvalMode::exact) {
    rec.results.emplace_back("error_radius", fmt_double(res.error_radius));
  }
  rec.provenance = provenance_of(res.mode);
}

// ---- shared flag bundles ---------------------------------------------------

struct EvalArgs {
  std::string model;
  std::string alloc;
  std::string p, T, ell;
  std::int64_t n = 0, r = 0;
};

struct OptimizeArgs {
  std::string model;
  std::string p, T;
  std::int64_t n = 0, r = 0, grid = 0;
};

struct BoundsArgs {
  std::string p, T;
  std::int64_t n = 0, r = 0;
};

struct RegionsArgs {
  std::int64_t n = 0;
  std::string p_step = "1/20";
  std::string t_step = "1/4";
};

struct SweepArgs {
  std::string family;
  std::int64_t n = 0, r = 0;
  std::string p_lo, p_hi, p_step;
  std::string t_lo, t_hi, t_step;
};

struct McArgs {
  std::string model;
  std::string alloc;
  std::string p;
  std::int64_t r = 0;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  std::uint32_t streams = 1;
  std::uint32_t threads = 0;  // 0: ALLOC_LAB_THREADS or machine parallelism
};

// ---- subcommand implementations ---------------------------------------------

Record run_eval(const EvalArgs& args) {
  Record rec;
  rec.command = "eval";
  if (args.model == "independent") {
    if (args.alloc.empty() || args.p.empty()) {
      throw DomainError("eval --model independent requires --alloc and --p");
    }
    const Allocation alloc = parse_alloc(args.alloc);
    const Fraction p = parse_frac("--p", args.p);
    rec.inputs = {{"model", "independent"}, {"alloc", args.alloc}, {"p", p.str()}};
    add_value_results(rec, eval_independent(alloc, p));
  } else if (args.model == "subset") {
    if (args.alloc.empty() || args.r <= 0) {
      throw DomainError("eval --model subset requires --alloc and --r");
    }
    const Allocation alloc = parse_alloc(args.alloc);
    rec.inputs = {{"model", "subset"}, {"alloc", args.alloc}, {"r", std::to_string(args.r)}};
    add_value_results(rec, eval_fixed_subset(alloc, args.r));
  } else if (args.model == "probsym") {
    if (args.n <= 0 || args.r <= 0 || args.T.empty() || args.ell.empty()) {
      throw DomainError("eval --model probsym requires --n, --r, --T and --ell");
    }
    const Fraction T = parse_frac("--T", args.T);
    const Fraction ell = parse_frac("--ell", args.ell);
    rec.inputs = {{"model", "probsym"},
                  {"n", std::to_string(args.n)},
                  {"r", std::to_string(args.r)},
                  {"T", T.str()},
                  {"ell", ell.str()}};
    add_value_results(rec, eval_prob_symmetric(args.n, args.r, T, ell));
  } else {
    throw DomainError("--model: expected independent, subset, or probsym");
  }
  return rec;
}

void add_scan_table(Record& rec, const char* param_name,
                    const std::vector<ScanEntry>& scanned) {
  rec.columns = {param_name, "value", "value_dec"};
  for (const auto& e : scanned) {
    auto [exact, dec] = value_cells(e.value);
    if (e.value.mode != EvalMode::exact) rec.provenance = "float";
    rec.rows.push_back({std::to_string(e.param), std::move(exact), std::move(dec)});
  }
}

Record run_optimize(const OptimizeArgs& args) {
  Record rec;
  rec.command = "optimize";
  if (args.n <= 0) throw DomainError("optimize requires --n");
  if (args.T.empty()) throw DomainError("optimize requires --T");
  const Fraction T = parse_frac("--T", args.T);
  const std::string n_str = std::to_string(args.n);

  if (args.model == "independent-symmetric") {
    if (args.p.empty()) throw DomainError("optimize --model independent-symmetric requires --p");
    const Fraction p = parse_frac("--p", args.p);
    rec.inputs = {{"model", args.model}, {"n", n_str}, {"p", p.str()}, {"T", T.str()}};
    const auto res = optimal_symmetric_independent(args.n, p, T);
    rec.results.emplace_back("m_star", std::to_string(res.best_param));
    add_value_results(rec, res.best_value);
    add_scan_table(rec, "m", res.scanned);
  } else if (args.model == "subset-symmetric") {
    if (args.r <= 0) throw DomainError("optimize --model subset-symmetric requires --r");
    rec.inputs = {
        {"model", args.model}, {"n", n_str}, {"r", std::to_string(args.r)}, {"T", T.str()}};
    const auto res = optimal_symmetric_fixed_subset(args.n, args.r, T);
    rec.results.emplace_back("m_star", std::to_string(res.best_param));
    add_value_results(rec, res.best_value);
    add_scan_table(rec, "m", res.scanned);
  } else if (args.model == "probsym") {
    if (args.r <= 0) throw DomainError("optimize --model probsym requires --r");
    rec.inputs = {
        {"model", args.model}, {"n", n_str}, {"r", std::to_string(args.r)}, {"T", T.str()}};
    const auto res = optimal_ell(args.n, args.r, T);
    rec.results.emplace_back("ell_star", std::to_string(res.best_param));
    add_value_results(rec, res.best_value);
    add_scan_table(rec, "ell", res.scanned);
  } else if (args.model == "independent" || args.model == "subset") {
    if (args.grid <= 0) {
      throw DomainError("optimize --model " + args.model +
                        " searches explicit allocations; pass --grid <q>");
    }
    AccessModel model;
    rec.inputs = {{"model", args.model}, {"n", n_str}};
    if (args.model == "independent") {
      if (args.p.empty()) throw DomainError("optimize --model independent requires --p");
      const Fraction p = parse_frac("--p", args.p);
      model = IndependentAccess{p};
      rec.inputs.emplace_back("p", p.str());
    } else {
      if (args.r <= 0) throw DomainError("optimize --model subset requires --r");
      model = FixedSubsetAccess{args.r};
      rec.inputs.emplace_back("r", std::to_string(args.r));
    }
    rec.inputs.emplace_back("T", T.str());
    rec.inputs.emplace_back("grid", std::to_string(args.grid));
    const auto res = grid_search(args.n, model, T, args.grid);
    std::string nums, amounts;
    for (std::size_t i = 0; i < res.best.numerators.size(); ++i) {
      if (i) {
        nums += ',';
        amounts += ',';
      }
      nums += std::to_string(res.best.numerators[i]);
      amounts += Fraction(BigInt(res.best.numerators[i]), BigInt(res.best.q)).str();
    }
    rec.results.emplace_back("q", std::to_string(res.best.q));
    rec.results.emplace_back("numerators", nums);
    rec.results.emplace_back("alloc", amounts);
    add_value_results(rec, res.best_value);
    rec.results.emplace_back("best_is_symmetric", res.best_is_symmetric ? "true" : "false");
    rec.results.emplace_back("scanned", std::to_string(res.scanned));
  } else {
    throw DomainError(
        "--model: expected independent-symmetric, subset-symmetric, probsym, "
        "independent, or subset");
  }
  return rec;
}

Record run_bounds(const BoundsArgs& args) {
  Record rec;
  rec.command = "bounds";
  if (args.n <= 0) throw DomainError("bounds requires --n");
  const bool has_pt = !args.p.empty() || !args.T.empty();
  if (has_pt && (args.p.empty() || args.T.empty())) {
    throw DomainError("bounds needs --p and --T together");
  }
  if (!has_pt && args.r <= 0) {
    throw DomainError("bounds needs --p/--T, or --r, or both");
  }
  rec.inputs.emplace_back("n", std::to_string(args.n));
  if (has_pt) {
    const Fraction p = parse_frac("--p", args.p);
    const Fraction T = parse_frac("--T", args.T);
    rec.inputs.emplace_back("p", p.str());
    rec.inputs.emplace_back("T", T.str());
    const Fraction lemma1 = recovery_upper_bound(args.n, p, T);
    const Fraction gap = max_spread_gap_bound(args.n, p, T);
    const Fraction refined = improved_upper_bound(args.n, p, T);
    rec.results.emplace_back("lemma1", lemma1.str());
    rec.results.emplace_back("lemma1_dec", lemma1.decimal_sig(15));
    rec.results.emplace_back("theorem2_gap", gap.str());
    rec.results.emplace_back("theorem2_gap_dec", gap.decimal_sig(15));
    rec.results.emplace_back("improved", refined.str());
    rec.results.emplace_back("improved_dec", refined.decimal_sig(15));
  }
  if (args.r > 0) {
    rec.inputs.emplace_back("r", std::to_string(args.r));
    const auto th = fixed_subset_threshold(args.n, args.r);
    rec.results.emplace_back("subset_threshold", th.threshold.str());
    rec.results.emplace_back("subset_threshold_tight", th.tight ? "true" : "false");
    rec.results.emplace_back("min_budget_certain",
                             min_budget_for_certain_recovery(args.n, args.r).str());
    if (args.r >= 2) {
      const auto pt = prob_symmetric_thresholds(args.n, args.r);
      rec.results.emplace_back("probsym_budget_threshold", fmt_double(pt.budget_threshold));
      rec.results.emplace_back("probsym_budget_certificate", pt.budget_certificate.str());
      rec.results.emplace_back("probsym_ps_threshold", pt.ps_threshold.str());
    }
  }
  return rec;
}

Record run_regions(const RegionsArgs& args) {
  Record rec;
  rec.command = "regions";
  if (args.n <= 0) throw DomainError("regions requires --n");
  const Fraction p_step = parse_frac("--p-step", args.p_step);
  const Fraction t_step = parse_frac("--T-step", args.t_step);
  if (p_step.sign() <= 0 || p_step >= Fraction(1)) {
    throw DomainError("--p-step: must lie in (0, 1)");
  }
  rec.inputs = {{"n", std::to_string(args.n)}, {"p-step", p_step.str()},
                {"T-step", t_step.str()}};
  SweepSpec spec;
  spec.family = SweepFamily::regime;
  spec.n = args.n;
  spec.p = Range{p_step, Fraction(1) - p_step, p_step};
  spec.T = Range{Fraction(1), Fraction(args.n), t_step};
  const auto rows = sweep(spec);
  if (!rows.empty()) {
    for (const auto& [col, _] : rows.front().cells) rec.columns.push_back(col);
    for (const auto& row : rows) {
      std::vector<std::string> out;
      out.reserve(row.cells.size());
      for (const auto& [_, val] : row.cells) out.push_back(val);
      rec.rows.push_back(std::move(out));
    }
  }
  rec.results.emplace_back("row_count", std::to_string(rec.rows.size()));
  return rec;
}

Record run_sweep(const SweepArgs& args) {
  Record rec;
  rec.command = "sweep";
  SweepSpec spec;
  if (args.family == "independent") {
    spec.family = SweepFamily::independent_symmetric;
  } else if (args.family == "subset") {
    spec.family = SweepFamily::subset_symmetric;
  } else if (args.family == "probsym") {
    spec.family = SweepFamily::prob_symmetric;
  } else if (args.family == "regime") {
    spec.family = SweepFamily::regime;
  } else {
    throw DomainError("--family: expected independent, subset, probsym, or regime");
  }
  spec.n = args.n;
  rec.inputs = {{"family", args.family}, {"n", std::to_string(args.n)}};
  if (args.r > 0) {
    spec.r = args.r;
    rec.inputs.emplace_back("r", std::to_string(args.r));
  }
  if (!args.p_lo.empty() || !args.p_hi.empty() || !args.p_step.empty()) {
    if (args.p_lo.empty() || args.p_hi.empty() || args.p_step.empty()) {
      throw DomainError("sweep needs --p-lo, --p-hi and --p-step together");
    }
    spec.p = Range{parse_frac("--p-lo", args.p_lo), parse_frac("--p-hi", args.p_hi),
                   parse_frac("--p-step", args.p_step)};
    rec.inputs.emplace_back("p", args.p_lo + ".." + args.p_hi + " step " + args.p_step);
  }
  if (args.t_lo.empty() || args.t_hi.empty() || args.t_step.empty()) {
    throw DomainError("sweep needs --T-lo, --T-hi and --T-step");
  }
  spec.T = Range{parse_frac("--T-lo", args.t_lo), parse_frac("--T-hi", args.t_hi),
                 parse_frac("--T-step", args.t_step)};
  rec.inputs.emplace_back("T", args.t_lo + ".." + args.t_hi + " step " + args.t_step);

  const auto rows = sweep(spec);
  if (!rows.empty()) {
    for (const auto& [col, _] : rows.front().cells) rec.columns.push_back(col);
    for (const auto& row : rows) {
      std::vector<std::string> out;
      out.reserve(row.cells.size());
      for (std::size_t i = 0; i < row.cells.size(); ++i) {
        out.push_back(row.cells[i].second);
        // A populated value_dec with an empty exact value marks a float row.
        if (rec.columns[i] == "value" && row.cells[i].second.empty()) {
          rec.provenance = "float";
        }
      }
      rec.rows.push_back(std::move(out));
    }
  }
  rec.results.emplace_back("row_count", std::to_string(rec.rows.size()));
  return rec;
}

Record run_mc(const McArgs& args) {
  Record rec;
  rec.command = "mc";
  if (args.alloc.empty()) throw DomainError("mc requires --alloc");
  const Allocation alloc = parse_alloc(args.alloc);
  AccessModel model;
  rec.inputs = {{"model", args.model}, {"alloc", args.alloc}};
  if (args.model == "independent") {
    if (args.p.empty()) throw DomainError("mc --model independent requires --p");
    const Fraction p = parse_frac("--p", args.p);
    model = IndependentAccess{p};
    rec.inputs.emplace_back("p", p.str());
  } else if (args.model == "subset") {
    if (args.r <= 0) throw DomainError("mc --model subset requires --r");
    model = FixedSubsetAccess{args.r};
    rec.inputs.emplace_back("r", std::to_string(args.r));
  } else {
    throw DomainError("--model: expected independent or subset");
  }
  McConfig cfg;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.streams = args.streams;
  cfg.threads = args.threads > 0 ? args.threads : default_thread_count();
  rec.inputs.emplace_back("trials", std::to_string(cfg.trials));
  rec.inputs.emplace_back("seed", std::to_string(cfg.seed));
  rec.inputs.emplace_back("streams", std::to_string(cfg.streams));
  rec.inputs.emplace_back("threads", std::to_string(cfg.threads));
  const auto res = mc_estimate(alloc, model, cfg);
  rec.results.emplace_back("estimate", fmt_double(res.value));
  rec.results.emplace_back("error_radius", fmt_double(res.error_radius));
  rec.results.emplace_back("mode", to_string(res.mode));
  rec.provenance = provenance_of(res.mode);
  return rec;
}

// Returns the process exit code (0 all pass, 1 any failure).
int run_verify(const std::string& filter, OutputMode mode) {
  Record rec;
  rec.command = "verify";
  if (!filter.empty()) rec.inputs.emplace_back("filter", filter);
  rec.columns = {"id", "status", "detail"};
  std::vector<std::string> failing;
  int ran = 0, passed = 0;
  for (const auto& fixture : reference_fixtures()) {
    if (!filter.empty() && fixture.id.find(filter) == std::string::npos) continue;
    ++ran;
    const auto outcome = fixture.run();
    if (outcome.pass) {
      ++passed;
    } else {
      failing.push_back(fixture.id);
    }
    rec.rows.push_back(
        {fixture.id, outcome.pass ? "pass" : "fail", outcome.pass ? "" : outcome.detail});
  }
  if (ran == 0) throw DomainError("--filter: no fixture id contains '" + filter + "'");
  rec.results.emplace_back("ran", std::to_string(ran));
  rec.results.emplace_back("passed", std::to_string(passed));

  if (mode == OutputMode::text) {
    for (const auto& row : rec.rows) {
      if (row[1] == "fail") std::cout << "FAIL " << row[0] << ": " << row[2] << "\n";
    }
    if (failing.empty()) {
      std::cout << passed << " fixtures passed\n";
    } else {
      std::cout << passed << " of " << ran << " fixtures passed; failing:";
      for (const auto& id : failing) std::cout << ' ' << id;
      std::cout << "\n";
    }
  } else {
    emit(rec, mode);
  }
  return failing.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"storage allocation analysis: exact evaluators, optimizers, bounds"};
  app.require_subcommand(1);
  bool json_flag = false, csv_flag = false;
  app.add_flag("--json", json_flag, "emit a JSON record");
  app.add_flag("--csv", csv_flag, "emit CSV");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate the recovery probability");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--model", eval_args.model, "independent | subset | probsym")
      ->required();
  eval_cmd->add_option("--alloc", eval_args.alloc, "comma-separated per-node amounts");
  eval_cmd->add_option("--p", eval_args.p, "access probability");
  eval_cmd->add_option("--r", eval_args.r, "accessed subset size");
  eval_cmd->add_option("--n", eval_args.n, "node count (probsym)");
  eval_cmd->add_option("--T", eval_args.T, "total budget (probsym)");
  eval_cmd->add_option("--ell", eval_args.ell, "spreading parameter (probsym)");

  OptimizeArgs opt_args;
  auto* opt_cmd = app.add_subcommand("optimize", "find the best spreading or allocation");
  opt_cmd->fallthrough();
  opt_cmd
      ->add_option("--model", opt_args.model,
                   "independent-symmetric | subset-symmetric | probsym | independent | subset")
      ->required();
  opt_cmd->add_option("--n", opt_args.n, "node count")->required();
  opt_cmd->add_option("--p", opt_args.p, "access probability");
  opt_cmd->add_option("--r", opt_args.r, "accessed subset size");
  opt_cmd->add_option("--T", opt_args.T, "total budget")->required();
  opt_cmd->add_option("--grid", opt_args.grid, "grid denominator q for explicit search");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "upper bounds and thresholds");
  bounds_cmd->fallthrough();
  bounds_cmd->add_option("--n", bounds_args.n, "node count")->required();
  bounds_cmd->add_option("--p", bounds_args.p, "access probability");
  bounds_cmd->add_option("--T", bounds_args.T, "total budget");
  bounds_cmd->add_option("--r", bounds_args.r, "accessed subset size");

  RegionsArgs regions_args;
  auto* regions_cmd =
      app.add_subcommand("regions", "classification grid over (T, p), CSV-style");
  regions_cmd->fallthrough();
  regions_cmd->add_option("--n", regions_args.n, "node count")->required();
  regions_cmd->add_option("--p-step", regions_args.p_step, "p grid step (default 1/20)");
  regions_cmd->add_option("--T-step", regions_args.t_step, "T grid step (default 1/4)");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "optimizer sweeps over parameter ranges");
  sweep_cmd->fallthrough();
  sweep_cmd
      ->add_option("--family", sweep_args.family,
                   "independent | subset | probsym | regime")
      ->required();
  sweep_cmd->add_option("--n", sweep_args.n, "node count")->required();
  sweep_cmd->add_option("--r", sweep_args.r, "accessed subset size");
  sweep_cmd->add_option("--p-lo", sweep_args.p_lo, "p range start");
  sweep_cmd->add_option("--p-hi", sweep_args.p_hi, "p range end");
  sweep_cmd->add_option("--p-step", sweep_args.p_step, "p range step");
  sweep_cmd->add_option("--T-lo", sweep_args.t_lo, "T range start");
  sweep_cmd->add_option("--T-hi", sweep_args.t_hi, "T range end");
  sweep_cmd->add_option("--T-step", sweep_args.t_step, "T range step");

  McArgs mc_args;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of an explicit allocation");
  mc_cmd->fallthrough();
  mc_cmd->add_option("--model", mc_args.model, "independent | subset")->required();
  mc_cmd->add_option("--alloc", mc_args.alloc, "comma-separated per-node amounts")
      ->required();
  mc_cmd->add_option("--p", mc_args.p, "access probability");
  mc_cmd->add_option("--r", mc_args.r, "accessed subset size");
  mc_cmd->add_option("--trials", mc_args.trials, "trial count (default 10^6)");
  mc_cmd->add_option("--seed", mc_args.seed, "RNG seed (default 0)");
  mc_cmd->add_option("--streams", mc_args.streams, "logical streams (default 1)");
  mc_cmd->add_option("--threads", mc_args.threads,
                     "worker threads (default: ALLOC_LAB_THREADS or machine parallelism)");

  std::string verify_filter;
  auto* verify_cmd = app.add_subcommand("verify", "replay the pinned reference fixtures");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--filter", verify_filter, "run only fixture ids containing this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputMode mode = json_flag   ? OutputMode::json
                            : csv_flag  ? OutputMode::csv
                                        : OutputMode::text;
    if (json_flag && csv_flag) throw DomainError("choose one of --json or --csv");
    if (verify_cmd->parsed()) return run_verify(verify_filter, mode);
    Record rec;
    if (eval_cmd->parsed()) {
      rec = run_eval(eval_args);
    } else if (opt_cmd->parsed()) {
      rec = run_optimize(opt_args);
    } else if (bounds_cmd->parsed()) {
      rec = run_bounds(bounds_args);
    } else if (regions_cmd->parsed()) {
      rec = run_regions(regions_args);
    } else if (sweep_cmd->parsed()) {
      rec = run_sweep(sweep_args);
    } else if (mc_cmd->parsed()) {
      rec = run_mc(mc_args);
    }
    emit(rec, mode);
    return 0;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

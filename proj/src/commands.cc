// Copyright 2026 The Authors.
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

#include "evcg/commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <type_traits>

#include "evcg/auction.h"
#include "evcg/baselines.h"
#include "evcg/bounds.h"
#include "evcg/counter_rng.h"
#include "evcg/errors.h"
#include "evcg/io.h"
#include "evcg/lp_model.h"
#include "evcg/probes.h"
#include "evcg/rounding.h"
#include "evcg/tables.h"
#include "json.hpp"

#ifndef EVCG_SOURCE_DIR
#define EVCG_SOURCE_DIR "."
#endif

namespace evcg {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr double kGuaranteeRatio = 0.63;
constexpr double kGreedyRatio = 0.5;
constexpr double kPhiSlack = 1e-6;

// Mismatch against a stored snapshot or an expected value.
// Carries the rendered report so it still reaches stdout.
class MismatchError : public std::runtime_error {
 public:
  MismatchError(std::string report, const std::string& message)
      : std::runtime_error(message), report_(std::move(report)) {}
  const std::string& report() const { return report_; }

 private:
  std::string report_;
};

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled) {}
  template <typename Fn>
  auto Time(const std::string& name, Fn&& fn) {
    const auto start = Clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      Record(name, start);
    } else {
      auto result = fn();
      Record(name, start);
      return result;
    }
  }
  void AddTo(Json& report) const {
    if (enabled_) report["timings_ms"] = entries_;
  }

 private:
  void Record(const std::string& name, Clock::time_point start) {
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    entries_[name] = FormatFixed(ms, 3);
  }
  bool enabled_;
  Json entries_ = Json::object();
};

std::string Cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

bool IsTable(const Json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const Json& row) { return row.is_object(); });
}

std::vector<std::string> Columns(const Json& rows) {
  std::vector<std::string> cols;
  for (const Json& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  }
  return cols;
}

void RenderTextTable(const Json& rows, std::ostringstream& out, const std::string& indent) {
  const std::vector<std::string> cols = Columns(rows);
  std::vector<size_t> width(cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const Json& row : rows) {
      if (row.contains(cols[c])) width[c] = std::max(width[c], Cell(row[cols[c]]).size());
    }
  }
  auto line = [&](const std::function<std::string(size_t)>& text) {
    std::string s = indent + "  ";
    for (size_t c = 0; c < cols.size(); ++c) {
      std::string t = text(c);
      if (c + 1 < cols.size()) t.resize(width[c] + 2, ' ');
      s += t;
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line([&](size_t c) { return cols[c]; });
  for (const Json& row : rows) {
    line([&](size_t c) { return row.contains(cols[c]) ? Cell(row[cols[c]]) : "-"; });
  }
}

void RenderText(const Json& report, std::ostringstream& out, const std::string& indent) {
  for (const auto& [key, value] : report.items()) {
    if (IsTable(value)) {
      out << indent << key << ":\n";
      RenderTextTable(value, out, indent);
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      RenderText(value, out, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << ":";
      for (size_t i = 0; i < value.size(); ++i) out << (i ? ", " : " ") << Cell(value[i]);
      out << '\n';
    } else {
      out << indent << key << ": " << Cell(value) << '\n';
    }
  }
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void RenderCsvScalars(const Json& report, const std::string& prefix, std::ostringstream& out,
                      std::vector<std::pair<std::string, const Json*>>& tables) {
  for (const auto& [key, value] : report.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (IsTable(value)) {
      tables.emplace_back(name, &value);
    } else if (value.is_object()) {
      RenderCsvScalars(value, name, out, tables);
    } else if (value.is_array()) {
      std::string joined;
      for (size_t i = 0; i < value.size(); ++i) joined += (i ? " " : "") + Cell(value[i]);
      out << CsvField(name) << ',' << CsvField(joined) << '\n';
    } else {
      out << CsvField(name) << ',' << CsvField(Cell(value)) << '\n';
    }
  }
}

std::string Render(const Json& report, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << report.dump(2) << '\n';
  } else if (format == "csv") {
    std::vector<std::pair<std::string, const Json*>> tables;
    out << "key,value\n";
    RenderCsvScalars(report, "", out, tables);
    for (const auto& [name, rows] : tables) {
      const std::vector<std::string> cols = Columns(*rows);
      out << "\n# " << name << '\n';
      for (size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << CsvField(cols[c]);
      out << '\n';
      for (const Json& row : *rows) {
        for (size_t c = 0; c < cols.size(); ++c) {
          out << (c ? "," : "") << (row.contains(cols[c]) ? CsvField(Cell(row[cols[c]])) : "");
        }
        out << '\n';
      }
    }
  } else {
    RenderText(report, out, "");
  }
  return out.str();
}

// Dataset plus the bookkeeping the commands share.
struct Loaded {
  BidDataset dataset;
  std::string label;
  std::optional<BadExampleSpec> bad_example;
};

Loaded LoadInput(const RunConfig& config) {
  if (config.bad_example_k > 0) {
    if (!config.dataset_path.empty()) {
      throw ValidationError("give either --dataset or --bad-example, not both");
    }
    BadExampleSpec spec{config.bad_example_k, config.delta};
    spec.Validate();
    return {BadExample(spec),
            "bad-example k=" + std::to_string(spec.k) + " delta=" + FormatDouble(spec.delta),
            spec};
  }
  if (config.dataset_path.empty()) throw ValidationError("--dataset is required");
  return {ParseDataset(ReadFile(config.dataset_path)), config.dataset_path, std::nullopt};
}

LpModelOptions ModelOptions(const RunConfig& config) {
  LpModelOptions options;
  options.grid_mode = config.per_buyer_grid ? GridMode::kPerBuyer : GridMode::kGlobal;
  options.max_subprofiles = config.max_subprofiles;
  options.threads = config.threads;
  return options;
}

lp::SolveLimits Limits(const RunConfig& config) {
  lp::SolveLimits limits;
  if (!(config.tol_feas > 0.0 && config.tol_feas < 1e-2)) {
    throw ValidationError("--tol-feas must lie in (0, 0.01)");
  }
  limits.feasibility_tol = config.tol_feas;
  return limits;
}

RoundingParams Params(const RunConfig& config) {
  RoundingParams params;
  params.boost = config.boost;
  params.num_samples = config.samples;
  params.seed = config.seed;
  params.threads = config.threads;
  ValidateParams(params);
  return params;
}

std::string Units(const BidDataset& d, Money m) { return FormatDecimal(m, d.scale()); }

// Expected or fractional amounts in ticks, printed in currency units.
std::string Units(const BidDataset& d, double ticks) {
  return FormatFixed(ticks / std::pow(10.0, d.scale()), 6);
}

std::string Ratio(double num, double den) {
  if (!(den > 0.0)) return "n/a";
  return FormatFixed(num / den, 6);
}

Json DatasetSummary(const Loaded& in) {
  Json out;
  out["source"] = in.label;
  out["buyers"] = in.dataset.num_real_buyers();
  out["auctions"] = in.dataset.num_auctions();
  out["items"] = in.dataset.num_items();
  out["scale"] = in.dataset.scale();
  return out;
}

Json MassTable(const BidDataset& d, const std::vector<ReserveMass>& masses) {
  Json rows = Json::array();
  for (std::size_t b = 0; b < d.num_real_buyers(); ++b) {
    for (std::size_t j = 0; j < masses[b].values.size(); ++j) {
      if (masses[b].probs[j] <= 1e-12) continue;
      rows.push_back({{"buyer", d.buyers()[b]},
                      {"reserve", Units(d, masses[b].values[j])},
                      {"mass", FormatFixed(masses[b].probs[j], 6)}});
    }
  }
  return rows;
}

// The LP side of round/bench/probe: a solved model, or a mass read from disk.
struct Relaxation {
  std::optional<LpModel> model;
  std::optional<LpSolution> solution;
  std::vector<ReserveMass> masses;
  double objective = 0.0;  // ticks; 0 when unknown
  std::string source;
};

Relaxation Relax(const RunConfig& config, const Loaded& in, Timer& timer,
                 bool allow_closed_form) {
  Relaxation out;
  if (!config.masses_path.empty()) {
    out.masses = NormalizeMasses(ParseMasses(ReadFile(config.masses_path), in.dataset));
    out.source = "masses file";
    return out;
  }
  try {
    out.model.emplace(timer.Time("build", [&] { return LpModel(in.dataset, ModelOptions(config)); }));
    out.solution = timer.Time("solve", [&] { return out.model->Solve(Limits(config)); });
  } catch (const SizeGuardError&) {
    if (!allow_closed_form || !in.bad_example) throw;
    // The worst-case instance outgrows the LP quickly; its fractional point
    // and objective are known in closed form.
    const BadExampleSpec& spec = *in.bad_example;
    out.model.reset();
    out.masses = NormalizeMasses(BadExampleMasses(spec, in.dataset));
    const double k = spec.k;
    out.objective = 2 * k * k * k + k * k + (1.0 - spec.delta) * k;
    out.source = "fractional point (closed form)";
    return out;
  }
  if (out.solution->status != lp::SolveStatus::kOptimal) {
    throw SolverError("LP solve stopped: " + lp::ToString(out.solution->status));
  }
  out.masses = NormalizeMasses(out.model->Masses(out.solution->point));
  out.objective = out.solution->objective;
  out.source = "lp optimum";
  return out;
}

Json SolverStats(const LpModel& model, const LpSolution& sol) {
  Json out;
  out["status"] = lp::ToString(sol.status);
  out["subprofiles"] = model.num_subprofiles();
  out["rows"] = sol.solved_rows;
  out["columns"] = sol.solved_cols;
  out["iterations"] = sol.iterations;
  out["bland_iterations"] = sol.bland_iterations;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", sol.max_violation);
  out["max_violation"] = buf;
  std::snprintf(buf, sizeof(buf), "%.3e", sol.complementary_slackness);
  out["complementary_slackness"] = buf;
  return out;
}

// ---------------------------------------------------------------------------

std::string CmdGen(const RunConfig& config) {
  BidDataset dataset = [&] {
    if (config.kind == "bad-example") {
      BadExampleSpec spec{config.bad_example_k > 0 ? config.bad_example_k : 2, config.delta};
      spec.Validate();
      return BadExample(spec);
    }
    if (config.kind == "uniform") return UniformInstance(config.uniform, config.seed);
    if (config.kind == "correlated") return CorrelatedInstance(config.correlated, config.seed);
    throw ValidationError("gen kind must be bad-example, uniform or correlated");
  }();
  if (!config.masses_out.empty()) {
    if (config.kind != "bad-example") {
      throw ValidationError("--masses-out with gen is only defined for bad-example");
    }
    BadExampleSpec spec{config.bad_example_k > 0 ? config.bad_example_k : 2, config.delta};
    WriteFile(config.masses_out, MassesToJson(dataset, BadExampleMasses(spec, dataset)));
  }
  return DatasetToJson(dataset);
}

Json CmdSolve(const RunConfig& config) {
  Timer timer(config.timings);
  const Loaded in = LoadInput(config);
  const LpModel model =
      timer.Time("build", [&] { return LpModel(in.dataset, ModelOptions(config)); });
  const LpSolution sol = timer.Time("solve", [&] { return model.Solve(Limits(config)); });
  if (sol.status != lp::SolveStatus::kOptimal) {
    throw SolverError("LP solve stopped: " + lp::ToString(sol.status));
  }
  const auto masses = NormalizeMasses(model.Masses(sol.point));
  if (!config.masses_out.empty()) WriteFile(config.masses_out, MassesToJson(in.dataset, masses));
  if (!config.lp_out.empty()) {
    std::ostringstream lp;
    model.WriteLpFormat(lp);
    WriteFile(config.lp_out, lp.str());
  }
  Json report;
  report["command"] = "solve";
  report["dataset"] = DatasetSummary(in);
  report["grid"] = config.per_buyer_grid ? "per-buyer" : "global";
  report["objective"] = Units(in.dataset, sol.objective);
  report["solver"] = SolverStats(model, sol);
  report["masses"] = MassTable(in.dataset, masses);
  timer.AddTo(report);
  return report;
}

Json RoundingSection(const BidDataset& d, const RoundingOutput& r, double reference) {
  Json out;
  out["chosen"] = ToString(r.chosen);
  out["chosen_revenue"] = Units(d, r.chosen_revenue());
  out["ratio_vs_lp"] = Ratio(r.chosen_revenue().AsDouble(), reference);
  Json rows = Json::array();
  rows.push_back({{"candidate", "discounted"},
                  {"best_revenue", Units(d, r.discounted_revenue)},
                  {"sample_mean", Units(d, r.discounted_stats.mean)},
                  {"std_error", Units(d, r.discounted_stats.std_error)}});
  rows.push_back({{"candidate", "inflated"},
                  {"best_revenue", Units(d, r.inflated_revenue)},
                  {"sample_mean", Units(d, r.inflated_stats.mean)},
                  {"std_error", Units(d, r.inflated_stats.std_error)}});
  rows.push_back({{"candidate", "zero"},
                  {"best_revenue", Units(d, r.zero_revenue)},
                  {"sample_mean", Units(d, r.zero_revenue.AsDouble())},
                  {"std_error", Units(d, 0.0)}});
  out["candidates"] = std::move(rows);
  return out;
}

Json CmdRound(const RunConfig& config) {
  Timer timer(config.timings);
  const Loaded in = LoadInput(config);
  const RoundingParams params = Params(config);
  const Relaxation lp = Relax(config, in, timer, /*allow_closed_form=*/false);
  const RoundingOutput r =
      timer.Time("round", [&] { return BestOfThree(in.dataset, lp.masses, params); });
  if (!config.reserves_out.empty()) {
    WriteFile(config.reserves_out, ReservesToJson(in.dataset, r.chosen_vector()));
  }
  Json report;
  report["command"] = "round";
  report["dataset"] = DatasetSummary(in);
  report["boost"] = FormatDouble(params.boost);
  report["samples"] = params.num_samples;
  report["seed"] = params.seed;
  report["relaxation"] = lp.source;
  if (lp.solution) report["lp_objective"] = Units(in.dataset, lp.objective);
  report["rounding"] = RoundingSection(in.dataset, r, lp.objective);
  Json thresholds = Json::array();
  for (std::size_t b = 0; b < in.dataset.num_real_buyers(); ++b) {
    thresholds.push_back({{"buyer", in.dataset.buyers()[b]},
                          {"threshold", Units(in.dataset, r.thresholds[b])},
                          {"chosen_reserve", Units(in.dataset, r.chosen_vector()[b])}});
  }
  report["reserves"] = std::move(thresholds);
  timer.AddTo(report);
  return report;
}

Json CmdBench(const RunConfig& config) {
  Timer timer(config.timings);
  const Loaded in = LoadInput(config);
  const BidDataset& d = in.dataset;
  const RoundingParams params = Params(config);
  const Relaxation lp = Relax(config, in, timer, /*allow_closed_form=*/true);

  const RoundingOutput rounded =
      timer.Time("best_of_three", [&] { return BestOfThree(d, lp.masses, params); });
  const ReserveSearchResult greedy =
      timer.Time("greedy", [&] { return GreedyReserves(d, ReserveGrid::FromDataset(d)); });
  std::optional<ReserveSearchResult> brute;
  std::string brute_note = "ok";
  try {
    BruteForceOptions options;
    options.max_evaluations = config.brute_cap;
    options.threads = config.threads;
    brute = timer.Time("brute_force", [&] { return BruteForceOptimum(d, options); });
  } catch (const SizeGuardError&) {
    brute_note = "skipped: more than " + std::to_string(config.brute_cap) + " evaluations";
  }
  const Money zero = Revenue(d, ZeroReserves(d));

  // Simple rounding: Monte Carlo over the same number of draws, plus the
  // exact expectation.
  const CounterRng rng(params.seed);
  std::vector<Money> simple(static_cast<std::size_t>(params.num_samples));
  timer.Time("simple_rounding", [&] {
    for (std::size_t j = 0; j < simple.size(); ++j) {
      simple[j] = Revenue(d, SimpleRounding(lp.masses, rng, j));
    }
  });
  const SampleStats simple_stats = Summarize(simple);
  const double simple_exact = ExpectedRevenue(d, lp.masses);

  const double reference = lp.objective;
  const double brute_value = brute ? brute->revenue.AsDouble() : 0.0;
  Json rows = Json::array();
  auto add = [&](const std::string& method, const std::string& revenue, double value,
                 const std::string& note) {
    rows.push_back({{"method", method},
                    {"revenue", revenue},
                    {"ratio_vs_lp", Ratio(value, reference)},
                    {"ratio_vs_brute_force", brute ? Ratio(value, brute_value) : "n/a"},
                    {"note", note}});
  };
  if (reference > 0.0 || lp.solution) add("lp_bound", Units(d, reference), reference, lp.source);
  add("best_of_three", Units(d, rounded.chosen_revenue()),
      rounded.chosen_revenue().AsDouble(), "chose " + ToString(rounded.chosen));
  add("  discounted", Units(d, rounded.discounted_revenue),
      rounded.discounted_revenue.AsDouble(), "best of " + std::to_string(params.num_samples));
  add("  inflated", Units(d, rounded.inflated_revenue), rounded.inflated_revenue.AsDouble(),
      "best of " + std::to_string(params.num_samples));
  add("  zero", Units(d, rounded.zero_revenue), rounded.zero_revenue.AsDouble(), "");
  add("greedy", Units(d, greedy.revenue), greedy.revenue.AsDouble(), "");
  if (brute) {
    add("brute_force", Units(d, brute->revenue), brute_value,
        std::to_string(brute->evaluations) + " evaluations");
  } else {
    rows.push_back({{"method", "brute_force"}, {"revenue", "-"}, {"ratio_vs_lp", "-"},
                    {"ratio_vs_brute_force", "-"}, {"note", brute_note}});
  }
  add("all_zero", Units(d, zero), zero.AsDouble(), "");
  add("simple_rounding", Units(d, simple_stats.mean), simple_stats.mean,
      "mean of " + std::to_string(params.num_samples) + ", se " +
          Units(d, simple_stats.std_error));
  add("simple_rounding_exact", Units(d, simple_exact), simple_exact, "exact expectation");
  if (in.bad_example) {
    const Money best_known = ParseDecimal(
        std::to_string(BadExampleBestKnownRevenue(in.bad_example->k)), d.scale());
    add("best_known", Units(d, best_known), best_known.AsDouble(), "(k^3, 1, ..., 1)");
  }

  Json report;
  report["command"] = "bench";
  report["dataset"] = DatasetSummary(in);
  report["boost"] = FormatDouble(params.boost);
  report["samples"] = params.num_samples;
  report["seed"] = params.seed;
  if (lp.solution) report["solver"] = SolverStats(*lp.model, *lp.solution);
  report["methods"] = std::move(rows);
  report["reference_lines"] = Json::array(
      {{{"line", "rounding guarantee"}, {"ratio", FormatFixed(kGuaranteeRatio, 2)}},
       {{"line", "greedy guarantee"}, {"ratio", FormatFixed(kGreedyRatio, 2)}}});
  timer.AddTo(report);
  return report;
}

std::string CellLabel(const std::optional<double>& v) {
  return v ? FormatFixed(*v, 4) : "-";
}

Json CmdTables(const RunConfig& config) {
  Timer timer(config.timings);
  const std::string path =
      config.snapshot_path.empty() ? DefaultSnapshotPath() : config.snapshot_path;
  const std::vector<TableCell> snapshot = ParseSnapshot(ReadFile(path));
  const std::vector<TableCell> cells = timer.Time("compute", [] { return ComputeTables(); });

  Json rows = Json::array();
  int matched = 0;
  std::vector<std::string> problems;
  for (const TableCell& cell : cells) {
    auto it = std::find_if(snapshot.begin(), snapshot.end(),
                           [&](const TableCell& s) { return SameCell(s, cell); });
    const std::string printed = it == snapshot.end() ? "" : it->expected;
    const bool ok = it != snapshot.end() && PrintedMatches(cell.value, printed);
    if (ok) ++matched;
    Json row;
    row["table"] = cell.table;
    row["y"] = std::isnan(cell.y) ? "" : FormatDouble(cell.y);
    row["x"] = std::isnan(cell.x) ? "" : FormatDouble(cell.x);
    row["alpha"] = std::isnan(cell.alpha) ? "" : FormatDouble(cell.alpha);
    row["value"] = cell.value ? FormatFixed(*cell.value, 6) : "invalid";
    row["snapshot"] = it == snapshot.end() ? "missing" : printed;
    row["match"] = ok ? "yes" : "NO";
    rows.push_back(std::move(row));
    if (!ok) {
      problems.push_back("table " + std::to_string(cell.table) + " y=" + Cell(rows.back()["y"]) +
                         " x=" + Cell(rows.back()["x"]) + " alpha=" +
                         Cell(rows.back()["alpha"]));
    }
  }

  Json report;
  report["command"] = "tables";
  if (config.format == "text") {
    // Grid views of the three tables, then the flat rows.
    Json t1 = Json::array();
    for (double y : kTableY) {
      Json row;
      row["y"] = FormatDouble(y);
      for (double x : kTableX) row["x=" + FormatDouble(x)] = CellLabel(Table1Lower(y, x));
      t1.push_back(std::move(row));
    }
    report["table1"] = std::move(t1);
    Json t2 = Json::array();
    for (double a : kTableAlpha) {
      t2.push_back({{"alpha", FormatDouble(a)}, {"bound", CellLabel(Table2Lower(a))}});
    }
    report["table2"] = std::move(t2);
    Json t3 = Json::array();
    for (double y : kTableY) {
      t3.push_back({{"y", FormatDouble(y)}, {"bound", CellLabel(Table3Lower(y))}});
    }
    report["table3"] = std::move(t3);
  }
  report["rows"] = std::move(rows);
  report["snapshot"] = path;
  report["matched"] = std::to_string(matched) + "/" + std::to_string(cells.size());
  timer.AddTo(report);
  if (!problems.empty()) {
    std::string msg = "snapshot mismatch:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw MismatchError(Render(report, config.format), msg);
  }
  return report;
}

Json CmdVerify(const RunConfig& config) {
  const Loaded in = LoadInput(config);
  if (config.reserves_path.empty()) throw ValidationError("--reserves is required");
  const ReserveVector r = ParseReserves(ReadFile(config.reserves_path), in.dataset);
  const Money total = Revenue(in.dataset, r);
  Json per_auction = Json::array();
  for (std::size_t a = 0; a < in.dataset.num_auctions(); ++a) {
    const AuctionOutcome o = RunEvcg(in.dataset, a, r);
    std::string winners;
    for (std::size_t i = 0; i < o.winners.size(); ++i) {
      winners += (i ? " " : "") + in.dataset.buyers()[o.winners[i]];
    }
    per_auction.push_back({{"auction", a},
                           {"weight", in.dataset.weight(a)},
                           {"winners", winners},
                           {"revenue", Units(in.dataset, o.revenue)}});
  }
  Json report;
  report["command"] = "verify";
  report["dataset"] = DatasetSummary(in);
  report["revenue"] = Units(in.dataset, total);
  report["auctions"] = std::move(per_auction);
  if (!config.expect_revenue.empty()) {
    const Money expected = ParseDecimal(config.expect_revenue, in.dataset.scale());
    report["expected"] = Units(in.dataset, expected);
    report["agrees"] = expected == total ? "yes" : "no";
    if (expected != total) {
      throw MismatchError(Render(report, config.format), "revenue " +
                          Units(in.dataset, total) + " differs from expected " +
                          Units(in.dataset, expected));
    }
  }
  return report;
}

Json CmdProbe(const RunConfig& config) {
  Timer timer(config.timings);
  const Loaded in = LoadInput(config);
  const BidDataset& d = in.dataset;
  if (config.samples < 1) throw ValidationError("--samples must be positive");
  const LpModel model =
      timer.Time("build", [&] { return LpModel(d, ModelOptions(config)); });
  const LpSolution sol = timer.Time("solve", [&] { return model.Solve(Limits(config)); });
  if (sol.status != lp::SolveStatus::kOptimal) {
    throw SolverError("LP solve stopped: " + lp::ToString(sol.status));
  }
  const ProbeContext ctx(model, sol.point, config.boost);
  const double cap = 0.58 * d.num_items();
  Json rows = Json::array();
  int violations = 0, count = 0;
  timer.Time("probe", [&] {
    for (std::size_t a = 0; a < d.num_auctions(); ++a) {
      for (const PhiProbe& p : ProbePhi(ctx, a, config.samples, config.seed, config.threads)) {
        const FDeltaProbe f = ProbeFDelta(ctx, a, p.tau);
        const double bound = p.above_supporting_bid ? 0.0 : cap;
        const bool ok = p.estimate <= bound + 3 * p.std_error + kPhiSlack;
        violations += ok ? 0 : 1;
        ++count;
        rows.push_back({{"auction", a},
                        {"tau", Units(d, p.tau)},
                        {"regime", p.above_supporting_bid ? "above" : "below"},
                        {"lp_mass", FormatFixed(p.lp_mass, 6)},
                        {"phi", FormatFixed(p.estimate, 6)},
                        {"se", FormatFixed(p.std_error, 6)},
                        {"phi_exact", FormatFixed(p.exact, 6)},
                        {"bound", FormatFixed(bound, 2)},
                        {"ok", ok ? "yes" : "NO"},
                        {"F", FormatFixed(f.f_value, 6)},
                        {"delta", FormatFixed(f.delta, 6)},
                        {"high_reserve", FormatFixed(f.high_reserve_mass, 6)},
                        {"low_reserve", FormatFixed(f.low_reserve_mass, 6)},
                        {"high_support", FormatFixed(f.high_support_mass, 6)}});
      }
    }
  });
  Json report;
  report["command"] = "probe";
  report["dataset"] = DatasetSummary(in);
  report["boost"] = FormatDouble(config.boost);
  report["samples"] = config.samples;
  report["seed"] = config.seed;
  report["lp_objective"] = Units(d, sol.objective);
  report["probes"] = std::move(rows);
  report["violations"] = std::to_string(violations) + "/" + std::to_string(count);
  timer.AddTo(report);
  return report;
}

}  // namespace

std::string DefaultSnapshotPath() {
  return std::string(EVCG_SOURCE_DIR) + "/data/tables_snapshot.csv";
}

CommandResult RunCommand(const RunConfig& config) {
  CommandResult result;
  try {
    if (config.format != "text" && config.format != "json" && config.format != "csv") {
      throw ValidationError("--format must be text, json or csv");
    }
    if (config.threads < 1) throw ValidationError("--threads must be positive");
    if (config.command == "gen") {
      result.output = CmdGen(config);
      return result;
    }
    Json report;
    if (config.command == "solve") {
      report = CmdSolve(config);
    } else if (config.command == "round") {
      report = CmdRound(config);
    } else if (config.command == "bench") {
      report = CmdBench(config);
    } else if (config.command == "tables") {
      report = CmdTables(config);
    } else if (config.command == "verify") {
      report = CmdVerify(config);
    } else if (config.command == "probe") {
      report = CmdProbe(config);
    } else {
      throw ValidationError("unknown command '" + config.command + "'");
    }
    result.output = Render(report, config.format);
  } catch (const MismatchError& e) {
    result.exit_code = kExitMismatch;
    result.output = e.report();
    result.error = e.what();
  } catch (const ValidationError& e) {
    result.exit_code = kExitValidation;
    result.error = std::string("validation error: ") + e.what();
  } catch (const SizeGuardError& e) {
    result.exit_code = kExitSizeGuard;
    result.error = std::string("size guard: ") + e.what();
  } catch (const std::exception& e) {
    result.exit_code = kExitFailure;
    result.error = std::string("error: ") + e.what();
  }
  return result;
}

}  // namespace evcg

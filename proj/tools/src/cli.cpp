// Copyright 2026 The varcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "varcast/cli/cli.hpp"

#include <CLI11.hpp>
#include <Eigen/Core>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "varcast/backtest.hpp"
#include "varcast/cli/manifest.hpp"
#include "varcast/csv.hpp"
#include "varcast/error.hpp"
#include "varcast/forecast.hpp"
#include "varcast/hypothesis_tests.hpp"
#include "varcast/ingest.hpp"
#include "varcast/model_io.hpp"
#include "varcast/stats.hpp"
#include "varcast/var_model.hpp"

#ifndef VARCAST_VERSION
#define VARCAST_VERSION "unknown"
#endif

namespace varcast::cli {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kManifestFormat = "varcast-manifest-1";
constexpr std::string_view kManifestFile = "manifest.txt";
constexpr std::string_view kErrorFile = "error.json";

struct Artifact {
  std::string name;
  std::string content;
};

// Everything a subcommand touched, in the order it touched it.
struct Run {
  std::string out_dir = ".";
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::vector<Artifact> outputs;
  std::vector<std::pair<std::string, std::string>> config;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  std::string input(const std::string& path) {
    std::string bytes = read_file(path);
    inputs.emplace_back(path, sha256_hex(bytes));
    return bytes;
  }
  void emit(std::string name, std::string content) {
    outputs.push_back({std::move(name), std::move(content)});
  }
  void record(std::string key, std::string value) {
    config.emplace_back("config." + std::move(key), std::move(value));
  }
};

// Flag values as parsed; interpreted by the subcommand callbacks.
struct Options {
  std::string covid, weather, frame, model, manifest;
  std::string covid_date_column = "date", weather_date_column = "date";
  std::vector<std::string> column_map;
  std::string start = "2020-03-25", end, temperature_unit = "C";
  std::string y_column = "pos_increase";
  std::string lag = "auto", criterion = "aic", from, through, cutoffs, weekday;
  std::size_t p_max = 10, horizon = 30;
  std::optional<std::size_t> max_lag, lb_lags;
  double level = 0.95;
  bool clip_zero = false, refit_per_cutoff = true;
};

SeriesFrame load_input_frame(Run& run, const std::string& path) {
  std::istringstream in(run.input(path));
  return frame_from_csv(parse_csv(in, path));
}

VarModel load_input_model(Run& run, const std::string& path) {
  try {
    return model_from_json(run.input(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::optional<std::size_t> parse_lag(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw Error(Errc::kUsage, "--lag must be 'auto' or a positive integer, got '" + text + "'");
  }
  return v;
}

LagCriterion parse_criterion(const std::string& text) {
  if (text == "aic") return LagCriterion::kAic;
  if (text == "hqc" || text == "hq") return LagCriterion::kHqc;
  if (text == "sc" || text == "bic") return LagCriterion::kSc;
  if (text == "fpe") return LagCriterion::kFpe;
  throw Error(Errc::kUsage, "--criterion must be one of aic, hqc, sc, fpe");
}

Date parse_date_flag(const std::string& flag, const std::string& text) {
  auto d = Date::try_parse(text);
  if (!d) throw Error(Errc::kUsage, flag + ": cannot parse date '" + text + "'");
  return *d;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Resolves --lag against the frame, recording the choice.
std::size_t resolve_lag(Run& run, const Options& o, const SeriesFrame& frame) {
  const std::optional<std::size_t> lag = parse_lag(o.lag);
  std::size_t p = 0;
  if (lag) {
    p = *lag;
  } else {
    const LagSelectionTable table = select_lag(frame, o.p_max, run.threads);
    p = chosen_lag(table.chosen, parse_criterion(o.criterion));
  }
  run.record("lag", o.lag);
  run.record("resolved_lag", std::to_string(p));
  if (!lag) {
    run.record("pmax", std::to_string(o.p_max));
    run.record("criterion", o.criterion);
  }
  return p;
}

void warn_if_unstable(Run& run, const VarModel& model) {
  const StabilityReport s = check_stability(model);
  if (!s.is_stable) {
    *run.err << "warning: fitted VAR(" << model.p << ") is not stable (max companion modulus "
             << format_double(s.eigen_moduli.front()) << ")\n";
  }
}

void cmd_ingest(Run& run, const Options& o) {
  IngestSpec spec;
  spec.covid_path = o.covid;
  spec.weather_path = o.weather;
  spec.covid_date_column = o.covid_date_column;
  spec.weather_date_column = o.weather_date_column;
  spec.start = o.start.empty() ? std::nullopt
                               : std::optional<Date>(parse_date_flag("--start", o.start));
  if (!o.end.empty()) spec.end = parse_date_flag("--end", o.end);
  if (o.temperature_unit != "C" && o.temperature_unit != "F") {
    throw Error(Errc::kUsage, "--temperature-unit must be C or F");
  }
  spec.temperature_unit = o.temperature_unit;
  for (const std::string& m : o.column_map) {
    const std::size_t eq = m.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == m.size()) {
      throw Error(Errc::kUsage, "--map expects canonical=header, got '" + m + "'");
    }
    try {
      spec.columns.source_for(m.substr(0, eq)) = m.substr(eq + 1);
    } catch (const Error& e) {
      throw Error(Errc::kUsage, std::string("--map: ") + e.what());
    }
    run.record("map." + m.substr(0, eq), m.substr(eq + 1));
  }
  std::istringstream covid(run.input(o.covid));
  std::istringstream weather(run.input(o.weather));
  const LoadResult res =
      load_frame(parse_csv(covid, o.covid), parse_csv(weather, o.weather), spec);

  std::ostringstream frame;
  write_frame_csv(res.frame, frame);
  run.emit("frame.csv", frame.str());
  run.emit("load_report.txt", format_load_report(res.report));
  run.record("start", o.start);
  run.record("end", o.end);
  *run.out << "ingested " << res.report.rows << " rows " << res.report.first.iso() << ".."
           << res.report.last.iso() << " (" << res.report.fills.size() << " filled, "
           << res.report.clamps.size() << " clamped)\n";
}

void cmd_corr(Run& run, const Options& o) {
  const SeriesFrame frame = load_input_frame(run, o.frame);
  const Eigen::MatrixXd r = correlation_matrix(frame);
  std::ostringstream csv;
  csv << "variable";
  for (const auto& n : frame.names()) csv << ',' << n;
  csv << '\n';
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    csv << frame.names()[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < r.cols(); ++j) csv << ',' << format_double(r(i, j));
    csv << '\n';
  }
  run.emit("correlation.csv", csv.str());
}

void cmd_coint(Run& run, const Options& o) {
  const SeriesFrame frame = load_input_frame(run, o.frame);
  const std::size_t yj = frame.require_column(o.y_column);
  const std::vector<double> y = frame.column(yj);
  std::ostringstream csv;
  csv << "y,x,statistic,p_value,cointegrated,slope,intercept,lags_used,exact_fit\n";
  for (std::size_t j = 0; j < frame.names().size(); ++j) {
    if (j == yj) continue;
    const std::string& x_name = frame.names()[j];
    CointResult r;
    try {
      r = engle_granger(y, frame.column(j), o.max_lag);
    } catch (const Error& e) {
      throw Error(e.code(), o.y_column + " ~ " + x_name + ": " + e.what());
    }
    csv << o.y_column << ',' << x_name << ',' << format_double(r.statistic) << ','
        << format_double(r.p_value) << ',' << yes_no(r.cointegrated) << ','
        << format_double(r.regression_slope) << ',' << format_double(r.regression_intercept)
        << ',' << r.lags_used << ',' << yes_no(r.exact_fit) << '\n';
    *run.out << o.y_column << " ~ " << x_name << ": tau " << format_double(r.statistic)
             << ", p " << format_double(r.p_value)
             << (r.cointegrated ? " (cointegrated)\n" : "\n");
  }
  run.record("y", o.y_column);
  run.record("max_lag", o.max_lag ? std::to_string(*o.max_lag) : "schwert");
  run.emit("coint.csv", csv.str());
}

void cmd_select_lag(Run& run, const Options& o) {
  const SeriesFrame frame = load_input_frame(run, o.frame);
  const LagSelectionTable t = select_lag(frame, o.p_max, run.threads);
  std::ostringstream csv;
  csv << "lag,aic,hqc,sc,fpe\n";
  for (const CriteriaRow& row : t.rows) {
    csv << row.lag << ',' << format_double(row.values.aic) << ','
        << format_double(row.values.hqc) << ',' << format_double(row.values.sc) << ','
        << format_double(row.values.fpe) << '\n';
  }
  csv << "chosen," << t.chosen.aic << ',' << t.chosen.hqc << ',' << t.chosen.sc << ','
      << t.chosen.fpe << '\n';
  run.emit("lag_selection.csv", csv.str());
  run.record("pmax", std::to_string(o.p_max));
  *run.out << "chosen lags: aic " << t.chosen.aic << ", hqc " << t.chosen.hqc << ", sc "
           << t.chosen.sc << ", fpe " << t.chosen.fpe << " (effective sample "
           << t.effective_sample << ")\n";
}

void cmd_fit(Run& run, const Options& o) {
  SeriesFrame frame = load_input_frame(run, o.frame);
  if (!o.through.empty()) frame = frame.through(parse_date_flag("--through", o.through));
  run.record("through", o.through);
  const std::size_t p = resolve_lag(run, o, frame);
  const VarModel model = fit_var(frame, p);
  const StabilityReport s = check_stability(model);
  std::ostringstream csv;
  csv << "index,modulus\n";
  for (std::size_t i = 0; i < s.eigen_moduli.size(); ++i) {
    csv << i << ',' << format_double(s.eigen_moduli[i]) << '\n';
  }
  csv << "stable," << yes_no(s.is_stable) << '\n' << "margin," << format_double(s.margin) << '\n';
  run.emit("model.json", model_to_json(model));
  run.emit("stability.csv", csv.str());
  warn_if_unstable(run, model);
  *run.out << "fitted VAR(" << p << ") on " << model.n_obs << " observations\n";
}

void cmd_diagnose(Run& run, const Options& o) {
  const SeriesFrame frame = load_input_frame(run, o.frame);
  const VarModel model = compute_residuals(load_input_model(run, o.model), frame);
  const std::size_t lags = o.lb_lags.value_or(model.m() * model.p + 10);
  run.record("lb_lags", std::to_string(lags));
  const std::vector<ResidualDiagnostic> diags = residual_diagnostics(model, lags);

  std::ostringstream csv, acf_csv;
  csv << "variable,mean,exact_fit,q_statistic,lags,dof,p_value\n";
  acf_csv << "variable,lag,acf\n";
  const ResidualDiagnostic* worst = nullptr;
  for (const ResidualDiagnostic& d : diags) {
    csv << d.name << ',' << format_double(d.mean) << ',' << yes_no(d.exact_fit);
    if (d.ljung_box) {
      csv << ',' << format_double(d.ljung_box->q_statistic) << ',' << d.ljung_box->lags << ','
          << d.ljung_box->dof << ',' << format_double(d.ljung_box->p_value) << '\n';
      if (!worst || d.ljung_box->p_value < worst->ljung_box->p_value) worst = &d;
    } else {
      csv << ",,,,\n";
    }
    for (std::size_t k = 0; k < d.acf.size(); ++k) {
      acf_csv << d.name << ',' << k << ',' << format_double(d.acf[k]) << '\n';
    }
  }
  run.emit("diagnostics.csv", csv.str());
  run.emit("residual_acf.csv", acf_csv.str());
  if (worst) {
    *run.out << "worst Ljung-Box p-value " << format_double(worst->ljung_box->p_value) << " ("
             << worst->name << ", " << lags << " lags)\n";
  } else {
    *run.out << "all residual columns are exact fits\n";
  }
}

void cmd_forecast(Run& run, const Options& o) {
  const SeriesFrame frame = load_input_frame(run, o.frame);
  const SeriesFrame history =
      o.from.empty() ? frame : frame.through(parse_date_flag("--from", o.from));
  VarModel model;
  if (!o.model.empty()) {
    model = load_input_model(run, o.model);
  } else {
    model = fit_var(history, resolve_lag(run, o, history));
    warn_if_unstable(run, model);
  }
  Forecast fc = forecast(model, history, o.horizon, o.level);
  if (o.clip_zero) {
    std::vector<std::string> counts;
    for (auto c : kCountColumns) {
      if (std::find(fc.names.begin(), fc.names.end(), c) != fc.names.end()) counts.emplace_back(c);
    }
    clip_lower_at_zero(fc, counts);
  }
  std::ostringstream csv;
  write_forecast_csv(fc, csv);
  run.emit("forecast.csv", csv.str());
  run.record("from", fc.origin_date.iso());
  run.record("horizon", std::to_string(o.horizon));
  run.record("level", format_double(o.level));
  run.record("clip_zero", yes_no(o.clip_zero));
  *run.out << "forecast " << o.horizon << " steps from " << fc.origin_date.iso() << " with VAR("
           << model.p << ")\n";
}

std::string backtest_report(const BacktestReport& rep, const BacktestConfig& cfg,
                            const std::vector<BacktestRow>& table) {
  std::ostringstream out;
  for (const CutoffFit& fit : rep.fits) {
    out << "[cutoff " << fit.cutoff.iso() << "]\n";
    out << "lag: " << fit.lag << '\n';
    out << "fit_observations: " << fit.model.n_obs << '\n';
    out << "window: " << (fit.cutoff + 1).iso() << ".."
        << (fit.cutoff + static_cast<int>(cfg.horizon)).iso() << '\n';
    for (const CoverageSummary& s : rep.summary) {
      if (s.cutoff != fit.cutoff) continue;
      out << "  " << s.variable << ": actual " << s.n_actual << '/' << s.n_rows;
      if (s.coverage_rate) out << ", coverage " << format_double(*s.coverage_rate);
      if (s.mean_abs_error) out << ", mae " << format_double(*s.mean_abs_error);
      out << ", mean width " << format_double(s.mean_interval_width) << '\n';
    }
    out << '\n';
  }
  const CoverageSummary pooled = pooled_summary(rep.rows);
  out << "[pooled]\nrows: " << pooled.n_rows << "\nwith_actual: " << pooled.n_actual << '\n';
  if (pooled.coverage_rate) out << "coverage: " << format_double(*pooled.coverage_rate) << '\n';
  if (cfg.comparison_weekday) {
    const CoverageSummary wk = pooled_summary(table);
    out << "\n[weekday table]\nrows: " << wk.n_rows << "\nwith_actual: " << wk.n_actual << '\n';
    if (wk.coverage_rate) out << "coverage: " << format_double(*wk.coverage_rate) << '\n';
  }
  return out.str();
}

void cmd_backtest(Run& run, const Options& o) {
  const SeriesFrame frame = load_input_frame(run, o.frame);
  BacktestConfig cfg;
  std::string_view rest = o.cutoffs;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string item(rest.substr(0, comma));
    if (!item.empty()) cfg.cutoffs.push_back(parse_date_flag("--cutoffs", item));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  if (cfg.cutoffs.empty()) throw Error(Errc::kUsage, "--cutoffs needs at least one date");
  cfg.horizon = o.horizon;
  cfg.lag = parse_lag(o.lag);
  cfg.p_max = o.p_max;
  cfg.criterion = parse_criterion(o.criterion);
  cfg.level = o.level;
  cfg.refit_per_cutoff = o.refit_per_cutoff;
  cfg.threads = run.threads;
  if (!o.weekday.empty()) {
    cfg.comparison_weekday = parse_weekday(o.weekday);
    if (!cfg.comparison_weekday) {
      throw Error(Errc::kUsage, "--weekday expects mon..sun, got '" + o.weekday + "'");
    }
  }
  const BacktestReport rep = run_backtest(frame, cfg);
  const std::vector<BacktestRow> table =
      cfg.comparison_weekday ? filter_weekday(rep.rows, *cfg.comparison_weekday) : rep.rows;

  std::ostringstream rows, summary, table_csv;
  write_backtest_csv(rep.rows, rows);
  write_summary_csv(rep.summary, summary);
  run.emit("backtest.csv", rows.str());
  run.emit("backtest_summary.csv", summary.str());
  if (cfg.comparison_weekday) {
    write_backtest_csv(table, table_csv);
    run.emit("backtest_table.csv", table_csv.str());
  }
  run.emit("backtest_report.txt", backtest_report(rep, cfg, table));
  run.record("cutoffs", o.cutoffs);
  run.record("horizon", std::to_string(o.horizon));
  run.record("lag", o.lag);
  run.record("pmax", std::to_string(o.p_max));
  run.record("criterion", o.criterion);
  run.record("level", format_double(o.level));
  run.record("weekday", o.weekday);
  run.record("refit_per_cutoff", yes_no(o.refit_per_cutoff));
  *run.out << "backtest: " << rep.fits.size() << " cutoffs, " << rep.rows.size() << " rows\n";
}

bool same_file(const fs::path& a, const fs::path& b) {
  std::error_code ec;
  return fs::exists(a, ec) && fs::exists(b, ec) && fs::equivalent(a, b, ec);
}

void write_outputs(Run& run, const std::string& subcommand, const std::vector<std::string>& args) {
  const fs::path dir(run.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::kIo, "cannot create output directory '" + run.out_dir + "'");
  for (const Artifact& a : run.outputs) {
    for (const auto& [in, hash] : run.inputs) {
      if (same_file(dir / a.name, in)) {
        throw Error(Errc::kUsage, "refusing to overwrite input '" + in + "'");
      }
    }
  }
  auto put = [&](const std::string& name, const std::string& content) {
    std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
    f << content;
    if (!f) throw Error(Errc::kIo, "cannot write '" + (dir / name).string() + "'");
  };
  for (const Artifact& a : run.outputs) put(a.name, a.content);

  Manifest m;
  m.set("format", std::string(kManifestFormat));
  m.set("varcast_version", VARCAST_VERSION);
  m.set("eigen_version", std::to_string(EIGEN_WORLD_VERSION) + "." +
                             std::to_string(EIGEN_MAJOR_VERSION) + "." +
                             std::to_string(EIGEN_MINOR_VERSION));
  m.set("subcommand", subcommand);
  m.set("threads", std::to_string(run.threads));
  m.set("seed", std::to_string(run.seed));
  m.set("argc", std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i) m.set("arg." + std::to_string(i), args[i]);
  for (const auto& [k, v] : run.config) m.set(k, v);
  for (std::size_t i = 0; i < run.inputs.size(); ++i) {
    m.set("input." + std::to_string(i) + ".path", run.inputs[i].first);
    m.set("input." + std::to_string(i) + ".sha256", run.inputs[i].second);
  }
  for (std::size_t i = 0; i < run.outputs.size(); ++i) {
    m.set("output." + std::to_string(i) + ".path", run.outputs[i].name);
    m.set("output." + std::to_string(i) + ".sha256", sha256_hex(run.outputs[i].content));
  }
  put(std::string(kManifestFile), m.to_text());
  fs::remove(dir / kErrorFile, ec);
}

std::string error_json(int code, std::string_view name, std::string_view message) {
  nlohmann::json j;
  j["code"] = code;
  j["error"] = name;
  j["message"] = message;
  return j.dump();
}

void report_error(const std::string& out_dir, std::ostream& err, int code, std::string_view name,
                  std::string_view message) {
  const std::string line = error_json(code, name, message);
  err << line << '\n';
  if (out_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  std::ofstream f(fs::path(out_dir) / kErrorFile, std::ios::binary | std::ios::trunc);
  if (f) f << line << '\n';
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Re-executes the recorded arguments into the current --out directory and
// checks inputs and outputs against the recorded hashes.
void cmd_replay(Run& run, const Options& o) {
  const Manifest m = Manifest::parse(read_file(o.manifest), o.manifest);
  if (m.require("format") != kManifestFormat) {
    throw Error(Errc::kManifestMismatch, o.manifest + ": unsupported manifest format");
  }
  for (std::size_t i = 0;; ++i) {
    const auto path = m.get("input." + std::to_string(i) + ".path");
    if (!path) break;
    const std::string& want = m.require("input." + std::to_string(i) + ".sha256");
    if (sha256_hex(read_file(*path)) != want) {
      throw Error(Errc::kManifestMismatch, "input '" + *path + "' changed since the manifest");
    }
  }
  std::vector<std::string> args;
  const std::size_t argc = std::stoul(m.require("argc"));
  for (std::size_t i = 0; i < argc; ++i) args.push_back(m.require("arg." + std::to_string(i)));
  args.push_back("--out");
  args.push_back(run.out_dir);

  std::ostringstream inner_err;
  const int rc = run_impl(args, *run.out, inner_err);
  *run.err << inner_err.str();
  if (rc != 0) throw Error(Errc::kManifestMismatch, "replayed run exited with " + std::to_string(rc));

  std::size_t checked = 0;
  for (std::size_t i = 0;; ++i, ++checked) {
    const auto name = m.get("output." + std::to_string(i) + ".path");
    if (!name) break;
    const std::string& want = m.require("output." + std::to_string(i) + ".sha256");
    const fs::path p = fs::path(run.out_dir) / *name;
    if (sha256_hex(read_file(p.string())) != want) {
      throw Error(Errc::kManifestMismatch, "output '" + *name + "' differs from the manifest");
    }
  }
  *run.out << "replay: " << checked << " outputs identical\n";
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"varcast: VAR forecasting pipeline over daily CSV panels", "varcast"};
  app.footer(exit_code_table());
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", VARCAST_VERSION);

  Run run;
  run.out = &out;
  run.err = &err;
  Options o;
  app.add_option("--out,-o", run.out_dir, "Output directory (created if missing)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--threads", run.threads, "Worker threads for lag search and backtests")
      ->check(CLI::Range(1u, 256u))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--seed", run.seed, "Recorded in the manifest for reproducibility")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto frame_opt = [&](CLI::App* sub) {
    sub->add_option("--frame", o.frame, "Aligned frame CSV written by 'ingest'")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto lag_opts = [&](CLI::App* sub) {
    sub->add_option("--lag", o.lag, "Lag order, or 'auto'")->capture_default_str();
    sub->add_option("--pmax", o.p_max, "Largest lag searched by 'auto'")
        ->check(CLI::Range(std::size_t{1}, std::size_t{60}))
        ->capture_default_str();
    sub->add_option("--criterion", o.criterion, "aic, hqc, sc or fpe")->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, std::function<void(Run&, const Options&)>>> commands;

  auto* ingest = app.add_subcommand("ingest", "Align covid and weather CSVs into a daily frame");
  ingest->add_option("--covid", o.covid, "Covid tracking CSV")->required()->check(CLI::ExistingFile);
  ingest->add_option("--weather", o.weather, "Weather CSV")->required()->check(CLI::ExistingFile);
  ingest->add_option("--covid-date-column", o.covid_date_column)->capture_default_str();
  ingest->add_option("--weather-date-column", o.weather_date_column)->capture_default_str();
  ingest->add_option("--map", o.column_map, "canonical=header (repeatable)");
  ingest->add_option("--start", o.start, "First date kept; empty keeps all")->capture_default_str();
  ingest->add_option("--end", o.end, "Last date kept");
  ingest->add_option("--temperature-unit", o.temperature_unit, "C or F")->capture_default_str();
  commands.emplace_back(ingest, cmd_ingest);

  auto* corr = app.add_subcommand("corr", "Pearson correlation matrix");
  frame_opt(corr);
  commands.emplace_back(corr, cmd_corr);

  auto* coint = app.add_subcommand("coint", "Engle-Granger test of each column against --y");
  frame_opt(coint);
  coint->add_option("--y", o.y_column, "Dependent column")->capture_default_str();
  coint->add_option("--max-lag", o.max_lag, "ADF lag ceiling (default: Schwert rule)");
  commands.emplace_back(coint, cmd_coint);

  auto* select = app.add_subcommand("select-lag", "AIC/HQC/SC/FPE table for lags 1..pmax");
  frame_opt(select);
  select->add_option("--pmax", o.p_max)
      ->check(CLI::Range(std::size_t{1}, std::size_t{60}))
      ->capture_default_str();
  commands.emplace_back(select, cmd_select_lag);

  auto* fit = app.add_subcommand("fit", "Estimate a VAR and report stability");
  frame_opt(fit);
  lag_opts(fit);
  fit->add_option("--through", o.through, "Use rows up to this date");
  commands.emplace_back(fit, cmd_fit);

  auto* diagnose = app.add_subcommand("diagnose", "Residual autocorrelation and Ljung-Box tests");
  frame_opt(diagnose);
  diagnose->add_option("--model", o.model, "model.json from 'fit'")
      ->required()
      ->check(CLI::ExistingFile);
  diagnose->add_option("--lb-lags", o.lb_lags, "Ljung-Box lags (default m*p + 10)")
      ->check(CLI::PositiveNumber);
  commands.emplace_back(diagnose, cmd_diagnose);

  auto* fc = app.add_subcommand("forecast", "h-step forecasts with Gaussian bands");
  frame_opt(fc);
  lag_opts(fc);
  fc->add_option("--model", o.model, "Use this model instead of fitting")
      ->check(CLI::ExistingFile);
  fc->add_option("--from", o.from, "Forecast origin (default: last row)");
  fc->add_option("--horizon", o.horizon)
      ->check(CLI::Range(std::size_t{1}, std::size_t{3650}))
      ->capture_default_str();
  fc->add_option("--level", o.level)->check(CLI::Range(0.5, 0.9999))->capture_default_str();
  fc->add_flag("--clip-zero", o.clip_zero, "Floor count-variable lower bounds at 0");
  commands.emplace_back(fc, cmd_forecast);

  auto* bt = app.add_subcommand("backtest", "Rolling-origin validation at fixed cutoffs");
  frame_opt(bt);
  lag_opts(bt);
  bt->add_option("--cutoffs", o.cutoffs, "Comma-separated dates")->required();
  bt->add_option("--horizon", o.horizon)
      ->check(CLI::Range(std::size_t{1}, std::size_t{3650}))
      ->capture_default_str();
  bt->add_option("--level", o.level)->check(CLI::Range(0.5, 0.9999))->capture_default_str();
  bt->add_option("--weekday", o.weekday, "Also write a table of this weekday (mon..sun)");
  bt->add_flag("--refit-per-cutoff,!--no-refit-per-cutoff", o.refit_per_cutoff,
               "Refit at every cutoff (default) or reuse the earliest fit");
  commands.emplace_back(bt, cmd_backtest);

  auto* replay = app.add_subcommand("replay", "Re-run a manifest and verify its outputs");
  replay->add_option("--manifest", o.manifest)->required()->check(CLI::ExistingFile);
  commands.emplace_back(replay, cmd_replay);

  for (auto& [sub, fn] : commands) sub->fallthrough();

  std::vector<std::string> argv_store{"varcast"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int rc = app.exit(e, out, msg);
    err << msg.str();
    if (rc == 0) return 0;
    report_error("", err, static_cast<int>(Errc::kUsage), errc_name(Errc::kUsage), e.what());
    return static_cast<int>(Errc::kUsage);
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    const std::string name = sub->get_name();
    try {
      fn(run, o);
      if (name != "replay") write_outputs(run, name, args);
      return 0;
    } catch (const Error& e) {
      report_error(run.out_dir, err, static_cast<int>(e.code()), errc_name(e.code()), e.what());
      return static_cast<int>(e.code());
    } catch (const fs::filesystem_error& e) {
      report_error(run.out_dir, err, static_cast<int>(Errc::kIo), errc_name(Errc::kIo), e.what());
      return static_cast<int>(Errc::kIo);
    } catch (const std::exception& e) {
      report_error(run.out_dir, err, static_cast<int>(Errc::kInternal),
                   errc_name(Errc::kInternal), e.what());
      return static_cast<int>(Errc::kInternal);
    }
  }
  return static_cast<int>(Errc::kUsage);
}

}  // namespace

std::string exit_code_table() {
  std::ostringstream out;
  out << "Exit codes:\n  0   success\n";
  for (int c = 1; c <= static_cast<int>(Errc::kManifestMismatch); ++c) {
    std::string code = std::to_string(c);
    code.resize(4, ' ');
    out << "  " << code << errc_name(static_cast<Errc>(c)) << '\n';
  }
  out << "Errors also write error.json to --out and one JSON line to stderr.";
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_impl(args, out, err);
}

}  // namespace varcast::cli

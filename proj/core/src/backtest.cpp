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

#include "varcast/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <thread>

#include "varcast/csv.hpp"
#include "varcast/error.hpp"
#include "varcast/forecast.hpp"

namespace varcast {
namespace {

constexpr std::size_t kMinTrainingRows = 30;

struct CutoffResult {
  CutoffFit fit;
  std::vector<BacktestRow> rows;
};

std::size_t resolve_lag(const SeriesFrame& history, const BacktestConfig& config) {
  if (config.lag) return *config.lag;
  return chosen_lag(select_lag(history, config.p_max).chosen, config.criterion);
}

std::vector<BacktestRow> forecast_rows(const SeriesFrame& frame, const SeriesFrame& history,
                                       const VarModel& model, const BacktestConfig& config) {
  const Forecast fc = forecast(model, history, config.horizon, config.level);
  std::vector<BacktestRow> rows;
  rows.reserve(config.horizon * model.m());
  for (std::size_t s = 1; s <= config.horizon; ++s) {
    const Date target = fc.target_date(s);
    const auto frame_row = frame.row_of(target);
    const Eigen::Index r = static_cast<Eigen::Index>(s - 1);
    for (std::size_t j = 0; j < model.m(); ++j) {
      const Eigen::Index c = static_cast<Eigen::Index>(j);
      std::optional<double> actual;
      if (frame_row) actual = frame.values()(static_cast<Eigen::Index>(*frame_row), c);
      rows.push_back(make_backtest_row(fc.origin_date, target, model.names[j], actual,
                                       fc.point(r, c), fc.lower(r, c), fc.upper(r, c)));
    }
  }
  return rows;
}

template <typename Fn>
void for_each_index(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
  auto guarded = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers) guarded(i);
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Error annotate(const Error& e, Date cutoff) {
  return Error(e.code(), "cutoff " + cutoff.iso() + ": " + e.what());
}

std::string opt_number(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

}  // namespace

std::size_t chosen_lag(const ChosenLags& chosen, LagCriterion criterion) {
  switch (criterion) {
    case LagCriterion::kAic: return chosen.aic;
    case LagCriterion::kHqc: return chosen.hqc;
    case LagCriterion::kSc: return chosen.sc;
    case LagCriterion::kFpe: return chosen.fpe;
  }
  return chosen.aic;
}

BacktestRow make_backtest_row(Date cutoff, Date target, std::string variable,
                              std::optional<double> actual, double predicted,
                              double lower, double upper) {
  BacktestRow row;
  row.cutoff = cutoff;
  row.target_date = target;
  row.variable = std::move(variable);
  row.actual = actual;
  row.predicted = predicted;
  row.lower = lower;
  row.upper = upper;
  if (actual) {
    row.covered = lower <= *actual && *actual <= upper;
    row.abs_error = std::abs(*actual - predicted);
  }
  return row;
}

BacktestReport run_backtest(const SeriesFrame& frame, const BacktestConfig& config) {
  if (config.horizon < 1) {
    throw Error(Errc::kInvalidHorizon, "backtest horizon must be at least 1");
  }
  if (config.cutoffs.empty()) {
    throw Error(Errc::kInvalidCutoff, "backtest needs at least one cutoff");
  }
  if (config.lag && *config.lag == 0) {
    throw Error(Errc::kInvalidLag, "backtest lag must be at least 1");
  }
  normal_band_multiplier(config.level);  // validates the level

  std::vector<Date> cutoffs = config.cutoffs;
  std::sort(cutoffs.begin(), cutoffs.end());
  if (std::adjacent_find(cutoffs.begin(), cutoffs.end()) != cutoffs.end()) {
    throw Error(Errc::kInvalidCutoff, "duplicate backtest cutoff");
  }
  const std::size_t min_history = config.lag.value_or(config.p_max) + kMinTrainingRows;
  for (const Date& c : cutoffs) {
    auto row = frame.row_of(c);
    if (!row) {
      throw Error(Errc::kInvalidCutoff, "cutoff " + c.iso() + " outside frame range " +
                                            frame.first_date().iso() + ".." +
                                            frame.last_date().iso());
    }
    if (*row + 1 < min_history) {
      throw Error(Errc::kInvalidCutoff,
                  "cutoff " + c.iso() + " leaves " + std::to_string(*row + 1) +
                      " observations; at least " + std::to_string(min_history) +
                      " required");
    }
  }

  std::optional<CutoffFit> shared;
  if (!config.refit_per_cutoff) {
    try {
      SeriesFrame history = frame.through(cutoffs.front());
      std::size_t lag = resolve_lag(history, config);
      shared = CutoffFit{cutoffs.front(), lag, fit_var(history, lag)};
    } catch (const Error& e) {
      throw annotate(e, cutoffs.front());
    }
  }

  std::vector<CutoffResult> results(cutoffs.size());
  for_each_index(cutoffs.size(), config.threads, [&](std::size_t i) {
    const Date c = cutoffs[i];
    try {
      SeriesFrame history = frame.through(c);
      CutoffResult& out = results[i];
      if (shared) {
        out.fit = CutoffFit{c, shared->lag, shared->model};
      } else {
        std::size_t lag = resolve_lag(history, config);
        out.fit = CutoffFit{c, lag, fit_var(history, lag)};
      }
      out.rows = forecast_rows(frame, history, out.fit.model, config);
    } catch (const Error& e) {
      throw annotate(e, c);
    }
  });

  BacktestReport report;
  for (auto& r : results) {
    report.fits.push_back(std::move(r.fit));
    for (auto& row : r.rows) report.rows.push_back(std::move(row));
  }
  report.summary = coverage_summary(report.rows);
  return report;
}

namespace {

CoverageSummary summarize(std::span<const BacktestRow* const> rows) {
  CoverageSummary s;
  double err_sum = 0.0;
  double width_sum = 0.0;
  for (const BacktestRow* r : rows) {
    ++s.n_rows;
    width_sum += r->upper - r->lower;
    if (r->actual) {
      ++s.n_actual;
      if (*r->covered) ++s.n_covered;
      err_sum += *r->abs_error;
    }
  }
  s.mean_interval_width = width_sum / static_cast<double>(s.n_rows);
  if (s.n_actual > 0) {
    s.coverage_rate = static_cast<double>(s.n_covered) / static_cast<double>(s.n_actual);
    s.mean_abs_error = err_sum / static_cast<double>(s.n_actual);
  }
  return s;
}

}  // namespace

std::vector<CoverageSummary> coverage_summary(std::span<const BacktestRow> rows) {
  if (rows.empty()) {
    throw Error(Errc::kInvalidArgument, "coverage summary of an empty report");
  }
  std::map<Date, std::vector<std::string>> order;
  std::map<std::pair<Date, std::string>, std::vector<const BacktestRow*>> groups;
  for (const auto& r : rows) {
    auto& vars = order[r.cutoff];
    if (std::find(vars.begin(), vars.end(), r.variable) == vars.end()) vars.push_back(r.variable);
    groups[{r.cutoff, r.variable}].push_back(&r);
  }
  std::vector<CoverageSummary> out;
  for (const auto& [cutoff, vars] : order) {
    for (const auto& v : vars) {
      CoverageSummary s = summarize(groups[{cutoff, v}]);
      s.cutoff = cutoff;
      s.variable = v;
      out.push_back(std::move(s));
    }
  }
  return out;
}

CoverageSummary pooled_summary(std::span<const BacktestRow> rows) {
  if (rows.empty()) {
    throw Error(Errc::kInvalidArgument, "coverage summary of an empty report");
  }
  std::vector<const BacktestRow*> ptrs;
  for (const auto& r : rows) ptrs.push_back(&r);
  return summarize(ptrs);
}

std::vector<BacktestRow> filter_weekday(std::span<const BacktestRow> rows,
                                        std::chrono::weekday day) {
  std::vector<BacktestRow> out;
  for (const auto& r : rows) {
    if (r.target_date.weekday() == day) out.push_back(r);
  }
  return out;
}

void write_backtest_csv(std::span<const BacktestRow> rows, std::ostream& out) {
  out << "cutoff,target_date,variable,actual,predicted,lower,upper,covered\n";
  for (const auto& r : rows) {
    out << r.cutoff.iso() << ',' << r.target_date.iso() << ',' << r.variable << ','
        << opt_number(r.actual) << ',' << format_double(r.predicted) << ','
        << format_double(r.lower) << ',' << format_double(r.upper) << ',';
    if (r.covered) out << (*r.covered ? "true" : "false");
    out << '\n';
  }
}

void write_summary_csv(std::span<const CoverageSummary> summary, std::ostream& out) {
  out << "cutoff,variable,n_rows,n_actual,coverage_rate,mean_abs_error,mean_interval_width\n";
  for (const auto& s : summary) {
    out << (s.cutoff ? s.cutoff->iso() : std::string()) << ',' << s.variable << ','
        << s.n_rows << ',' << s.n_actual << ',' << opt_number(s.coverage_rate) << ','
        << opt_number(s.mean_abs_error) << ',' << format_double(s.mean_interval_width)
        << '\n';
  }
}

}  // namespace varcast

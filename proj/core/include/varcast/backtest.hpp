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

#ifndef VARCAST_BACKTEST_HPP_
#define VARCAST_BACKTEST_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "varcast/date.hpp"
#include "varcast/series_frame.hpp"
#include "varcast/var_model.hpp"

namespace varcast {

enum class LagCriterion { kAic, kHqc, kSc, kFpe };

std::size_t chosen_lag(const ChosenLags& chosen, LagCriterion criterion);

struct BacktestConfig {
  std::vector<Date> cutoffs;
  std::size_t horizon = 30;
  /// Fixed lag order; nullopt re-selects per window with `criterion`.
  std::optional<std::size_t> lag;
  std::size_t p_max = 10;
  LagCriterion criterion = LagCriterion::kAic;
  double level = 0.95;
  /// Only affects the weekday comparison table (see filter_weekday); rows are daily.
  std::optional<std::chrono::weekday> comparison_weekday;
  /// false: fit once through the earliest cutoff and reuse the coefficients,
  /// conditioning each forecast on its own cutoff's history.
  bool refit_per_cutoff = true;
  unsigned threads = 1;
};

struct BacktestRow {
  Date cutoff;
  Date target_date;
  std::string variable;
  std::optional<double> actual;
  double predicted = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<bool> covered;
  std::optional<double> abs_error;
};

/// Fills `covered` (closed interval) and `abs_error` from `actual`.
BacktestRow make_backtest_row(Date cutoff, Date target, std::string variable,
                              std::optional<double> actual, double predicted,
                              double lower, double upper);

struct CoverageSummary {
  std::optional<Date> cutoff;  // absent for a pooled summary
  std::string variable;        // empty for a pooled summary
  std::size_t n_rows = 0;
  std::size_t n_actual = 0;
  std::size_t n_covered = 0;
  std::optional<double> coverage_rate;
  std::optional<double> mean_abs_error;
  double mean_interval_width = 0.0;
};

struct CutoffFit {
  Date cutoff;
  std::size_t lag = 0;
  VarModel model;
};

struct BacktestReport {
  std::vector<BacktestRow> rows;
  std::vector<CoverageSummary> summary;
  std::vector<CutoffFit> fits;
};

/// Rolling-origin validation: for each cutoff, fit on rows dated <= cutoff,
/// forecast `horizon` days, and join with whatever actuals the frame holds.
BacktestReport run_backtest(const SeriesFrame& frame, const BacktestConfig& config);

/// One summary per (cutoff, variable), ordered by cutoff then by first
/// appearance of the variable.
std::vector<CoverageSummary> coverage_summary(std::span<const BacktestRow> rows);

/// All rows aggregated into one summary.
CoverageSummary pooled_summary(std::span<const BacktestRow> rows);

std::vector<BacktestRow> filter_weekday(std::span<const BacktestRow> rows,
                                        std::chrono::weekday day);

/// cutoff,target_date,variable,actual,predicted,lower,upper,covered
void write_backtest_csv(std::span<const BacktestRow> rows, std::ostream& out);
/// cutoff,variable,n_rows,n_actual,coverage_rate,mean_abs_error,mean_interval_width
void write_summary_csv(std::span<const CoverageSummary> summary, std::ostream& out);

}  // namespace varcast

#endif  // VARCAST_BACKTEST_HPP_

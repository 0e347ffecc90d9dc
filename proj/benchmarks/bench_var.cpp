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


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "varcast/backtest.hpp"
#include "varcast/forecast.hpp"
#include "varcast/hypothesis_tests.hpp"
#include "varcast/var_model.hpp"

namespace {

using varcast::Date;
using varcast::SeriesFrame;

// Stable five-variable VAR(2) sample, sized like a year of daily data.
SeriesFrame make_frame(std::size_t rows, std::uint64_t seed = 1) {
  constexpr Eigen::Index m = 5;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXd a1 = Eigen::MatrixXd::Identity(m, m) * 0.5;
  Eigen::MatrixXd a2 = Eigen::MatrixXd::Constant(m, m, 0.04);
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows) + 100, m);
  for (Eigen::Index t = 2; t < v.rows(); ++t) {
    Eigen::VectorXd e(m);
    for (Eigen::Index j = 0; j < m; ++j) e(j) = n(rng);
    v.row(t) = (a1 * v.row(t - 1).transpose() + a2 * v.row(t - 2).transpose() + e).transpose();
  }
  std::vector<Date> dates;
  for (std::size_t t = 0; t < rows; ++t) dates.push_back(Date(2020, 3, 25) + static_cast<int>(t));
  return SeriesFrame(dates, {"a", "b", "c", "d", "e"}, v.bottomRows(static_cast<Eigen::Index>(rows)));
}

void BM_FitVar(benchmark::State& state) {
  const SeriesFrame f = make_frame(250);
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(varcast::fit_var(f, p));
}
BENCHMARK(BM_FitVar)->Arg(1)->Arg(4)->Arg(8);

void BM_SelectLag(benchmark::State& state) {
  const SeriesFrame f = make_frame(250);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(varcast::select_lag(f, 10, threads));
}
BENCHMARK(BM_SelectLag)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Forecast(benchmark::State& state) {
  const SeriesFrame f = make_frame(250);
  const varcast::VarModel model = varcast::fit_var(f, 8);
  const auto h = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(varcast::forecast(model, f, h));
}
BENCHMARK(BM_Forecast)->Arg(30)->Arg(120);

void BM_EngleGranger(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  const auto len = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(len), y(len);
  double walk = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    walk += n(rng);
    x[t] = walk;
    y[t] = 2.0 * walk + n(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(varcast::engle_granger(y, x));
}
BENCHMARK(BM_EngleGranger)->Arg(250)->Arg(1000);

void BM_Backtest(benchmark::State& state) {
  const SeriesFrame f = make_frame(250);
  varcast::BacktestConfig cfg;
  cfg.cutoffs = {f.first_date() + 100, f.first_date() + 150, f.first_date() + 200};
  cfg.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(varcast::run_backtest(f, cfg));
}
BENCHMARK(BM_Backtest)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

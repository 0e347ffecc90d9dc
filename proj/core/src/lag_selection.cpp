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

#include <algorithm>
#include <exception>
#include <optional>
#include <string>
#include <thread>

#include "varcast/error.hpp"
#include "varcast/var_model.hpp"

namespace varcast {

ChosenLags choose_lags(std::span<const CriteriaRow> rows) {
  if (rows.empty()) {
    throw Error(Errc::kInvalidArgument, "cannot choose a lag from an empty table");
  }
  auto argmin = [&](auto field) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      // strict comparison keeps the smaller lag on ties
      if (field(rows[i].values) < field(rows[best].values)) best = i;
    }
    return rows[best].lag;
  };
  ChosenLags c;
  c.aic = argmin([](const InformationCriteria& v) { return v.aic; });
  c.hqc = argmin([](const InformationCriteria& v) { return v.hqc; });
  c.sc = argmin([](const InformationCriteria& v) { return v.sc; });
  c.fpe = argmin([](const InformationCriteria& v) { return v.fpe; });
  return c;
}

LagSelectionTable select_lag(const SeriesFrame& frame, std::size_t p_max,
                             unsigned threads) {
  if (p_max == 0) {
    throw Error(Errc::kInvalidLag, "maximum lag must be at least 1");
  }
  if (frame.rows() <= p_max) {
    throw Error(Errc::kInsufficientData,
                "frame has " + std::to_string(frame.rows()) +
                    " rows, too few for maximum lag " + std::to_string(p_max));
  }

  std::vector<std::optional<CriteriaRow>> results(p_max);
  std::vector<std::exception_ptr> errors(p_max);
  auto evaluate = [&](std::size_t idx) {
    const std::size_t lag = idx + 1;
    try {
      VarModel model = fit_var_from(frame, lag, p_max);
      results[idx] = CriteriaRow{lag, information_criteria(model)};
    } catch (const Error& e) {
      errors[idx] = std::make_exception_ptr(
          Error(e.code(), "lag " + std::to_string(lag) + ": " + e.what()));
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, p_max));
  if (workers == 1) {
    for (std::size_t i = 0; i < p_max; ++i) evaluate(i);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < p_max; i += workers) evaluate(i);
      });
    }
  }

  // Report the failure at the smallest lag regardless of scheduling.
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  LagSelectionTable table;
  table.effective_sample = frame.rows() - p_max;
  for (auto& r : results) table.rows.push_back(*r);
  table.chosen = choose_lags(table.rows);
  return table;
}

}  // namespace varcast

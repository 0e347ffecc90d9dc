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

#include "varcast/series_frame.hpp"

#include <cmath>
#include <unordered_set>

#include "varcast/error.hpp"

namespace varcast {

SeriesFrame::SeriesFrame(std::vector<Date> dates, std::vector<std::string> names,
                         Eigen::MatrixXd values)
    : dates_(std::move(dates)), names_(std::move(names)), values_(std::move(values)) {
  if (dates_.empty()) {
    throw Error(Errc::kInsufficientData, "series frame needs at least one row");
  }
  if (static_cast<std::size_t>(values_.rows()) != dates_.size() ||
      static_cast<std::size_t>(values_.cols()) != names_.size()) {
    throw Error(Errc::kSchema, "series frame shape does not match dates/names");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) {
      throw Error(Errc::kSchema, "duplicate column name '" + n + "'");
    }
  }
  for (std::size_t t = 1; t < dates_.size(); ++t) {
    if (dates_[t] - dates_[t - 1] != 1) {
      throw Error(Errc::kUnfillableGap,
                  "frame dates not consecutive between " + dates_[t - 1].iso() +
                      " and " + dates_[t].iso());
    }
  }
  if (!values_.allFinite()) {
    throw Error(Errc::kParse, "series frame contains missing or non-finite values");
  }
}

std::optional<std::size_t> SeriesFrame::column_index(const std::string& name) const {
  for (std::size_t j = 0; j < names_.size(); ++j) {
    if (names_[j] == name) return j;
  }
  return std::nullopt;
}

std::size_t SeriesFrame::require_column(const std::string& name) const {
  if (auto j = column_index(name)) return *j;
  throw Error(Errc::kSchema, "no column named '" + name + "'");
}

std::vector<double> SeriesFrame::column(std::size_t j) const {
  std::vector<double> out(rows());
  for (std::size_t t = 0; t < rows(); ++t) out[t] = values_(t, j);
  return out;
}

std::optional<std::size_t> SeriesFrame::row_of(Date date) const {
  int offset = date - dates_.front();
  if (offset < 0 || static_cast<std::size_t>(offset) >= rows()) return std::nullopt;
  return static_cast<std::size_t>(offset);
}

SeriesFrame SeriesFrame::through(Date cutoff) const {
  if (cutoff < dates_.front()) {
    throw Error(Errc::kInvalidCutoff,
                "cutoff " + cutoff.iso() + " precedes first observation " +
                    dates_.front().iso());
  }
  std::size_t end = rows();
  if (auto r = row_of(cutoff)) end = *r + 1;
  return slice(0, end);
}

SeriesFrame SeriesFrame::slice(std::size_t begin, std::size_t end) const {
  if (begin >= end || end > rows()) {
    throw Error(Errc::kInvalidArgument, "invalid frame slice");
  }
  std::vector<Date> d(dates_.begin() + begin, dates_.begin() + end);
  Eigen::MatrixXd v = values_.middleRows(begin, end - begin);
  return SeriesFrame(std::move(d), names_, std::move(v));
}

bool operator==(const SeriesFrame& a, const SeriesFrame& b) {
  return a.dates_ == b.dates_ && a.names_ == b.names_ &&
         a.values_.rows() == b.values_.rows() &&
         a.values_.cols() == b.values_.cols() && a.values_ == b.values_;
}

}  // namespace varcast

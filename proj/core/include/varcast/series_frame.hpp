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

#ifndef VARCAST_SERIES_FRAME_HPP_
#define VARCAST_SERIES_FRAME_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "varcast/date.hpp"

namespace varcast {

/// Date-aligned multivariate panel. Row t holds the observation vector X_t.
///
/// Construction validates that dates are consecutive calendar days, names
/// are unique and match the column count, and every value is finite. The
/// frame is immutable afterwards.
class SeriesFrame {
 public:
  SeriesFrame(std::vector<Date> dates, std::vector<std::string> names,
              Eigen::MatrixXd values);

  std::size_t rows() const { return dates_.size(); }
  std::size_t cols() const { return names_.size(); }

  const std::vector<Date>& dates() const { return dates_; }
  const std::vector<std::string>& names() const { return names_; }
  const Eigen::MatrixXd& values() const { return values_; }

  Date first_date() const { return dates_.front(); }
  Date last_date() const { return dates_.back(); }

  std::optional<std::size_t> column_index(const std::string& name) const;
  /// Throws kSchema if `name` is not a column.
  std::size_t require_column(const std::string& name) const;
  std::vector<double> column(std::size_t j) const;

  /// Row index of `date`, if it falls inside the frame.
  std::optional<std::size_t> row_of(Date date) const;

  /// Rows dated on or before `cutoff`. Throws kInvalidCutoff when no row
  /// qualifies.
  SeriesFrame through(Date cutoff) const;

  /// Rows [begin, end).
  SeriesFrame slice(std::size_t begin, std::size_t end) const;

  friend bool operator==(const SeriesFrame& a, const SeriesFrame& b);

 private:
  std::vector<Date> dates_;
  std::vector<std::string> names_;
  Eigen::MatrixXd values_;
};

}  // namespace varcast

#endif  // VARCAST_SERIES_FRAME_HPP_

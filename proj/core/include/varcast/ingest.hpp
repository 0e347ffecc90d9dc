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

#ifndef VARCAST_INGEST_HPP_
#define VARCAST_INGEST_HPP_

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "varcast/csv.hpp"
#include "varcast/date.hpp"
#include "varcast/series_frame.hpp"

namespace varcast {

/// Canonical frame columns, in output order.
inline constexpr std::array<std::string_view, 5> kCanonicalColumns = {
    "pos_increase", "death_cum", "recovered_cum", "temperature", "humidity"};

/// Canonical count columns; gaps carry forward, increases become zero.
inline constexpr std::array<std::string_view, 3> kCountColumns = {
    "pos_increase", "death_cum", "recovered_cum"};

/// Source header for each canonical column. Defaults follow the
/// covidtracking.com national daily export.
struct ColumnMap {
  std::string pos_increase = "positiveIncrease";
  std::string death_cum = "death";
  std::string recovered_cum = "recovered";
  std::string temperature = "temperature";
  std::string humidity = "humidity";

  /// Header mapped to `canonical`; throws kSchema for unknown names.
  const std::string& source_for(std::string_view canonical) const;
  std::string& source_for(std::string_view canonical);
};

struct IngestSpec {
  std::string covid_path;
  std::string weather_path;
  ColumnMap columns;
  std::string covid_date_column = "date";
  std::string weather_date_column = "date";
  std::optional<Date> start = Date(2020, 3, 25);
  std::optional<Date> end;
  /// Metadata only ("C" or "F"); values are stored as given.
  std::string temperature_unit = "C";
};

struct GapFill {
  Date date;
  std::string column;
  std::string method;  // "carry_forward", "zero_increase" or "interpolate"
  double value = 0.0;
};

struct Clamp {
  Date date;
  std::string column;
  double reported = 0.0;
  double clamped_to = 0.0;
};

struct LoadReport {
  std::string covid_source;
  std::string weather_source;
  std::string temperature_unit;
  Date first;
  Date last;
  std::size_t rows = 0;
  std::vector<GapFill> fills;
  std::vector<Clamp> clamps;
};

struct LoadResult {
  SeriesFrame frame;
  LoadReport report;
};

/// Inner-joins the two sources on date within the spec's date range,
/// repairing single-day gaps and clamping decreases in cumulative columns.
/// Gaps of two or more days raise kUnfillableGap with the span.
LoadResult load_frame(const IngestSpec& spec);
LoadResult load_frame(const CsvTable& covid, const CsvTable& weather, const IngestSpec& spec);

std::string format_load_report(const LoadReport& report);

/// `date,<names...>` with shortest round-trip numbers.
void write_frame_csv(const SeriesFrame& frame, std::ostream& out);
SeriesFrame frame_from_csv(const CsvTable& table);
SeriesFrame read_frame_csv(const std::string& path);

}  // namespace varcast

#endif  // VARCAST_INGEST_HPP_

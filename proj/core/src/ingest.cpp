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

#include "varcast/ingest.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "varcast/error.hpp"

namespace varcast {
namespace {

using DayValues = std::map<Date, std::optional<double>>;

struct Source {
  std::string name;
  Date first;
  Date last;
  std::map<std::string, DayValues> columns;  // keyed by canonical name
};

bool is_count(std::string_view canonical) {
  return std::find(kCountColumns.begin(), kCountColumns.end(), canonical) !=
         kCountColumns.end();
}

Source read_source(const CsvTable& table, const std::string& date_column,
                   const std::vector<std::pair<std::string, std::string>>& mapped) {
  Source src;
  src.name = table.source;
  const std::size_t date_col = table.require_column(date_column);
  std::vector<std::pair<std::string, std::size_t>> cols;
  for (const auto& [canonical, header] : mapped) {
    cols.emplace_back(canonical, table.require_column(header));
    src.columns[canonical];
  }
  if (table.rows.empty()) {
    throw Error(Errc::kInsufficientData, table.source + ": no data rows");
  }

  std::map<Date, std::size_t> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    auto d = Date::try_parse(table.rows[r][date_col]);
    if (!d) {
      throw Error(Errc::kParse, table.source + ":" + std::to_string(table.line_numbers[r]) +
                                    ": column '" + date_column + "': cannot parse date '" +
                                    table.rows[r][date_col] + "'");
    }
    if (!seen.emplace(*d, r).second) {
      throw Error(Errc::kParse, table.source + ":" + std::to_string(table.line_numbers[r]) +
                                    ": duplicate date " + d->iso());
    }
    for (const auto& [canonical, c] : cols) src.columns[canonical][*d] = parse_cell(table, r, c);
  }
  src.first = seen.begin()->first;
  src.last = seen.rbegin()->first;
  return src;
}

std::optional<double> lookup(const DayValues& values, Date d) {
  auto it = values.find(d);
  return it == values.end() ? std::nullopt : it->second;
}

[[noreturn]] void gap_error(const Source& src, const std::string& canonical,
                            const std::string& header, Date d) {
  const DayValues& values = src.columns.at(canonical);
  Date lo = d, hi = d;
  while (lo > src.first && !lookup(values, lo - 1)) lo = lo - 1;
  while (hi < src.last && !lookup(values, hi + 1)) hi = hi + 1;
  const int span = hi - lo + 1;
  throw Error(Errc::kUnfillableGap,
              src.name + ": column '" + header + "' missing " + std::to_string(span) +
                  " consecutive day(s) " + lo.iso() + ".." + hi.iso() +
                  "; only single-day gaps can be filled");
}

}  // namespace

const std::string& ColumnMap::source_for(std::string_view canonical) const {
  return const_cast<ColumnMap*>(this)->source_for(canonical);
}

std::string& ColumnMap::source_for(std::string_view canonical) {
  if (canonical == "pos_increase") return pos_increase;
  if (canonical == "death_cum") return death_cum;
  if (canonical == "recovered_cum") return recovered_cum;
  if (canonical == "temperature") return temperature;
  if (canonical == "humidity") return humidity;
  throw Error(Errc::kSchema, "unknown canonical column '" + std::string(canonical) + "'");
}

LoadResult load_frame(const CsvTable& covid_table, const CsvTable& weather_table,
                      const IngestSpec& spec) {
  std::vector<std::pair<std::string, std::string>> covid_cols, weather_cols;
  for (auto c : kCanonicalColumns) {
    const std::string& header = spec.columns.source_for(c);
    if (header.empty()) {
      throw Error(Errc::kSchema, "canonical column '" + std::string(c) + "' is not mapped");
    }
    (is_count(c) ? covid_cols : weather_cols).emplace_back(std::string(c), header);
  }
  const Source covid = read_source(covid_table, spec.covid_date_column, covid_cols);
  const Source weather = read_source(weather_table, spec.weather_date_column, weather_cols);

  Date lo = std::max(covid.first, weather.first);
  Date hi = std::min(covid.last, weather.last);
  if (spec.start) lo = std::max(lo, *spec.start);
  if (spec.end) hi = std::min(hi, *spec.end);
  if (lo > hi) {
    throw Error(Errc::kInsufficientData, "sources share no dates inside the requested range");
  }

  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  Eigen::MatrixXd values(static_cast<Eigen::Index>(n),
                         static_cast<Eigen::Index>(kCanonicalColumns.size()));
  std::vector<Date> dates;
  LoadReport report;
  report.covid_source = covid.name;
  report.weather_source = weather.name;
  report.temperature_unit = spec.temperature_unit;

  for (std::size_t t = 0; t < n; ++t) {
    const Date d = lo + static_cast<int>(t);
    dates.push_back(d);
    for (std::size_t j = 0; j < kCanonicalColumns.size(); ++j) {
      const std::string canonical(kCanonicalColumns[j]);
      const bool count = is_count(canonical);
      const Source& src = count ? covid : weather;
      const DayValues& col = src.columns.at(canonical);
      const Eigen::Index r = static_cast<Eigen::Index>(t);
      const Eigen::Index c = static_cast<Eigen::Index>(j);

      std::optional<double> v = lookup(col, d);
      if (!v) {
        const auto prev = t > 0 ? std::optional<double>(values(r - 1, c)) : lookup(col, d - 1);
        const auto next = lookup(col, d + 1);
        if (!prev || !next) gap_error(src, canonical, spec.columns.source_for(canonical), d);
        GapFill fill{d, canonical, "", 0.0};
        if (canonical == "pos_increase") {
          fill.method = "zero_increase";
          fill.value = 0.0;
        } else if (count) {
          fill.method = "carry_forward";
          fill.value = *prev;
        } else {
          fill.method = "interpolate";
          fill.value = 0.5 * (*prev + *next);
        }
        v = fill.value;
        report.fills.push_back(std::move(fill));
      }
      if (count && canonical != "pos_increase" && t > 0 && *v < values(r - 1, c)) {
        report.clamps.push_back(Clamp{d, canonical, *v, values(r - 1, c)});
        v = values(r - 1, c);
      }
      values(r, c) = *v;
    }
  }

  std::vector<std::string> names(kCanonicalColumns.begin(), kCanonicalColumns.end());
  report.first = lo;
  report.last = hi;
  report.rows = n;
  return LoadResult{SeriesFrame(std::move(dates), std::move(names), std::move(values)),
                    std::move(report)};
}

LoadResult load_frame(const IngestSpec& spec) {
  return load_frame(read_csv(spec.covid_path), read_csv(spec.weather_path), spec);
}

std::string format_load_report(const LoadReport& report) {
  std::ostringstream out;
  out << "covid_source: " << report.covid_source << '\n'
      << "weather_source: " << report.weather_source << '\n'
      << "temperature_unit: " << report.temperature_unit << '\n'
      << "date_range: " << report.first.iso() << ".." << report.last.iso() << '\n'
      << "rows: " << report.rows << '\n'
      << "filled_gaps: " << report.fills.size() << '\n';
  for (const auto& f : report.fills) {
    out << "  fill " << f.date.iso() << ' ' << f.column << ' ' << f.method << ' '
        << format_double(f.value) << '\n';
  }
  out << "clamped_values: " << report.clamps.size() << '\n';
  for (const auto& c : report.clamps) {
    out << "  clamp " << c.date.iso() << ' ' << c.column << " reported "
        << format_double(c.reported) << " -> " << format_double(c.clamped_to) << '\n';
  }
  return out.str();
}

void write_frame_csv(const SeriesFrame& frame, std::ostream& out) {
  out << "date";
  for (const auto& n : frame.names()) out << ',' << n;
  out << '\n';
  for (std::size_t t = 0; t < frame.rows(); ++t) {
    out << frame.dates()[t].iso();
    for (std::size_t j = 0; j < frame.cols(); ++j) {
      out << ',' << format_double(frame.values()(static_cast<Eigen::Index>(t),
                                                 static_cast<Eigen::Index>(j)));
    }
    out << '\n';
  }
}

SeriesFrame frame_from_csv(const CsvTable& table) {
  if (table.header.size() < 2 || table.header[0] != "date") {
    throw Error(Errc::kSchema, table.source + ": frame CSV must start with a 'date' column");
  }
  if (table.rows.empty()) {
    throw Error(Errc::kInsufficientData, table.source + ": frame has no rows");
  }
  const std::size_t m = table.header.size() - 1;
  std::vector<std::pair<Date, std::size_t>> order;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    auto d = Date::try_parse(table.rows[r][0]);
    if (!d) {
      throw Error(Errc::kParse, table.source + ":" + std::to_string(table.line_numbers[r]) +
                                    ": cannot parse date '" + table.rows[r][0] + "'");
    }
    order.emplace_back(*d, r);
  }
  std::sort(order.begin(), order.end());
  std::vector<Date> dates;
  Eigen::MatrixXd values(static_cast<Eigen::Index>(order.size()), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [d, r] = order[i];
    dates.push_back(d);
    for (std::size_t j = 0; j < m; ++j) {
      auto v = parse_cell(table, r, j + 1);
      if (!v) {
        throw Error(Errc::kParse, table.source + ":" + std::to_string(table.line_numbers[r]) +
                                      ": column '" + table.header[j + 1] + "' is empty");
      }
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = *v;
    }
  }
  std::vector<std::string> names(table.header.begin() + 1, table.header.end());
  return SeriesFrame(std::move(dates), std::move(names), std::move(values));
}

SeriesFrame read_frame_csv(const std::string& path) {
  return frame_from_csv(read_csv(path));
}

}  // namespace varcast

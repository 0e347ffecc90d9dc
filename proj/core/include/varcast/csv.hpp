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

#ifndef VARCAST_CSV_HPP_
#define VARCAST_CSV_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace varcast {

struct CsvTable {
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based, parallel to rows

  /// Throws kSchema naming the column and source when absent.
  std::size_t require_column(std::string_view name) const;
};

/// Comma-separated with a header row. Double-quoted fields may contain
/// commas; blank lines are skipped; a trailing CR is stripped.
CsvTable parse_csv(std::istream& in, std::string source);
CsvTable read_csv(const std::string& path);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Empty (or NA-like) cells yield nullopt; otherwise throws kParse with
/// source, line and column.
std::optional<double> parse_cell(const CsvTable& table, std::size_t row, std::size_t col);

}  // namespace varcast

#endif  // VARCAST_CSV_HPP_

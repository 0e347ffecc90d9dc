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

#ifndef VARCAST_DATE_HPP_
#define VARCAST_DATE_HPP_

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace varcast {

/// A plain calendar day. No time zone; the data is daily.
class Date {
 public:
  constexpr Date() = default;
  constexpr explicit Date(std::chrono::sys_days days) : days_(days) {}
  Date(int year, unsigned month, unsigned day);

  /// Accepts ISO-8601 (`2020-07-02`) or compact (`20200702`).
  static Date parse(std::string_view text);
  static std::optional<Date> try_parse(std::string_view text);

  std::string iso() const;
  std::chrono::sys_days sys_days() const { return days_; }
  std::chrono::weekday weekday() const { return std::chrono::weekday{days_}; }

  Date operator+(int n) const { return Date{days_ + std::chrono::days{n}}; }
  Date operator-(int n) const { return Date{days_ - std::chrono::days{n}}; }
  /// Signed day count `*this - other`.
  int operator-(const Date& other) const {
    return static_cast<int>((days_ - other.days_).count());
  }

  friend auto operator<=>(const Date&, const Date&) = default;

 private:
  std::chrono::sys_days days_{};
};

/// Three-letter English weekday names (`mon`..`sun`), case-insensitive.
std::optional<std::chrono::weekday> parse_weekday(std::string_view text);

}  // namespace varcast

#endif  // VARCAST_DATE_HPP_

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

#include "varcast/date.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "varcast/error.hpp"

namespace varcast {
namespace {

bool parse_digits(std::string_view text, int& out) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

Date::Date(int year, unsigned month, unsigned day) {
  std::chrono::year_month_day ymd{std::chrono::year{year},
                                  std::chrono::month{month},
                                  std::chrono::day{day}};
  if (!ymd.ok()) {
    throw Error(Errc::kParse, "invalid calendar date " + std::to_string(year) +
                                  "-" + std::to_string(month) + "-" +
                                  std::to_string(day));
  }
  days_ = std::chrono::sys_days{ymd};
}

std::optional<Date> Date::try_parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  int y = 0, m = 0, d = 0;
  if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
    if (!parse_digits(text.substr(0, 4), y) ||
        !parse_digits(text.substr(5, 2), m) ||
        !parse_digits(text.substr(8, 2), d))
      return std::nullopt;
  } else if (text.size() == 8) {
    if (!parse_digits(text.substr(0, 4), y) ||
        !parse_digits(text.substr(4, 2), m) ||
        !parse_digits(text.substr(6, 2), d))
      return std::nullopt;
  } else {
    return std::nullopt;
  }
  std::chrono::year_month_day ymd{std::chrono::year{y},
                                  std::chrono::month{static_cast<unsigned>(m)},
                                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return Date{std::chrono::sys_days{ymd}};
}

Date Date::parse(std::string_view text) {
  if (auto d = try_parse(text)) return *d;
  throw Error(Errc::kParse, "unparseable date '" + std::string(text) +
                                "' (expected YYYY-MM-DD or YYYYMMDD)");
}

std::string Date::iso() const {
  std::chrono::year_month_day ymd{days_};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

std::optional<std::chrono::weekday> parse_weekday(std::string_view text) {
  static constexpr std::string_view kNames[] = {"sun", "mon", "tue", "wed",
                                                "thu", "fri", "sat"};
  if (text.size() < 3) return std::nullopt;
  std::string lower;
  for (char c : text.substr(0, 3))
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (unsigned i = 0; i < 7; ++i) {
    if (lower == kNames[i]) return std::chrono::weekday{i};
  }
  return std::nullopt;
}

}  // namespace varcast

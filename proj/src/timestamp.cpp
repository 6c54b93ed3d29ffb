/*
 * Copyright 2025 The AgentFacts Toolkit Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "agentfacts/timestamp.hpp"

#include <cstdio>
#include <ctime>

#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

// Proleptic Gregorian day arithmetic (Howard Hinnant's civil date
// algorithms); keeps parsing independent of the host timezone database.
std::int64_t days_from_civil(std::int64_t y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y += (m <= 2);
}

bool is_leap(std::int64_t y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(std::int64_t y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[m - 1];
}

int parse_digits(std::string_view s, std::size_t pos, int count) {
  int value = 0;
  for (int i = 0; i < count; ++i) {
    const char c = s[pos + i];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::syntax_error,
                  "timestamp: expected digit in \"" + std::string(s) + "\"");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Timestamp Timestamp::parse(std::string_view text) {
  // Fixed layout: YYYY-MM-DDTHH:MM:SSZ (20 characters).
  if (text.size() != 20 || text[4] != '-' || text[7] != '-' ||
      text[10] != 'T' || text[13] != ':' || text[16] != ':' ||
      text[19] != 'Z') {
    throw Error(ErrorKind::syntax_error,
                "timestamp: expected YYYY-MM-DDTHH:MM:SSZ, got \"" +
                    std::string(text) + "\"");
  }
  const int year = parse_digits(text, 0, 4);
  const int month = parse_digits(text, 5, 2);
  const int day = parse_digits(text, 8, 2);
  const int hour = parse_digits(text, 11, 2);
  const int minute = parse_digits(text, 14, 2);
  const int second = parse_digits(text, 17, 2);
  // Leap second notation (":60") is rejected: every accepted text must map
  // to a distinct instant so parse/print is a bijection.
  if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month) ||
      hour > 23 || minute > 59 || second > 59) {
    throw Error(ErrorKind::syntax_error,
                "timestamp: out-of-range component in \"" + std::string(text) +
                    "\"");
  }
  const std::int64_t days = days_from_civil(year, month, day);
  return Timestamp(days * 86400 + hour * 3600 + minute * 60 + second);
}

Timestamp Timestamp::now() {
  return Timestamp(static_cast<std::int64_t>(std::time(nullptr)));
}

std::string Timestamp::to_string() const {
  std::int64_t days = secs_ / 86400;
  std::int64_t rem = secs_ % 86400;
  if (rem < 0) {
    rem += 86400;
    days -= 1;
  }
  std::int64_t year;
  int month, day;
  civil_from_days(days, year, month, day);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%04lld-%02d-%02dT%02lld:%02lld:%02lldZ",
                static_cast<long long>(year), month, day,
                static_cast<long long>(rem / 3600),
                static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

int Timestamp::utc_hour() const {
  std::int64_t rem = secs_ % 86400;
  if (rem < 0) rem += 86400;
  return static_cast<int>(rem / 3600);
}

}  // namespace agentfacts

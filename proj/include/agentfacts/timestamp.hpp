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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace agentfacts {

/// UTC instant with second precision. The wire and file representation is
/// RFC 3339 with a literal "Z" suffix ("2025-06-02T09:00:00Z"); internally
/// seconds since the Unix epoch.
class Timestamp {
 public:
  Timestamp() = default;
  explicit constexpr Timestamp(std::int64_t epoch_seconds)
      : secs_(epoch_seconds) {}

  /// Parses "YYYY-MM-DDTHH:MM:SSZ". Throws Error{syntax_error} on anything
  /// else (fractional seconds and numeric offsets are deliberately not
  /// accepted; producers normalize to UTC seconds).
  static Timestamp parse(std::string_view text);

  /// Current wall-clock time.
  static Timestamp now();

  std::string to_string() const;

  constexpr std::int64_t epoch_seconds() const { return secs_; }

  constexpr Timestamp plus_seconds(std::int64_t s) const {
    return Timestamp(secs_ + s);
  }

  /// Hour of day (0-23) in UTC.
  int utc_hour() const;

  friend constexpr auto operator<=>(Timestamp, Timestamp) = default;

 private:
  std::int64_t secs_ = 0;
};

}  // namespace agentfacts

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

#include <doctest.h>

#include <random>

#include "agentfacts/errors.hpp"
#include "agentfacts/timestamp.hpp"

using namespace agentfacts;

TEST_CASE("timestamps parse and print the fixed UTC layout") {
  auto t = Timestamp::parse("2025-06-02T09:00:00Z");
  CHECK(t.to_string() == "2025-06-02T09:00:00Z");
  CHECK(t.epoch_seconds() == 1748854800);

  CHECK(Timestamp::parse("1970-01-01T00:00:00Z").epoch_seconds() == 0);
  CHECK(Timestamp::parse("1969-12-31T23:59:59Z").epoch_seconds() == -1);
  // A value checked against `date -u -d @4102444799`.
  CHECK(Timestamp::parse("2099-12-31T23:59:59Z").epoch_seconds() ==
        4102444799);
}

TEST_CASE("leap day handling") {
  CHECK_NOTHROW(Timestamp::parse("2024-02-29T12:00:00Z"));
  CHECK_THROWS_AS(Timestamp::parse("2025-02-29T12:00:00Z"), Error);
  CHECK_NOTHROW(Timestamp::parse("2000-02-29T00:00:00Z"));
  CHECK_THROWS_AS(Timestamp::parse("2100-02-29T00:00:00Z"), Error);
}

TEST_CASE("malformed timestamps are rejected") {
  const char* bad[] = {
      "2025-06-02T09:00:00",       // missing Z
      "2025-06-02 09:00:00Z",      // space separator
      "2025-06-02T09:00:00.000Z",  // fractional seconds
      "2025-6-02T09:00:00Z",       // unpadded month
      "2025-13-01T00:00:00Z",      // month range
      "2025-00-01T00:00:00Z",
      "2025-04-31T00:00:00Z",      // day range for April
      "2025-06-02T24:00:00Z",      // hour range
      "2025-06-02T09:60:00Z",      // minute range
      "2025-06-02T09:00:60Z",      // second range
      "2025-06-02T09:00:00+00:00", // offset form
      "",
  };
  for (const char* s : bad) {
    CAPTURE(s);
    CHECK_THROWS_AS(Timestamp::parse(s), Error);
  }
}

TEST_CASE("print then parse is the identity over a wide range") {
  std::mt19937_64 rng(20250602);
  for (int i = 0; i < 2000; ++i) {
    // Roughly 1900..2200.
    int64_t secs = static_cast<int64_t>(rng() % 9467280000ULL) - 2208988800LL;
    Timestamp t = Timestamp(secs);
    auto text = t.to_string();
    CHECK(text.size() == 20);
    CHECK(Timestamp::parse(text) == t);
  }
}

TEST_CASE("arithmetic and hour extraction") {
  auto t = Timestamp::parse("2025-06-02T23:30:00Z");
  CHECK(t.plus_seconds(1800).to_string() == "2025-06-03T00:00:00Z");
  CHECK(t.plus_seconds(-1).to_string() == "2025-06-02T23:29:59Z");
  CHECK(t.utc_hour() == 23);
  CHECK(Timestamp::parse("2025-06-02T00:00:00Z").utc_hour() == 0);
}

TEST_CASE("ordering is chronological") {
  auto a = Timestamp::parse("2025-06-02T09:00:00Z");
  auto b = Timestamp::parse("2025-06-02T09:00:01Z");
  CHECK(a < b);
  CHECK(a == a.plus_seconds(0));
}

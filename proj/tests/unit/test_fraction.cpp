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

#include "agentfacts/fraction.hpp"

using namespace agentfacts;

TEST_CASE("fractions are micro-unit fixed point") {
  CHECK(Fraction::from_value(0.85).micros() == 850000);
  CHECK(Fraction::from_value(1.0).micros() == 1000000);
  CHECK(Fraction::from_value(0.0).micros() == 0);
  // Values a binary double cannot hold exactly still land on the intended
  // micro count.
  CHECK(Fraction::from_value(0.1).micros() == 100000);
  CHECK(Fraction::from_value(0.999999).micros() == 999999);
}

TEST_CASE("unit range check brackets zero and one inclusively") {
  CHECK(Fraction::from_micros(0).in_unit_range());
  CHECK(Fraction::from_micros(1000000).in_unit_range());
  CHECK_FALSE(Fraction::from_micros(-1).in_unit_range());
  CHECK_FALSE(Fraction::from_micros(1000001).in_unit_range());
}

TEST_CASE("fixed string form always shows six decimals") {
  CHECK(Fraction::from_micros(850000).to_fixed_string() == "0.850000");
  CHECK(Fraction::from_micros(0).to_fixed_string() == "0.000000");
  CHECK(Fraction::from_micros(1000000).to_fixed_string() == "1.000000");
  CHECK(Fraction::from_micros(7).to_fixed_string() == "0.000007");
}

TEST_CASE("unit product rounds half away from zero at micro precision") {
  auto a = Fraction::from_micros(500000);  // 0.5
  auto b = Fraction::from_micros(500000);
  CHECK(unit_product(a, b).micros() == 250000);

  // 0.000001 * 0.5 = 0.0000005, rounds up to one micro.
  CHECK(unit_product(Fraction::from_micros(1), Fraction::from_micros(500000))
            .micros() == 1);
  // 0.000001 * 0.4 rounds down to zero.
  CHECK(unit_product(Fraction::from_micros(1), Fraction::from_micros(400000))
            .micros() == 0);

  CHECK(unit_product(Fraction::from_micros(1000000), a) == a);
}

TEST_CASE("unit product stays within one micro of the real product") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 2000; ++i) {
    auto a = Fraction::from_micros(static_cast<int64_t>(rng() % 1000001));
    auto b = Fraction::from_micros(static_cast<int64_t>(rng() % 1000001));
    auto p = unit_product(a, b);
    CHECK(p.in_unit_range());
    double real = a.value() * b.value();
    CHECK(std::abs(p.value() - real) <= 5e-7);
  }
}

TEST_CASE("ordering follows the numeric value") {
  CHECK(Fraction::from_micros(850000) < Fraction::from_micros(900000));
  CHECK(Fraction::from_micros(850000) == Fraction::from_value(0.85));
}

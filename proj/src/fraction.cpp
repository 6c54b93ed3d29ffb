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

#include "agentfacts/fraction.hpp"

#include <cstdio>
#include <cstdlib>

namespace agentfacts {

std::string Fraction::to_fixed_string() const {
  const std::int64_t whole = micros_ / kScale;
  std::int64_t frac = micros_ % kScale;
  const bool negative = micros_ < 0;
  if (frac < 0) frac = -frac;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%s%lld.%06lld",
                (negative && whole == 0) ? "-" : "",
                static_cast<long long>(whole < 0 ? -(-whole) : whole),
                static_cast<long long>(frac));
  return buf;
}

Fraction unit_product(Fraction a, Fraction b) {
  // Exact 64-bit arithmetic: |a|,|b| <= 1e6 micro-units for unit-range
  // inputs, so the product fits comfortably.
  const std::int64_t p = a.micros() * b.micros();
  const std::int64_t half = Fraction::kScale / 2;
  const std::int64_t rounded =
      p >= 0 ? (p + half) / Fraction::kScale : -((-p + half) / Fraction::kScale);
  return Fraction::from_micros(rounded);
}

}  // namespace agentfacts

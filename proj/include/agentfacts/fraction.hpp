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

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace agentfacts {

/// Fixed-point decimal with parts-per-million resolution.
///
/// Fractional quantities (confidence levels, SLAs, scores) are decimal
/// numbers in files and APIs but integers in canonical form: the canonical
/// encoding admits no non-integer numbers, so signatures and digests are
/// immune to float-formatting drift between implementations. One micro-unit
/// is 1e-6; values are exact within that resolution.
class Fraction {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  Fraction() = default;

  static constexpr Fraction from_micros(std::int64_t micros) {
    Fraction f;
    f.micros_ = micros;
    return f;
  }

  /// Nearest micro-unit; ties round away from zero (llround semantics).
  static Fraction from_value(double value) {
    return from_micros(std::llround(value * static_cast<double>(kScale)));
  }

  constexpr std::int64_t micros() const { return micros_; }

  double value() const {
    return static_cast<double>(micros_) / static_cast<double>(kScale);
  }

  /// Whether the value lies in [0, 1].
  constexpr bool in_unit_range() const {
    return micros_ >= 0 && micros_ <= kScale;
  }

  /// Fixed six-decimal rendering ("0.950000"), used wherever output must be
  /// byte-stable.
  std::string to_fixed_string() const;

  friend constexpr auto operator<=>(Fraction, Fraction) = default;

 private:
  std::int64_t micros_ = 0;
};

/// Product of two unit-range fractions, rounded to the nearest micro-unit.
/// Used by trust scoring (weight x confidence).
Fraction unit_product(Fraction a, Fraction b);

}  // namespace agentfacts

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

#ifndef AGENTFACTS_TESTS_SUPPORT_DOC_GEN_HPP_
#define AGENTFACTS_TESTS_SUPPORT_DOC_GEN_HPP_

#include <random>
#include <string>
#include <vector>

#include "agentfacts/document.hpp"

namespace agentfacts::testing {

/// Seeded generator of random parseable documents, covering hostile string
/// content (escapes, control characters, multi-byte UTF-8), optional-field
/// presence, and free-form extension records (integers only — fractional
/// numbers are not representable in the canonical form).
class DocGen {
 public:
  explicit DocGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  /// One random document. identity is always present; every other section
  /// is present with high probability, and optional fields inside present
  /// sections are filled at random.
  AgentFactsDoc document();

  std::string text();
  json opaque(int depth = 2);
  Timestamp timestamp();
  Fraction unit_fraction();
  bool chance(double p);
  std::int64_t pick(std::int64_t lo, std::int64_t hi);  // inclusive

 private:
  std::mt19937_64 rng_;
};

/// JSON pointers of every scalar leaf (string/int/bool) under `v`,
/// depth-first. Null leaves are skipped: they have no useful mutation.
std::vector<std::string> scalar_leaf_pointers(const json& v);

/// Mutates the scalar at `pointer` in place: strings get one byte replaced
/// with a different printable ASCII byte (appending instead when no safely
/// replaceable byte exists), integers move by one, booleans flip. The new
/// value always differs from the old one.
void mutate_leaf(json& root, const std::string& pointer, std::mt19937_64& rng);

}  // namespace agentfacts::testing

#endif  // AGENTFACTS_TESTS_SUPPORT_DOC_GEN_HPP_

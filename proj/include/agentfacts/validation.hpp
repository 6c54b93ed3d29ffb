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

#include <string>
#include <vector>

#include "agentfacts/document.hpp"

namespace agentfacts {

enum class Severity { error, warning };

/// One structural problem, anchored to a JSON-pointer-style path.
struct Finding {
  Severity severity = Severity::error;
  std::string path;
  std::string message;

  json to_json() const;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  /// True when no finding has severity error (warnings allowed).
  bool ok() const;
  std::size_t error_count() const;

  json to_json() const;
};

/// Checks every structural invariant of a parsed document. Pure: findings
/// are data, never exceptions, and the same document yields the same
/// report. Freshness is deliberately out of scope — a stale document can
/// be structurally perfect.
ValidationReport validate_document(const AgentFactsDoc& doc);

}  // namespace agentfacts

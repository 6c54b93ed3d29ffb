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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agentfacts/document.hpp"

namespace agentfacts {

/// Operator-tunable grace windows: how long past expiry a section may be
/// served as "stale" before it is "expired".
struct StalenessPolicy {
  std::map<std::string, std::int64_t> acceptable_staleness;  // section → seconds
  std::optional<std::set<std::string>> critical_sections;    // default trio

  json to_json() const;
  static StalenessPolicy from_json(const json& v, const std::string& path);
  static StalenessPolicy parse(std::string_view text);

  friend bool operator==(const StalenessPolicy&, const StalenessPolicy&) = default;
};

struct FreshnessReport {
  std::map<std::string, FreshState> per_section;  // present sections only
  DocFreshness document_status = DocFreshness::fresh;
  std::optional<Timestamp> next_expiry;  // soonest expiry among fresh sections

  json to_json() const;

  friend bool operator==(const FreshnessReport&, const FreshnessReport&) = default;
};

/// A section's expiry instant: identity.last_updated plus its
/// verification_ttl override, or plus the global identity.ttl without one.
Timestamp section_expiry(const AgentFactsDoc& doc, const std::string& section);

/// Evaluates TTL freshness for every present section. A section is fresh
/// through its expiry instant, stale through the acceptable_staleness
/// window after it, expired beyond. Document status: expired when any
/// critical section expired; degraded when any non-critical section is
/// stale or expired; fresh otherwise (a critical section inside its stale
/// window is reported per-section but does not change document status —
/// the window exists to keep serving it).
FreshnessReport freshness(const AgentFactsDoc& doc, Timestamp now,
                          const StalenessPolicy& policy);

struct RefreshPlan {
  struct Entry {
    std::string section;
    Timestamp refresh_at;  // the section's expiry instant

    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;  // ascending by (refresh_at, section)
  bool all_expired = false;

  json to_json() const;

  friend bool operator==(const RefreshPlan&, const RefreshPlan&) = default;
};

/// Pull-scheduling aid: one entry per fresh or stale section at its expiry
/// instant, soonest first. Expired sections are past planning; when every
/// section is expired the plan is empty and flagged.
RefreshPlan plan_refresh(const AgentFactsDoc& doc, Timestamp now,
                         const StalenessPolicy& policy);

}  // namespace agentfacts

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

#include "agentfacts/freshness.hpp"

#include <algorithm>

#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

const std::set<std::string> kDefaultCritical = {"identity", "compliance",
                                                "verification"};

std::set<std::string> critical_of(const StalenessPolicy& policy) {
  return policy.critical_sections ? *policy.critical_sections : kDefaultCritical;
}

std::int64_t staleness_window(const StalenessPolicy& policy,
                              const std::string& section) {
  auto it = policy.acceptable_staleness.find(section);
  return it == policy.acceptable_staleness.end() ? 0 : it->second;
}

}  // namespace

json StalenessPolicy::to_json() const {
  json v = json::object();
  if (!acceptable_staleness.empty()) {
    json m = json::object();
    for (const auto& [k, secs] : acceptable_staleness) m[k] = secs;
    v["acceptable_staleness"] = std::move(m);
  }
  if (critical_sections) {
    v["critical_sections"] = std::vector<std::string>(critical_sections->begin(),
                                                      critical_sections->end());
  }
  return v;
}

StalenessPolicy StalenessPolicy::from_json(const json& v,
                                           const std::string& path) {
  ObjReader r(v, path);
  StalenessPolicy p;
  if (const json* m = r.optional("acceptable_staleness")) {
    const json& obj = as_object(*m, r.child_path("acceptable_staleness"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      std::string kp = r.child_path("acceptable_staleness") + "/" + it.key();
      if (!is_section_name(it.key())) {
        throw Error(ErrorKind::unknown_section_in_policy, kp,
                    "\"" + it.key() + "\" is not a schema section");
      }
      std::int64_t secs = as_int(it.value(), kp);
      if (secs < 0) {
        throw Error(ErrorKind::type_mismatch, kp,
                    "staleness window must be >= 0");
      }
      p.acceptable_staleness[it.key()] = secs;
    }
  }
  if (const json* a = r.optional("critical_sections")) {
    auto names = as_string_list(*a, r.child_path("critical_sections"));
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!is_section_name(names[i])) {
        throw Error(ErrorKind::unknown_section_in_policy,
                    r.child_path("critical_sections") + "/" + std::to_string(i),
                    "\"" + names[i] + "\" is not a schema section");
      }
    }
    p.critical_sections = std::set<std::string>(names.begin(), names.end());
  }
  r.finish();
  return p;
}

StalenessPolicy StalenessPolicy::parse(std::string_view text) {
  return from_json(parse_json_text(text), "");
}

json FreshnessReport::to_json() const {
  json sections = json::object();
  for (const auto& [name, state] : per_section) {
    sections[name] = std::string(to_token(state));
  }
  json v = json::object();
  v["document_status"] = std::string(to_token(document_status));
  if (next_expiry) v["next_expiry"] = timestamp_json(*next_expiry);
  v["sections"] = std::move(sections);
  return v;
}

Timestamp section_expiry(const AgentFactsDoc& doc, const std::string& section) {
  std::int64_t ttl = doc.identity.ttl;
  if (doc.verification) {
    auto it = doc.verification->verification_ttl.find(section);
    if (it != doc.verification->verification_ttl.end()) ttl = it->second;
  }
  return doc.identity.last_updated.plus_seconds(ttl);
}

FreshnessReport freshness(const AgentFactsDoc& doc, Timestamp now,
                          const StalenessPolicy& policy) {
  FreshnessReport report;
  std::set<std::string> critical = critical_of(policy);

  bool any_critical_expired = false;
  bool any_noncritical_degraded = false;

  for (const auto& section : present_sections(doc)) {
    Timestamp expiry = section_expiry(doc, section);
    FreshState state;
    if (now <= expiry) {
      state = FreshState::fresh;
      if (!report.next_expiry || expiry < *report.next_expiry) {
        report.next_expiry = expiry;
      }
    } else if (now <= expiry.plus_seconds(staleness_window(policy, section))) {
      state = FreshState::stale;
    } else {
      state = FreshState::expired;
    }
    if (critical.count(section)) {
      if (state == FreshState::expired) any_critical_expired = true;
    } else if (state != FreshState::fresh) {
      any_noncritical_degraded = true;
    }
    report.per_section[section] = state;
  }

  if (any_critical_expired) {
    report.document_status = DocFreshness::expired;
  } else if (any_noncritical_degraded) {
    report.document_status = DocFreshness::degraded;
  } else {
    report.document_status = DocFreshness::fresh;
  }
  return report;
}

json RefreshPlan::to_json() const {
  json list = json::array();
  for (const auto& e : entries) {
    json o = json::object();
    o["section"] = e.section;
    o["refresh_at"] = timestamp_json(e.refresh_at);
    list.push_back(std::move(o));
  }
  json v = json::object();
  v["all_expired"] = all_expired;
  v["entries"] = std::move(list);
  return v;
}

RefreshPlan plan_refresh(const AgentFactsDoc& doc, Timestamp now,
                         const StalenessPolicy& policy) {
  RefreshPlan plan;
  FreshnessReport report = freshness(doc, now, policy);
  for (const auto& [section, state] : report.per_section) {
    if (state == FreshState::expired) continue;
    plan.entries.push_back({section, section_expiry(doc, section)});
  }
  std::sort(plan.entries.begin(), plan.entries.end(),
            [](const RefreshPlan::Entry& a, const RefreshPlan::Entry& b) {
              if (a.refresh_at != b.refresh_at) return a.refresh_at < b.refresh_at;
              return a.section < b.section;
            });
  plan.all_expired = plan.entries.empty() && !report.per_section.empty();
  return plan;
}

}  // namespace agentfacts

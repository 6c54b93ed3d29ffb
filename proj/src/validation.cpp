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

#include "agentfacts/validation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

class Collector {
 public:
  explicit Collector(std::vector<Finding>& out) : out_(out) {}

  void error(std::string path, std::string message) {
    out_.push_back({Severity::error, std::move(path), std::move(message)});
  }
  void warning(std::string path, std::string message) {
    out_.push_back({Severity::warning, std::move(path), std::move(message)});
  }

 private:
  std::vector<Finding>& out_;
};

void check_unit_fraction(Collector& c, const std::optional<Fraction>& f,
                         const std::string& path) {
  if (f && !f->in_unit_range()) {
    c.error(path, "fraction must lie in [0, 1]");
  }
}

void check_duplicates(Collector& c, const std::vector<std::string>& xs,
                      const std::string& path) {
  std::set<std::string_view> seen;
  for (const auto& x : xs) {
    if (!seen.insert(x).second) {
      c.warning(path, "duplicate entry \"" + x + "\"");
    }
  }
}

// ISO 639 language tags: 2-3 lowercase letters, then optional alphanumeric
// subtags ("en", "pt-BR", "zh-Hans").
bool looks_like_language_tag(const std::string& tag) {
  std::size_t i = 0;
  while (i < tag.size() && std::islower(static_cast<unsigned char>(tag[i]))) i++;
  if (i < 2 || i > 3) return false;
  if (i == tag.size()) return true;
  if (tag[i] != '-') return false;
  for (std::size_t j = i + 1; j < tag.size(); ++j) {
    char ch = tag[j];
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-') return false;
  }
  return tag.back() != '-';
}

bool looks_like_url(const std::string& s) {
  auto pos = s.find("://");
  if (pos == std::string::npos || pos == 0) return false;
  for (std::size_t i = 0; i < pos; ++i) {
    if (!std::isalpha(static_cast<unsigned char>(s[i])) &&
        !(i > 0 && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                    s[i] == '+' || s[i] == '-' || s[i] == '.'))) {
      return false;
    }
  }
  return pos + 3 < s.size();
}

void validate_identity(Collector& c, const CoreIdentity& s) {
  if (s.agent_id.empty()) {
    c.error("/identity/agent_id", "agent_id must be non-empty");
  } else if (agent_id_kind(s.agent_id) == AgentIdKind::unrecognized) {
    c.error("/identity/agent_id",
            "agent_id is not a recognizable UUID, URI, or DID");
  }
  if (s.name.empty()) c.error("/identity/name", "name must be non-empty");
  if (s.version.empty()) c.error("/identity/version", "version must be non-empty");
  if (s.ttl <= 0) c.error("/identity/ttl", "ttl must be a positive number of seconds");
  if (s.last_updated < s.created) {
    c.error("/identity/last_updated", "last_updated precedes created");
  }
  if (s.version_seq < 0) {
    c.error("/identity/version_seq", "version_seq must be non-negative");
  }
}

void validate_baseline(Collector& c, const BaselineModel& s) {
  if (s.foundation_model.empty())
    c.error("/baseline_model/foundation_model", "foundation_model must be non-empty");
  if (s.model_version.empty())
    c.error("/baseline_model/model_version", "model_version must be non-empty");
  if (s.model_provider.empty())
    c.error("/baseline_model/model_provider", "model_provider must be non-empty");
  check_duplicates(c, s.training_data_sources, "/baseline_model/training_data_sources");
}

void validate_capabilities(Collector& c, const Capabilities& s) {
  std::size_t i = 0;
  for (const auto& tag : s.language_support) {
    if (!looks_like_language_tag(tag)) {
      c.warning("/capabilities/language_support/" + std::to_string(i),
                "\"" + tag + "\" does not look like an ISO 639 tag");
    }
    ++i;
  }
  check_duplicates(c, s.external_apis, "/capabilities/external_apis");
  check_duplicates(c, s.programming_languages, "/capabilities/programming_languages");
  check_duplicates(c, s.domain_expertise, "/capabilities/domain_expertise");
  check_duplicates(c, s.language_support, "/capabilities/language_support");
}

void validate_auth(Collector& c, const AuthPermissions& s) {
  if (s.supported_methods.empty()) {
    c.error("/auth_permissions/supported_methods",
            "at least one supported method is required");
  }
  if (std::find(s.supported_methods.begin(), s.supported_methods.end(),
                s.primary_scheme) == s.supported_methods.end()) {
    c.error("/auth_permissions/primary_scheme",
            "primary_scheme must be one of supported_methods");
  }
  if (s.session_management && s.session_management->timeout_seconds &&
      *s.session_management->timeout_seconds <= 0) {
    c.error("/auth_permissions/session_management/timeout_seconds",
            "timeout_seconds must be positive when present");
  }
  std::size_t i = 0;
  for (const auto& url : s.oauth_endpoints) {
    if (!looks_like_url(url)) {
      c.warning("/auth_permissions/oauth_endpoints/" + std::to_string(i),
                "\"" + url + "\" does not look like a URL");
    }
    ++i;
  }
  if (s.permission_state) {
    const std::string base = "/auth_permissions/permission_state";
    i = 0;
    for (const auto& g : s.permission_state->grants) {
      std::string pattern_path =
          base + "/grants/" + std::to_string(i) + "/grant/resource_pattern";
      try {
        validate_pattern(g.grant.resource_pattern, pattern_path);
      } catch (const Error& e) {
        c.error(pattern_path, e.what());
      }
      ++i;
    }
    if (!verify_audit_chain(s.permission_state->audit)) {
      c.error(base + "/audit", "audit hash chain does not verify");
    }
  }
}

void validate_performance(Collector& c, const Performance& s) {
  if (s.response_time_p50 && *s.response_time_p50 < 0)
    c.error("/performance/response_time_p50", "latency cannot be negative");
  if (s.response_time_p95 && *s.response_time_p95 < 0)
    c.error("/performance/response_time_p95", "latency cannot be negative");
  if (s.response_time_p50 && s.response_time_p95 &&
      *s.response_time_p50 > *s.response_time_p95) {
    c.error("/performance/response_time_p50", "p50 \xe2\x89\xa4 p95 violated");
  }
  if (s.throughput_limit && *s.throughput_limit < 0) {
    c.error("/performance/throughput_limit", "throughput_limit must be >= 0");
  }
  check_unit_fraction(c, s.availability_sla, "/performance/availability_sla");
  check_unit_fraction(c, s.error_rate, "/performance/error_rate");
  check_unit_fraction(c, s.reputation_score, "/performance/reputation_score");
  check_unit_fraction(c, s.user_satisfaction, "/performance/user_satisfaction");
  for (const auto& [name, score] : s.accuracy_metrics) {
    if (!score.in_unit_range()) {
      c.error("/performance/accuracy_metrics/" + name,
              "fraction must lie in [0, 1]");
    }
  }
}

void validate_supply(Collector& c, const SupplyChain& s) {
  std::size_t i = 0;
  for (const auto& comp : s.component_dependencies) {
    if (comp.name.empty()) {
      c.error("/supply_chain/component_dependencies/" + std::to_string(i) + "/name",
              "component name must be non-empty");
    }
    ++i;
  }
  i = 0;
  for (const auto& lib : s.software_libraries) {
    if (lib.name.empty()) {
      c.error("/supply_chain/software_libraries/" + std::to_string(i) + "/name",
              "library name must be non-empty");
    }
    ++i;
  }
  i = 0;
  for (const auto& scan : s.security_scanning) {
    if (scan.findings_count < 0) {
      c.error("/supply_chain/security_scanning/" + std::to_string(i) +
                  "/findings_count",
              "findings_count must be >= 0");
    }
    ++i;
  }
}

void validate_verification(Collector& c, const AgentFactsDoc& doc,
                           const VerificationMeta& s) {
  std::set<std::string_view> declared(s.verification_authorities.begin(),
                                      s.verification_authorities.end());
  std::size_t i = 0;
  for (const auto& sig : s.signatures) {
    std::string base = "/verification/signatures/" + std::to_string(i);
    if (!declared.count(sig.authority_id)) {
      c.error(base + "/authority_id",
              "authority " + sig.authority_id +
                  " is not declared in verification_authorities");
    }
    if (sig.agent_id != doc.identity.agent_id) {
      c.error(base + "/agent_id", "signature is bound to a different agent");
    }
    if (!sig.confidence.in_unit_range()) {
      c.error(base + "/confidence", "fraction must lie in [0, 1]");
    }
    std::size_t j = 0;
    for (const auto& name : sig.scope) {
      if (!is_section_name(name)) {
        c.error(base + "/scope/" + std::to_string(j),
                "\"" + name + "\" is not a schema section");
      }
      ++j;
    }
    ++i;
  }
  for (const auto& [name, secs] : s.verification_ttl) {
    if (!is_section_name(name)) {
      c.error("/verification/verification_ttl/" + name,
              "\"" + name + "\" is not a schema section");
    }
    if (secs <= 0) {
      c.error("/verification/verification_ttl/" + name,
              "verification_ttl must be positive");
    }
  }
  for (const auto& [authority, score] : s.confidence_levels) {
    if (!score.in_unit_range()) {
      c.error("/verification/confidence_levels/" + authority,
              "fraction must lie in [0, 1]");
    }
  }
  check_duplicates(c, s.verification_authorities,
                   "/verification/verification_authorities");
}

void validate_extensions(Collector& c, const Extensibility& s) {
  for (const auto& [key, value] : s.custom_facts) {
    (void)value;
    if (key.find('.') == std::string::npos) {
      c.error("/extensions/custom_facts/" + key,
              "custom fact keys must be namespaced with at least one \".\"");
    }
  }
  std::size_t i = 0;
  for (const auto& hook : s.integration_hooks) {
    if (!looks_like_url(hook)) {
      c.warning("/extensions/integration_hooks/" + std::to_string(i),
                "\"" + hook + "\" does not look like a webhook URL");
    }
    ++i;
  }
}

}  // namespace

json Finding::to_json() const {
  json v = json::object();
  v["severity"] = severity == Severity::error ? "error" : "warning";
  v["path"] = path;
  v["message"] = message;
  return v;
}

bool ValidationReport::ok() const { return error_count() == 0; }

std::size_t ValidationReport::error_count() const {
  std::size_t n = 0;
  for (const auto& f : findings) {
    if (f.severity == Severity::error) n++;
  }
  return n;
}

json ValidationReport::to_json() const {
  json list = json::array();
  for (const auto& f : findings) list.push_back(f.to_json());
  json v = json::object();
  v["ok"] = ok();
  v["findings"] = std::move(list);
  return v;
}

ValidationReport validate_document(const AgentFactsDoc& doc) {
  ValidationReport report;
  Collector c(report.findings);
  validate_identity(c, doc.identity);
  if (doc.baseline_model) {
    validate_baseline(c, *doc.baseline_model);
  } else {
    c.error("/baseline_model", "baseline_model is required in full documents");
  }
  if (doc.capabilities) validate_capabilities(c, *doc.capabilities);
  if (doc.auth_permissions) validate_auth(c, *doc.auth_permissions);
  if (doc.performance) validate_performance(c, *doc.performance);
  if (doc.supply_chain) validate_supply(c, *doc.supply_chain);
  if (doc.verification) validate_verification(c, doc, *doc.verification);
  if (doc.extensions) validate_extensions(c, *doc.extensions);
  return report;
}

}  // namespace agentfacts

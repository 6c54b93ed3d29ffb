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
#include "agentfacts/signature.hpp"

namespace agentfacts {

/// A consumer's trust configuration. Per-section entries are optional and
/// fall back to: min_signatures 1, min_confidence 0, any authority allowed,
/// no age cap. Sections named nowhere in the policy still evaluate — with
/// the defaults — when listed in required_sections.
struct TrustPolicy {
  std::map<std::string, Fraction> authority_weights;  // absent authority = 0
  std::optional<std::map<std::string, std::set<std::string>>> allowed_authorities;
  std::map<std::string, std::int64_t> min_signatures;
  std::map<std::string, Fraction> min_confidence;
  std::optional<std::map<std::string, std::int64_t>> max_signature_age;  // seconds
  std::optional<std::set<std::string>> required_sections;
  std::optional<std::set<std::string>> critical_sections;

  json to_json() const;
  static TrustPolicy from_json(const json& v, const std::string& path);
  static TrustPolicy parse(std::string_view text);

  friend bool operator==(const TrustPolicy&, const TrustPolicy&) = default;
};

/// Defaults resolution: required falls back to critical when given, else to
/// the standard critical trio; critical falls back to that trio intersected
/// with required. An explicit critical set must be a subset of required.
/// Throws Error{invalid_request} on violation, Error{unknown_section_in_policy}
/// for a policy naming a non-section.
std::set<std::string> resolved_required(const TrustPolicy& policy);
std::set<std::string> resolved_critical(const TrustPolicy& policy);

/// How one signature fared for one section, kept for explanation output.
struct SignatureAssessment {
  std::size_t signature_index = 0;  // position in verification.signatures
  std::string authority_id;
  SigStatus status = SigStatus::valid;
  bool allowed = true;      // allowed_authorities[s] permits the signer
  bool within_age = true;   // age <= max_signature_age[s]
  bool qualifying = false;
  Fraction weight;
  Fraction confidence;
  Fraction product;  // weight x confidence, the score contribution
  std::string disqualified_reason;  // "" when qualifying

  friend bool operator==(const SignatureAssessment&,
                         const SignatureAssessment&) = default;
};

struct SectionVerdict {
  SectionTrust status = SectionTrust::insufficient;
  Fraction score;
  std::vector<SignatureAssessment> signatures;  // every sig naming the section

  std::size_t qualifying_count() const;

  friend bool operator==(const SectionVerdict&, const SectionVerdict&) = default;
};

struct TrustVerdict {
  std::map<std::string, SectionVerdict> per_section;  // required sections
  OverallTrust overall = OverallTrust::untrusted;
  Timestamp evaluated_at;

  json to_json() const;

  friend bool operator==(const TrustVerdict&, const TrustVerdict&) = default;
};

/// Evaluates the policy against a document's signatures.
///
/// Per required section: a signature qualifies when it verifies as valid,
/// names the section in scope, its authority is allowed there, and it is
/// young enough. Section score is the maximum weight x confidence over
/// qualifying signatures (max, not sum: many weak authorities must not
/// outvote one strong one, and the score stays in [0,1]). Trusted needs
/// both enough qualifying signatures and a high enough score. When a
/// section misses trusted, the worst signal wins: failed if any candidate
/// signature was cryptographically bad or revoked, stale if ignoring age
/// alone would have made it trusted, insufficient otherwise.
///
/// Overall: trusted when every required section is trusted; degraded when
/// every critical section is trusted and nothing failed; untrusted
/// otherwise. Throws Error{unknown_section_in_policy, invalid_request} for
/// malformed policies.
TrustVerdict evaluate_trust(const AgentFactsDoc& doc, const TrustPolicy& policy,
                            const std::map<std::string, AuthorityRecord>& authorities,
                            const std::vector<RevocationEntry>& revocations,
                            Timestamp now);

struct ExplanationReport {
  std::vector<std::string> lines;

  std::string to_string() const;  // lines joined with '\n', trailing newline
};

/// Deterministic, human-readable account of a verdict: per section, each
/// signature's fate with its reason, the score arithmetic, and the overall
/// outcome.
ExplanationReport explain_verdict(const TrustVerdict& verdict);

}  // namespace agentfacts

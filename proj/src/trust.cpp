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

#include "agentfacts/trust.hpp"

#include <algorithm>

#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

const std::set<std::string> kDefaultCritical = {"identity", "compliance",
                                                "verification"};

void check_section_keys(const std::set<std::string>& names,
                        const std::string& path) {
  for (const auto& name : names) {
    if (!is_section_name(name)) {
      throw Error(ErrorKind::unknown_section_in_policy, path + "/" + name,
                  "\"" + name + "\" is not a schema section");
    }
  }
}

template <typename M>
void check_section_map(const M& m, const std::string& path) {
  for (const auto& [name, _] : m) {
    if (!is_section_name(name)) {
      throw Error(ErrorKind::unknown_section_in_policy, path + "/" + name,
                  "\"" + name + "\" is not a schema section");
    }
  }
}

void check_policy_sections(const TrustPolicy& p) {
  check_section_map(p.min_signatures, "/min_signatures");
  check_section_map(p.min_confidence, "/min_confidence");
  if (p.allowed_authorities)
    check_section_map(*p.allowed_authorities, "/allowed_authorities");
  if (p.max_signature_age)
    check_section_map(*p.max_signature_age, "/max_signature_age");
  if (p.required_sections)
    check_section_keys(*p.required_sections, "/required_sections");
  if (p.critical_sections)
    check_section_keys(*p.critical_sections, "/critical_sections");
}

Fraction fraction_in_unit(const json& v, const std::string& path) {
  Fraction f = as_fraction(v, path);
  if (!f.in_unit_range()) {
    throw Error(ErrorKind::type_mismatch, path, "fraction must lie in [0, 1]");
  }
  return f;
}

std::string status_reason(SigStatus status) {
  switch (status) {
    case SigStatus::valid: return "";
    case SigStatus::bad_signature: return "bad signature";
    case SigStatus::unknown_authority: return "unknown authority";
    case SigStatus::revoked: return "revoked";
    case SigStatus::scope_mismatch: return "out of scope";
    case SigStatus::expired: return "expired";
  }
  return "";
}

}  // namespace

json TrustPolicy::to_json() const {
  json v = json::object();
  if (!authority_weights.empty()) {
    json m = json::object();
    for (const auto& [k, f] : authority_weights) m[k] = f.value();
    v["authority_weights"] = std::move(m);
  }
  if (allowed_authorities) {
    json m = json::object();
    for (const auto& [k, ids] : *allowed_authorities) {
      m[k] = std::vector<std::string>(ids.begin(), ids.end());
    }
    v["allowed_authorities"] = std::move(m);
  }
  if (!min_signatures.empty()) {
    json m = json::object();
    for (const auto& [k, n] : min_signatures) m[k] = n;
    v["min_signatures"] = std::move(m);
  }
  if (!min_confidence.empty()) {
    json m = json::object();
    for (const auto& [k, f] : min_confidence) m[k] = f.value();
    v["min_confidence"] = std::move(m);
  }
  if (max_signature_age) {
    json m = json::object();
    for (const auto& [k, secs] : *max_signature_age) m[k] = secs;
    v["max_signature_age"] = std::move(m);
  }
  if (required_sections) {
    v["required_sections"] = std::vector<std::string>(required_sections->begin(),
                                                      required_sections->end());
  }
  if (critical_sections) {
    v["critical_sections"] = std::vector<std::string>(critical_sections->begin(),
                                                      critical_sections->end());
  }
  return v;
}

TrustPolicy TrustPolicy::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  TrustPolicy p;
  if (const json* m = r.optional("authority_weights")) {
    const json& obj = as_object(*m, r.child_path("authority_weights"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      p.authority_weights[it.key()] = fraction_in_unit(
          it.value(), r.child_path("authority_weights") + "/" + it.key());
    }
  }
  if (const json* m = r.optional("allowed_authorities")) {
    const json& obj = as_object(*m, r.child_path("allowed_authorities"));
    std::map<std::string, std::set<std::string>> allowed;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      auto ids = as_string_list(
          it.value(), r.child_path("allowed_authorities") + "/" + it.key());
      allowed[it.key()] = std::set<std::string>(ids.begin(), ids.end());
    }
    p.allowed_authorities = std::move(allowed);
  }
  if (const json* m = r.optional("min_signatures")) {
    const json& obj = as_object(*m, r.child_path("min_signatures"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      std::string kp = r.child_path("min_signatures") + "/" + it.key();
      std::int64_t n = as_int(it.value(), kp);
      if (n < 1) throw Error(ErrorKind::type_mismatch, kp, "min_signatures must be >= 1");
      p.min_signatures[it.key()] = n;
    }
  }
  if (const json* m = r.optional("min_confidence")) {
    const json& obj = as_object(*m, r.child_path("min_confidence"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      p.min_confidence[it.key()] = fraction_in_unit(
          it.value(), r.child_path("min_confidence") + "/" + it.key());
    }
  }
  if (const json* m = r.optional("max_signature_age")) {
    const json& obj = as_object(*m, r.child_path("max_signature_age"));
    std::map<std::string, std::int64_t> ages;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      std::string kp = r.child_path("max_signature_age") + "/" + it.key();
      std::int64_t secs = as_int(it.value(), kp);
      if (secs < 0) throw Error(ErrorKind::type_mismatch, kp, "age cap must be >= 0");
      ages[it.key()] = secs;
    }
    p.max_signature_age = std::move(ages);
  }
  if (const json* a = r.optional("required_sections")) {
    auto names = as_string_list(*a, r.child_path("required_sections"));
    p.required_sections = std::set<std::string>(names.begin(), names.end());
  }
  if (const json* a = r.optional("critical_sections")) {
    auto names = as_string_list(*a, r.child_path("critical_sections"));
    p.critical_sections = std::set<std::string>(names.begin(), names.end());
  }
  r.finish();
  check_policy_sections(p);
  resolved_critical(p);  // surfaces critical !⊆ required at parse time
  return p;
}

TrustPolicy TrustPolicy::parse(std::string_view text) {
  return from_json(parse_json_text(text), "");
}

std::set<std::string> resolved_required(const TrustPolicy& policy) {
  if (policy.required_sections) return *policy.required_sections;
  if (policy.critical_sections) return *policy.critical_sections;
  return kDefaultCritical;
}

std::set<std::string> resolved_critical(const TrustPolicy& policy) {
  std::set<std::string> required = resolved_required(policy);
  if (policy.critical_sections) {
    for (const auto& name : *policy.critical_sections) {
      if (!required.count(name)) {
        throw Error(ErrorKind::invalid_request, "/critical_sections",
                    "critical section \"" + name + "\" is not required");
      }
    }
    return *policy.critical_sections;
  }
  std::set<std::string> critical;
  for (const auto& name : kDefaultCritical) {
    if (required.count(name)) critical.insert(name);
  }
  return critical;
}

std::size_t SectionVerdict::qualifying_count() const {
  std::size_t n = 0;
  for (const auto& a : signatures) {
    if (a.qualifying) n++;
  }
  return n;
}

json TrustVerdict::to_json() const {
  json sections = json::object();
  for (const auto& [name, sv] : per_section) {
    json sigs = json::array();
    for (const auto& a : sv.signatures) {
      json e = json::object();
      e["authority_id"] = a.authority_id;
      e["signature_index"] = static_cast<std::int64_t>(a.signature_index);
      e["qualifying"] = a.qualifying;
      if (a.qualifying) {
        e["weight"] = a.weight.value();
        e["confidence"] = a.confidence.value();
        e["score"] = a.product.value();
      } else {
        e["reason"] = a.disqualified_reason;
      }
      sigs.push_back(std::move(e));
    }
    json s = json::object();
    s["status"] = std::string(to_token(sv.status));
    s["score"] = sv.score.value();
    s["signatures"] = std::move(sigs);
    sections[name] = std::move(s);
  }
  json v = json::object();
  v["overall"] = std::string(to_token(overall));
  v["evaluated_at"] = timestamp_json(evaluated_at);
  v["sections"] = std::move(sections);
  return v;
}

TrustVerdict evaluate_trust(const AgentFactsDoc& doc, const TrustPolicy& policy,
                            const std::map<std::string, AuthorityRecord>& authorities,
                            const std::vector<RevocationEntry>& revocations,
                            Timestamp now) {
  check_policy_sections(policy);
  std::set<std::string> required = resolved_required(policy);
  std::set<std::string> critical = resolved_critical(policy);

  // Verify each signature once; its status is section-independent.
  const std::vector<SignatureBlock>* sigs = nullptr;
  if (doc.verification) sigs = &doc.verification->signatures;
  std::vector<SigStatus> statuses;
  if (sigs) {
    statuses.reserve(sigs->size());
    for (const auto& sig : *sigs) {
      statuses.push_back(
          verify_signature(doc, sig, authorities, revocations, now));
    }
  }

  TrustVerdict verdict;
  verdict.evaluated_at = now;

  for (const auto& section : required) {
    SectionVerdict sv;
    std::int64_t need_count = 1;
    if (auto it = policy.min_signatures.find(section);
        it != policy.min_signatures.end()) {
      need_count = it->second;
    }
    Fraction need_score;  // zero
    if (auto it = policy.min_confidence.find(section);
        it != policy.min_confidence.end()) {
      need_score = it->second;
    }
    const std::set<std::string>* allowed = nullptr;
    if (policy.allowed_authorities) {
      if (auto it = policy.allowed_authorities->find(section);
          it != policy.allowed_authorities->end()) {
        allowed = &it->second;
      }
    }
    std::optional<std::int64_t> age_cap;
    if (policy.max_signature_age) {
      if (auto it = policy.max_signature_age->find(section);
          it != policy.max_signature_age->end()) {
        age_cap = it->second;
      }
    }

    bool any_failed_candidate = false;
    std::int64_t hypothetical_count = 0;  // age checks ignored
    Fraction hypothetical_score;

    if (sigs) {
      for (std::size_t i = 0; i < sigs->size(); ++i) {
        const SignatureBlock& sig = (*sigs)[i];
        if (std::find(sig.scope.begin(), sig.scope.end(), section) ==
            sig.scope.end()) {
          continue;
        }
        SignatureAssessment a;
        a.signature_index = i;
        a.authority_id = sig.authority_id;
        a.status = statuses[i];
        a.allowed = allowed == nullptr || allowed->count(sig.authority_id) > 0;
        a.within_age =
            !age_cap || now.epoch_seconds() - sig.signed_at.epoch_seconds() <=
                            *age_cap;
        if (auto it = policy.authority_weights.find(sig.authority_id);
            it != policy.authority_weights.end()) {
          a.weight = it->second;
        }
        a.confidence = sig.confidence;
        a.product = unit_product(a.weight, a.confidence);
        a.qualifying = a.status == SigStatus::valid && a.allowed && a.within_age;

        if (a.qualifying) {
          if (sv.score < a.product) sv.score = a.product;
        } else if (a.status != SigStatus::valid) {
          a.disqualified_reason = status_reason(a.status);
        } else if (!a.allowed) {
          a.disqualified_reason = "authority not allowed for section";
        } else {
          a.disqualified_reason = "older than the section age cap";
        }

        if (a.status == SigStatus::bad_signature ||
            a.status == SigStatus::revoked) {
          any_failed_candidate = true;
        }
        // Age-blind rerun: document-level expiry and the policy age cap are
        // both age signals, so both lift for the stale determination.
        bool hypothetical_ok =
            (a.status == SigStatus::valid || a.status == SigStatus::expired) &&
            a.allowed;
        if (hypothetical_ok) {
          hypothetical_count++;
          if (hypothetical_score < a.product) hypothetical_score = a.product;
        }
        sv.signatures.push_back(std::move(a));
      }
    }

    std::int64_t count = static_cast<std::int64_t>(sv.qualifying_count());
    if (count >= need_count && need_score <= sv.score) {
      sv.status = SectionTrust::trusted;
    } else if (any_failed_candidate) {
      sv.status = SectionTrust::failed;
    } else if (hypothetical_count >= need_count &&
               need_score <= hypothetical_score) {
      sv.status = SectionTrust::stale;
    } else {
      sv.status = SectionTrust::insufficient;
    }
    verdict.per_section[section] = std::move(sv);
  }

  bool all_required_trusted = true;
  bool all_critical_trusted = true;
  bool any_failed = false;
  for (const auto& [name, sv] : verdict.per_section) {
    if (sv.status != SectionTrust::trusted) {
      all_required_trusted = false;
      if (critical.count(name)) all_critical_trusted = false;
      if (sv.status == SectionTrust::failed) any_failed = true;
    }
  }
  if (all_required_trusted) {
    verdict.overall = OverallTrust::trusted;
  } else if (all_critical_trusted && !any_failed) {
    verdict.overall = OverallTrust::degraded;
  } else {
    verdict.overall = OverallTrust::untrusted;
  }
  return verdict;
}

std::string ExplanationReport::to_string() const {
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

ExplanationReport explain_verdict(const TrustVerdict& verdict) {
  ExplanationReport report;
  report.lines.push_back("trust verdict at " + verdict.evaluated_at.to_string() +
                         ": " + std::string(to_token(verdict.overall)));
  for (const auto& [section, sv] : verdict.per_section) {
    report.lines.push_back("section " + section + ": " +
                           std::string(to_token(sv.status)) + " (score " +
                           sv.score.to_fixed_string() + ", " +
                           std::to_string(sv.qualifying_count()) +
                           " qualifying)");
    for (const auto& a : sv.signatures) {
      if (a.qualifying) {
        report.lines.push_back("  " + a.authority_id + ": qualifying, weight " +
                               a.weight.to_fixed_string() + " x confidence " +
                               a.confidence.to_fixed_string() + " = " +
                               a.product.to_fixed_string());
      } else {
        report.lines.push_back("  " + a.authority_id + ": disqualified (" +
                               a.disqualified_reason + ")");
      }
    }
  }
  return report;
}

}  // namespace agentfacts

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

#include "agentfacts/document_io.hpp"

#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

json fraction_json(Fraction f, JsonMode mode) {
  if (mode == JsonMode::canonical) return json(f.micros());
  return json(f.value());
}

template <typename E>
json enum_list_json(const std::vector<E>& xs) {
  json a = json::array();
  for (E x : xs) a.push_back(std::string(to_token(x)));
  return a;
}

template <typename E>
std::vector<E> enum_list_from(const json& v, const std::string& path) {
  std::vector<E> out;
  std::size_t i = 0;
  for (const auto& s : as_string_list(v, path)) {
    out.push_back(from_token<E>(s, path + "/" + std::to_string(i++)));
  }
  return out;
}

template <typename E>
E enum_field(ObjReader& r, std::string_view key) {
  return from_token<E>(r.require_string(key), r.child_path(key));
}

json opaque_field(ObjReader& r, std::string_view key, const json* v) {
  check_opaque_content(*v, r.child_path(key));
  return *v;
}

// -- identity ----------------------------------------------------------------

json identity_json(const CoreIdentity& s) {
  json v = json::object();
  v["agent_id"] = s.agent_id;
  v["name"] = s.name;
  v["version"] = s.version;
  v["created"] = timestamp_json(s.created);
  v["last_updated"] = timestamp_json(s.last_updated);
  v["ttl"] = s.ttl;
  v["version_seq"] = s.version_seq;
  return v;
}

CoreIdentity identity_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  CoreIdentity s;
  s.agent_id = r.require_string("agent_id");
  s.name = r.require_string("name");
  s.version = r.require_string("version");
  s.created = r.require_timestamp("created");
  s.last_updated = r.require_timestamp("last_updated");
  s.ttl = r.require_int("ttl");
  s.version_seq = r.optional_int("version_seq").value_or(0);
  r.finish();
  return s;
}

// -- baseline_model ----------------------------------------------------------

json baseline_json(const BaselineModel& s) {
  json v = json::object();
  v["foundation_model"] = s.foundation_model;
  v["model_version"] = s.model_version;
  v["model_provider"] = s.model_provider;
  if (!s.training_data_sources.empty())
    v["training_data_sources"] = s.training_data_sources;
  if (s.training_cutoff_date)
    v["training_cutoff_date"] = timestamp_json(*s.training_cutoff_date);
  if (s.fine_tuning) v["fine_tuning"] = *s.fine_tuning;
  if (!s.model_capabilities.empty())
    v["model_capabilities"] = s.model_capabilities;
  if (!s.known_limitations.empty()) v["known_limitations"] = s.known_limitations;
  if (!s.bias_assessments.empty()) v["bias_assessments"] = s.bias_assessments;
  if (!s.safety_evaluations.empty())
    v["safety_evaluations"] = s.safety_evaluations;
  return v;
}

std::vector<json> opaque_list(ObjReader& r, std::string_view key) {
  std::vector<json> out;
  const json* v = r.optional(key);
  if (!v) return out;
  const json& arr = as_array(*v, r.child_path(key));
  std::size_t i = 0;
  for (const json& item : arr) {
    check_opaque_content(item, r.child_path(key) + "/" + std::to_string(i++));
    out.push_back(item);
  }
  return out;
}

BaselineModel baseline_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  BaselineModel s;
  s.foundation_model = r.require_string("foundation_model");
  s.model_version = r.require_string("model_version");
  s.model_provider = r.require_string("model_provider");
  s.training_data_sources = r.optional_string_list("training_data_sources");
  s.training_cutoff_date = r.optional_timestamp("training_cutoff_date");
  if (const json* f = r.optional("fine_tuning")) {
    s.fine_tuning = opaque_field(r, "fine_tuning", f);
  }
  s.model_capabilities = r.optional_string_list("model_capabilities");
  s.known_limitations = r.optional_string_list("known_limitations");
  s.bias_assessments = opaque_list(r, "bias_assessments");
  s.safety_evaluations = opaque_list(r, "safety_evaluations");
  r.finish();
  return s;
}

// -- classification ----------------------------------------------------------

json classification_json(const Classification& s) {
  json v = json::object();
  v["agent_type"] = std::string(to_token(s.agent_type));
  v["operational_level"] = std::string(to_token(s.operational_level));
  v["stakeholder_context"] = std::string(to_token(s.stakeholder_context));
  v["deployment_scope"] = std::string(to_token(s.deployment_scope));
  v["interaction_mode"] = std::string(to_token(s.interaction_mode));
  return v;
}

Classification classification_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  Classification s;
  s.agent_type = enum_field<AgentType>(r, "agent_type");
  s.operational_level = enum_field<OperationalLevel>(r, "operational_level");
  s.stakeholder_context = enum_field<StakeholderContext>(r, "stakeholder_context");
  s.deployment_scope = enum_field<DeploymentScope>(r, "deployment_scope");
  s.interaction_mode = enum_field<InteractionMode>(r, "interaction_mode");
  r.finish();
  return s;
}

// -- capabilities ------------------------------------------------------------

json capabilities_json(const Capabilities& s) {
  json v = json::object();
  if (!s.external_apis.empty()) v["external_apis"] = s.external_apis;
  if (!s.tool_calling.empty()) v["tool_calling"] = enum_list_json(s.tool_calling);
  if (!s.programming_languages.empty())
    v["programming_languages"] = s.programming_languages;
  if (!s.data_formats.empty()) v["data_formats"] = enum_list_json(s.data_formats);
  if (!s.interface_types.empty())
    v["interface_types"] = enum_list_json(s.interface_types);
  if (!s.domain_expertise.empty()) v["domain_expertise"] = s.domain_expertise;
  if (!s.language_support.empty()) v["language_support"] = s.language_support;
  return v;
}

Capabilities capabilities_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  Capabilities s;
  s.external_apis = r.optional_string_list("external_apis");
  if (const json* t = r.optional("tool_calling")) {
    s.tool_calling = enum_list_from<ToolCalling>(*t, r.child_path("tool_calling"));
  }
  s.programming_languages = r.optional_string_list("programming_languages");
  if (const json* t = r.optional("data_formats")) {
    s.data_formats = enum_list_from<DataFormat>(*t, r.child_path("data_formats"));
  }
  if (const json* t = r.optional("interface_types")) {
    s.interface_types =
        enum_list_from<InterfaceType>(*t, r.child_path("interface_types"));
  }
  s.domain_expertise = r.optional_string_list("domain_expertise");
  s.language_support = r.optional_string_list("language_support");
  r.finish();
  return s;
}

// -- auth_permissions --------------------------------------------------------

json auth_json(const AuthPermissions& s) {
  json v = json::object();
  v["supported_methods"] = enum_list_json(s.supported_methods);
  v["primary_scheme"] = std::string(to_token(s.primary_scheme));
  if (!s.oauth_endpoints.empty()) v["oauth_endpoints"] = s.oauth_endpoints;
  if (s.token_requirements) v["token_requirements"] = *s.token_requirements;
  v["auth_security_level"] = std::string(to_token(s.auth_security_level));
  if (s.session_management) {
    json m = json::object();
    if (s.session_management->timeout_seconds)
      m["timeout_seconds"] = *s.session_management->timeout_seconds;
    if (s.session_management->refresh_policy)
      m["refresh_policy"] = *s.session_management->refresh_policy;
    v["session_management"] = std::move(m);
  }
  v["multi_factor_required"] = s.multi_factor_required;
  if (!s.auth_compliance.empty()) v["auth_compliance"] = s.auth_compliance;
  if (s.permission_state) v["permission_state"] = s.permission_state->to_json();
  return v;
}

AuthPermissions auth_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  AuthPermissions s;
  s.supported_methods = enum_list_from<AuthMethod>(
      r.require("supported_methods"), r.child_path("supported_methods"));
  s.primary_scheme = enum_field<AuthMethod>(r, "primary_scheme");
  s.oauth_endpoints = r.optional_string_list("oauth_endpoints");
  if (const json* t = r.optional("token_requirements")) {
    s.token_requirements = opaque_field(r, "token_requirements", t);
  }
  s.auth_security_level = enum_field<AuthSecurityLevel>(r, "auth_security_level");
  if (const json* m = r.optional("session_management")) {
    ObjReader rm(*m, r.child_path("session_management"));
    SessionManagement sm;
    sm.timeout_seconds = rm.optional_int("timeout_seconds");
    if (rm.has("refresh_policy")) sm.refresh_policy = rm.optional_string("refresh_policy");
    rm.finish();
    s.session_management = std::move(sm);
  }
  s.multi_factor_required = r.optional_bool("multi_factor_required", false);
  s.auth_compliance = r.optional_string_list("auth_compliance");
  if (const json* p = r.optional("permission_state")) {
    s.permission_state =
        PermissionState::from_json(*p, r.child_path("permission_state"));
  }
  r.finish();
  return s;
}

// -- compliance --------------------------------------------------------------

json compliance_json(const Compliance& s) {
  json v = json::object();
  if (s.eu_ai_act) {
    json e = json::object();
    e["risk_level"] = std::string(to_token(s.eu_ai_act->risk_level));
    if (!s.eu_ai_act->transparency_obligations.empty())
      e["transparency_obligations"] = s.eu_ai_act->transparency_obligations;
    v["eu_ai_act"] = std::move(e);
  }
  if (s.nist_ai_rmf) {
    json n = json::object();
    if (s.nist_ai_rmf->framework_alignment)
      n["framework_alignment"] = *s.nist_ai_rmf->framework_alignment;
    if (!s.nist_ai_rmf->risk_categories.empty())
      n["risk_categories"] = s.nist_ai_rmf->risk_categories;
    v["nist_ai_rmf"] = std::move(n);
  }
  if (s.gdpr_compliance) v["gdpr_compliance"] = *s.gdpr_compliance;
  if (!s.sector_standards.empty()) v["sector_standards"] = s.sector_standards;
  if (!s.geographic_compliance.empty())
    v["geographic_compliance"] = s.geographic_compliance;
  if (s.safety_classification)
    v["safety_classification"] = std::string(to_token(*s.safety_classification));
  if (!s.audit_certifications.empty())
    v["audit_certifications"] = s.audit_certifications;
  return v;
}

Compliance compliance_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  Compliance s;
  if (const json* e = r.optional("eu_ai_act")) {
    ObjReader re(*e, r.child_path("eu_ai_act"));
    EuAiAct act;
    act.risk_level = enum_field<RiskLevel>(re, "risk_level");
    act.transparency_obligations =
        re.optional_string_list("transparency_obligations");
    re.finish();
    s.eu_ai_act = std::move(act);
  }
  if (const json* n = r.optional("nist_ai_rmf")) {
    ObjReader rn(*n, r.child_path("nist_ai_rmf"));
    NistAiRmf rmf;
    if (rn.has("framework_alignment"))
      rmf.framework_alignment = rn.optional_string("framework_alignment");
    rmf.risk_categories = rn.optional_string_list("risk_categories");
    rn.finish();
    s.nist_ai_rmf = std::move(rmf);
  }
  if (const json* g = r.optional("gdpr_compliance")) {
    s.gdpr_compliance = opaque_field(r, "gdpr_compliance", g);
  }
  s.sector_standards = r.optional_string_list("sector_standards");
  s.geographic_compliance = r.optional_string_list("geographic_compliance");
  if (r.has("safety_classification")) {
    s.safety_classification =
        enum_field<SafetyClassification>(r, "safety_classification");
  }
  s.audit_certifications = r.optional_string_list("audit_certifications");
  r.finish();
  return s;
}

// -- performance -------------------------------------------------------------

json performance_json(const Performance& s, JsonMode mode) {
  json v = json::object();
  if (s.response_time_p50) v["response_time_p50"] = *s.response_time_p50;
  if (s.response_time_p95) v["response_time_p95"] = *s.response_time_p95;
  if (s.availability_sla)
    v["availability_sla"] = fraction_json(*s.availability_sla, mode);
  if (s.throughput_limit) v["throughput_limit"] = *s.throughput_limit;
  if (!s.accuracy_metrics.empty()) {
    json m = json::object();
    for (const auto& [k, f] : s.accuracy_metrics) m[k] = fraction_json(f, mode);
    v["accuracy_metrics"] = std::move(m);
  }
  if (s.error_rate) v["error_rate"] = fraction_json(*s.error_rate, mode);
  if (s.cost_structure)
    v["cost_structure"] = std::string(to_token(*s.cost_structure));
  if (s.reputation_score)
    v["reputation_score"] = fraction_json(*s.reputation_score, mode);
  if (s.user_satisfaction)
    v["user_satisfaction"] = fraction_json(*s.user_satisfaction, mode);
  if (!s.historical_performance.empty()) {
    json h = json::array();
    for (const auto& p : s.historical_performance) {
      json e = json::object();
      e["timestamp"] = timestamp_json(p.timestamp);
      e["metric"] = p.metric;
      e["value"] = fraction_json(p.value, mode);
      h.push_back(std::move(e));
    }
    v["historical_performance"] = std::move(h);
  }
  return v;
}

Performance performance_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  Performance s;
  s.response_time_p50 = r.optional_int("response_time_p50");
  s.response_time_p95 = r.optional_int("response_time_p95");
  s.availability_sla = r.optional_fraction("availability_sla");
  s.throughput_limit = r.optional_int("throughput_limit");
  if (const json* m = r.optional("accuracy_metrics")) {
    const json& obj = as_object(*m, r.child_path("accuracy_metrics"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      s.accuracy_metrics[it.key()] = as_fraction(
          it.value(), r.child_path("accuracy_metrics") + "/" + it.key());
    }
  }
  s.error_rate = r.optional_fraction("error_rate");
  if (r.has("cost_structure")) {
    s.cost_structure = enum_field<CostStructure>(r, "cost_structure");
  }
  s.reputation_score = r.optional_fraction("reputation_score");
  s.user_satisfaction = r.optional_fraction("user_satisfaction");
  if (const json* h = r.optional("historical_performance")) {
    const json& arr = as_array(*h, r.child_path("historical_performance"));
    std::size_t i = 0;
    for (const json& e : arr) {
      std::string p =
          r.child_path("historical_performance") + "/" + std::to_string(i++);
      ObjReader re(e, p);
      HistoricalPoint hp;
      hp.timestamp = re.require_timestamp("timestamp");
      hp.metric = re.require_string("metric");
      hp.value = as_fraction(re.require("value"), p + "/value");
      re.finish();
      s.historical_performance.push_back(std::move(hp));
    }
  }
  r.finish();
  return s;
}

// -- supply_chain ------------------------------------------------------------

json supply_json(const SupplyChain& s) {
  json v = json::object();
  if (!s.component_dependencies.empty()) {
    json a = json::array();
    for (const auto& c : s.component_dependencies) {
      json e = json::object();
      e["name"] = c.name;
      if (c.version) e["version"] = *c.version;
      a.push_back(std::move(e));
    }
    v["component_dependencies"] = std::move(a);
  }
  if (!s.data_sources.empty()) v["data_sources"] = s.data_sources;
  if (!s.infrastructure_providers.empty())
    v["infrastructure_providers"] = s.infrastructure_providers;
  if (!s.software_libraries.empty()) {
    json a = json::array();
    for (const auto& l : s.software_libraries) {
      json e = json::object();
      e["name"] = l.name;
      if (l.version) e["version"] = *l.version;
      if (l.license) e["license"] = *l.license;
      a.push_back(std::move(e));
    }
    v["software_libraries"] = std::move(a);
  }
  if (!s.security_scanning.empty()) {
    json a = json::array();
    for (const auto& sc : s.security_scanning) {
      json e = json::object();
      e["tool"] = sc.tool;
      e["timestamp"] = timestamp_json(sc.timestamp);
      e["findings_count"] = sc.findings_count;
      a.push_back(std::move(e));
    }
    v["security_scanning"] = std::move(a);
  }
  if (!s.license_compliance.empty())
    v["license_compliance"] = s.license_compliance;
  if (s.supply_chain_attestation)
    v["supply_chain_attestation"] = *s.supply_chain_attestation;
  return v;
}

SupplyChain supply_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  SupplyChain s;
  if (const json* a = r.optional("component_dependencies")) {
    const json& arr = as_array(*a, r.child_path("component_dependencies"));
    std::size_t i = 0;
    for (const json& e : arr) {
      std::string p =
          r.child_path("component_dependencies") + "/" + std::to_string(i++);
      ObjReader re(e, p);
      ComponentRef c;
      c.name = re.require_string("name");
      if (re.has("version")) c.version = re.optional_string("version");
      re.finish();
      s.component_dependencies.push_back(std::move(c));
    }
  }
  s.data_sources = r.optional_string_list("data_sources");
  s.infrastructure_providers = r.optional_string_list("infrastructure_providers");
  if (const json* a = r.optional("software_libraries")) {
    const json& arr = as_array(*a, r.child_path("software_libraries"));
    std::size_t i = 0;
    for (const json& e : arr) {
      std::string p =
          r.child_path("software_libraries") + "/" + std::to_string(i++);
      ObjReader re(e, p);
      LibraryRef l;
      l.name = re.require_string("name");
      if (re.has("version")) l.version = re.optional_string("version");
      if (re.has("license")) l.license = re.optional_string("license");
      re.finish();
      s.software_libraries.push_back(std::move(l));
    }
  }
  if (const json* a = r.optional("security_scanning")) {
    const json& arr = as_array(*a, r.child_path("security_scanning"));
    std::size_t i = 0;
    for (const json& e : arr) {
      std::string p =
          r.child_path("security_scanning") + "/" + std::to_string(i++);
      ObjReader re(e, p);
      ScanRecord sc;
      sc.tool = re.require_string("tool");
      sc.timestamp = re.require_timestamp("timestamp");
      sc.findings_count = re.require_int("findings_count");
      re.finish();
      s.security_scanning.push_back(std::move(sc));
    }
  }
  s.license_compliance = r.optional_string_list("license_compliance");
  if (r.has("supply_chain_attestation")) {
    s.supply_chain_attestation = r.optional_string("supply_chain_attestation");
  }
  r.finish();
  return s;
}

// -- verification ------------------------------------------------------------

json verification_json(const VerificationMeta& s, JsonMode mode,
                       bool signable_subset) {
  json v = json::object();
  if (!signable_subset && !s.signatures.empty()) {
    json a = json::array();
    for (const auto& b : s.signatures)
      a.push_back(b.to_json(mode == JsonMode::canonical));
    v["signatures"] = std::move(a);
  }
  if (!s.verification_authorities.empty())
    v["verification_authorities"] = s.verification_authorities;
  if (s.verification_policy) v["verification_policy"] = *s.verification_policy;
  if (!s.confidence_levels.empty()) {
    json m = json::object();
    for (const auto& [k, f] : s.confidence_levels) m[k] = fraction_json(f, mode);
    v["confidence_levels"] = std::move(m);
  }
  if (!s.verification_ttl.empty()) {
    json m = json::object();
    for (const auto& [k, secs] : s.verification_ttl) m[k] = secs;
    v["verification_ttl"] = std::move(m);
  }
  if (!s.signature_algorithms.empty())
    v["signature_algorithms"] = enum_list_json(s.signature_algorithms);
  if (!signable_subset && !s.revocation_status.empty()) {
    json m = json::object();
    for (const auto& [k, st] : s.revocation_status)
      m[k] = std::string(to_token(st));
    v["revocation_status"] = std::move(m);
  }
  return v;
}

VerificationMeta verification_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  VerificationMeta s;
  if (const json* a = r.optional("signatures")) {
    const json& arr = as_array(*a, r.child_path("signatures"));
    std::size_t i = 0;
    for (const json& e : arr) {
      s.signatures.push_back(SignatureBlock::from_json(
          e, r.child_path("signatures") + "/" + std::to_string(i++)));
    }
  }
  s.verification_authorities =
      r.optional_string_list("verification_authorities");
  if (r.has("verification_policy")) {
    s.verification_policy = r.optional_string("verification_policy");
  }
  if (const json* m = r.optional("confidence_levels")) {
    const json& obj = as_object(*m, r.child_path("confidence_levels"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      s.confidence_levels[it.key()] = as_fraction(
          it.value(), r.child_path("confidence_levels") + "/" + it.key());
    }
  }
  if (const json* m = r.optional("verification_ttl")) {
    const json& obj = as_object(*m, r.child_path("verification_ttl"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      s.verification_ttl[it.key()] =
          as_int(it.value(), r.child_path("verification_ttl") + "/" + it.key());
    }
  }
  if (const json* a = r.optional("signature_algorithms")) {
    const json& arr = as_array(*a, r.child_path("signature_algorithms"));
    std::size_t i = 0;
    for (const json& e : arr) {
      std::string p =
          r.child_path("signature_algorithms") + "/" + std::to_string(i++);
      s.signature_algorithms.push_back(algorithm_from_name(as_string(e, p)));
    }
  }
  if (const json* m = r.optional("revocation_status")) {
    const json& obj = as_object(*m, r.child_path("revocation_status"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      std::string p = r.child_path("revocation_status") + "/" + it.key();
      s.revocation_status[it.key()] =
          from_token<RevocationStatus>(as_string(it.value(), p), p);
    }
  }
  r.finish();
  return s;
}

// -- extensions --------------------------------------------------------------

json extensions_json(const Extensibility& s) {
  json v = json::object();
  if (!s.custom_facts.empty()) {
    json m = json::object();
    for (const auto& [k, val] : s.custom_facts) m[k] = val;
    v["custom_facts"] = std::move(m);
  }
  if (!s.integration_hooks.empty()) v["integration_hooks"] = s.integration_hooks;
  if (!s.schema_extensions.empty()) v["schema_extensions"] = s.schema_extensions;
  if (!s.plugin_interfaces.empty()) v["plugin_interfaces"] = s.plugin_interfaces;
  if (s.backward_compatibility)
    v["backward_compatibility"] = *s.backward_compatibility;
  return v;
}

Extensibility extensions_from(const json& v, const std::string& path) {
  ObjReader r(v, path);
  Extensibility s;
  if (const json* m = r.optional("custom_facts")) {
    const json& obj = as_object(*m, r.child_path("custom_facts"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      check_opaque_content(it.value(),
                           r.child_path("custom_facts") + "/" + it.key());
      s.custom_facts[it.key()] = it.value();
    }
  }
  s.integration_hooks = r.optional_string_list("integration_hooks");
  s.schema_extensions = r.optional_string_list("schema_extensions");
  s.plugin_interfaces = r.optional_string_list("plugin_interfaces");
  if (r.has("backward_compatibility")) {
    s.backward_compatibility = r.optional_string("backward_compatibility");
  }
  r.finish();
  return s;
}

json section_json(const AgentFactsDoc& doc, std::string_view name,
                  JsonMode mode, bool signable_subset) {
  if (name == "identity") return identity_json(doc.identity);
  if (name == "baseline_model") return baseline_json(*doc.baseline_model);
  if (name == "classification") return classification_json(*doc.classification);
  if (name == "capabilities") return capabilities_json(*doc.capabilities);
  if (name == "auth_permissions") return auth_json(*doc.auth_permissions);
  if (name == "compliance") return compliance_json(*doc.compliance);
  if (name == "performance") return performance_json(*doc.performance, mode);
  if (name == "supply_chain") return supply_json(*doc.supply_chain);
  if (name == "verification")
    return verification_json(*doc.verification, mode, signable_subset);
  if (name == "extensions") return extensions_json(*doc.extensions);
  throw Error(ErrorKind::unknown_section,
              "\"" + std::string(name) + "\" is not a schema section");
}

}  // namespace

json document_json(const AgentFactsDoc& doc, JsonMode mode) {
  json v = json::object();
  for (auto name : kSectionNames) {
    if (has_section(doc, name)) {
      v[std::string(name)] = section_json(doc, name, mode, false);
    }
  }
  return v;
}

AgentFactsDoc document_from_json(const json& v) {
  ObjReader r(v, "");
  AgentFactsDoc doc;
  doc.identity = identity_from(r.require("identity"), "/identity");
  if (const json* s = r.optional("baseline_model"))
    doc.baseline_model = baseline_from(*s, "/baseline_model");
  if (const json* s = r.optional("classification"))
    doc.classification = classification_from(*s, "/classification");
  if (const json* s = r.optional("capabilities"))
    doc.capabilities = capabilities_from(*s, "/capabilities");
  if (const json* s = r.optional("auth_permissions"))
    doc.auth_permissions = auth_from(*s, "/auth_permissions");
  if (const json* s = r.optional("compliance"))
    doc.compliance = compliance_from(*s, "/compliance");
  if (const json* s = r.optional("performance"))
    doc.performance = performance_from(*s, "/performance");
  if (const json* s = r.optional("supply_chain"))
    doc.supply_chain = supply_from(*s, "/supply_chain");
  if (const json* s = r.optional("verification"))
    doc.verification = verification_from(*s, "/verification");
  if (const json* s = r.optional("extensions"))
    doc.extensions = extensions_from(*s, "/extensions");
  r.finish();
  return doc;
}

AgentFactsDoc parse_document(std::string_view text) {
  return document_from_json(parse_json_text(text));
}

std::string serialize_document(const AgentFactsDoc& doc) {
  return document_json(doc, JsonMode::display).dump(2) + "\n";
}

CanonicalBytes canonicalize_document(const AgentFactsDoc& doc) {
  return canonicalize(document_json(doc, JsonMode::canonical));
}

json signable_section_json(const AgentFactsDoc& doc, std::string_view name) {
  if (!is_section_name(name)) {
    throw Error(ErrorKind::unknown_section,
                "\"" + std::string(name) + "\" is not a schema section");
  }
  if (!has_section(doc, name)) {
    throw Error(ErrorKind::missing_section,
                "document has no \"" + std::string(name) + "\" section");
  }
  return section_json(doc, name, JsonMode::canonical, true);
}

CanonicalBytes section_payload(const AgentFactsDoc& doc,
                               const std::set<std::string>& scope) {
  if (scope.empty()) {
    throw Error(ErrorKind::invalid_request,
                "signature scope must name at least one section");
  }
  json sections = json::object();
  json scope_list = json::array();
  for (const auto& name : scope) {  // std::set iterates sorted
    sections[name] = signable_section_json(doc, name);
    scope_list.push_back(name);
  }
  json payload = json::object();
  payload["agent_id"] = doc.identity.agent_id;
  payload["scope"] = std::move(scope_list);
  payload["sections"] = std::move(sections);
  payload["version_seq"] = doc.identity.version_seq;
  return canonicalize(payload);
}

}  // namespace agentfacts

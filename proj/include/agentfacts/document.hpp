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
#include <string>
#include <vector>

#include "agentfacts/enums.hpp"
#include "agentfacts/fraction.hpp"
#include "agentfacts/jsonutil.hpp"
#include "agentfacts/permissions.hpp"
#include "agentfacts/signature.hpp"
#include "agentfacts/timestamp.hpp"

namespace agentfacts {

// The ten-section agent metadata document. Identity is always present;
// baseline_model is schema-required but modeled as optional so stakeholder
// views can project it away — validate_document reports its absence as an
// error on full documents. The remaining eight sections are optional and
// validated when present.
//
// All types here are immutable values after construction: operations on
// documents return new documents.

/// How the agent_id string is formed. Detection is syntactic: "did:" prefix,
/// 8-4-4-4-12 hex for UUID, RFC 3986 scheme for URI.
enum class AgentIdKind { uuid, uri, did, unrecognized };
AgentIdKind agent_id_kind(std::string_view agent_id);

struct CoreIdentity {
  std::string agent_id;
  std::string name;
  std::string version;  // schema version tag, e.g. "1.0"
  Timestamp created;
  Timestamp last_updated;
  std::int64_t ttl = 0;  // global freshness lifetime, seconds
  std::int64_t version_seq = 0;

  friend bool operator==(const CoreIdentity&, const CoreIdentity&) = default;
};

struct BaselineModel {
  std::string foundation_model;
  std::string model_version;
  std::string model_provider;
  std::vector<std::string> training_data_sources;
  std::optional<Timestamp> training_cutoff_date;
  std::optional<json> fine_tuning;  // free-form record
  std::vector<std::string> model_capabilities;
  std::vector<std::string> known_limitations;
  std::vector<json> bias_assessments;     // free-form assessment records
  std::vector<json> safety_evaluations;   // free-form assessment records

  friend bool operator==(const BaselineModel&, const BaselineModel&) = default;
};

struct Classification {
  AgentType agent_type = AgentType::assistant;
  OperationalLevel operational_level = OperationalLevel::supervised;
  StakeholderContext stakeholder_context = StakeholderContext::enterprise;
  DeploymentScope deployment_scope = DeploymentScope::internal;
  InteractionMode interaction_mode = InteractionMode::synchronous;

  friend bool operator==(const Classification&, const Classification&) = default;
};

struct Capabilities {
  std::vector<std::string> external_apis;
  std::vector<ToolCalling> tool_calling;
  std::vector<std::string> programming_languages;
  std::vector<DataFormat> data_formats;
  std::vector<InterfaceType> interface_types;
  std::vector<std::string> domain_expertise;
  std::vector<std::string> language_support;  // ISO-639 tags

  friend bool operator==(const Capabilities&, const Capabilities&) = default;
};

struct SessionManagement {
  std::optional<std::int64_t> timeout_seconds;
  std::optional<std::string> refresh_policy;

  friend bool operator==(const SessionManagement&, const SessionManagement&) = default;
};

struct AuthPermissions {
  std::vector<AuthMethod> supported_methods;
  AuthMethod primary_scheme = AuthMethod::oauth2;
  std::vector<std::string> oauth_endpoints;
  std::optional<json> token_requirements;  // free-form record
  AuthSecurityLevel auth_security_level = AuthSecurityLevel::standard;
  std::optional<SessionManagement> session_management;
  bool multi_factor_required = false;
  std::vector<std::string> auth_compliance;
  std::optional<PermissionState> permission_state;

  friend bool operator==(const AuthPermissions&, const AuthPermissions&) = default;
};

struct EuAiAct {
  RiskLevel risk_level = RiskLevel::minimal;
  std::vector<std::string> transparency_obligations;

  friend bool operator==(const EuAiAct&, const EuAiAct&) = default;
};

struct NistAiRmf {
  std::optional<std::string> framework_alignment;
  std::vector<std::string> risk_categories;

  friend bool operator==(const NistAiRmf&, const NistAiRmf&) = default;
};

struct Compliance {
  std::optional<EuAiAct> eu_ai_act;
  std::optional<NistAiRmf> nist_ai_rmf;
  std::optional<json> gdpr_compliance;  // free-form record
  std::vector<std::string> sector_standards;
  std::vector<std::string> geographic_compliance;
  std::optional<SafetyClassification> safety_classification;
  std::vector<std::string> audit_certifications;

  friend bool operator==(const Compliance&, const Compliance&) = default;
};

struct HistoricalPoint {
  Timestamp timestamp;
  std::string metric;
  Fraction value;  // micro-unit fixed point; not restricted to [0,1]

  friend bool operator==(const HistoricalPoint&, const HistoricalPoint&) = default;
};

struct Performance {
  std::optional<std::int64_t> response_time_p50;  // milliseconds
  std::optional<std::int64_t> response_time_p95;  // milliseconds
  std::optional<Fraction> availability_sla;
  std::optional<std::int64_t> throughput_limit;   // requests per minute
  std::map<std::string, Fraction> accuracy_metrics;
  std::optional<Fraction> error_rate;
  std::optional<CostStructure> cost_structure;
  std::optional<Fraction> reputation_score;
  std::optional<Fraction> user_satisfaction;
  std::vector<HistoricalPoint> historical_performance;

  friend bool operator==(const Performance&, const Performance&) = default;
};

struct ComponentRef {
  std::string name;
  std::optional<std::string> version;

  friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
};

struct LibraryRef {
  std::string name;
  std::optional<std::string> version;
  std::optional<std::string> license;

  friend bool operator==(const LibraryRef&, const LibraryRef&) = default;
};

struct ScanRecord {
  std::string tool;
  Timestamp timestamp;
  std::int64_t findings_count = 0;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct SupplyChain {
  std::vector<ComponentRef> component_dependencies;
  std::vector<std::string> data_sources;
  std::vector<std::string> infrastructure_providers;
  std::vector<LibraryRef> software_libraries;
  std::vector<ScanRecord> security_scanning;
  std::vector<std::string> license_compliance;
  std::optional<std::string> supply_chain_attestation;

  friend bool operator==(const SupplyChain&, const SupplyChain&) = default;
};

struct VerificationMeta {
  std::vector<SignatureBlock> signatures;
  std::vector<std::string> verification_authorities;
  std::optional<std::string> verification_policy;  // reference, not embedded
  std::map<std::string, Fraction> confidence_levels;      // authority → score
  std::map<std::string, std::int64_t> verification_ttl;   // section → seconds
  std::vector<SigAlgorithm> signature_algorithms;
  std::map<std::string, RevocationStatus> revocation_status;  // sig digest → status

  friend bool operator==(const VerificationMeta&, const VerificationMeta&) = default;
};

struct Extensibility {
  std::map<std::string, json> custom_facts;  // namespaced keys, open values
  std::vector<std::string> integration_hooks;  // webhook URLs
  std::vector<std::string> schema_extensions;
  std::vector<std::string> plugin_interfaces;
  std::optional<std::string> backward_compatibility;

  friend bool operator==(const Extensibility&, const Extensibility&) = default;
};

struct AgentFactsDoc {
  CoreIdentity identity;
  std::optional<BaselineModel> baseline_model;
  std::optional<Classification> classification;
  std::optional<Capabilities> capabilities;
  std::optional<AuthPermissions> auth_permissions;
  std::optional<Compliance> compliance;
  std::optional<Performance> performance;
  std::optional<SupplyChain> supply_chain;
  std::optional<Extensibility> extensions;
  std::optional<VerificationMeta> verification;

  friend bool operator==(const AgentFactsDoc&, const AgentFactsDoc&) = default;
};

/// Whether the named section is present in this document.
bool has_section(const AgentFactsDoc& doc, std::string_view name);

/// Present section names in schema order (identity always first).
std::vector<std::string> present_sections(const AgentFactsDoc& doc);

}  // namespace agentfacts

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

#include "agentfacts/enums.hpp"

#include <utility>

#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

template <typename E, std::size_t N>
using Table = std::array<std::pair<E, std::string_view>, N>;

template <typename E, std::size_t N>
std::string_view token_in(const Table<E, N>& table, E value) {
  for (const auto& [v, t] : table) {
    if (v == value) return t;
  }
  return "?";  // unreachable for in-range values
}

template <typename E, std::size_t N>
E value_in(const Table<E, N>& table, std::string_view vocab,
           std::string_view token, const std::string& path) {
  for (const auto& [v, t] : table) {
    if (t == token) return v;
  }
  throw Error(ErrorKind::type_mismatch, path,
              "\"" + std::string(token) + "\" is not a " + std::string(vocab) +
                  " value");
}

constexpr Table<AgentType, 4> kAgentType{{
    {AgentType::assistant, "assistant"},
    {AgentType::autonomous, "autonomous"},
    {AgentType::tool, "tool"},
    {AgentType::workflow, "workflow"},
}};
constexpr Table<OperationalLevel, 3> kOperationalLevel{{
    {OperationalLevel::ambient, "ambient"},
    {OperationalLevel::supervised, "supervised"},
    {OperationalLevel::autonomous, "autonomous"},
}};
constexpr Table<StakeholderContext, 3> kStakeholderContext{{
    {StakeholderContext::enterprise, "enterprise"},
    {StakeholderContext::consumer, "consumer"},
    {StakeholderContext::government, "government"},
}};
constexpr Table<DeploymentScope, 3> kDeploymentScope{{
    {DeploymentScope::internal, "internal"},
    {DeploymentScope::external, "external"},
    {DeploymentScope::hybrid, "hybrid"},
}};
constexpr Table<InteractionMode, 3> kInteractionMode{{
    {InteractionMode::synchronous, "synchronous"},
    {InteractionMode::asynchronous, "asynchronous"},
    {InteractionMode::batch, "batch"},
}};
constexpr Table<ToolCalling, 3> kToolCalling{{
    {ToolCalling::mcp, "mcp"},
    {ToolCalling::function_calls, "function_calls"},
    {ToolCalling::custom_protocols, "custom_protocols"},
}};
constexpr Table<DataFormat, 6> kDataFormat{{
    {DataFormat::json_format, "json"},
    {DataFormat::csv, "csv"},
    {DataFormat::pdf, "pdf"},
    {DataFormat::image, "image"},
    {DataFormat::audio, "audio"},
    {DataFormat::video, "video"},
}};
constexpr Table<InterfaceType, 4> kInterfaceType{{
    {InterfaceType::text, "text"},
    {InterfaceType::voice, "voice"},
    {InterfaceType::gui, "gui"},
    {InterfaceType::api, "api"},
}};
constexpr Table<AuthMethod, 5> kAuthMethod{{
    {AuthMethod::oauth2, "oauth2"},
    {AuthMethod::api_key, "api_key"},
    {AuthMethod::mtls, "mtls"},
    {AuthMethod::jwt, "jwt"},
    {AuthMethod::saml, "saml"},
}};
constexpr Table<AuthSecurityLevel, 4> kAuthSecurityLevel{{
    {AuthSecurityLevel::basic, "basic"},
    {AuthSecurityLevel::standard, "standard"},
    {AuthSecurityLevel::high, "high"},
    {AuthSecurityLevel::critical, "critical"},
}};
constexpr Table<RiskLevel, 4> kRiskLevel{{
    {RiskLevel::minimal, "minimal"},
    {RiskLevel::limited, "limited"},
    {RiskLevel::high, "high"},
    {RiskLevel::unacceptable, "unacceptable"},
}};
constexpr Table<SafetyClassification, 4> kSafetyClassification{{
    {SafetyClassification::low, "low"},
    {SafetyClassification::medium, "medium"},
    {SafetyClassification::high, "high"},
    {SafetyClassification::critical, "critical"},
}};
constexpr Table<CostStructure, 3> kCostStructure{{
    {CostStructure::per_request, "per_request"},
    {CostStructure::subscription, "subscription"},
    {CostStructure::hybrid, "hybrid"},
}};
constexpr Table<SigAlgorithm, 3> kSigAlgorithm{{
    {SigAlgorithm::ed25519, "ed25519"},
    {SigAlgorithm::ecdsa_p256, "ecdsa-p256"},
    {SigAlgorithm::rsa_pss_2048, "rsa-pss-2048"},
}};
constexpr Table<SigStatus, 6> kSigStatus{{
    {SigStatus::valid, "valid"},
    {SigStatus::bad_signature, "bad_signature"},
    {SigStatus::unknown_authority, "unknown_authority"},
    {SigStatus::revoked, "revoked"},
    {SigStatus::scope_mismatch, "scope_mismatch"},
    {SigStatus::expired, "expired"},
}};
constexpr Table<RevocationStatus, 3> kRevocationStatus{{
    {RevocationStatus::valid, "valid"},
    {RevocationStatus::revoked, "revoked"},
    {RevocationStatus::unknown, "unknown"},
}};
constexpr Table<RevocationTarget, 2> kRevocationTarget{{
    {RevocationTarget::signature, "signature"},
    {RevocationTarget::authority, "authority"},
}};
constexpr Table<PermAction, 4> kPermAction{{
    {PermAction::read, "read"},
    {PermAction::write, "write"},
    {PermAction::execute, "execute"},
    {PermAction::admin, "admin"},
}};
constexpr Table<GrantStatus, 3> kGrantStatus{{
    {GrantStatus::active, "active"},
    {GrantStatus::expired, "expired"},
    {GrantStatus::revoked, "revoked"},
}};
constexpr Table<AuditAction, 5> kAuditAction{{
    {AuditAction::grant, "grant"},
    {AuditAction::revoke, "revoke"},
    {AuditAction::escalate, "escalate"},
    {AuditAction::revert, "revert"},
    {AuditAction::check_denied, "check_denied"},
}};
constexpr Table<SectionTrust, 4> kSectionTrust{{
    {SectionTrust::trusted, "trusted"},
    {SectionTrust::insufficient, "insufficient"},
    {SectionTrust::stale, "stale"},
    {SectionTrust::failed, "failed"},
}};
constexpr Table<OverallTrust, 3> kOverallTrust{{
    {OverallTrust::trusted, "trusted"},
    {OverallTrust::degraded, "degraded"},
    {OverallTrust::untrusted, "untrusted"},
}};
constexpr Table<FreshState, 3> kFreshState{{
    {FreshState::fresh, "fresh"},
    {FreshState::stale, "stale"},
    {FreshState::expired, "expired"},
}};
constexpr Table<DocFreshness, 3> kDocFreshness{{
    {DocFreshness::fresh, "fresh"},
    {DocFreshness::degraded, "degraded"},
    {DocFreshness::expired, "expired"},
}};
constexpr Table<Audience, 3> kAudience{{
    {Audience::enterprise, "enterprise"},
    {Audience::consumer, "consumer"},
    {Audience::government, "government"},
}};
constexpr Table<DeliveryState, 3> kDeliveryState{{
    {DeliveryState::pending, "pending"},
    {DeliveryState::delivered, "delivered"},
    {DeliveryState::failed, "failed"},
}};
constexpr Table<Provenance, 2> kProvenance{{
    {Provenance::live, "live"},
    {Provenance::cache, "cache"},
}};

}  // namespace

#define AF_ENUM_IMPL(Type, table, vocab)                                  \
  template <>                                                             \
  std::string_view to_token<Type>(Type value) {                          \
    return token_in(table, value);                                       \
  }                                                                       \
  template <>                                                             \
  Type from_token<Type>(std::string_view token, const std::string& path) { \
    return value_in(table, vocab, token, path);                          \
  }

AF_ENUM_IMPL(AgentType, kAgentType, "agent_type")
AF_ENUM_IMPL(OperationalLevel, kOperationalLevel, "operational_level")
AF_ENUM_IMPL(StakeholderContext, kStakeholderContext, "stakeholder_context")
AF_ENUM_IMPL(DeploymentScope, kDeploymentScope, "deployment_scope")
AF_ENUM_IMPL(InteractionMode, kInteractionMode, "interaction_mode")
AF_ENUM_IMPL(ToolCalling, kToolCalling, "tool_calling")
AF_ENUM_IMPL(DataFormat, kDataFormat, "data_format")
AF_ENUM_IMPL(InterfaceType, kInterfaceType, "interface_type")
AF_ENUM_IMPL(AuthMethod, kAuthMethod, "auth_method")
AF_ENUM_IMPL(AuthSecurityLevel, kAuthSecurityLevel, "auth_security_level")
AF_ENUM_IMPL(RiskLevel, kRiskLevel, "risk_level")
AF_ENUM_IMPL(SafetyClassification, kSafetyClassification,
             "safety_classification")
AF_ENUM_IMPL(CostStructure, kCostStructure, "cost_structure")
AF_ENUM_IMPL(SigAlgorithm, kSigAlgorithm, "signature_algorithm")
AF_ENUM_IMPL(SigStatus, kSigStatus, "signature_status")
AF_ENUM_IMPL(RevocationStatus, kRevocationStatus, "revocation_status")
AF_ENUM_IMPL(RevocationTarget, kRevocationTarget, "revocation_target")
AF_ENUM_IMPL(PermAction, kPermAction, "permission_action")
AF_ENUM_IMPL(GrantStatus, kGrantStatus, "grant_status")
AF_ENUM_IMPL(AuditAction, kAuditAction, "audit_action")
AF_ENUM_IMPL(SectionTrust, kSectionTrust, "section_trust")
AF_ENUM_IMPL(OverallTrust, kOverallTrust, "overall_trust")
AF_ENUM_IMPL(FreshState, kFreshState, "freshness_state")
AF_ENUM_IMPL(DocFreshness, kDocFreshness, "document_freshness")
AF_ENUM_IMPL(Audience, kAudience, "audience")
AF_ENUM_IMPL(DeliveryState, kDeliveryState, "delivery_state")
AF_ENUM_IMPL(Provenance, kProvenance, "provenance")

#undef AF_ENUM_IMPL

bool is_section_name(std::string_view name) {
  for (auto s : kSectionNames) {
    if (s == name) return true;
  }
  return false;
}

}  // namespace agentfacts

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

#include <array>
#include <string>
#include <string_view>

namespace agentfacts {

// Closed vocabularies of the document schema. Wire tokens are lowercase
// snake_case except the signature algorithm identifiers, which keep their
// conventional hyphenated spellings.

enum class AgentType { assistant, autonomous, tool, workflow };
enum class OperationalLevel { ambient, supervised, autonomous };
enum class StakeholderContext { enterprise, consumer, government };
enum class DeploymentScope { internal, external, hybrid };
enum class InteractionMode { synchronous, asynchronous, batch };

enum class ToolCalling { mcp, function_calls, custom_protocols };
enum class DataFormat { json_format, csv, pdf, image, audio, video };
enum class InterfaceType { text, voice, gui, api };

enum class AuthMethod { oauth2, api_key, mtls, jwt, saml };
enum class AuthSecurityLevel { basic, standard, high, critical };

enum class RiskLevel { minimal, limited, high, unacceptable };
enum class SafetyClassification { low, medium, high, critical };

enum class CostStructure { per_request, subscription, hybrid };

enum class SigAlgorithm { ed25519, ecdsa_p256, rsa_pss_2048 };
enum class SigStatus {
  valid,
  bad_signature,
  unknown_authority,
  revoked,
  scope_mismatch,
  expired,
};
enum class RevocationStatus { valid, revoked, unknown };
enum class RevocationTarget { signature, authority };

enum class PermAction { read, write, execute, admin };
enum class GrantStatus { active, expired, revoked };
enum class AuditAction { grant, revoke, escalate, revert, check_denied };

enum class SectionTrust { trusted, insufficient, stale, failed };
enum class OverallTrust { trusted, degraded, untrusted };

enum class FreshState { fresh, stale, expired };
enum class DocFreshness { fresh, degraded, expired };

enum class Audience { enterprise, consumer, government };

enum class DeliveryState { pending, delivered, failed };
enum class Provenance { live, cache };

/// Maps an enum value to its wire token.
template <typename E>
std::string_view to_token(E value);

/// Maps a wire token back to the enum; throws Error{type_mismatch} naming
/// `path` when the token is not in the vocabulary.
template <typename E>
E from_token(std::string_view token, const std::string& path);

/// The ten section names in their fixed schema order.
inline constexpr std::array<std::string_view, 10> kSectionNames = {
    "identity",     "baseline_model", "classification", "capabilities",
    "auth_permissions", "compliance", "performance",    "supply_chain",
    "verification", "extensions",
};

bool is_section_name(std::string_view name);

}  // namespace agentfacts

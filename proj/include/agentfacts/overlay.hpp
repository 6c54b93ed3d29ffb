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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agentfacts/document.hpp"
#include "agentfacts/permissions.hpp"

namespace agentfacts {

/// Partial update of the classification section; absent fields keep the
/// base document's values.
struct ClassificationPatch {
  std::optional<AgentType> agent_type;
  std::optional<OperationalLevel> operational_level;
  std::optional<StakeholderContext> stakeholder_context;
  std::optional<DeploymentScope> deployment_scope;
  std::optional<InteractionMode> interaction_mode;

  bool empty() const;
  json to_json() const;
  static ClassificationPatch from_json(const json& v, const std::string& path);

  friend bool operator==(const ClassificationPatch&,
                         const ClassificationPatch&) = default;
};

struct ScopeOfWork {
  std::vector<std::string> included_tasks;
  std::vector<std::string> excluded_tasks;

  json to_json() const;
  static ScopeOfWork from_json(const json& v, const std::string& path);

  friend bool operator==(const ScopeOfWork&, const ScopeOfWork&) = default;
};

/// An organization's role assignment, layered over a verified document
/// without touching its verified content. The only section an overlay may
/// rewrite is classification; duties and behavioral bounds land in
/// extensions.custom_facts under the assigning organization's namespace,
/// and requested grants arrive as pending proposals, not live permissions.
struct RoleOverlay {
  std::string assigning_org;
  ClassificationPatch classification_updates;
  /// Updates aimed at any other section, preserved from the file form so
  /// apply_overlay can reject them as OverlayViolation by name.
  std::map<std::string, json> protected_updates;
  std::vector<GrantRequest> permission_grants;
  std::optional<ScopeOfWork> scope_of_work;
  std::vector<std::string> constitution;

  json to_json() const;
  static RoleOverlay from_json(const json& v, const std::string& path);
  static RoleOverlay parse(std::string_view text);

  friend bool operator==(const RoleOverlay&, const RoleOverlay&) = default;
};

/// Applies a role overlay, returning a new document revision:
/// classification patched, grants appended to pending_grants, scope_of_work
/// and constitution stored as "org.<assigning_org>.*" custom facts,
/// version_seq incremented, last_updated set to `at`. Existing signatures
/// are retained byte-for-byte (they now cover a prior revision and stand or
/// fall on their own binding). Throws Error{overlay_violation} when the
/// overlay touches a protected section or targets a section the base
/// document does not carry; Error{invalid_request} for a blank
/// assigning_org with org-scoped payload.
AgentFactsDoc apply_overlay(const AgentFactsDoc& base, const RoleOverlay& overlay,
                            Timestamp at);

/// Projects a document for one audience. Omitted sections are absent, not
/// blanked; identity is always included. Enterprise sees everything;
/// consumer sees identity, baseline_model, classification, the
/// safety_classification part of compliance, and performance; government
/// sees identity, compliance, and verification. Idempotent per audience.
AgentFactsDoc select_view(const AgentFactsDoc& doc, Audience audience);

}  // namespace agentfacts

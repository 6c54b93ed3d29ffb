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

#include "agentfacts/overlay.hpp"

#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

template <typename E>
void patch_field(ObjReader& r, std::string_view key, std::optional<E>& out) {
  if (r.has(key)) out = from_token<E>(r.optional_string(key), r.child_path(key));
}

}  // namespace

bool ClassificationPatch::empty() const {
  return !agent_type && !operational_level && !stakeholder_context &&
         !deployment_scope && !interaction_mode;
}

json ClassificationPatch::to_json() const {
  json v = json::object();
  if (agent_type) v["agent_type"] = std::string(to_token(*agent_type));
  if (operational_level)
    v["operational_level"] = std::string(to_token(*operational_level));
  if (stakeholder_context)
    v["stakeholder_context"] = std::string(to_token(*stakeholder_context));
  if (deployment_scope)
    v["deployment_scope"] = std::string(to_token(*deployment_scope));
  if (interaction_mode)
    v["interaction_mode"] = std::string(to_token(*interaction_mode));
  return v;
}

ClassificationPatch ClassificationPatch::from_json(const json& v,
                                                   const std::string& path) {
  ObjReader r(v, path);
  ClassificationPatch p;
  patch_field(r, "agent_type", p.agent_type);
  patch_field(r, "operational_level", p.operational_level);
  patch_field(r, "stakeholder_context", p.stakeholder_context);
  patch_field(r, "deployment_scope", p.deployment_scope);
  patch_field(r, "interaction_mode", p.interaction_mode);
  r.finish();
  return p;
}

json ScopeOfWork::to_json() const {
  json v = json::object();
  v["included_tasks"] = included_tasks;
  v["excluded_tasks"] = excluded_tasks;
  return v;
}

ScopeOfWork ScopeOfWork::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  ScopeOfWork s;
  s.included_tasks = r.optional_string_list("included_tasks");
  s.excluded_tasks = r.optional_string_list("excluded_tasks");
  r.finish();
  return s;
}

json RoleOverlay::to_json() const {
  json v = json::object();
  v["assigning_org"] = assigning_org;
  json updates = json::object();
  if (!classification_updates.empty()) {
    updates["classification"] = classification_updates.to_json();
  }
  for (const auto& [section, patch] : protected_updates) {
    updates[section] = patch;
  }
  if (!updates.empty()) v["updates"] = std::move(updates);
  if (!permission_grants.empty()) {
    json grants = json::array();
    for (const auto& g : permission_grants) grants.push_back(g.to_json());
    v["permission_grants"] = std::move(grants);
  }
  if (scope_of_work) v["scope_of_work"] = scope_of_work->to_json();
  if (!constitution.empty()) v["constitution"] = constitution;
  return v;
}

RoleOverlay RoleOverlay::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  RoleOverlay o;
  o.assigning_org = r.require_string("assigning_org");
  if (const json* updates = r.optional("updates")) {
    const json& obj = as_object(*updates, r.child_path("updates"));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (it.key() == "classification") {
        o.classification_updates = ClassificationPatch::from_json(
            it.value(), r.child_path("updates") + "/classification");
      } else {
        // Kept verbatim: apply_overlay owns the protected-section refusal,
        // so a file that merely mentions one still parses.
        o.protected_updates[it.key()] = it.value();
      }
    }
  }
  if (const json* grants = r.optional("permission_grants")) {
    const json& arr = as_array(*grants, r.child_path("permission_grants"));
    std::size_t i = 0;
    for (const json& g : arr) {
      o.permission_grants.push_back(GrantRequest::from_json(
          g, r.child_path("permission_grants") + "/" + std::to_string(i++)));
    }
  }
  if (const json* sow = r.optional("scope_of_work")) {
    o.scope_of_work = ScopeOfWork::from_json(*sow, r.child_path("scope_of_work"));
  }
  o.constitution = r.optional_string_list("constitution");
  r.finish();
  return o;
}

RoleOverlay RoleOverlay::parse(std::string_view text) {
  return from_json(parse_json_text(text), "");
}

AgentFactsDoc apply_overlay(const AgentFactsDoc& base, const RoleOverlay& overlay,
                            Timestamp at) {
  if (!overlay.protected_updates.empty()) {
    const std::string& section = overlay.protected_updates.begin()->first;
    throw Error(ErrorKind::overlay_violation,
                "/updates/" + section,
                "an overlay may only update classification, not " + section);
  }
  AgentFactsDoc out = base;

  if (!overlay.classification_updates.empty()) {
    if (!out.classification) {
      throw Error(ErrorKind::overlay_violation, "/updates/classification",
                  "base document has no classification section to update");
    }
    const ClassificationPatch& p = overlay.classification_updates;
    if (p.agent_type) out.classification->agent_type = *p.agent_type;
    if (p.operational_level)
      out.classification->operational_level = *p.operational_level;
    if (p.stakeholder_context)
      out.classification->stakeholder_context = *p.stakeholder_context;
    if (p.deployment_scope)
      out.classification->deployment_scope = *p.deployment_scope;
    if (p.interaction_mode)
      out.classification->interaction_mode = *p.interaction_mode;
  }

  if (!overlay.permission_grants.empty()) {
    if (!out.auth_permissions) {
      throw Error(ErrorKind::overlay_violation, "/permission_grants",
                  "base document has no auth_permissions section to extend");
    }
    if (!out.auth_permissions->permission_state) {
      out.auth_permissions->permission_state = PermissionState{};
    }
    auto& pending = out.auth_permissions->permission_state->pending_grants;
    pending.insert(pending.end(), overlay.permission_grants.begin(),
                   overlay.permission_grants.end());
  }

  if (overlay.scope_of_work || !overlay.constitution.empty()) {
    if (overlay.assigning_org.empty()) {
      throw Error(ErrorKind::invalid_request,
                  "assigning_org is required to namespace overlay facts");
    }
    if (!out.extensions) out.extensions = Extensibility{};
    const std::string ns = "org." + overlay.assigning_org;
    if (overlay.scope_of_work) {
      out.extensions->custom_facts[ns + ".scope_of_work"] =
          overlay.scope_of_work->to_json();
    }
    if (!overlay.constitution.empty()) {
      out.extensions->custom_facts[ns + ".constitution"] = overlay.constitution;
    }
  }

  out.identity.version_seq = base.identity.version_seq + 1;
  out.identity.last_updated = at;
  return out;
}

AgentFactsDoc select_view(const AgentFactsDoc& doc, Audience audience) {
  if (audience == Audience::enterprise) return doc;

  AgentFactsDoc view;
  view.identity = doc.identity;
  switch (audience) {
    case Audience::enterprise:
      break;  // handled above
    case Audience::consumer:
      view.baseline_model = doc.baseline_model;
      view.classification = doc.classification;
      if (doc.compliance && doc.compliance->safety_classification) {
        Compliance sc;
        sc.safety_classification = doc.compliance->safety_classification;
        view.compliance = std::move(sc);
      }
      view.performance = doc.performance;
      break;
    case Audience::government:
      view.compliance = doc.compliance;
      view.verification = doc.verification;
      break;
  }
  return view;
}

}  // namespace agentfacts

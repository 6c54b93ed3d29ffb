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

#include "agentfacts/permissions.hpp"

#include <algorithm>

#include "agentfacts/bytes.hpp"
#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

std::vector<std::string_view> split_segments(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = s.find('/', start);
    if (slash == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, slash - start));
    start = slash + 1;
  }
}

json actions_json(const std::vector<PermAction>& actions) {
  json a = json::array();
  for (auto act : actions) a.push_back(std::string(to_token(act)));
  return a;
}

std::vector<PermAction> actions_from_json(const json& v, const std::string& path) {
  std::vector<PermAction> out;
  std::size_t i = 0;
  for (const auto& s : as_string_list(v, path)) {
    out.push_back(from_token<PermAction>(s, path + "/" + std::to_string(i++)));
  }
  return out;
}

Digest zero_digest() {
  Digest d;
  d.value.assign(32, 0);
  return d;
}

/// Canonical content an audit entry's hash covers: everything except
/// entry_hash itself.
json audit_hash_body(const AuditEntry& e) {
  json v = json::object();
  v["seq"] = e.seq;
  v["at"] = timestamp_json(e.at);
  v["actor"] = e.actor;
  v["action"] = std::string(to_token(e.action));
  v["detail"] = e.detail;
  v["prev_hash"] = e.prev_hash.to_json();
  return v;
}

Digest compute_entry_hash(const AuditEntry& e) {
  ByteVec input = canonicalize(audit_hash_body(e)).bytes;
  input.insert(input.end(), e.prev_hash.value.begin(), e.prev_hash.value.end());
  return sha256_digest(input);
}

AuditEntry make_entry(const PermissionState& state, Timestamp at,
                      std::string actor, AuditAction action, json detail) {
  AuditEntry e;
  e.seq = static_cast<std::int64_t>(state.audit.size());
  e.at = at;
  e.actor = std::move(actor);
  e.action = action;
  e.detail = std::move(detail);
  e.prev_hash = state.audit.empty() ? zero_digest() : state.audit.back().entry_hash;
  e.entry_hash = compute_entry_hash(e);
  return e;
}

void validate_request(const GrantRequest& req) {
  if (req.actions.empty()) {
    throw Error(ErrorKind::invalid_request, "grant needs at least one action");
  }
  if (req.authority.empty()) {
    throw Error(ErrorKind::invalid_request, "grant needs a granting authority");
  }
  validate_pattern(req.resource_pattern, "resource_pattern");
  if (!req.baseline && req.ttl <= 0) {
    throw Error(ErrorKind::invalid_request,
                "non-baseline grant needs a positive ttl");
  }
  if (req.constraints.time_window) {
    const auto& w = *req.constraints.time_window;
    if (w.start_hour < 0 || w.start_hour >= w.end_hour || w.end_hour > 24) {
      throw Error(ErrorKind::invalid_request,
                  "time window must satisfy 0 <= start < end <= 24");
    }
  }
}

json grant_detail(const GrantRequest& req) {
  json d = json::object();
  d["actions"] = actions_json(req.actions);
  d["resource_pattern"] = req.resource_pattern;
  d["authority"] = req.authority;
  d["baseline"] = req.baseline;
  if (!req.baseline) d["ttl"] = req.ttl;
  return d;
}

/// Whether the grant would authorize this access, and if not, why. The
/// returned reason feeds the deny precedence: constraint beats expired
/// beats revoked beats no match.
enum class GrantFit { usable, constraint, expired, revoked, no_match };

GrantFit fit(const GrantEntry& g, PermAction action, std::string_view resource,
             const AccessContext& ctx) {
  if (std::find(g.grant.actions.begin(), g.grant.actions.end(), action) ==
          g.grant.actions.end() ||
      !pattern_matches(g.grant.resource_pattern, resource)) {
    return GrantFit::no_match;
  }
  if (g.status == GrantStatus::revoked) return GrantFit::revoked;
  if (g.status == GrantStatus::expired ||
      (g.expires_at && ctx.now > *g.expires_at)) {
    return GrantFit::expired;
  }
  const ConstraintSet& c = g.grant.constraints;
  if (c.time_window && (ctx.local_hour < c.time_window->start_hour ||
                        ctx.local_hour >= c.time_window->end_hour)) {
    return GrantFit::constraint;
  }
  if (c.geographic &&
      std::find(c.geographic->begin(), c.geographic->end(), ctx.jurisdiction) ==
          c.geographic->end()) {
    return GrantFit::constraint;
  }
  if (c.human_review_required && !ctx.human_reviewer_present) {
    return GrantFit::constraint;
  }
  return GrantFit::usable;
}

}  // namespace

void validate_pattern(std::string_view pattern, const std::string& path) {
  if (pattern.empty()) {
    throw Error(ErrorKind::invalid_request, path, "resource pattern is empty");
  }
  auto segments = split_segments(pattern);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i] == "**" && i + 1 != segments.size()) {
      throw Error(ErrorKind::invalid_request, path,
                  "\"**\" is only valid as the final segment");
    }
  }
}

bool pattern_matches(std::string_view pattern, std::string_view resource) {
  auto pat = split_segments(pattern);
  auto res = split_segments(resource);
  std::size_t i = 0;
  for (; i < pat.size(); ++i) {
    if (pat[i] == "**") {
      // Final segment by validation; swallows any remaining suffix,
      // including the empty one.
      return i + 1 == pat.size();
    }
    if (i >= res.size()) return false;
    if (pat[i] != "*" && pat[i] != res[i]) return false;
  }
  return i == res.size();
}

PermissionState grant(const PermissionState& state, const GrantRequest& req,
                      const std::string& actor, Timestamp now) {
  if (actor != req.authority) {
    throw Error(ErrorKind::actor_mismatch,
                "grants must be issued by their own authority (actor \"" +
                    actor + "\", authority \"" + req.authority + "\")");
  }
  validate_request(req);
  PermissionState next = state;
  GrantEntry entry;
  entry.grant = req;
  entry.granted_at = now;
  if (!req.baseline) entry.expires_at = now.plus_seconds(req.ttl);
  entry.status = GrantStatus::active;
  next.grants.push_back(std::move(entry));
  next.audit.push_back(
      make_entry(next, now, actor, AuditAction::grant, grant_detail(req)));
  return next;
}

std::pair<Decision, PermissionState> check(const PermissionState& state,
                                           PermAction action,
                                           std::string_view resource,
                                           const AccessContext& ctx) {
  bool saw_constraint = false, saw_expired = false, saw_revoked = false;
  for (std::size_t i = 0; i < state.grants.size(); ++i) {
    switch (fit(state.grants[i], action, resource, ctx)) {
      case GrantFit::usable: {
        Decision d;
        d.allowed = true;
        d.allowed_by = i;
        return {d, state};
      }
      case GrantFit::constraint: saw_constraint = true; break;
      case GrantFit::expired: saw_expired = true; break;
      case GrantFit::revoked: saw_revoked = true; break;
      case GrantFit::no_match: break;
    }
  }
  Decision d;
  d.allowed = false;
  d.deny_reason = saw_constraint ? "constraint"
                 : saw_expired   ? "expired"
                 : saw_revoked   ? "revoked"
                                 : "no_matching_grant";
  json detail = json::object();
  detail["action"] = std::string(to_token(action));
  detail["resource"] = std::string(resource);
  detail["reason"] = d.deny_reason;
  PermissionState next = state;
  next.audit.push_back(
      make_entry(next, ctx.now, "agent", AuditAction::check_denied, detail));
  return {d, next};
}

PermissionState escalate(const PermissionState& state, const GrantRequest& req,
                         const std::string& approver, Timestamp now) {
  const auto& approvers = state.escalation_policy.approver_authorities;
  if (std::find(approvers.begin(), approvers.end(), approver) ==
      approvers.end()) {
    throw Error(ErrorKind::unauthorized_approver,
                "\"" + approver + "\" is not an escalation approver");
  }
  if (req.baseline) {
    throw Error(ErrorKind::invalid_request,
                "escalated grants are time-boxed; baseline not allowed");
  }
  validate_request(req);
  if (req.ttl > state.escalation_policy.max_ttl) {
    throw Error(ErrorKind::ttl_exceeds_policy,
                "requested ttl exceeds the escalation policy maximum");
  }
  PermissionState next = state;
  GrantEntry entry;
  entry.grant = req;
  entry.granted_at = now;
  entry.expires_at = now.plus_seconds(req.ttl);
  entry.status = GrantStatus::active;
  next.grants.push_back(std::move(entry));
  json detail = grant_detail(req);
  detail["justification"] = req.justification;
  next.audit.push_back(
      make_entry(next, now, approver, AuditAction::escalate, detail));
  return next;
}

PermissionState revert_expired(const PermissionState& state, Timestamp now) {
  // Collect transitions first so audit entries land in deterministic
  // (expires_at, grant index) order even if the grant list does not.
  std::vector<std::size_t> due;
  for (std::size_t i = 0; i < state.grants.size(); ++i) {
    const GrantEntry& g = state.grants[i];
    if (g.status == GrantStatus::active && !g.grant.baseline && g.expires_at &&
        now > *g.expires_at) {
      due.push_back(i);
    }
  }
  if (due.empty()) return state;
  std::sort(due.begin(), due.end(), [&](std::size_t a, std::size_t b) {
    const auto& ga = state.grants[a];
    const auto& gb = state.grants[b];
    if (*ga.expires_at != *gb.expires_at) return *ga.expires_at < *gb.expires_at;
    return a < b;
  });
  PermissionState next = state;
  for (std::size_t i : due) {
    next.grants[i].status = GrantStatus::expired;
    json detail = json::object();
    detail["resource_pattern"] = next.grants[i].grant.resource_pattern;
    detail["expired_at"] = timestamp_json(*next.grants[i].expires_at);
    detail["grant_index"] = static_cast<std::int64_t>(i);
    next.audit.push_back(
        make_entry(next, now, "system", AuditAction::revert, detail));
  }
  return next;
}

PermissionState revoke_grant(const PermissionState& state,
                             std::size_t grant_index, const std::string& actor,
                             const std::string& reason, Timestamp now) {
  if (grant_index >= state.grants.size()) {
    throw Error(ErrorKind::invalid_request, "no grant at that index");
  }
  const GrantEntry& g = state.grants[grant_index];
  if (actor != g.grant.authority) {
    throw Error(ErrorKind::actor_mismatch,
                "only the granting authority may revoke its grant");
  }
  if (g.status != GrantStatus::active) {
    throw Error(ErrorKind::invalid_request, "grant is not active");
  }
  PermissionState next = state;
  next.grants[grant_index].status = GrantStatus::revoked;
  json detail = json::object();
  detail["resource_pattern"] = g.grant.resource_pattern;
  detail["reason"] = reason;
  detail["grant_index"] = static_cast<std::int64_t>(grant_index);
  next.audit.push_back(
      make_entry(next, now, actor, AuditAction::revoke, detail));
  return next;
}

bool verify_audit_chain(const std::vector<AuditEntry>& audit) {
  Digest prev = zero_digest();
  for (std::size_t i = 0; i < audit.size(); ++i) {
    const AuditEntry& e = audit[i];
    if (e.seq != static_cast<std::int64_t>(i)) return false;
    if (e.prev_hash != prev) return false;
    if (compute_entry_hash(e) != e.entry_hash) return false;
    prev = e.entry_hash;
  }
  return true;
}

// -- JSON forms --------------------------------------------------------------

json ConstraintSet::to_json() const {
  json v = json::object();
  if (time_window) {
    json w = json::object();
    w["start_hour"] = static_cast<std::int64_t>(time_window->start_hour);
    w["end_hour"] = static_cast<std::int64_t>(time_window->end_hour);
    if (!time_window->timezone.empty()) w["timezone"] = time_window->timezone;
    v["time_window"] = std::move(w);
  }
  if (geographic) v["geographic"] = *geographic;
  v["human_review_required"] = human_review_required;
  return v;
}

ConstraintSet ConstraintSet::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  ConstraintSet c;
  if (const json* w = r.optional("time_window")) {
    ObjReader rw(*w, r.child_path("time_window"));
    TimeWindow tw;
    tw.start_hour = static_cast<int>(rw.require_int("start_hour"));
    tw.end_hour = static_cast<int>(rw.require_int("end_hour"));
    tw.timezone = rw.optional_string("timezone");
    rw.finish();
    c.time_window = std::move(tw);
  }
  if (const json* g = r.optional("geographic")) {
    c.geographic = as_string_list(*g, r.child_path("geographic"));
  }
  c.human_review_required = r.optional_bool("human_review_required", false);
  r.finish();
  return c;
}

json GrantRequest::to_json() const {
  json v = json::object();
  v["actions"] = actions_json(actions);
  v["resource_pattern"] = resource_pattern;
  v["ttl"] = ttl;
  v["authority"] = authority;
  v["constraints"] = constraints.to_json();
  if (!justification.empty()) v["justification"] = justification;
  v["baseline"] = baseline;
  return v;
}

GrantRequest GrantRequest::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  GrantRequest g;
  g.actions = actions_from_json(r.require("actions"), r.child_path("actions"));
  g.resource_pattern = r.require_string("resource_pattern");
  g.ttl = r.optional_int("ttl").value_or(0);
  g.authority = r.require_string("authority");
  if (const json* c = r.optional("constraints")) {
    g.constraints = ConstraintSet::from_json(*c, r.child_path("constraints"));
  }
  g.justification = r.optional_string("justification");
  g.baseline = r.optional_bool("baseline", false);
  r.finish();
  return g;
}

json GrantEntry::to_json() const {
  json v = json::object();
  v["grant"] = grant.to_json();
  v["granted_at"] = timestamp_json(granted_at);
  if (expires_at) v["expires_at"] = timestamp_json(*expires_at);
  v["status"] = std::string(to_token(status));
  return v;
}

GrantEntry GrantEntry::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  GrantEntry e;
  e.grant = GrantRequest::from_json(r.require("grant"), r.child_path("grant"));
  e.granted_at = r.require_timestamp("granted_at");
  e.expires_at = r.optional_timestamp("expires_at");
  e.status = from_token<GrantStatus>(r.require_string("status"),
                                     r.child_path("status"));
  r.finish();
  return e;
}

json AuditEntry::to_json() const {
  json v = audit_hash_body(*this);
  v["entry_hash"] = entry_hash.to_json();
  return v;
}

AuditEntry AuditEntry::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  AuditEntry e;
  e.seq = r.require_int("seq");
  e.at = r.require_timestamp("at");
  e.actor = r.require_string("actor");
  e.action = from_token<AuditAction>(r.require_string("action"),
                                     r.child_path("action"));
  e.detail = as_object(r.require("detail"), r.child_path("detail"));
  check_opaque_content(e.detail, r.child_path("detail"));
  e.prev_hash = Digest::from_json(r.require("prev_hash"), r.child_path("prev_hash"));
  e.entry_hash = Digest::from_json(r.require("entry_hash"), r.child_path("entry_hash"));
  r.finish();
  return e;
}

json EscalationPolicy::to_json() const {
  json v = json::object();
  v["approver_authorities"] = approver_authorities;
  v["max_ttl"] = max_ttl;
  return v;
}

EscalationPolicy EscalationPolicy::from_json(const json& v,
                                             const std::string& path) {
  ObjReader r(v, path);
  EscalationPolicy p;
  p.approver_authorities =
      as_string_list(r.require("approver_authorities"),
                     r.child_path("approver_authorities"));
  p.max_ttl = r.require_int("max_ttl");
  r.finish();
  return p;
}

json PermissionState::to_json() const {
  json v = json::object();
  json gs = json::array();
  for (const auto& g : grants) gs.push_back(g.to_json());
  v["grants"] = std::move(gs);
  if (!pending_grants.empty()) {
    json ps = json::array();
    for (const auto& p : pending_grants) ps.push_back(p.to_json());
    v["pending_grants"] = std::move(ps);
  }
  v["escalation_policy"] = escalation_policy.to_json();
  json as = json::array();
  for (const auto& a : audit) as.push_back(a.to_json());
  v["audit"] = std::move(as);
  return v;
}

PermissionState PermissionState::from_json(const json& v,
                                           const std::string& path) {
  ObjReader r(v, path);
  PermissionState s;
  {
    const json& gs = as_array(r.require("grants"), r.child_path("grants"));
    std::size_t i = 0;
    for (const json& g : gs) {
      s.grants.push_back(GrantEntry::from_json(
          g, r.child_path("grants") + "/" + std::to_string(i++)));
    }
  }
  if (const json* ps = r.optional("pending_grants")) {
    const json& arr = as_array(*ps, r.child_path("pending_grants"));
    std::size_t i = 0;
    for (const json& p : arr) {
      s.pending_grants.push_back(GrantRequest::from_json(
          p, r.child_path("pending_grants") + "/" + std::to_string(i++)));
    }
  }
  s.escalation_policy = EscalationPolicy::from_json(
      r.require("escalation_policy"), r.child_path("escalation_policy"));
  {
    const json& as = as_array(r.require("audit"), r.child_path("audit"));
    std::size_t i = 0;
    for (const json& a : as) {
      s.audit.push_back(AuditEntry::from_json(
          a, r.child_path("audit") + "/" + std::to_string(i++)));
    }
  }
  r.finish();
  return s;
}

}  // namespace agentfacts

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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agentfacts/canonical.hpp"
#include "agentfacts/enums.hpp"
#include "agentfacts/jsonutil.hpp"
#include "agentfacts/timestamp.hpp"

namespace agentfacts {

/// Conditions a grant imposes on every access it authorizes.
struct ConstraintSet {
  struct TimeWindow {
    int start_hour = 0;  // inclusive
    int end_hour = 24;   // exclusive
    std::string timezone;

    friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
  };

  std::optional<TimeWindow> time_window;
  std::optional<std::vector<std::string>> geographic;
  bool human_review_required = false;

  json to_json() const;
  static ConstraintSet from_json(const json& v, const std::string& path);

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

/// A request for time-limited, scope-specific access. Baseline grants are
/// the floor permissions an agent reverts to; they never expire by ttl.
struct GrantRequest {
  std::vector<PermAction> actions;
  std::string resource_pattern;
  std::int64_t ttl = 0;  // seconds; ignored when baseline
  std::string authority;
  ConstraintSet constraints;
  std::string justification;
  bool baseline = false;

  json to_json() const;
  static GrantRequest from_json(const json& v, const std::string& path);

  friend bool operator==(const GrantRequest&, const GrantRequest&) = default;
};

/// One issued grant with its lifecycle bookkeeping.
struct GrantEntry {
  GrantRequest grant;
  Timestamp granted_at;
  std::optional<Timestamp> expires_at;  // absent for baseline grants
  GrantStatus status = GrantStatus::active;

  json to_json() const;
  static GrantEntry from_json(const json& v, const std::string& path);

  friend bool operator==(const GrantEntry&, const GrantEntry&) = default;
};

/// Hash-chained, append-only history of permission changes. entry_hash
/// covers the canonical entry (minus entry_hash itself) concatenated with
/// the raw previous hash, so edits and deletions anywhere break the chain.
struct AuditEntry {
  std::int64_t seq = 0;
  Timestamp at;
  std::string actor;
  AuditAction action = AuditAction::grant;
  json detail = json::object();
  Digest prev_hash;
  Digest entry_hash;

  json to_json() const;
  static AuditEntry from_json(const json& v, const std::string& path);

  friend bool operator==(const AuditEntry&, const AuditEntry&) = default;
};

struct EscalationPolicy {
  std::vector<std::string> approver_authorities;
  std::int64_t max_ttl = 0;  // upper bound on escalated grant ttl, seconds

  json to_json() const;
  static EscalationPolicy from_json(const json& v, const std::string& path);

  friend bool operator==(const EscalationPolicy&, const EscalationPolicy&) = default;
};

/// Immutable permission snapshot; every operation returns a new state.
/// pending_grants holds role-overlay grant requests that an authority has
/// proposed but not yet issued.
struct PermissionState {
  std::vector<GrantEntry> grants;
  std::vector<GrantRequest> pending_grants;
  EscalationPolicy escalation_policy;
  std::vector<AuditEntry> audit;

  json to_json() const;
  static PermissionState from_json(const json& v, const std::string& path);

  friend bool operator==(const PermissionState&, const PermissionState&) = default;
};

/// Caller-supplied facts about one access attempt. local_hour is the hour
/// of day in the constraint's timezone; deriving it from `now` is the
/// caller's job since constraint timezones are recorded metadata, not a
/// tz database lookup.
struct AccessContext {
  Timestamp now;
  int local_hour = 0;
  std::string jurisdiction;
  bool human_reviewer_present = false;
};

/// Outcome of a permission check. When denied, reason is one of
/// "constraint", "expired", "revoked", "no_matching_grant" (strongest
/// applicable signal, in that order). When allowed, allowed_by indexes the
/// grant that authorized the access.
struct Decision {
  bool allowed = false;
  std::string deny_reason;
  std::optional<std::size_t> allowed_by;
};

// -- Resource patterns -------------------------------------------------------
//
// Patterns are "/"-separated segments. A segment of exactly "*" matches any
// one segment; a final segment of exactly "**" matches any remaining suffix
// (including none); anything else matches literally.

/// Throws Error{invalid_request} for an empty pattern or a "**" segment
/// anywhere but the final position.
void validate_pattern(std::string_view pattern, const std::string& path);

bool pattern_matches(std::string_view pattern, std::string_view resource);

// -- Lifecycle operations ----------------------------------------------------

/// Issues a grant. The actor must be the granting authority named in the
/// request. Errors: ActorMismatch, InvalidRequest.
PermissionState grant(const PermissionState& state, const GrantRequest& req,
                      const std::string& actor, Timestamp now);

/// Checks one access. Pure with respect to grants; denials append one
/// check_denied audit entry (allowed checks do not grow the audit), hence
/// the returned state.
std::pair<Decision, PermissionState> check(const PermissionState& state,
                                           PermAction action,
                                           std::string_view resource,
                                           const AccessContext& ctx);

/// Issues an elevated grant through the escalation policy. Errors:
/// UnauthorizedApprover, TtlExceedsPolicy, InvalidRequest (baseline grants
/// cannot be escalations).
PermissionState escalate(const PermissionState& state, const GrantRequest& req,
                         const std::string& approver, Timestamp now);

/// Marks every non-baseline grant past its expiry as expired, one revert
/// audit entry per transition in (expires_at, grant index) order. Idempotent
/// for a fixed now.
PermissionState revert_expired(const PermissionState& state, Timestamp now);

/// Revokes an active grant before its natural expiry. The actor must be the
/// grant's own authority. Errors: ActorMismatch, InvalidRequest (bad index
/// or grant not active).
PermissionState revoke_grant(const PermissionState& state,
                             std::size_t grant_index, const std::string& actor,
                             const std::string& reason, Timestamp now);

/// True iff seq runs contiguously from 0 and every entry_hash recomputes
/// from its content plus the previous hash (entry 0 chains from 32 zero
/// octets).
bool verify_audit_chain(const std::vector<AuditEntry>& audit);

}  // namespace agentfacts

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

#include "agentfacts/document.hpp"
#include "agentfacts/freshness.hpp"
#include "agentfacts/transport.hpp"
#include "agentfacts/trust.hpp"
#include "agentfacts/version_chain.hpp"

namespace agentfacts {

/// One agent's published history as held by this node.
struct AgentRecord {
  std::vector<AgentFactsDoc> versions;  // ordered by version_seq
  std::vector<VersionLink> links;       // one per adjacent pair
  std::vector<SignatureBlock> signatures;  // detached blocks, as submitted
  Timestamp cached_at;   // when this node last accepted material
  std::string provider_id;  // pinned at the first linked publish

  const AgentFactsDoc& head() const { return versions.back(); }
  std::int64_t head_seq() const { return versions.back().identity.version_seq; }

  friend bool operator==(const AgentRecord&, const AgentRecord&) = default;
};

/// One peer node's registry state: plain data, no interior locking. Writers
/// must serialize access per agent (the HTTP server and CLI use one mutex);
/// concurrent readers are safe between writes.
struct RegistryStore {
  std::map<std::string, AgentRecord> records;  // agent_id → history
  std::map<std::string, std::vector<std::string>> subscriptions;  // agent_id → URLs
  std::map<std::string, AuthorityRecord> authority_registry;
  std::vector<RevocationEntry> revocations;
  std::vector<UpdateNotification> notifications;  // append-only outbox
};

struct Ack {
  std::int64_t head_seq = 0;
};

/// Accepts a new document revision.
///
/// Genesis: an unknown agent publishes version_seq 0 with no link. Every
/// later revision needs a link that verifies against the stored head under
/// the provider pinned at the first linked publish (the provider must be in
/// authority_registry before that publish). Subscribers are enqueued one
/// notification per linked publish. Throws Error{validation_failed} when
/// the document has validation errors, Error{chain_mismatch} for any link
/// or sequencing problem.
Ack publish(RegistryStore& store, const AgentFactsDoc& doc,
            const std::vector<SignatureBlock>& signatures,
            const std::optional<VersionLink>& link, Timestamp now);

struct FetchResult {
  AgentFactsDoc doc;
  Provenance provenance = Provenance::cache;
  std::int64_t cache_age = 0;  // seconds since this node accepted the head
  FreshnessReport freshness;
  /// Present when cache age ≤ the caller's staleness bound: a verdict from
  /// cached signatures and revocations. Beyond the bound the document is
  /// still served (degraded operation), just without a trust claim.
  std::optional<TrustVerdict> verdict;
  std::int64_t head_seq = 0;

  json to_json() const;
};

/// Serves the head version from this node's cache. `max_staleness` bounds
/// how old cached material may be while still backing a trust verdict.
/// Throws Error{unknown_agent}; with `paranoid`, re-verifies the stored
/// chain first and throws Error{chain_mismatch} if it no longer holds.
FetchResult fetch(const RegistryStore& store, const std::string& agent_id,
                  std::int64_t max_staleness, const TrustPolicy& policy,
                  Timestamp now, bool paranoid = false);

using SubscriptionId = std::int64_t;

/// Registers a webhook for an agent's future publishes. Throws
/// Error{unknown_agent} and Error{bad_url}.
SubscriptionId subscribe(RegistryStore& store, const std::string& agent_id,
                         const std::string& webhook_url);

struct DeliveryOutcome {
  std::string webhook_url;
  DeliveryState state = DeliveryState::pending;
  std::int64_t attempts = 0;
  int http_status = 0;

  friend bool operator==(const DeliveryOutcome&, const DeliveryOutcome&) = default;
};

struct DeliveryReport {
  std::vector<DeliveryOutcome> outcomes;  // one per notification attempted

  std::size_t delivered_count() const;
  json to_json() const;
};

/// Attempts every undelivered notification once: 2xx marks it delivered,
/// anything else leaves it queued as failed with its attempt count raised.
/// Nothing is ever dropped.
DeliveryReport deliver_pending(RegistryStore& store, WebhookTransport& transport);

/// Pulls everything `src` knows that `dst` does not: authorities and
/// revocations are merged, and missing revisions are replayed through
/// publish so dst never stores an unverified link. Returns the number of
/// document revisions applied. Divergent histories are left alone (first
/// writer wins at each seq).
std::size_t sync(RegistryStore& dst, const RegistryStore& src, Timestamp now);

// -- persistence ---------------------------------------------------------------
// Layout under the root directory: "authorities.json", "revocations.json",
// "notifications.json", and per agent "agents/<key>/" holding numbered
// revision files, "links.json", "signatures.json", "subscriptions.json",
// and "meta.json" (agent_id, cached_at, provider_id). <key> is the first 16
// hex digits of sha-256(agent_id), so arbitrary identifier syntax never
// meets the filesystem.

void save_store(const RegistryStore& store, const std::string& dir);
RegistryStore load_store(const std::string& dir);

}  // namespace agentfacts

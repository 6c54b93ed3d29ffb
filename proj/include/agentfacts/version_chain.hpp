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
#include <vector>

#include "agentfacts/canonical.hpp"
#include "agentfacts/document.hpp"
#include "agentfacts/keys.hpp"

namespace agentfacts {

/// One hash link between consecutive document revisions. The digests cover
/// each revision's complete canonical form — signatures included — so any
/// octet of drift between what was published and what is presented breaks
/// the link.
struct VersionLink {
  std::string agent_id;
  std::int64_t from_seq = 0;
  std::int64_t to_seq = 0;  // always from_seq + 1
  Digest prev_digest;
  Digest new_digest;
  Timestamp created_at;
  std::string provider_id;  // authority_id of the signing provider
  ByteVec provider_signature;

  json to_json() const;
  static VersionLink from_json(const json& v, const std::string& path);

  friend bool operator==(const VersionLink&, const VersionLink&) = default;
};

/// Canonical octets the provider signs: the link record minus the
/// signature itself.
CanonicalBytes link_signing_bytes(const VersionLink& link);

/// Builds and signs the link from revision `prev` to revision `next`.
/// Throws Error{agent_id_mismatch} when the two documents name different
/// agents, Error{seq_gap} unless next.version_seq == prev.version_seq + 1,
/// and Error{clock_regression} when next.last_updated precedes
/// prev.last_updated.
VersionLink append_version(const AgentFactsDoc& prev, const AgentFactsDoc& next,
                           const PrivateKeyHandle& provider_key,
                           const AuthorityRecord& provider, Timestamp at);

struct ChainReport {
  bool accepted = false;
  /// Index of the first failing link when rejected; absent for failures
  /// that precede link checks (count mismatch, empty chain).
  std::optional<std::size_t> failing_link;
  std::string reason;  // empty when accepted

  json to_json() const;
};

/// Replays every link of a presented history against recomputed document
/// digests and the provider's key. Accepts exactly the chains that
/// append_version could have built from these documents in this order.
/// Never throws: the report carries the outcome.
ChainReport verify_chain(const std::vector<AgentFactsDoc>& docs,
                         const std::vector<VersionLink>& links,
                         const AuthorityRecord& provider);

/// A push notification awaiting delivery to one subscriber.
struct UpdateNotification {
  VersionLink link;
  std::string webhook_url;
  DeliveryState delivery_state = DeliveryState::pending;
  std::int64_t attempts = 0;

  json to_json() const;
  static UpdateNotification from_json(const json& v, const std::string& path);

  friend bool operator==(const UpdateNotification&,
                         const UpdateNotification&) = default;
};

// -- on-disk chain layout -----------------------------------------------------
// A chain directory holds one numbered document file per revision
// ("000000.af.json", "000001.af.json", ...) and a "links.json" array with
// one link object per adjacent pair.

/// Writes revision files and the links file under `dir` (created if
/// needed). Throws Error{io_error}.
void save_chain(const std::string& dir, const std::vector<AgentFactsDoc>& docs,
                const std::vector<VersionLink>& links);

/// Loads a chain directory written by save_chain.
std::pair<std::vector<AgentFactsDoc>, std::vector<VersionLink>> load_chain(
    const std::string& dir);

}  // namespace agentfacts

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
#include <set>
#include <string>
#include <vector>

#include "agentfacts/bytes.hpp"
#include "agentfacts/canonical.hpp"
#include "agentfacts/enums.hpp"
#include "agentfacts/fraction.hpp"
#include "agentfacts/jsonutil.hpp"
#include "agentfacts/keys.hpp"
#include "agentfacts/timestamp.hpp"

namespace agentfacts {

struct AgentFactsDoc;

/// One authority's detached signature over a chosen set of sections.
/// agent_id and version_seq are bound into the signed payload, so a block
/// can be neither transplanted onto another agent nor replayed against a
/// later document revision.
struct SignatureBlock {
  std::string authority_id;
  Timestamp signed_at;
  std::vector<std::string> scope;  // sorted, duplicate-free section names
  Fraction confidence;
  SigAlgorithm algorithm = SigAlgorithm::ed25519;
  std::string agent_id;
  std::int64_t version_seq = 0;
  ByteVec signature;

  /// Display form carries confidence as a decimal; canonical form as an
  /// integer micro-unit count (only integers are canonicalizable).
  json to_json(bool canonical) const;
  static SignatureBlock from_json(const json& v, const std::string& path);

  friend bool operator==(const SignatureBlock&, const SignatureBlock&) = default;
};

/// Hex sha-256 of a block's canonical form; the stable name revocations use
/// to point at one signature.
std::string signature_digest(const SignatureBlock& block);

/// A self-signed statement withdrawing one signature or an entire
/// authority. Only the issuer can revoke its own material, so the entry's
/// signature must verify against the issuer's key.
struct RevocationEntry {
  RevocationTarget target = RevocationTarget::signature;
  std::string target_ref;  // signature_digest() hex, or an authority_id
  std::string reason;
  Timestamp revoked_at;
  std::string issuer;  // authority_id of the revoking authority
  ByteVec signature;

  json to_json() const;
  static RevocationEntry from_json(const json& v, const std::string& path);

  friend bool operator==(const RevocationEntry&, const RevocationEntry&) = default;
};

/// Canonical octets a revocation entry's own signature covers (entry minus
/// signature).
CanonicalBytes revocation_signing_bytes(const RevocationEntry& entry);

/// Signs the named sections of a document. Throws InvalidConfidence for
/// confidence outside [0,1] and canon errors for a bad scope.
SignatureBlock sign_sections(const PrivateKeyHandle& key,
                             const AuthorityRecord& authority,
                             const AgentFactsDoc& doc,
                             const std::set<std::string>& scope,
                             Fraction confidence, Timestamp signed_at);

/// Full signature check against one document. Never throws; the status is
/// the answer. Checks run in a fixed order so each failure mode is
/// attributed deterministically: binding (scope_mismatch) first, then
/// authority lookup, revocation, the cryptographic check, and finally
/// expiry against the most restrictive in-scope verification_ttl.
SigStatus verify_signature(const AgentFactsDoc& doc, const SignatureBlock& sig,
                           const std::map<std::string, AuthorityRecord>& authorities,
                           const std::vector<RevocationEntry>& revocations,
                           Timestamp now);

/// Issues a revocation for the caller's own signature or authority.
/// `target_ref` names a signature digest or the authority itself. Throws
/// NotOwner when the key does not own the target.
RevocationEntry revoke(const PrivateKeyHandle& key,
                       const AuthorityRecord& issuer, RevocationTarget target,
                       const std::string& target_ref, const std::string& reason,
                       Timestamp at);

/// Returns a copy of the document with the block appended to
/// verification.signatures. The signing authority must already be declared
/// in verification.verification_authorities: declarations are part of the
/// signable verification content, attached signature blocks are not, so
/// pre-declared authorities can add signatures without breaking anyone
/// else's verification-scoped signature. Throws InvalidRequest otherwise.
AgentFactsDoc attach_signature(const AgentFactsDoc& doc,
                               const SignatureBlock& block);

}  // namespace agentfacts

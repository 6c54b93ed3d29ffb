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

#include "agentfacts/signature.hpp"

#include <algorithm>

#include "agentfacts/canonical.hpp"
#include "agentfacts/document.hpp"
#include "agentfacts/document_io.hpp"
#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

std::vector<std::string> normalized_scope(std::vector<std::string> scope) {
  std::sort(scope.begin(), scope.end());
  scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
  return scope;
}

// The authority attributes bound into the signed message alongside the
// section payload. agent_id, scope, and version_seq live in the payload
// itself; these four travel in the block, so they are appended here.
CanonicalBytes block_trailer(const SignatureBlock& block) {
  json v = json::object();
  v["algorithm"] = std::string(to_token(block.algorithm));
  v["authority_id"] = block.authority_id;
  v["confidence"] = block.confidence.micros();
  v["signed_at"] = timestamp_json(block.signed_at);
  return canonicalize(v);
}

ByteVec signing_message(const AgentFactsDoc& doc, const SignatureBlock& block) {
  std::set<std::string> scope(block.scope.begin(), block.scope.end());
  CanonicalBytes payload = section_payload(doc, scope);
  CanonicalBytes trailer = block_trailer(block);
  ByteVec message = std::move(payload.bytes);
  message.insert(message.end(), trailer.bytes.begin(), trailer.bytes.end());
  return message;
}

bool scope_binds(const AgentFactsDoc& doc, const SignatureBlock& sig) {
  if (sig.agent_id != doc.identity.agent_id) return false;
  if (sig.version_seq != doc.identity.version_seq) return false;
  if (sig.scope.empty()) return false;
  for (const auto& name : sig.scope) {
    if (!is_section_name(name) || !has_section(doc, name)) return false;
  }
  return true;
}

bool revocation_applies(const RevocationEntry& entry, const SignatureBlock& sig,
                        const std::string& sig_digest,
                        const std::map<std::string, AuthorityRecord>& authorities,
                        Timestamp now) {
  // Only the signer can withdraw its own material, so an entry is inert
  // unless issued by the signature's own authority and provably so.
  if (entry.issuer != sig.authority_id) return false;
  auto it = authorities.find(entry.issuer);
  if (it == authorities.end()) return false;
  CanonicalBytes body = revocation_signing_bytes(entry);
  if (!verify_bytes(it->second.algorithm, it->second.public_key, body.bytes,
                    entry.signature)) {
    return false;
  }
  if (now < entry.revoked_at) return false;  // not yet effective
  switch (entry.target) {
    case RevocationTarget::signature:
      return entry.target_ref == sig_digest;
    case RevocationTarget::authority:
      return entry.target_ref == sig.authority_id;
  }
  return false;
}

}  // namespace

json SignatureBlock::to_json(bool canonical) const {
  json v = json::object();
  v["agent_id"] = agent_id;
  v["algorithm"] = std::string(to_token(algorithm));
  v["authority_id"] = authority_id;
  v["confidence"] = canonical ? json(confidence.micros()) : json(confidence.value());
  v["scope"] = scope;
  v["signature"] = base64url_encode(signature);
  v["signed_at"] = timestamp_json(signed_at);
  v["version_seq"] = version_seq;
  return v;
}

SignatureBlock SignatureBlock::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  SignatureBlock b;
  b.agent_id = r.require_string("agent_id");
  b.algorithm = algorithm_from_name(r.require_string("algorithm"));
  b.authority_id = r.require_string("authority_id");
  b.confidence = as_fraction(r.require("confidence"), r.child_path("confidence"));
  b.scope = normalized_scope(as_string_list(r.require("scope"), r.child_path("scope")));
  try {
    b.signature = base64url_decode(r.require_string("signature"));
  } catch (const Error& e) {
    throw Error(e.kind(), r.child_path("signature"), "bad signature encoding");
  }
  b.signed_at = r.require_timestamp("signed_at");
  b.version_seq = r.require_int("version_seq");
  r.finish();
  return b;
}

std::string signature_digest(const SignatureBlock& block) {
  return digest(canonicalize(block.to_json(true))).hex();
}

json RevocationEntry::to_json() const {
  json v = json::object();
  v["issuer"] = issuer;
  v["reason"] = reason;
  v["revoked_at"] = timestamp_json(revoked_at);
  v["signature"] = base64url_encode(signature);
  v["target"] = std::string(to_token(target));
  v["target_ref"] = target_ref;
  return v;
}

RevocationEntry RevocationEntry::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  RevocationEntry e;
  e.issuer = r.require_string("issuer");
  e.reason = r.require_string("reason");
  e.revoked_at = r.require_timestamp("revoked_at");
  try {
    e.signature = base64url_decode(r.require_string("signature"));
  } catch (const Error& err) {
    throw Error(err.kind(), r.child_path("signature"), "bad signature encoding");
  }
  e.target = from_token<RevocationTarget>(r.require_string("target"),
                                          r.child_path("target"));
  e.target_ref = r.require_string("target_ref");
  r.finish();
  return e;
}

CanonicalBytes revocation_signing_bytes(const RevocationEntry& entry) {
  json v = entry.to_json();
  v.erase("signature");
  return canonicalize(v);
}

SignatureBlock sign_sections(const PrivateKeyHandle& key,
                             const AuthorityRecord& authority,
                             const AgentFactsDoc& doc,
                             const std::set<std::string>& scope,
                             Fraction confidence, Timestamp signed_at) {
  if (!confidence.in_unit_range()) {
    throw Error(ErrorKind::invalid_confidence,
                "confidence " + confidence.to_fixed_string() +
                    " is outside [0, 1]");
  }
  if (key.algorithm() != authority.algorithm) {
    throw Error(ErrorKind::invalid_request,
                "key algorithm does not match authority record");
  }
  if (key.public_key() != authority.public_key) {
    throw Error(ErrorKind::not_owner,
                "signing key is not the authority's key");
  }
  SignatureBlock block;
  block.authority_id = authority.authority_id;
  block.signed_at = signed_at;
  block.scope.assign(scope.begin(), scope.end());
  block.confidence = confidence;
  block.algorithm = authority.algorithm;
  block.agent_id = doc.identity.agent_id;
  block.version_seq = doc.identity.version_seq;
  block.signature = key.sign(signing_message(doc, block));
  return block;
}

SigStatus verify_signature(const AgentFactsDoc& doc, const SignatureBlock& sig,
                           const std::map<std::string, AuthorityRecord>& authorities,
                           const std::vector<RevocationEntry>& revocations,
                           Timestamp now) {
  // 1. Binding: the block must point at this exact document revision and
  //    name only sections the document has.
  if (!scope_binds(doc, sig)) return SigStatus::scope_mismatch;

  // 2. The authority must be known to the caller's trust store.
  auto it = authorities.find(sig.authority_id);
  if (it == authorities.end()) return SigStatus::unknown_authority;
  const AuthorityRecord& authority = it->second;

  // 3. Revocation beats a correct signature: withdrawn is withdrawn.
  std::string sig_digest = signature_digest(sig);
  for (const auto& entry : revocations) {
    if (revocation_applies(entry, sig, sig_digest, authorities, now)) {
      return SigStatus::revoked;
    }
  }

  // 4. The cryptographic check itself.
  if (sig.algorithm != authority.algorithm) return SigStatus::bad_signature;
  ByteVec message;
  try {
    message = signing_message(doc, sig);
  } catch (const Error&) {
    return SigStatus::scope_mismatch;  // unreachable after scope_binds
  }
  if (!verify_bytes(authority.algorithm, authority.public_key, message,
                    sig.signature)) {
    return SigStatus::bad_signature;
  }

  // 5. Age: the most restrictive in-scope verification_ttl bounds how long
  //    the signature stays usable after signed_at. No declared ttl, no expiry.
  if (doc.verification) {
    std::int64_t min_ttl = 0;
    bool any = false;
    for (const auto& name : sig.scope) {
      auto ttl_it = doc.verification->verification_ttl.find(name);
      if (ttl_it == doc.verification->verification_ttl.end()) continue;
      if (!any || ttl_it->second < min_ttl) min_ttl = ttl_it->second;
      any = true;
    }
    if (any && sig.signed_at.plus_seconds(min_ttl) < now) {
      return SigStatus::expired;
    }
  }

  return SigStatus::valid;
}

RevocationEntry revoke(const PrivateKeyHandle& key,
                       const AuthorityRecord& issuer, RevocationTarget target,
                       const std::string& target_ref, const std::string& reason,
                       Timestamp at) {
  if (key.public_key() != issuer.public_key ||
      key.algorithm() != issuer.algorithm) {
    throw Error(ErrorKind::not_owner, "key does not belong to the issuer");
  }
  if (target == RevocationTarget::authority &&
      target_ref != issuer.authority_id) {
    throw Error(ErrorKind::not_owner,
                "an authority can only revoke itself, not " + target_ref);
  }
  RevocationEntry entry;
  entry.target = target;
  entry.target_ref = target_ref;
  entry.reason = reason;
  entry.revoked_at = at;
  entry.issuer = issuer.authority_id;
  entry.signature = key.sign(revocation_signing_bytes(entry).bytes);
  return entry;
}

AgentFactsDoc attach_signature(const AgentFactsDoc& doc,
                               const SignatureBlock& block) {
  if (!doc.verification) {
    throw Error(ErrorKind::invalid_request,
                "document has no verification section to attach to");
  }
  const auto& declared = doc.verification->verification_authorities;
  if (std::find(declared.begin(), declared.end(), block.authority_id) ==
      declared.end()) {
    throw Error(ErrorKind::invalid_request,
                "authority " + block.authority_id +
                    " is not declared in verification_authorities");
  }
  AgentFactsDoc out = doc;
  out.verification->signatures.push_back(block);
  return out;
}

}  // namespace agentfacts

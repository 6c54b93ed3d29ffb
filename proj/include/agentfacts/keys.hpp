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

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agentfacts/bytes.hpp"
#include "agentfacts/enums.hpp"
#include "agentfacts/jsonutil.hpp"

typedef struct evp_pkey_st EVP_PKEY;

namespace agentfacts {

/// Public identity of a signing authority. public_key is the raw 32-octet
/// key for ed25519 and a DER SubjectPublicKeyInfo for the other schemes.
struct AuthorityRecord {
  std::string authority_id;
  std::string display_name;
  ByteVec public_key;
  SigAlgorithm algorithm = SigAlgorithm::ed25519;
  std::vector<std::string> domains;

  json to_json() const;
  static AuthorityRecord from_json(const json& v, const std::string& path);

  friend bool operator==(const AuthorityRecord&, const AuthorityRecord&) = default;
};

/// Opaque signing capability. Move-only; confine a handle to one thread
/// while signing. Obtain handles from generate(), a keystore, or a fixed
/// seed (tests and the demo need reproducible keys).
class PrivateKeyHandle {
 public:
  PrivateKeyHandle(PrivateKeyHandle&&) noexcept;
  PrivateKeyHandle& operator=(PrivateKeyHandle&&) noexcept;
  PrivateKeyHandle(const PrivateKeyHandle&) = delete;
  PrivateKeyHandle& operator=(const PrivateKeyHandle&) = delete;
  ~PrivateKeyHandle();

  SigAlgorithm algorithm() const { return algorithm_; }

  /// Public half, in the AuthorityRecord encoding for this algorithm.
  ByteVec public_key() const;

  /// Detached signature over the message octets.
  ByteVec sign(ByteSpan message) const;

  /// PKCS#8 DER private key, for keystore storage.
  ByteVec private_key_der() const;

  static PrivateKeyHandle generate(SigAlgorithm algorithm);
  static PrivateKeyHandle from_private_key_der(SigAlgorithm algorithm,
                                               ByteSpan der);
  /// Deterministic ed25519 key from a 32-octet seed.
  static PrivateKeyHandle ed25519_from_seed(ByteSpan seed);

 private:
  PrivateKeyHandle(SigAlgorithm algorithm, EVP_PKEY* key);

  SigAlgorithm algorithm_;
  EVP_PKEY* key_;
};

/// Verifies a detached signature. Returns false on any mismatch or on
/// malformed key/signature material (never throws for bad signatures).
bool verify_bytes(SigAlgorithm algorithm, ByteSpan public_key,
                  ByteSpan message, ByteSpan signature);

/// Authority identifiers are content-derived: "auth:" plus the first 16 hex
/// characters of sha-256(public_key).
std::string authority_id_from_public_key(ByteSpan public_key);

/// Parses an algorithm token, failing with UnsupportedAlgorithm (the token
/// vocabulary is an extension point, so this is not a TypeMismatch).
SigAlgorithm algorithm_from_name(std::string_view name);

/// Creates a fresh authority: keypair plus its public record.
std::pair<PrivateKeyHandle, AuthorityRecord> generate_authority(
    std::string_view algorithm, std::string display_name,
    std::vector<std::string> domains);

/// Same, from a deterministic ed25519 seed.
std::pair<PrivateKeyHandle, AuthorityRecord> authority_from_seed(
    ByteSpan seed, std::string display_name, std::vector<std::string> domains);

}  // namespace agentfacts

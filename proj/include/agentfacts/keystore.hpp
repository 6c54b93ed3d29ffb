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
#include <string>
#include <string_view>
#include <vector>

#include "agentfacts/keys.hpp"

namespace agentfacts {

/// Passphrase-protected store of authority private keys.
///
/// On disk: PKCS#8 key blobs serialized to JSON, encrypted with
/// AES-256-GCM under a key derived by PBKDF2-HMAC-SHA256 (100000
/// iterations, random 16-octet salt, random 12-octet nonce). A wrong
/// passphrase fails the GCM tag and surfaces as Error{keystore_error};
/// nothing distinguishes it from a corrupted file, by design.
class Keystore {
 public:
  Keystore() = default;
  Keystore(Keystore&&) = default;
  Keystore& operator=(Keystore&&) = default;

  /// Adds or replaces the key for an authority.
  void put(const std::string& authority_id, PrivateKeyHandle key);

  /// Looks up a key; nullptr when absent.
  const PrivateKeyHandle* find(const std::string& authority_id) const;

  std::vector<std::string> authority_ids() const;
  std::size_t size() const { return keys_.size(); }

  /// Decrypts and parses a keystore file. Throws Error{io_error} when the
  /// file cannot be read, Error{keystore_error} for a wrong passphrase or
  /// malformed content.
  static Keystore load(const std::string& path, std::string_view passphrase);

  /// Encrypts and writes the store (fresh salt and nonce every save).
  void save(const std::string& path, std::string_view passphrase) const;

 private:
  std::map<std::string, PrivateKeyHandle> keys_;
};

}  // namespace agentfacts

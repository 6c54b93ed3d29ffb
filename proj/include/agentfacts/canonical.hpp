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

#include <set>
#include <string>

#include "agentfacts/bytes.hpp"
#include "agentfacts/jsonutil.hpp"

namespace agentfacts {

struct AgentFactsDoc;

/// Octet sequence produced by canonical encoding. Equal values canonicalize
/// to identical octets; these are the exact bytes signatures and digests
/// cover. The encoding is specified bit-exactly in docs/canonical-encoding.md.
struct CanonicalBytes {
  ByteVec bytes;

  std::string_view as_text() const {
    return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
  }

  friend bool operator==(const CanonicalBytes&, const CanonicalBytes&) = default;
};

/// Hash over canonical bytes, tagged with its algorithm for future agility.
/// Only "sha-256" is produced today.
struct Digest {
  std::string algorithm = "sha-256";
  ByteVec value;

  std::string hex() const { return hex_encode(value); }

  json to_json() const;
  static Digest from_json(const json& v, const std::string& path);

  friend bool operator==(const Digest&, const Digest&) = default;
};

/// Deterministic encoding of a document value: object keys in code point
/// order, no insignificant whitespace, minimal string escaping, integers
/// only. Throws Error{non_canonicalizable} on any non-integer or non-finite
/// number.
CanonicalBytes canonicalize(const json& value);

/// sha-256 of the given canonical bytes.
Digest digest(const CanonicalBytes& bytes);

/// sha-256 of arbitrary octets.
Digest sha256_digest(ByteSpan data);

/// Canonical bytes of the record a section-scoped signature covers:
/// {agent_id, scope (sorted), sections (name -> canonical content),
/// version_seq}. Binding agent_id stops transplanting a signature onto
/// another agent; binding version_seq stops replay onto a later revision.
/// Throws Error{unknown_section} for names outside the schema and
/// Error{missing_section} for absent ones; scope must be non-empty.
CanonicalBytes section_payload(const AgentFactsDoc& doc,
                               const std::set<std::string>& scope);

}  // namespace agentfacts

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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace agentfacts {

using ByteVec = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

/// base64url (RFC 4648 §5) without padding. All octet sequences in the
/// document file format use this encoding.
std::string base64url_encode(ByteSpan data);

/// Decodes base64url without padding. Throws Error{syntax_error} on any
/// character outside the alphabet or an impossible length.
ByteVec base64url_decode(std::string_view text);

std::string hex_encode(ByteSpan data);

inline ByteVec to_bytes(std::string_view text) {
  return ByteVec(text.begin(), text.end());
}

}  // namespace agentfacts

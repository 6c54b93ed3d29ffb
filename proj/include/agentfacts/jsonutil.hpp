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
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "agentfacts/errors.hpp"
#include "agentfacts/fraction.hpp"
#include "agentfacts/timestamp.hpp"

namespace agentfacts {

// Object keys iterate in byte order (std::map with std::less), which for
// UTF-8 keys is Unicode code point order. Canonicalization relies on this.
using json = nlohmann::json;
static_assert(std::is_same_v<json::object_t,
                             std::map<std::string, json,
                                      json::object_t::key_compare,
                                      json::object_t::allocator_type>>);
static_assert(std::is_same_v<json::object_t::key_compare, std::less<>> ||
              std::is_same_v<json::object_t::key_compare, std::less<std::string>>);

/// Parses JSON text; wraps nlohmann's diagnostics in Error{syntax_error}.
json parse_json_text(std::string_view text);

/// Strict reader for one JSON object: every key must be consumed through
/// require()/optional(), and finish() rejects leftovers as unknown fields.
/// `path` is a JSON-pointer-style location used in diagnostics.
class ObjReader {
 public:
  ObjReader(const json& value, std::string path);

  const std::string& path() const { return path_; }
  std::string child_path(std::string_view key) const;

  bool has(std::string_view key) const;

  const json& require(std::string_view key);
  const json* optional(std::string_view key);

  /// Marks every remaining key consumed; used for open-content objects.
  void consume_rest();

  /// Throws Error{unknown_field} naming the first unconsumed key.
  void finish();

  // Typed accessors; absent optionals yield the given default.
  std::string require_string(std::string_view key);
  std::string optional_string(std::string_view key, std::string def = "");
  std::int64_t require_int(std::string_view key);
  std::optional<std::int64_t> optional_int(std::string_view key);
  bool optional_bool(std::string_view key, bool def = false);
  Timestamp require_timestamp(std::string_view key);
  std::optional<Timestamp> optional_timestamp(std::string_view key);
  std::optional<Fraction> optional_fraction(std::string_view key);
  std::vector<std::string> optional_string_list(std::string_view key);

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string, std::less<>> consumed_;
};

// Leaf conversions shared by the readers above and by non-document formats
// (policies, permission files, wire bodies). Each throws Error{type_mismatch}
// or Error{syntax_error} with the offending path.
std::string as_string(const json& v, const std::string& path);
std::int64_t as_int(const json& v, const std::string& path);
bool as_bool(const json& v, const std::string& path);
Timestamp as_timestamp(const json& v, const std::string& path);
Fraction as_fraction(const json& v, const std::string& path);
const json& as_object(const json& v, const std::string& path);
const json& as_array(const json& v, const std::string& path);
std::vector<std::string> as_string_list(const json& v, const std::string& path);

/// Verifies an open-content subtree (custom facts, free-text records): any
/// shape is allowed except non-integer numbers, which have no canonical
/// encoding. Throws Error{type_mismatch} at the offending path.
void check_opaque_content(const json& v, const std::string& path);

/// Serializes a timestamp as its RFC 3339 string.
inline json timestamp_json(Timestamp t) { return json(t.to_string()); }

}  // namespace agentfacts

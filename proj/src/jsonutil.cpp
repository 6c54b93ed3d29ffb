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

#include "agentfacts/jsonutil.hpp"

namespace agentfacts {

json parse_json_text(std::string_view text) {
  json v = json::parse(text, nullptr, false);
  if (v.is_discarded()) {
    throw Error(ErrorKind::syntax_error, "malformed JSON text");
  }
  return v;
}

ObjReader::ObjReader(const json& value, std::string path)
    : obj_(value), path_(std::move(path)) {
  if (!obj_.is_object()) {
    throw Error(ErrorKind::type_mismatch, path_, "expected an object");
  }
}

std::string ObjReader::child_path(std::string_view key) const {
  std::string p = path_;
  p += '/';
  p += key;
  return p;
}

bool ObjReader::has(std::string_view key) const {
  return obj_.contains(key);
}

const json& ObjReader::require(std::string_view key) {
  auto it = obj_.find(key);
  if (it == obj_.end()) {
    throw Error(ErrorKind::missing_field, path_,
                "missing required field \"" + std::string(key) + "\"");
  }
  consumed_.insert(std::string(key));
  return *it;
}

const json* ObjReader::optional(std::string_view key) {
  auto it = obj_.find(key);
  if (it == obj_.end()) return nullptr;
  consumed_.insert(std::string(key));
  return &*it;
}

void ObjReader::consume_rest() {
  for (auto it = obj_.begin(); it != obj_.end(); ++it) {
    consumed_.insert(it.key());
  }
}

void ObjReader::finish() {
  for (auto it = obj_.begin(); it != obj_.end(); ++it) {
    if (!consumed_.count(it.key())) {
      throw Error(ErrorKind::unknown_field, child_path(it.key()),
                  "unknown field");
    }
  }
}

std::string ObjReader::require_string(std::string_view key) {
  return as_string(require(key), child_path(key));
}

std::string ObjReader::optional_string(std::string_view key, std::string def) {
  const json* v = optional(key);
  return v ? as_string(*v, child_path(key)) : std::move(def);
}

std::int64_t ObjReader::require_int(std::string_view key) {
  return as_int(require(key), child_path(key));
}

std::optional<std::int64_t> ObjReader::optional_int(std::string_view key) {
  const json* v = optional(key);
  if (!v) return std::nullopt;
  return as_int(*v, child_path(key));
}

bool ObjReader::optional_bool(std::string_view key, bool def) {
  const json* v = optional(key);
  return v ? as_bool(*v, child_path(key)) : def;
}

Timestamp ObjReader::require_timestamp(std::string_view key) {
  return as_timestamp(require(key), child_path(key));
}

std::optional<Timestamp> ObjReader::optional_timestamp(std::string_view key) {
  const json* v = optional(key);
  if (!v) return std::nullopt;
  return as_timestamp(*v, child_path(key));
}

std::optional<Fraction> ObjReader::optional_fraction(std::string_view key) {
  const json* v = optional(key);
  if (!v) return std::nullopt;
  return as_fraction(*v, child_path(key));
}

std::vector<std::string> ObjReader::optional_string_list(std::string_view key) {
  const json* v = optional(key);
  if (!v) return {};
  return as_string_list(*v, child_path(key));
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) {
    throw Error(ErrorKind::type_mismatch, path, "expected a string");
  }
  return v.get<std::string>();
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    throw Error(ErrorKind::type_mismatch, path, "expected an integer");
  }
  return v.get<std::int64_t>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) {
    throw Error(ErrorKind::type_mismatch, path, "expected a boolean");
  }
  return v.get<bool>();
}

Timestamp as_timestamp(const json& v, const std::string& path) {
  if (!v.is_string()) {
    throw Error(ErrorKind::type_mismatch, path, "expected an RFC 3339 timestamp");
  }
  try {
    return Timestamp::parse(v.get_ref<const std::string&>());
  } catch (const Error& e) {
    throw Error(ErrorKind::type_mismatch, path, e.what());
  }
}

Fraction as_fraction(const json& v, const std::string& path) {
  if (!v.is_number()) {
    throw Error(ErrorKind::type_mismatch, path, "expected a number");
  }
  return Fraction::from_value(v.get<double>());
}

const json& as_object(const json& v, const std::string& path) {
  if (!v.is_object()) {
    throw Error(ErrorKind::type_mismatch, path, "expected an object");
  }
  return v;
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) {
    throw Error(ErrorKind::type_mismatch, path, "expected an array");
  }
  return v;
}

std::vector<std::string> as_string_list(const json& v, const std::string& path) {
  as_array(v, path);
  std::vector<std::string> out;
  out.reserve(v.size());
  std::size_t i = 0;
  for (const json& item : v) {
    out.push_back(as_string(item, path + "/" + std::to_string(i++)));
  }
  return out;
}

void check_opaque_content(const json& v, const std::string& path) {
  if (v.is_number_float()) {
    throw Error(ErrorKind::type_mismatch, path,
                "non-integer numbers are not permitted in document content");
  }
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      check_opaque_content(it.value(), path + "/" + it.key());
    }
  } else if (v.is_array()) {
    std::size_t i = 0;
    for (const json& item : v) {
      check_opaque_content(item, path + "/" + std::to_string(i++));
    }
  }
}

}  // namespace agentfacts

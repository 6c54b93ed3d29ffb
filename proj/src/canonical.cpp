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

#include "agentfacts/canonical.hpp"

#include <openssl/sha.h>

#include <cinttypes>
#include <cstdio>

#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

void write_escaped_string(std::string& out, const std::string& s) {
  out.push_back('"');
  for (unsigned char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\b':
        out += "\\b";
        break;
      case '\f':
        out += "\\f";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          // Everything else, multi-byte UTF-8 included, passes through
          // verbatim. Canonical text is raw UTF-8, not ASCII-escaped.
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void write_canonical(std::string& out, const json& v) {
  switch (v.type()) {
    case json::value_t::null:
      out += "null";
      break;
    case json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%" PRId64, v.get<int64_t>());
      out += buf;
      break;
    }
    case json::value_t::number_unsigned: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%" PRIu64, v.get<uint64_t>());
      out += buf;
      break;
    }
    case json::value_t::number_float:
      throw Error(ErrorKind::non_canonicalizable,
                  "non-integer number has no canonical form");
    case json::value_t::string:
      write_escaped_string(out, v.get_ref<const std::string&>());
      break;
    case json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const auto& item : v) {
        if (!first) out.push_back(',');
        first = false;
        write_canonical(out, item);
      }
      out.push_back(']');
      break;
    }
    case json::value_t::object: {
      // json::object_t is std::map<std::string, json>; byte-wise string
      // order over UTF-8 equals Unicode code point order, so plain map
      // iteration yields the canonical key order.
      out.push_back('{');
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out.push_back(',');
        first = false;
        write_escaped_string(out, key);
        out.push_back(':');
        write_canonical(out, item);
      }
      out.push_back('}');
      break;
    }
    default:
      throw Error(ErrorKind::non_canonicalizable,
                  "value type has no canonical form");
  }
}

}  // namespace

CanonicalBytes canonicalize(const json& value) {
  std::string text;
  text.reserve(256);
  write_canonical(text, value);
  CanonicalBytes out;
  out.bytes.assign(text.begin(), text.end());
  return out;
}

Digest digest(const CanonicalBytes& bytes) {
  return sha256_digest(bytes.bytes);
}

Digest sha256_digest(ByteSpan data) {
  Digest d;
  d.value.resize(SHA256_DIGEST_LENGTH);
  SHA256(data.data(), data.size(), d.value.data());
  return d;
}

json Digest::to_json() const {
  return json{{"algorithm", algorithm}, {"value", base64url_encode(value)}};
}

Digest Digest::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  Digest d;
  d.algorithm = r.require_string("algorithm");
  if (d.algorithm != "sha-256") {
    throw Error(ErrorKind::unsupported_algorithm, r.child_path("algorithm"),
                "unsupported digest algorithm: " + d.algorithm);
  }
  try {
    d.value = base64url_decode(r.require_string("value"));
  } catch (const Error& e) {
    throw Error(e.kind(), r.child_path("value"), e.what());
  }
  if (d.value.size() != 32) {
    throw Error(ErrorKind::type_mismatch, r.child_path("value"),
                "sha-256 digest must be 32 octets");
  }
  r.finish();
  return d;
}

}  // namespace agentfacts

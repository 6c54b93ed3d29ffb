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

#include "agentfacts/document.hpp"

#include <cctype>

namespace agentfacts {

namespace {

bool is_hex_run(std::string_view s, std::size_t pos, std::size_t count) {
  if (pos + count > s.size()) return false;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::isxdigit(static_cast<unsigned char>(s[pos + i]))) return false;
  }
  return true;
}

bool looks_like_uuid(std::string_view s) {
  // 8-4-4-4-12 hex groups, optional "urn:uuid:" handled by the uri branch.
  return s.size() == 36 && is_hex_run(s, 0, 8) && s[8] == '-' &&
         is_hex_run(s, 9, 4) && s[13] == '-' && is_hex_run(s, 14, 4) &&
         s[18] == '-' && is_hex_run(s, 19, 4) && s[23] == '-' &&
         is_hex_run(s, 24, 12);
}

bool looks_like_uri(std::string_view s) {
  // RFC 3986 scheme followed by a colon and a non-empty remainder.
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  std::size_t i = 1;
  while (i < s.size() &&
         (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '+' ||
          s[i] == '-' || s[i] == '.')) {
    ++i;
  }
  return i < s.size() && s[i] == ':' && i + 1 < s.size();
}

}  // namespace

AgentIdKind agent_id_kind(std::string_view agent_id) {
  if (agent_id.starts_with("did:")) return AgentIdKind::did;
  if (looks_like_uuid(agent_id)) return AgentIdKind::uuid;
  if (looks_like_uri(agent_id)) return AgentIdKind::uri;
  return AgentIdKind::unrecognized;
}

bool has_section(const AgentFactsDoc& doc, std::string_view name) {
  if (name == "identity") return true;
  if (name == "baseline_model") return doc.baseline_model.has_value();
  if (name == "classification") return doc.classification.has_value();
  if (name == "capabilities") return doc.capabilities.has_value();
  if (name == "auth_permissions") return doc.auth_permissions.has_value();
  if (name == "compliance") return doc.compliance.has_value();
  if (name == "performance") return doc.performance.has_value();
  if (name == "supply_chain") return doc.supply_chain.has_value();
  if (name == "verification") return doc.verification.has_value();
  if (name == "extensions") return doc.extensions.has_value();
  return false;
}

std::vector<std::string> present_sections(const AgentFactsDoc& doc) {
  std::vector<std::string> out;
  for (auto name : kSectionNames) {
    if (has_section(doc, name)) out.emplace_back(name);
  }
  return out;
}

}  // namespace agentfacts

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

#include "agentfacts/errors.hpp"

namespace agentfacts {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax_error: return "syntax_error";
    case ErrorKind::unknown_field: return "unknown_field";
    case ErrorKind::type_mismatch: return "type_mismatch";
    case ErrorKind::missing_field: return "missing_field";
    case ErrorKind::non_canonicalizable: return "non_canonicalizable";
    case ErrorKind::unknown_section: return "unknown_section";
    case ErrorKind::missing_section: return "missing_section";
    case ErrorKind::unsupported_algorithm: return "unsupported_algorithm";
    case ErrorKind::invalid_confidence: return "invalid_confidence";
    case ErrorKind::not_owner: return "not_owner";
    case ErrorKind::keystore_error: return "keystore_error";
    case ErrorKind::overlay_violation: return "overlay_violation";
    case ErrorKind::seq_gap: return "seq_gap";
    case ErrorKind::agent_id_mismatch: return "agent_id_mismatch";
    case ErrorKind::clock_regression: return "clock_regression";
    case ErrorKind::actor_mismatch: return "actor_mismatch";
    case ErrorKind::invalid_request: return "invalid_request";
    case ErrorKind::unauthorized_approver: return "unauthorized_approver";
    case ErrorKind::ttl_exceeds_policy: return "ttl_exceeds_policy";
    case ErrorKind::unknown_section_in_policy: return "unknown_section_in_policy";
    case ErrorKind::chain_mismatch: return "chain_mismatch";
    case ErrorKind::validation_failed: return "validation_failed";
    case ErrorKind::unknown_agent: return "unknown_agent";
    case ErrorKind::bad_url: return "bad_url";
    case ErrorKind::io_error: return "io_error";
  }
  return "unknown";
}

std::string Error::format(ErrorKind kind, const std::string& path,
                          const std::string& message) {
  std::string out{to_string(kind)};
  if (!path.empty()) {
    out += " at ";
    out += path;
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace agentfacts

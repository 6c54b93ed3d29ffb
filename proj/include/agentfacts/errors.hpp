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

#include <stdexcept>
#include <string>
#include <string_view>

namespace agentfacts {

/// Classified failure reasons surfaced by the library. Every throwing
/// operation documents which kinds it can raise.
enum class ErrorKind {
  // Document parsing
  syntax_error,
  unknown_field,
  type_mismatch,
  missing_field,
  // Canonicalization
  non_canonicalizable,
  unknown_section,
  missing_section,
  // Signing
  unsupported_algorithm,
  invalid_confidence,
  not_owner,
  keystore_error,
  // Overlay / views
  overlay_violation,
  // Version chain
  seq_gap,
  agent_id_mismatch,
  clock_regression,
  // Permissions
  actor_mismatch,
  invalid_request,
  unauthorized_approver,
  ttl_exceeds_policy,
  // Trust
  unknown_section_in_policy,
  // Registry
  chain_mismatch,
  validation_failed,
  unknown_agent,
  bad_url,
  // Environment
  io_error,
};

std::string_view to_string(ErrorKind kind);

/// Exception type carrying a machine-readable kind and, where it makes
/// sense, a JSON-pointer-style path into the offending document.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(format(kind, "", message)),
        kind_(kind),
        path_() {}

  Error(ErrorKind kind, std::string path, std::string message)
      : std::runtime_error(format(kind, path, message)),
        kind_(kind),
        path_(std::move(path)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }

 private:
  static std::string format(ErrorKind kind, const std::string& path,
                            const std::string& message);

  ErrorKind kind_;
  std::string path_;
};

}  // namespace agentfacts

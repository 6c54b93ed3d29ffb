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
#include <string>
#include <vector>

#include "agentfacts/jsonutil.hpp"

namespace agentfacts {

/// Pieces of an http:// or https:// URL.
struct ParsedUrl {
  std::string scheme;
  std::string host;
  int port = 0;  // scheme default applied when the URL names none
  std::string path;  // "/" when empty

  friend bool operator==(const ParsedUrl&, const ParsedUrl&) = default;
};

/// Splits a webhook/registry URL. Throws Error{bad_url} for anything that
/// is not a well-formed absolute http(s) URL.
ParsedUrl parse_url(const std::string& url);

/// Side-effecting notification sender, injected so the registry core stays
/// deterministic. Implementations return the HTTP status code, or 0 when
/// no response was obtained (connection failure).
class WebhookTransport {
 public:
  virtual ~WebhookTransport() = default;
  virtual int post_json(const std::string& url, const json& body) = 0;
};

/// Test double: records every post and answers with a scripted status.
class RecordingTransport : public WebhookTransport {
 public:
  struct Sent {
    std::string url;
    json body;
  };

  explicit RecordingTransport(int status = 200) : default_status_(status) {}

  int post_json(const std::string& url, const json& body) override;

  /// Scripted status for one URL; other URLs use the default.
  void set_status(const std::string& url, int status);

  const std::vector<Sent>& sent() const { return sent_; }

 private:
  int default_status_;
  std::map<std::string, int> per_url_;
  std::vector<Sent> sent_;
};

/// Real sender, POSTing application/json over HTTP.
class HttpWebhookTransport : public WebhookTransport {
 public:
  explicit HttpWebhookTransport(int timeout_seconds = 5)
      : timeout_seconds_(timeout_seconds) {}

  int post_json(const std::string& url, const json& body) override;

 private:
  int timeout_seconds_;
};

}  // namespace agentfacts

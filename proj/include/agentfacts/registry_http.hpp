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

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "agentfacts/registry.hpp"

namespace agentfacts {

/// One wire request, independent of any HTTP library. `target` is the
/// decoded path ("/agents/x/facts"); `query` holds decoded parameters.
struct WireRequest {
  std::string method;  // "GET" or "POST"
  std::string target;
  std::map<std::string, std::string> query;
  std::string body;  // JSON text for POSTs, ignored for GETs

  friend bool operator==(const WireRequest&, const WireRequest&) = default;
};

struct WireResponse {
  int status = 200;
  std::string body;  // JSON text, newline-terminated

  friend bool operator==(const WireResponse&, const WireResponse&) = default;
};

/// Dispatches one request against the store. Endpoints:
///
///   GET  /agents/{agent_id}/facts          head doc + signatures + freshness
///   GET  /agents/{agent_id}/facts/{seq}    one historical revision
///   GET  /agents/{agent_id}/chain          the link list
///   POST /agents/{agent_id}/facts          publish {doc, signatures?, link?}
///   POST /agents/{agent_id}/subscriptions  {webhook_url} → 201 with id
///   GET  /authorities                      the authority registry
///   POST /revocations                      submit one revocation entry
///
/// Time-dependent reads accept `?at=<rfc3339>` to evaluate freshness and
/// trust at a chosen instant (an extension beyond the listed endpoints);
/// they use `now` otherwise. Failures map to status codes — 404 unknown
/// agent/endpoint, 409 chain mismatch, 400 everything else the caller sent
/// — with an {"error": {kind, message}} body. Never throws.
///
/// Responses are deterministic for a given store and instant, so they can
/// be frozen as golden fixtures.
WireResponse handle_wire_request(RegistryStore& store, const WireRequest& req,
                                 Timestamp now);

/// Blocking HTTP shell around handle_wire_request: one listener, one lock,
/// wall-clock `now`. `on_mutate` (when set) runs after every state-changing
/// request, still under the lock — the serve command uses it to persist.
class RegistryHttpServer {
 public:
  explicit RegistryHttpServer(RegistryStore& store);
  ~RegistryHttpServer();

  RegistryHttpServer(const RegistryHttpServer&) = delete;
  RegistryHttpServer& operator=(const RegistryHttpServer&) = delete;

  void set_on_mutate(std::function<void(RegistryStore&)> hook);

  /// Binds host:port (port 0 picks a free one). Returns the bound port or
  /// -1 on failure.
  int bind(const std::string& host, int port);

  /// Serves until stop(); call after bind. False when the listener failed.
  bool serve();

  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace agentfacts

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

#ifndef AGENTFACTS_TESTS_SUPPORT_WIRE_FIXTURE_HPP_
#define AGENTFACTS_TESTS_SUPPORT_WIRE_FIXTURE_HPP_

#include <string>
#include <vector>

#include "agentfacts/registry.hpp"
#include "agentfacts/registry_http.hpp"

namespace agentfacts::testing {

/// One recorded request for the wire protocol. The same fixed sequence is
/// replayed by the fixture generator (to record responses) and by the wire
/// test (to compare against the recorded bytes).
struct WireExchange {
  std::string name;  // fixture file stem, e.g. "03-get-facts"
  WireRequest request;
  Timestamp now;  // server clock when the request is handled
};

/// Deterministic starting store: the four seeded authorities plus the
/// genesis revision of the sample finance agent, published at
/// 2025-06-02T09:00:00Z.
RegistryStore wire_base_store();

/// The fixed exchange sequence covering every endpoint, plus an unknown
/// agent and a conflicting republish. Replay in order against
/// wire_base_store(); two of the POSTs mutate the store.
std::vector<WireExchange> wire_exchanges();

}  // namespace agentfacts::testing

#endif  // AGENTFACTS_TESTS_SUPPORT_WIRE_FIXTURE_HPP_

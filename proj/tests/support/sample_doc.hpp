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

#ifndef AGENTFACTS_TESTS_SUPPORT_SAMPLE_DOC_HPP_
#define AGENTFACTS_TESTS_SUPPORT_SAMPLE_DOC_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agentfacts/document.hpp"
#include "agentfacts/keys.hpp"
#include "agentfacts/timestamp.hpp"

namespace agentfacts::testing {

/// Deterministic authority derived from a 32-octet seed of one repeated
/// byte; the same seed always yields the same key and authority id.
std::pair<PrivateKeyHandle, AuthorityRecord> seeded_authority(
    std::uint8_t seed_byte, const std::string& name,
    std::vector<std::string> domains);

/// A complete, valid ten-section document for a fictional finance agent.
/// The verification section names the three given authorities. Everything
/// is fixed, so the canonical bytes are stable across runs.
AgentFactsDoc sample_document(const std::string& provider_id,
                              const std::string& assessor_id,
                              const std::string& security_id,
                              Timestamp published_at);

/// sample_document wired to the seeded 0x11/0x22/0x33 authorities and
/// signed by each at `published_at`: provider over {identity,
/// baseline_model, capabilities, verification} at 0.98, assessor over
/// {compliance, classification} at 0.95, security over {auth_permissions,
/// supply_chain} at 0.91.
AgentFactsDoc signed_sample_document(Timestamp published_at);

/// sample_document with every optional field populated, including a live
/// permission state (grants, escalation policy, audit trail) and the
/// org-namespaced scope-of-work and constitution custom facts. Used to
/// prove that every schema field is reachable in the serialized form.
AgentFactsDoc maximal_document(Timestamp published_at);

}  // namespace agentfacts::testing

#endif  // AGENTFACTS_TESTS_SUPPORT_SAMPLE_DOC_HPP_

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

namespace agentfacts::cli {

struct DemoOptions {
  bool tamper_compliance = false;  // corrupt a signed section before trust
  bool freeze_clock = false;       // stop time before the elevated grant expires
  bool machine = false;            // emit one JSON object instead of a transcript
};

/// Scripted employee-agent onboarding: provider-signed facts, enterprise
/// trust evaluation, role overlay, permission lifecycle with pre-deadline
/// escalation and automatic reversion, and a final audit-chain check.
/// Returns 0 when every stage's assertions hold, 1 otherwise (the failing
/// stage is named in the output).
int run_employee_agent_demo(const DemoOptions& options);

}  // namespace agentfacts::cli

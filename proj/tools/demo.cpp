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

#include "demo.hpp"

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "agentfacts/document.hpp"
#include "agentfacts/keys.hpp"
#include "agentfacts/overlay.hpp"
#include "agentfacts/permissions.hpp"
#include "agentfacts/signature.hpp"
#include "agentfacts/trust.hpp"

namespace agentfacts::cli {

namespace {

struct StageLog {
  std::string name;
  bool ok = true;
  std::vector<std::string> lines;

  void note(const std::string& line) { lines.push_back(line); }

  void require(bool condition, const std::string& what) {
    lines.push_back(std::string(condition ? "PASS: " : "FAIL: ") + what);
    if (!condition) ok = false;
  }
};

std::pair<PrivateKeyHandle, AuthorityRecord> demo_authority(
    std::uint8_t seed_byte, const std::string& name,
    std::vector<std::string> domains) {
  const ByteVec seed(32, seed_byte);
  return authority_from_seed(seed, name, std::move(domains));
}

AgentFactsDoc build_provider_document(const std::string& provider_id,
                                      const std::string& assessor_id,
                                      const std::string& security_id,
                                      Timestamp published_at) {
  AgentFactsDoc doc;
  doc.identity.agent_id = "did:agentfacts:acme-finance-analyzer";
  doc.identity.name = "Acme Finance Analyzer";
  doc.identity.version = "1.0";
  doc.identity.created = Timestamp::parse("2025-05-03T09:00:00Z");
  doc.identity.last_updated = published_at;
  doc.identity.ttl = 90 * 86400;
  doc.identity.version_seq = 0;

  BaselineModel model;
  model.foundation_model = "helios-lm-4";
  model.model_version = "4.2.1";
  model.model_provider = "Helios Labs";
  model.training_data_sources = {"financial-regulatory-corpus-2024"};
  model.training_cutoff_date = Timestamp::parse("2024-12-31T00:00:00Z");
  model.fine_tuning = json{{"method", "supervised"},
                           {"domain", "financial regulations and reporting"}};
  model.model_capabilities = {"financial_analysis", "regulatory_reporting"};
  model.known_limitations = {"no real-time market data"};
  doc.baseline_model = std::move(model);

  Classification cls;
  cls.agent_type = AgentType::assistant;
  cls.operational_level = OperationalLevel::supervised;
  cls.stakeholder_context = StakeholderContext::enterprise;
  cls.deployment_scope = DeploymentScope::external;  // overlay localizes this
  cls.interaction_mode = InteractionMode::synchronous;
  doc.classification = cls;

  Capabilities caps;
  caps.external_apis = {"https://erp.example.com/api"};
  caps.tool_calling = {ToolCalling::mcp};
  caps.programming_languages = {"python"};
  caps.data_formats = {DataFormat::json_format, DataFormat::csv,
                       DataFormat::pdf};
  caps.interface_types = {InterfaceType::api};
  caps.domain_expertise = {"financial_regulation", "quarterly_reporting"};
  caps.language_support = {"en"};
  doc.capabilities = std::move(caps);

  AuthPermissions auth;
  auth.supported_methods = {AuthMethod::oauth2, AuthMethod::mtls};
  auth.primary_scheme = AuthMethod::oauth2;
  auth.auth_security_level = AuthSecurityLevel::high;
  auth.multi_factor_required = true;
  auth.session_management = SessionManagement{3600, std::string("rotate")};
  auth.auth_compliance = {"soc2"};
  doc.auth_permissions = std::move(auth);

  Compliance comp;
  comp.eu_ai_act = EuAiAct{RiskLevel::limited, {"disclose-ai-status"}};
  comp.nist_ai_rmf = NistAiRmf{std::string("govern-map-measure-manage"),
                               {"financial_reporting"}};
  comp.sector_standards = {"ISO 27001", "SOX"};
  comp.geographic_compliance = {"EU", "US"};
  comp.safety_classification = SafetyClassification::medium;
  comp.audit_certifications = {"soc2-type2"};
  doc.compliance = std::move(comp);

  Performance perf;
  perf.response_time_p50 = 800;
  perf.response_time_p95 = 2500;
  perf.availability_sla = Fraction::from_value(0.999);
  perf.accuracy_metrics["regulatory_citation_accuracy"] =
      Fraction::from_value(0.97);
  perf.error_rate = Fraction::from_value(0.004);
  perf.cost_structure = CostStructure::subscription;
  perf.reputation_score = Fraction::from_value(0.92);
  perf.user_satisfaction = Fraction::from_value(0.94);
  doc.performance = std::move(perf);

  SupplyChain chain;
  chain.component_dependencies = {
      ComponentRef{"helios-lm-4", std::string("4.2.1")}};
  chain.data_sources = {"sec-filings-2020-2024"};
  chain.infrastructure_providers = {"nimbus-cloud"};
  chain.software_libraries = {LibraryRef{"numpy", std::string("1.26.4"),
                                         std::string("BSD-3-Clause")}};
  chain.security_scanning = {
      ScanRecord{"trivy", Timestamp::parse("2025-05-26T00:00:00Z"), 0}};
  chain.license_compliance = {"Apache-2.0", "BSD-3-Clause"};
  doc.supply_chain = std::move(chain);

  VerificationMeta meta;
  meta.verification_authorities = {provider_id, assessor_id, security_id};
  meta.confidence_levels[provider_id] = Fraction::from_value(0.98);
  meta.confidence_levels[assessor_id] = Fraction::from_value(0.95);
  meta.confidence_levels[security_id] = Fraction::from_value(0.91);
  meta.signature_algorithms = {SigAlgorithm::ed25519};
  doc.verification = std::move(meta);

  Extensibility ext;
  ext.custom_facts["org.acme.support_tier"] = "enterprise";
  ext.backward_compatibility = ">=0.9";
  doc.extensions = std::move(ext);
  return doc;
}

}  // namespace

int run_employee_agent_demo(const DemoOptions& options) {
  const Timestamp t_publish = Timestamp::parse("2025-06-02T09:00:00Z");
  const Timestamp t_eval = Timestamp::parse("2025-06-02T10:00:00Z");
  const Timestamp t_overlay = Timestamp::parse("2025-06-02T11:00:00Z");
  const Timestamp t_grant = Timestamp::parse("2025-06-02T11:30:00Z");
  const Timestamp t_escalate = Timestamp::parse("2025-06-23T09:00:00Z");
  const Timestamp t_after = Timestamp::parse("2025-07-08T09:00:00Z");
  const Timestamp t_frozen = Timestamp::parse("2025-06-23T10:30:00Z");

  auto [provider_key, provider] =
      demo_authority(0x11, "Acme Cognition", {"acme.example"});
  auto [assessor_key, assessor] =
      demo_authority(0x22, "Meridian Compliance Advisory", {"meridian.example"});
  auto [security_key, security] =
      demo_authority(0x33, "Castellan Security Assessments", {"castellan.example"});
  auto [ops_key, ops] =
      demo_authority(0x44, "FirstNational AI Operations", {"firstnational.example"});
  (void)ops_key;

  std::map<std::string, AuthorityRecord> authorities;
  for (const AuthorityRecord* a : {&provider, &assessor, &security, &ops}) {
    authorities.emplace(a->authority_id, *a);
  }

  // The provider assembles and signs the metadata package. Each authority
  // signs only what it verified; the provider also covers the verification
  // section so authority declarations themselves are attested.
  AgentFactsDoc published = build_provider_document(
      provider.authority_id, assessor.authority_id, security.authority_id,
      t_publish);
  auto sign_and_attach = [&](const AgentFactsDoc& doc,
                             const PrivateKeyHandle& key,
                             const AuthorityRecord& authority,
                             std::set<std::string> scope, double confidence) {
    SignatureBlock block = sign_sections(key, authority, doc, scope,
                                         Fraction::from_value(confidence),
                                         t_publish);
    return attach_signature(doc, block);
  };
  published = sign_and_attach(
      published, provider_key, provider,
      {"identity", "baseline_model", "capabilities", "verification"}, 0.98);
  published = sign_and_attach(published, assessor_key, assessor,
                              {"compliance", "classification"}, 0.95);
  published = sign_and_attach(published, security_key, security,
                              {"auth_permissions", "supply_chain"}, 0.91);

  if (options.tamper_compliance) {
    published.compliance->sector_standards.push_back("FAKE-CERT-9000");
  }

  std::vector<StageLog> stages;
  bool all_ok = true;
  PermissionState state;
  std::vector<std::string> active_patterns;

  auto run_stage = [&](const std::string& name, auto&& body) {
    if (!all_ok) return;
    StageLog stage;
    stage.name = name;
    body(stage);
    all_ok = all_ok && stage.ok;
    stages.push_back(std::move(stage));
  };

  // Stage 1: the enterprise evaluates the signed package against its own
  // policy — three independent authorities, per-section requirements.
  run_stage("trust", [&](StageLog& s) {
    TrustPolicy policy;
    policy.authority_weights[provider.authority_id] = Fraction::from_value(1.0);
    policy.authority_weights[assessor.authority_id] = Fraction::from_value(1.0);
    policy.authority_weights[security.authority_id] = Fraction::from_value(0.9);
    std::map<std::string, std::set<std::string>> allowed;
    allowed["identity"] = {provider.authority_id};
    allowed["compliance"] = {assessor.authority_id};
    allowed["verification"] = {provider.authority_id};
    policy.allowed_authorities = std::move(allowed);
    policy.min_confidence["identity"] = Fraction::from_value(0.9);
    policy.min_confidence["compliance"] = Fraction::from_value(0.9);
    policy.min_confidence["verification"] = Fraction::from_value(0.9);

    const TrustVerdict verdict =
        evaluate_trust(published, policy, authorities, {}, t_eval);
    for (const std::string& line : explain_verdict(verdict).lines) {
      s.note(line);
    }
    s.require(verdict.overall == OverallTrust::trusted,
              "overall verdict is trusted");
  });

  // Stage 2: role assignment. The overlay layers enterprise classification,
  // duties, and proposed grants over the verified baseline without touching
  // signed content; the published package stays verifiable as-is.
  AgentFactsDoc working;
  run_stage("overlay", [&](StageLog& s) {
    RoleOverlay overlay;
    overlay.assigning_org = "firstnational";
    overlay.classification_updates.stakeholder_context =
        StakeholderContext::enterprise;
    overlay.classification_updates.deployment_scope = DeploymentScope::internal;

    GrantRequest baseline_read;
    baseline_read.actions = {PermAction::read};
    baseline_read.resource_pattern = "finance/db/**";
    baseline_read.authority = ops.authority_id;
    baseline_read.justification =
        "baseline read access to designated financial databases";
    baseline_read.baseline = true;

    GrantRequest draft_write;
    draft_write.actions = {PermAction::write};
    draft_write.resource_pattern = "reporting/drafts/**";
    draft_write.ttl = 30 * 86400;
    draft_write.authority = ops.authority_id;
    draft_write.justification = "draft reporting templates for Q2";

    GrantRequest tools_exec;
    tools_exec.actions = {PermAction::execute};
    tools_exec.resource_pattern = "tools/analytics/*";
    tools_exec.ttl = 30 * 86400;
    tools_exec.authority = ops.authority_id;
    tools_exec.justification = "approved analytical tools";

    overlay.permission_grants = {baseline_read, draft_write, tools_exec};
    overlay.scope_of_work =
        ScopeOfWork{{"quarterly regulatory reporting"},
                    {"real-time trading decisions", "customer data access"}};
    overlay.constitution = {
        "apply SOX change controls to every filing artifact",
        "defer to a human reviewer when a rule is ambiguous"};

    working = apply_overlay(published, overlay, t_overlay);
    s.note("applied overlay from org 'firstnational' at " +
           t_overlay.to_string());
    s.require(working.identity.version_seq == 1,
              "working copy advanced to version_seq 1");
    s.require(working.classification->deployment_scope ==
                  DeploymentScope::internal,
              "classification patched to internal deployment");
    s.require(working.extensions->custom_facts.count(
                  "org.firstnational.scope_of_work") == 1,
              "scope of work recorded under the assigning org namespace");
    s.require(working.extensions->custom_facts.count(
                  "org.firstnational.constitution") == 1,
              "constitution recorded under the assigning org namespace");
    const PermissionState& proposed =
        *working.auth_permissions->permission_state;
    s.require(proposed.pending_grants.size() == 3,
              "three grants proposed, none live yet");
    const SigStatus baseline_sig = verify_signature(
        published, published.verification->signatures[0], authorities, {},
        t_overlay);
    s.require(baseline_sig == SigStatus::valid,
              "provider signature on the published baseline remains valid");

    // The enterprise configures its escalation policy and issues the
    // proposed grants under its own operations authority.
    state = proposed;
    state.escalation_policy.approver_authorities = {ops.authority_id};
    state.escalation_policy.max_ttl = 30 * 86400;
    s.note("escalation policy: approver " + ops.authority_id +
           ", max ttl 30 days");
    const std::vector<GrantRequest> proposals = state.pending_grants;
    for (const GrantRequest& req : proposals) {
      state = grant(state, req, ops.authority_id, t_grant);
    }
    state.pending_grants.clear();
    s.require(state.grants.size() == 3, "three grants issued");

    AccessContext ctx;
    ctx.now = Timestamp::parse("2025-06-02T14:00:00Z");
    ctx.local_hour = 10;
    ctx.jurisdiction = "US";
    auto [read_ok, after_read] =
        check(state, PermAction::read, "finance/db/historical/2024/q3.csv", ctx);
    state = after_read;
    s.require(read_ok.allowed, "baseline read of historical data allowed");
    auto [write_blocked, after_write] = check(
        state, PermAction::write, "reporting/official/q2-2025.xbrl", ctx);
    state = after_write;
    s.require(!write_blocked.allowed &&
                  write_blocked.deny_reason == "no_matching_grant",
              "write to official reporting denied before escalation");
  });

  // Stage 3: the quarterly deadline approaches; the operations authority
  // escalates write access, time-boxed and constrained to business hours
  // with mandatory human review.
  run_stage("escalation", [&](StageLog& s) {
    GrantRequest elevated;
    elevated.actions = {PermAction::write};
    elevated.resource_pattern = "reporting/official/**";
    elevated.ttl = 14 * 86400;
    elevated.authority = ops.authority_id;
    elevated.constraints.time_window =
        ConstraintSet::TimeWindow{8, 18, "America/New_York"};
    elevated.constraints.geographic = std::vector<std::string>{"EU", "US"};
    elevated.constraints.human_review_required = true;
    elevated.justification = "Q2 regulatory submission window";

    state = escalate(state, elevated, ops.authority_id, t_escalate);
    s.note("escalated at " + t_escalate.to_string() + ": write on " +
           elevated.resource_pattern + " for 14 days");

    AccessContext in_hours;
    in_hours.now = t_escalate.plus_seconds(3600);
    in_hours.local_hour = 10;
    in_hours.jurisdiction = "US";
    in_hours.human_reviewer_present = true;
    auto [allowed, after_allowed] = check(
        state, PermAction::write, "reporting/official/q2-2025.xbrl", in_hours);
    state = after_allowed;
    s.require(allowed.allowed,
              "official write allowed in-hours with reviewer present");

    AccessContext off_hours = in_hours;
    off_hours.now = t_escalate.plus_seconds(2 * 3600);
    off_hours.local_hour = 2;
    auto [blocked, after_blocked] = check(
        state, PermAction::write, "reporting/official/q2-2025.xbrl", off_hours);
    state = after_blocked;
    s.require(!blocked.allowed && blocked.deny_reason == "constraint",
              "official write denied off-hours");
  });

  // Stage 4: after the submission deadline the elevated grant has aged out;
  // reversion expires it (and every other stale grant), leaving baseline
  // access only. With the clock frozen before expiry nothing reverts.
  run_stage("reversion", [&](StageLog& s) {
    const Timestamp now = options.freeze_clock ? t_frozen : t_after;
    const std::size_t audit_before = state.audit.size();
    state = revert_expired(state, now);
    const std::size_t transitions = state.audit.size() - audit_before;

    if (options.freeze_clock) {
      s.note("clock frozen at " + now.to_string() +
             ": reversion not yet due");
      s.require(transitions == 0, "no grant transitions before the deadline");
      bool elevated_active = false;
      for (const GrantEntry& g : state.grants) {
        if (g.grant.resource_pattern == "reporting/official/**" &&
            g.status == GrantStatus::active) {
          elevated_active = true;
        }
      }
      s.require(elevated_active, "elevated grant still active");
    } else {
      s.note("reverted at " + now.to_string() + ": " +
             std::to_string(transitions) + " grants expired");
      std::size_t active_non_baseline = 0;
      bool baseline_active = false;
      for (const GrantEntry& g : state.grants) {
        if (g.status != GrantStatus::active) continue;
        if (g.grant.baseline) {
          baseline_active = true;
        } else {
          ++active_non_baseline;
        }
      }
      s.require(active_non_baseline == 0,
                "no elevated grants survive the deadline");
      s.require(baseline_active, "baseline grant still active");

      AccessContext ctx;
      ctx.now = now.plus_seconds(300);
      ctx.local_hour = 10;
      ctx.jurisdiction = "US";
      ctx.human_reviewer_present = true;
      auto [write_now, after_write] = check(
          state, PermAction::write, "reporting/official/q2-2025.xbrl", ctx);
      state = after_write;
      s.require(!write_now.allowed && write_now.deny_reason == "expired",
                "official write denied after reversion (expired)");
      auto [read_now, after_read] = check(
          state, PermAction::read, "finance/db/historical/2024/q3.csv", ctx);
      state = after_read;
      s.require(read_now.allowed, "baseline read still allowed");
    }

    for (const GrantEntry& g : state.grants) {
      if (g.status == GrantStatus::active) {
        active_patterns.push_back(g.grant.resource_pattern);
      }
    }
  });

  // Stage 5: the full permission history must verify as an unbroken
  // hash chain — grants, denials, escalation, and reversion included.
  run_stage("audit", [&](StageLog& s) {
    s.require(verify_audit_chain(state.audit), "audit chain verifies");
    std::map<std::string, int> counts;
    for (const AuditEntry& entry : state.audit) {
      counts[std::string(to_token(entry.action))] += 1;
    }
    std::string summary = std::to_string(state.audit.size()) + " entries:";
    for (const auto& [action, count] : counts) {
      summary += " " + action + "=" + std::to_string(count);
    }
    s.note(summary);
  });

  const std::string failed_stage =
      all_ok ? "" : stages.back().name;  // stages stop at the first failure

  if (options.machine) {
    json out = json::object();
    if (!all_ok) out["failed_stage"] = failed_stage;
    out["final_active_grants"] = active_patterns;
    out["ok"] = all_ok;
    json list = json::array();
    for (const StageLog& stage : stages) {
      json v = json::object();
      v["lines"] = stage.lines;
      v["name"] = stage.name;
      v["ok"] = stage.ok;
      list.push_back(std::move(v));
    }
    out["stages"] = std::move(list);
    std::fputs((out.dump(2) + "\n").c_str(), stdout);
  } else {
    std::fputs("employee agent onboarding demo\n", stdout);
    std::size_t index = 0;
    for (const StageLog& stage : stages) {
      std::fprintf(stdout, "\n[%zu/5] %s\n", ++index, stage.name.c_str());
      for (const std::string& line : stage.lines) {
        std::fprintf(stdout, "  %s\n", line.c_str());
      }
    }
    if (all_ok) {
      std::fputs("\nall stages passed; active grants:", stdout);
      for (const std::string& pattern : active_patterns) {
        std::fprintf(stdout, " %s", pattern.c_str());
      }
      std::fputs("\n", stdout);
    } else {
      std::fprintf(stdout, "\ndemo failed at stage: %s\n",
                   failed_stage.c_str());
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace agentfacts::cli

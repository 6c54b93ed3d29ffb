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

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "agentfacts/document_io.hpp"
#include "agentfacts/errors.hpp"
#include "agentfacts/freshness.hpp"
#include "agentfacts/fsio.hpp"
#include "agentfacts/keys.hpp"
#include "agentfacts/keystore.hpp"
#include "agentfacts/overlay.hpp"
#include "agentfacts/permissions.hpp"
#include "agentfacts/registry.hpp"
#include "agentfacts/registry_http.hpp"
#include "agentfacts/signature.hpp"
#include "agentfacts/trust.hpp"
#include "agentfacts/validation.hpp"
#include "agentfacts/version_chain.hpp"
#include "demo.hpp"

namespace agentfacts::cli {

namespace {

void emit(const json& v) { std::fputs((v.dump(2) + "\n").c_str(), stdout); }

void say(const std::string& line) {
  std::fputs((line + "\n").c_str(), stdout);
}

Timestamp at_or_now(const std::string& text) {
  return text.empty() ? Timestamp::now() : Timestamp::parse(text);
}

std::string keystore_passphrase() {
  const char* pass = std::getenv("AGENTFACTS_KEYSTORE_PASS");
  if (pass == nullptr || *pass == '\0') {
    throw Error(ErrorKind::keystore_error,
                "set AGENTFACTS_KEYSTORE_PASS; the passphrase is never taken "
                "from the command line");
  }
  return pass;
}

AgentFactsDoc load_doc(const std::string& path) {
  return parse_document(read_text_file(path));
}

std::map<std::string, AuthorityRecord> load_authorities(
    const std::string& path) {
  std::map<std::string, AuthorityRecord> out;
  const json arr = parse_json_text(read_text_file(path));
  std::size_t i = 0;
  for (const json& v : as_array(arr, "/authorities")) {
    AuthorityRecord rec =
        AuthorityRecord::from_json(v, "/authorities/" + std::to_string(i++));
    out.emplace(rec.authority_id, std::move(rec));
  }
  return out;
}

std::vector<RevocationEntry> load_revocations(const std::string& path) {
  std::vector<RevocationEntry> out;
  if (path.empty() || !path_exists(path)) return out;
  const json arr = parse_json_text(read_text_file(path));
  std::size_t i = 0;
  for (const json& v : as_array(arr, "/revocations")) {
    out.push_back(
        RevocationEntry::from_json(v, "/revocations/" + std::to_string(i++)));
  }
  return out;
}

std::vector<SignatureBlock> load_signature_blocks(const std::string& path) {
  std::vector<SignatureBlock> out;
  const json arr = parse_json_text(read_text_file(path));
  std::size_t i = 0;
  for (const json& v : as_array(arr, "/signatures")) {
    out.push_back(
        SignatureBlock::from_json(v, "/signatures/" + std::to_string(i++)));
  }
  return out;
}

std::set<std::string> split_names(const std::string& csv) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    if (comma > start) out.insert(csv.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> split_list(const std::string& csv) {
  const std::set<std::string> names = split_names(csv);
  return {names.begin(), names.end()};
}

ByteVec hex_decode(const std::string& text) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorKind::syntax_error,
                std::string("not a hex digit: ") + c);
  };
  if (text.size() % 2 != 0) {
    throw Error(ErrorKind::syntax_error, "hex string has odd length");
  }
  ByteVec out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(nibble(text[i]) * 16 +
                                            nibble(text[i + 1])));
  }
  return out;
}

/// Looks up the issuer's record in an authorities file when given, else
/// reconstructs it from the private key (the id is the key fingerprint, so
/// the reconstruction is exact up to display metadata).
AuthorityRecord authority_for_key(const PrivateKeyHandle& key,
                                  const std::string& authority_id,
                                  const std::string& authorities_path) {
  if (!authorities_path.empty()) {
    const auto authorities = load_authorities(authorities_path);
    auto it = authorities.find(authority_id);
    if (it != authorities.end()) return it->second;
  }
  AuthorityRecord rec;
  rec.authority_id = authority_id;
  rec.display_name = authority_id;
  rec.public_key = key.public_key();
  rec.algorithm = key.algorithm();
  return rec;
}

void write_or_print(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text_file(out_path, text);
  }
}

PermissionState load_perm_state(const std::string& path) {
  return PermissionState::from_json(parse_json_text(read_text_file(path)), "");
}

void save_perm_state(const PermissionState& state, const std::string& path) {
  write_text_file(path, state.to_json().dump(2) + "\n");
}

// ---- commands ---------------------------------------------------------------

int cmd_validate(const std::string& doc_path, bool machine) {
  const ValidationReport report = validate_document(load_doc(doc_path));
  if (machine) {
    json out = report.to_json();
    out["ok"] = report.ok();
    emit(out);
  } else {
    for (const Finding& f : report.findings) {
      say(std::string(f.severity == Severity::error ? "error" : "warning") +
          " " + f.path + ": " + f.message);
    }
    say(report.ok() ? "valid (" + std::to_string(report.findings.size()) +
                          " warnings)"
                    : "invalid (" + std::to_string(report.error_count()) +
                          " errors)");
  }
  return report.ok() ? 0 : 1;
}

int cmd_view(const std::string& doc_path, const std::string& audience,
             const std::string& out_path) {
  const Audience aud = from_token<Audience>(audience, "/audience");
  const AgentFactsDoc view = select_view(load_doc(doc_path), aud);
  write_or_print(out_path, serialize_document(view));
  return 0;
}

int cmd_canon(const std::string& doc_path, const std::string& out_path) {
  const CanonicalBytes bytes = canonicalize_document(load_doc(doc_path));
  write_or_print(out_path, std::string(bytes.as_text()) + "\n");
  return 0;
}

int cmd_keygen(const std::string& keystore_path, const std::string& algorithm,
               const std::string& name, const std::string& domains_csv,
               const std::string& authorities_path, const std::string& seed_hex,
               bool machine) {
  const SigAlgorithm alg = algorithm_from_name(algorithm);
  std::pair<PrivateKeyHandle, AuthorityRecord> generated = [&] {
    const std::string display = name.empty() ? "unnamed authority" : name;
    if (seed_hex.empty()) {
      return generate_authority(algorithm, display, split_list(domains_csv));
    }
    if (alg != SigAlgorithm::ed25519) {
      throw Error(ErrorKind::invalid_request,
                  "--seed is only defined for ed25519");
    }
    return authority_from_seed(hex_decode(seed_hex), display,
                               split_list(domains_csv));
  }();
  auto& [key, record] = generated;

  const std::string pass = keystore_passphrase();
  Keystore store;
  if (path_exists(keystore_path)) store = Keystore::load(keystore_path, pass);
  store.put(record.authority_id, std::move(key));
  store.save(keystore_path, pass);

  if (!authorities_path.empty()) {
    json arr = json::array();
    if (path_exists(authorities_path)) {
      arr = parse_json_text(read_text_file(authorities_path));
      as_array(arr, "/authorities");
    }
    arr.push_back(record.to_json());
    write_text_file(authorities_path, arr.dump(2) + "\n");
  }

  if (machine) {
    emit(record.to_json());
  } else {
    say("generated " + record.authority_id + " (" +
        std::string(to_token(record.algorithm)) + ") in " + keystore_path);
  }
  return 0;
}

int cmd_sign(const std::string& doc_path, const std::string& sections_csv,
             double confidence, const std::string& authority_id,
             const std::string& keystore_path,
             const std::string& authorities_path, const std::string& at_text,
             const std::string& out_path, bool machine) {
  const AgentFactsDoc doc = load_doc(doc_path);
  const Keystore store = Keystore::load(keystore_path, keystore_passphrase());
  const PrivateKeyHandle* key = store.find(authority_id);
  if (key == nullptr) {
    throw Error(ErrorKind::keystore_error,
                "keystore holds no key for " + authority_id);
  }
  const AuthorityRecord record =
      authority_for_key(*key, authority_id, authorities_path);
  const SignatureBlock block =
      sign_sections(*key, record, doc, split_names(sections_csv),
                    Fraction::from_value(confidence), at_or_now(at_text));
  const AgentFactsDoc signed_doc = attach_signature(doc, block);

  if (out_path.empty()) {
    write_or_print("", serialize_document(signed_doc));
  } else {
    write_text_file(out_path, serialize_document(signed_doc));
    if (machine) {
      json out = json::object();
      out["signature"] = block.to_json(false);
      out["written"] = out_path;
      emit(out);
    } else {
      say("signed " + sections_csv + " as " + authority_id + " -> " +
          out_path);
    }
  }
  return 0;
}

int cmd_verify_sig(const std::string& doc_path,
                   const std::string& authorities_path,
                   const std::string& revocations_path,
                   const std::string& at_text, std::int64_t index,
                   bool machine) {
  const AgentFactsDoc doc = load_doc(doc_path);
  const auto authorities = load_authorities(authorities_path);
  const auto revocations = load_revocations(revocations_path);
  const Timestamp now = at_or_now(at_text);

  const std::vector<SignatureBlock>* blocks = nullptr;
  if (doc.verification.has_value()) blocks = &doc.verification->signatures;
  if (blocks == nullptr || blocks->empty()) {
    throw Error(ErrorKind::invalid_request, "document carries no signatures");
  }
  if (index >= 0 && index >= static_cast<std::int64_t>(blocks->size())) {
    throw Error(ErrorKind::invalid_request,
                "no signature at index " + std::to_string(index));
  }

  bool all_valid = true;
  json results = json::array();
  for (std::size_t i = 0; i < blocks->size(); ++i) {
    if (index >= 0 && static_cast<std::int64_t>(i) != index) continue;
    const SignatureBlock& block = (*blocks)[i];
    const SigStatus status =
        verify_signature(doc, block, authorities, revocations, now);
    all_valid = all_valid && status == SigStatus::valid;
    if (machine) {
      json v = json::object();
      v["authority_id"] = block.authority_id;
      v["index"] = static_cast<std::int64_t>(i);
      v["status"] = std::string(to_token(status));
      results.push_back(std::move(v));
    } else {
      std::string scope_text;
      for (const std::string& s : block.scope) {
        scope_text += (scope_text.empty() ? "" : ",") + s;
      }
      say("signature " + std::to_string(i) + " by " + block.authority_id +
          " over [" + scope_text + "]: " + std::string(to_token(status)));
    }
  }
  if (machine) {
    json out = json::object();
    out["ok"] = all_valid;
    out["results"] = std::move(results);
    emit(out);
  }
  return all_valid ? 0 : 1;
}

int cmd_revoke(const std::string& keystore_path, const std::string& issuer_id,
               const std::string& target_kind, const std::string& target_ref,
               const std::string& reason, const std::string& revocations_path,
               const std::string& authorities_path, const std::string& at_text,
               bool machine) {
  const Keystore store = Keystore::load(keystore_path, keystore_passphrase());
  const PrivateKeyHandle* key = store.find(issuer_id);
  if (key == nullptr) {
    throw Error(ErrorKind::keystore_error,
                "keystore holds no key for " + issuer_id);
  }
  const AuthorityRecord issuer =
      authority_for_key(*key, issuer_id, authorities_path);
  const RevocationTarget target =
      from_token<RevocationTarget>(target_kind, "/target");
  const RevocationEntry entry =
      revoke(*key, issuer, target, target_ref, reason, at_or_now(at_text));

  json arr = json::array();
  if (path_exists(revocations_path)) {
    arr = parse_json_text(read_text_file(revocations_path));
    as_array(arr, "/revocations");
  }
  arr.push_back(entry.to_json());
  write_text_file(revocations_path, arr.dump(2) + "\n");

  if (machine) {
    emit(entry.to_json());
  } else {
    say("revoked " + target_kind + " " + target_ref + " -> " +
        revocations_path);
  }
  return 0;
}

int cmd_trust_eval(const std::string& doc_path, const std::string& policy_path,
                   const std::string& authorities_path,
                   const std::string& revocations_path,
                   const std::string& at_text, bool machine) {
  const AgentFactsDoc doc = load_doc(doc_path);
  const TrustPolicy policy = TrustPolicy::parse(read_text_file(policy_path));
  const auto authorities = load_authorities(authorities_path);
  const auto revocations = load_revocations(revocations_path);
  const TrustVerdict verdict =
      evaluate_trust(doc, policy, authorities, revocations, at_or_now(at_text));
  if (machine) {
    emit(verdict.to_json());
  } else {
    std::fputs(explain_verdict(verdict).to_string().c_str(), stdout);
  }
  return verdict.overall == OverallTrust::trusted ? 0 : 1;
}

int cmd_freshness(const std::string& doc_path, const std::string& policy_path,
                  const std::string& at_text, bool plan, bool machine) {
  const AgentFactsDoc doc = load_doc(doc_path);
  StalenessPolicy policy;
  if (!policy_path.empty()) {
    policy = StalenessPolicy::parse(read_text_file(policy_path));
  }
  const Timestamp now = at_or_now(at_text);
  const FreshnessReport report = freshness(doc, now, policy);
  const RefreshPlan refresh = plan_refresh(doc, now, policy);
  if (machine) {
    json out = report.to_json();
    if (plan) out["plan"] = refresh.to_json();
    emit(out);
  } else {
    for (const auto& [section, state] : report.per_section) {
      say(section + ": " + std::string(to_token(state)));
    }
    say("document: " + std::string(to_token(report.document_status)));
    if (plan) {
      for (const auto& entry : refresh.entries) {
        say("refresh " + entry.section + " at " + entry.refresh_at.to_string());
      }
      if (refresh.all_expired) say("all sections expired");
    }
  }
  return report.document_status == DocFreshness::expired ? 1 : 0;
}

int cmd_chain_append(const std::string& dir, const std::string& next_path,
                     const std::string& keystore_path,
                     const std::string& provider_id,
                     const std::string& authorities_path,
                     const std::string& at_text, bool machine) {
  const AgentFactsDoc next = load_doc(next_path);

  std::vector<AgentFactsDoc> docs;
  std::vector<VersionLink> links;
  if (path_exists(dir)) {
    auto loaded = load_chain(dir);
    docs = std::move(loaded.first);
    links = std::move(loaded.second);
  }

  std::optional<VersionLink> link;
  if (docs.empty()) {
    if (next.identity.version_seq != 0) {
      throw Error(ErrorKind::seq_gap,
                  "an empty chain starts at version_seq 0, got " +
                      std::to_string(next.identity.version_seq));
    }
  } else {
    const Keystore store =
        Keystore::load(keystore_path, keystore_passphrase());
    const PrivateKeyHandle* key = store.find(provider_id);
    if (key == nullptr) {
      throw Error(ErrorKind::keystore_error,
                  "keystore holds no key for " + provider_id);
    }
    const AuthorityRecord provider =
        authority_for_key(*key, provider_id, authorities_path);
    link = append_version(docs.back(), next, *key, provider,
                          at_or_now(at_text));
    links.push_back(*link);
  }
  docs.push_back(next);
  save_chain(dir, docs, links);

  if (machine) {
    json out = json::object();
    out["head_seq"] = next.identity.version_seq;
    out["link"] = link.has_value() ? link->to_json() : json(nullptr);
    emit(out);
  } else {
    say("chain " + dir + " now at seq " +
        std::to_string(next.identity.version_seq));
  }
  return 0;
}

int cmd_chain_verify(const std::string& dir, const std::string& provider_id,
                     const std::string& authorities_path, bool machine) {
  auto [docs, links] = load_chain(dir);
  const auto authorities = load_authorities(authorities_path);
  auto it = authorities.find(provider_id);
  if (it == authorities.end()) {
    throw Error(ErrorKind::invalid_request,
                "provider " + provider_id + " not in the authorities file");
  }
  const ChainReport report = verify_chain(docs, links, it->second);
  if (machine) {
    emit(report.to_json());
  } else if (report.accepted) {
    say("chain of " + std::to_string(docs.size()) + " revisions: accepted");
  } else {
    std::string where = report.failing_link.has_value()
                            ? " at link " +
                                  std::to_string(*report.failing_link)
                            : "";
    say("chain rejected" + where + ": " + report.reason);
  }
  return report.accepted ? 0 : 1;
}

int cmd_perms_grant(const std::string& state_path,
                    const std::string& grant_path, const std::string& actor,
                    const std::string& at_text, const std::string& out_path,
                    bool machine) {
  PermissionState state = load_perm_state(state_path);
  const GrantRequest req =
      GrantRequest::from_json(parse_json_text(read_text_file(grant_path)), "");
  state = grant(state, req, actor, at_or_now(at_text));
  save_perm_state(state, out_path.empty() ? state_path : out_path);
  if (machine) {
    json out = json::object();
    out["active_grants"] = static_cast<std::int64_t>(state.grants.size());
    out["audit_entries"] = static_cast<std::int64_t>(state.audit.size());
    emit(out);
  } else {
    say("granted " + req.resource_pattern + " (" +
        std::to_string(state.audit.size()) + " audit entries)");
  }
  return 0;
}

int cmd_perms_check(const std::string& state_path, const std::string& action,
                    const std::string& resource, const std::string& at_text,
                    std::int64_t hour, const std::string& jurisdiction,
                    bool reviewer, const std::string& out_path, bool machine) {
  PermissionState state = load_perm_state(state_path);
  AccessContext ctx;
  ctx.now = at_or_now(at_text);
  ctx.local_hour = hour < 0 ? ctx.now.utc_hour() : static_cast<int>(hour);
  ctx.jurisdiction = jurisdiction;
  ctx.human_reviewer_present = reviewer;
  auto [decision, next] =
      check(state, from_token<PermAction>(action, "/action"), resource, ctx);
  save_perm_state(next, out_path.empty() ? state_path : out_path);
  if (machine) {
    json out = json::object();
    out["allowed"] = decision.allowed;
    if (!decision.allowed) out["deny_reason"] = decision.deny_reason;
    if (decision.allowed_by.has_value()) {
      out["allowed_by"] = static_cast<std::int64_t>(*decision.allowed_by);
    }
    emit(out);
  } else {
    say(decision.allowed ? "allow" : "deny (" + decision.deny_reason + ")");
  }
  return decision.allowed ? 0 : 1;
}

int cmd_perms_escalate(const std::string& state_path,
                       const std::string& grant_path,
                       const std::string& approver,
                       const std::string& schedule_path,
                       const std::string& at_text, const std::string& out_path,
                       bool machine) {
  PermissionState state = load_perm_state(state_path);
  const Timestamp now = at_or_now(at_text);
  std::int64_t applied = 0;

  if (!schedule_path.empty()) {
    // Schedule file: [{due_at, approver, grant}] — entries due by `now` are
    // applied in file order, the rest stay scheduled for a later run.
    const json arr = parse_json_text(read_text_file(schedule_path));
    std::size_t i = 0;
    for (const json& v : as_array(arr, "/schedule")) {
      const std::string path = "/schedule/" + std::to_string(i++);
      ObjReader r(v, path);
      const Timestamp due = r.require_timestamp("due_at");
      const std::string entry_approver = r.require_string("approver");
      const json& grant_json = r.require("grant");
      const GrantRequest req =
          GrantRequest::from_json(grant_json, path + "/grant");
      r.finish();
      if (due <= now) {
        state = escalate(state, req, entry_approver, now);
        ++applied;
      }
    }
  } else {
    if (grant_path.empty() || approver.empty()) {
      throw Error(ErrorKind::invalid_request,
                  "escalate needs --grant and --approver, or --schedule");
    }
    const GrantRequest req = GrantRequest::from_json(
        parse_json_text(read_text_file(grant_path)), "");
    state = escalate(state, req, approver, now);
    applied = 1;
  }

  save_perm_state(state, out_path.empty() ? state_path : out_path);
  if (machine) {
    json out = json::object();
    out["applied"] = applied;
    out["audit_entries"] = static_cast<std::int64_t>(state.audit.size());
    emit(out);
  } else {
    say("escalations applied: " + std::to_string(applied));
  }
  return 0;
}

int cmd_perms_revert(const std::string& state_path, const std::string& at_text,
                     const std::string& out_path, bool machine) {
  PermissionState state = load_perm_state(state_path);
  const std::size_t before = state.audit.size();
  state = revert_expired(state, at_or_now(at_text));
  const std::size_t reverted = state.audit.size() - before;
  save_perm_state(state, out_path.empty() ? state_path : out_path);
  if (machine) {
    json out = json::object();
    out["reverted"] = static_cast<std::int64_t>(reverted);
    emit(out);
  } else {
    say("reverted " + std::to_string(reverted) + " grants");
  }
  return 0;
}

int cmd_perms_audit_verify(const std::string& state_path, bool machine) {
  const PermissionState state = load_perm_state(state_path);
  const bool ok = verify_audit_chain(state.audit);
  if (machine) {
    json out = json::object();
    out["entries"] = static_cast<std::int64_t>(state.audit.size());
    out["ok"] = ok;
    emit(out);
  } else {
    say(ok ? "audit chain verifies (" + std::to_string(state.audit.size()) +
                 " entries)"
           : "audit chain BROKEN");
  }
  return ok ? 0 : 1;
}

RegistryStore load_store_or_empty(const std::string& dir) {
  return path_exists(dir) ? load_store(dir) : RegistryStore{};
}

int cmd_registry_serve(const std::string& store_dir, const std::string& host,
                       int port) {
  RegistryStore store = load_store_or_empty(store_dir);
  RegistryHttpServer server(store);
  server.set_on_mutate(
      [&store_dir](RegistryStore& s) { save_store(s, store_dir); });
  const int bound = server.bind(host, port);
  if (bound < 0) {
    throw Error(ErrorKind::io_error, "cannot bind " + host + ":" +
                                         std::to_string(port));
  }
  std::fprintf(stderr, "registry listening on %s:%d (store: %s)\n",
               host.c_str(), bound, store_dir.c_str());
  return server.serve() ? 0 : 1;
}

int cmd_registry_publish(const std::string& store_dir,
                         const std::string& doc_path,
                         const std::string& signatures_path,
                         const std::string& link_path,
                         const std::string& at_text, bool machine) {
  RegistryStore store = load_store_or_empty(store_dir);
  const AgentFactsDoc doc = load_doc(doc_path);
  std::vector<SignatureBlock> signatures;
  if (!signatures_path.empty()) {
    signatures = load_signature_blocks(signatures_path);
  }
  std::optional<VersionLink> link;
  if (!link_path.empty()) {
    link = VersionLink::from_json(parse_json_text(read_text_file(link_path)),
                                  "/link");
  }
  const Ack ack = publish(store, doc, signatures, link, at_or_now(at_text));
  save_store(store, store_dir);
  if (machine) {
    json out = json::object();
    out["head_seq"] = ack.head_seq;
    emit(out);
  } else {
    say("published " + doc.identity.agent_id + " at seq " +
        std::to_string(ack.head_seq));
  }
  return 0;
}

int cmd_registry_fetch(const std::string& store_dir, const std::string& agent,
                       const std::string& policy_path,
                       std::int64_t max_staleness, const std::string& at_text,
                       bool paranoid, bool machine) {
  const RegistryStore store = load_store_or_empty(store_dir);
  TrustPolicy policy;
  if (!policy_path.empty()) {
    policy = TrustPolicy::parse(read_text_file(policy_path));
  }
  const FetchResult result =
      fetch(store, agent, max_staleness, policy, at_or_now(at_text), paranoid);
  if (machine) {
    emit(result.to_json());
  } else {
    say(agent + " at seq " + std::to_string(result.head_seq) + " (" +
        std::string(to_token(result.provenance)) + ", age " +
        std::to_string(result.cache_age) + "s)");
    say("freshness: " +
        std::string(to_token(result.freshness.document_status)));
    if (result.verdict.has_value()) {
      say("trust: " + std::string(to_token(result.verdict->overall)));
    } else {
      say("trust: not evaluated (cache older than --max-staleness)");
    }
  }
  return 0;
}

int cmd_registry_subscribe(const std::string& store_dir,
                           const std::string& agent, const std::string& url,
                           bool machine) {
  RegistryStore store = load_store_or_empty(store_dir);
  const SubscriptionId id = subscribe(store, agent, url);
  save_store(store, store_dir);
  if (machine) {
    json out = json::object();
    out["subscription_id"] = id;
    emit(out);
  } else {
    say("subscription " + std::to_string(id) + " for " + agent);
  }
  return 0;
}

int cmd_registry_deliver(const std::string& store_dir, int timeout_seconds,
                         bool machine) {
  RegistryStore store = load_store_or_empty(store_dir);
  HttpWebhookTransport transport(timeout_seconds);
  const DeliveryReport report = deliver_pending(store, transport);
  save_store(store, store_dir);
  if (machine) {
    emit(report.to_json());
  } else {
    for (const DeliveryOutcome& o : report.outcomes) {
      say(o.webhook_url + ": " + std::string(to_token(o.state)) + " (http " +
          std::to_string(o.http_status) + ", attempt " +
          std::to_string(o.attempts) + ")");
    }
    say(std::to_string(report.delivered_count()) + "/" +
        std::to_string(report.outcomes.size()) + " delivered");
  }
  return 0;
}

int cmd_registry_add_authority(const std::string& store_dir,
                               const std::string& authority_path,
                               bool machine) {
  RegistryStore store = load_store_or_empty(store_dir);
  const AuthorityRecord rec = AuthorityRecord::from_json(
      parse_json_text(read_text_file(authority_path)), "/authority");
  store.authority_registry[rec.authority_id] = rec;
  save_store(store, store_dir);
  if (machine) {
    emit(rec.to_json());
  } else {
    say("registered authority " + rec.authority_id);
  }
  return 0;
}

}  // namespace
}  // namespace agentfacts::cli

int main(int argc, char** argv) {
  using namespace agentfacts;
  using namespace agentfacts::cli;

  CLI::App app{"agentfacts — verifiable agent metadata toolkit"};
  app.require_subcommand(1);
  app.fallthrough(true);

  bool machine = false;
  app.add_flag("--machine", machine,
               "print one machine-readable JSON object on stdout");

  // validate
  std::string doc_path;
  auto* validate_cmd =
      app.add_subcommand("validate", "check a document against the schema");
  validate_cmd->add_option("doc", doc_path, "document file")->required();

  // view
  std::string view_doc, view_audience, view_out;
  auto* view_cmd =
      app.add_subcommand("view", "project a document for one audience");
  view_cmd->add_option("doc", view_doc)->required();
  view_cmd->add_option("--audience", view_audience,
                       "enterprise | consumer | government")
      ->required();
  view_cmd->add_option("-o,--out", view_out, "output file (default stdout)");

  // canon
  std::string canon_doc, canon_out;
  auto* canon_cmd = app.add_subcommand(
      "canon", "print the canonical signing encoding of a document");
  canon_cmd->add_option("doc", canon_doc)->required();
  canon_cmd->add_option("-o,--out", canon_out);

  // keygen
  std::string kg_keystore, kg_alg = "ed25519", kg_name, kg_domains,
              kg_authorities, kg_seed;
  auto* keygen_cmd =
      app.add_subcommand("keygen", "generate an authority key pair");
  keygen_cmd->add_option("--keystore", kg_keystore, "keystore file")
      ->required();
  keygen_cmd->add_option("--algorithm", kg_alg,
                         "ed25519 | ecdsa-p256 | rsa-pss-2048");
  keygen_cmd->add_option("--name", kg_name, "display name");
  keygen_cmd->add_option("--domains", kg_domains, "comma-separated domains");
  keygen_cmd->add_option("--authorities", kg_authorities,
                         "authorities file to append the public record to");
  keygen_cmd->add_option("--seed", kg_seed,
                         "64 hex chars; deterministic ed25519 key");

  // sign
  std::string sg_doc, sg_sections, sg_authority, sg_keystore, sg_authorities,
      sg_at, sg_out;
  double sg_confidence = 0.0;
  auto* sign_cmd =
      app.add_subcommand("sign", "sign sections and attach the signature");
  sign_cmd->add_option("doc", sg_doc)->required();
  sign_cmd->add_option("--sections", sg_sections, "comma-separated section names")
      ->required();
  sign_cmd->add_option("--confidence", sg_confidence, "confidence in [0,1]")
      ->required();
  sign_cmd->add_option("--authority", sg_authority, "signing authority id")
      ->required();
  sign_cmd->add_option("--keystore", sg_keystore)->required();
  sign_cmd->add_option("--authorities", sg_authorities,
                       "authorities file (display metadata lookup)");
  sign_cmd->add_option("--at", sg_at, "signing time (rfc3339, default now)");
  sign_cmd->add_option("-o,--out", sg_out, "write the signed document here");

  // verify-sig
  std::string vs_doc, vs_authorities, vs_revocations, vs_at;
  std::int64_t vs_index = -1;
  auto* verify_sig_cmd = app.add_subcommand(
      "verify-sig", "verify the signatures attached to a document");
  verify_sig_cmd->add_option("doc", vs_doc)->required();
  verify_sig_cmd->add_option("--authorities", vs_authorities)->required();
  verify_sig_cmd->add_option("--revocations", vs_revocations);
  verify_sig_cmd->add_option("--at", vs_at);
  verify_sig_cmd->add_option("--index", vs_index,
                             "verify one signature (default: all)");

  // revoke
  std::string rv_keystore, rv_issuer, rv_target, rv_ref, rv_reason, rv_file,
      rv_authorities, rv_at;
  auto* revoke_cmd =
      app.add_subcommand("revoke", "issue a signature or authority revocation");
  revoke_cmd->add_option("--keystore", rv_keystore)->required();
  revoke_cmd->add_option("--issuer", rv_issuer, "issuing authority id")
      ->required();
  revoke_cmd->add_option("--target", rv_target, "signature | authority")
      ->required();
  revoke_cmd->add_option("--target-ref", rv_ref,
                         "signature digest or authority id")
      ->required();
  revoke_cmd->add_option("--reason", rv_reason)->required();
  revoke_cmd->add_option("--revocations", rv_file, "revocation list to append")
      ->required();
  revoke_cmd->add_option("--authorities", rv_authorities);
  revoke_cmd->add_option("--at", rv_at);

  // trust-eval (alias: verify)
  std::string te_doc, te_policy, te_authorities, te_revocations, te_at;
  auto* trust_cmd = app.add_subcommand(
      "trust-eval", "evaluate a trust policy against a document");
  trust_cmd->alias("verify");
  trust_cmd->add_option("doc", te_doc)->required();
  trust_cmd->add_option("--policy", te_policy)->required();
  trust_cmd->add_option("--authorities", te_authorities)->required();
  trust_cmd->add_option("--revocations", te_revocations);
  trust_cmd->add_option("--at", te_at);

  // freshness
  std::string fr_doc, fr_policy, fr_at;
  bool fr_plan = false;
  auto* fresh_cmd =
      app.add_subcommand("freshness", "per-section TTL freshness report");
  fresh_cmd->add_option("doc", fr_doc)->required();
  fresh_cmd->add_option("--staleness-policy", fr_policy);
  fresh_cmd->add_option("--at", fr_at);
  fresh_cmd->add_flag("--plan", fr_plan, "include the refresh plan");

  // chain
  auto* chain_cmd =
      app.add_subcommand("chain", "hash-linked version history operations");
  chain_cmd->require_subcommand(1);
  std::string ca_dir, ca_next, ca_keystore, ca_provider, ca_authorities, ca_at;
  auto* chain_append_cmd =
      chain_cmd->add_subcommand("append", "append a revision to a chain");
  chain_append_cmd->add_option("next", ca_next, "next revision document")
      ->required();
  chain_append_cmd->add_option("--dir", ca_dir, "chain directory")->required();
  chain_append_cmd->add_option("--keystore", ca_keystore);
  chain_append_cmd->add_option("--provider", ca_provider, "provider authority id");
  chain_append_cmd->add_option("--authorities", ca_authorities);
  chain_append_cmd->add_option("--at", ca_at);
  std::string cv_dir, cv_provider, cv_authorities;
  auto* chain_verify_cmd =
      chain_cmd->add_subcommand("verify", "verify a stored chain");
  chain_verify_cmd->add_option("--dir", cv_dir)->required();
  chain_verify_cmd->add_option("--provider", cv_provider)->required();
  chain_verify_cmd->add_option("--authorities", cv_authorities)->required();

  // perms
  auto* perms_cmd =
      app.add_subcommand("perms", "permission lifecycle operations");
  perms_cmd->require_subcommand(1);
  std::string pg_state, pg_grant, pg_actor, pg_at, pg_out;
  auto* perms_grant_cmd = perms_cmd->add_subcommand("grant", "issue a grant");
  perms_grant_cmd->add_option("state", pg_state, "permission state file")
      ->required();
  perms_grant_cmd->add_option("--grant", pg_grant, "grant request file")
      ->required();
  perms_grant_cmd->add_option("--actor", pg_actor)->required();
  perms_grant_cmd->add_option("--at", pg_at);
  perms_grant_cmd->add_option("-o,--out", pg_out, "default: rewrite in place");
  std::string pc_state, pc_action, pc_resource, pc_at, pc_jurisdiction, pc_out;
  std::int64_t pc_hour = -1;
  bool pc_reviewer = false;
  auto* perms_check_cmd =
      perms_cmd->add_subcommand("check", "check one access");
  perms_check_cmd->add_option("state", pc_state)->required();
  perms_check_cmd->add_option("--action", pc_action,
                              "read | write | execute | admin")
      ->required();
  perms_check_cmd->add_option("--resource", pc_resource)->required();
  perms_check_cmd->add_option("--at", pc_at);
  perms_check_cmd->add_option("--hour", pc_hour,
                              "local hour 0-23 (default: utc hour of --at)");
  perms_check_cmd->add_option("--jurisdiction", pc_jurisdiction);
  perms_check_cmd->add_flag("--reviewer", pc_reviewer,
                            "a human reviewer is present");
  perms_check_cmd->add_option("-o,--out", pc_out);
  std::string pe_state, pe_grant, pe_approver, pe_schedule, pe_at, pe_out;
  auto* perms_escalate_cmd =
      perms_cmd->add_subcommand("escalate", "issue an elevated grant");
  perms_escalate_cmd->add_option("state", pe_state)->required();
  perms_escalate_cmd->add_option("--grant", pe_grant);
  perms_escalate_cmd->add_option("--approver", pe_approver);
  perms_escalate_cmd->add_option("--schedule", pe_schedule,
                                 "apply schedule entries due by --at");
  perms_escalate_cmd->add_option("--at", pe_at);
  perms_escalate_cmd->add_option("-o,--out", pe_out);
  std::string pr_state, pr_at, pr_out;
  auto* perms_revert_cmd =
      perms_cmd->add_subcommand("revert", "expire overdue grants");
  perms_revert_cmd->add_option("state", pr_state)->required();
  perms_revert_cmd->add_option("--at", pr_at);
  perms_revert_cmd->add_option("-o,--out", pr_out);
  std::string pa_state;
  auto* perms_audit_cmd =
      perms_cmd->add_subcommand("audit-verify", "verify the audit hash chain");
  perms_audit_cmd->add_option("state", pa_state)->required();

  // registry
  auto* registry_cmd =
      app.add_subcommand("registry", "publish/fetch/subscribe registry node");
  registry_cmd->require_subcommand(1);
  std::string rs_store, rs_host = "127.0.0.1";
  int rs_port = 8080;
  auto* registry_serve_cmd =
      registry_cmd->add_subcommand("serve", "serve the wire protocol");
  registry_serve_cmd->add_option("--store", rs_store)->required();
  registry_serve_cmd->add_option("--host", rs_host);
  registry_serve_cmd->add_option("--port", rs_port, "0 picks a free port");
  std::string rp_store, rp_doc, rp_signatures, rp_link, rp_at;
  auto* registry_publish_cmd =
      registry_cmd->add_subcommand("publish", "accept a revision locally");
  registry_publish_cmd->add_option("--store", rp_store)->required();
  registry_publish_cmd->add_option("--doc", rp_doc)->required();
  registry_publish_cmd->add_option("--signatures", rp_signatures,
                                   "detached signature blocks file");
  registry_publish_cmd->add_option("--link", rp_link, "version link file");
  registry_publish_cmd->add_option("--at", rp_at);
  std::string rf_store, rf_agent, rf_policy, rf_at;
  std::int64_t rf_staleness = std::numeric_limits<std::int64_t>::max();
  bool rf_paranoid = false;
  auto* registry_fetch_cmd =
      registry_cmd->add_subcommand("fetch", "serve the cached head");
  registry_fetch_cmd->add_option("--store", rf_store)->required();
  registry_fetch_cmd->add_option("--agent", rf_agent)->required();
  registry_fetch_cmd->add_option("--policy", rf_policy);
  registry_fetch_cmd->add_option("--max-staleness", rf_staleness,
                                 "seconds of cache age a verdict may rest on");
  registry_fetch_cmd->add_option("--at", rf_at);
  registry_fetch_cmd->add_flag("--paranoid", rf_paranoid,
                               "re-verify the stored chain first");
  std::string rb_store, rb_agent, rb_url;
  auto* registry_subscribe_cmd =
      registry_cmd->add_subcommand("subscribe", "register a webhook");
  registry_subscribe_cmd->add_option("--store", rb_store)->required();
  registry_subscribe_cmd->add_option("--agent", rb_agent)->required();
  registry_subscribe_cmd->add_option("--url", rb_url)->required();
  std::string rd_store;
  int rd_timeout = 5;
  auto* registry_deliver_cmd = registry_cmd->add_subcommand(
      "deliver", "attempt every pending webhook notification once");
  registry_deliver_cmd->add_option("--store", rd_store)->required();
  registry_deliver_cmd->add_option("--timeout", rd_timeout, "seconds");
  std::string ra_store, ra_authority;
  auto* registry_add_auth_cmd = registry_cmd->add_subcommand(
      "add-authority", "register a verification authority");
  registry_add_auth_cmd->add_option("--store", ra_store)->required();
  registry_add_auth_cmd->add_option("--authority", ra_authority,
                                    "authority record file")
      ->required();

  // demo
  auto* demo_cmd =
      app.add_subcommand("demo", "runnable end-to-end scenarios");
  demo_cmd->require_subcommand(1);
  bool demo_tamper = false, demo_freeze = false;
  auto* demo_employee_cmd = demo_cmd->add_subcommand(
      "employee-agent", "onboard, trust, escalate, revert, audit");
  demo_employee_cmd->add_flag("--tamper-compliance", demo_tamper,
                              "corrupt a signed section before evaluation");
  demo_employee_cmd->add_flag("--freeze-clock", demo_freeze,
                              "stop the clock before the deadline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(doc_path, machine);
    if (view_cmd->parsed()) return cmd_view(view_doc, view_audience, view_out);
    if (canon_cmd->parsed()) return cmd_canon(canon_doc, canon_out);
    if (keygen_cmd->parsed()) {
      return cmd_keygen(kg_keystore, kg_alg, kg_name, kg_domains,
                        kg_authorities, kg_seed, machine);
    }
    if (sign_cmd->parsed()) {
      return cmd_sign(sg_doc, sg_sections, sg_confidence, sg_authority,
                      sg_keystore, sg_authorities, sg_at, sg_out, machine);
    }
    if (verify_sig_cmd->parsed()) {
      return cmd_verify_sig(vs_doc, vs_authorities, vs_revocations, vs_at,
                            vs_index, machine);
    }
    if (revoke_cmd->parsed()) {
      return cmd_revoke(rv_keystore, rv_issuer, rv_target, rv_ref, rv_reason,
                        rv_file, rv_authorities, rv_at, machine);
    }
    if (trust_cmd->parsed()) {
      return cmd_trust_eval(te_doc, te_policy, te_authorities, te_revocations,
                            te_at, machine);
    }
    if (fresh_cmd->parsed()) {
      return cmd_freshness(fr_doc, fr_policy, fr_at, fr_plan, machine);
    }
    if (chain_append_cmd->parsed()) {
      return cmd_chain_append(ca_dir, ca_next, ca_keystore, ca_provider,
                              ca_authorities, ca_at, machine);
    }
    if (chain_verify_cmd->parsed()) {
      return cmd_chain_verify(cv_dir, cv_provider, cv_authorities, machine);
    }
    if (perms_grant_cmd->parsed()) {
      return cmd_perms_grant(pg_state, pg_grant, pg_actor, pg_at, pg_out,
                             machine);
    }
    if (perms_check_cmd->parsed()) {
      return cmd_perms_check(pc_state, pc_action, pc_resource, pc_at, pc_hour,
                             pc_jurisdiction, pc_reviewer, pc_out, machine);
    }
    if (perms_escalate_cmd->parsed()) {
      return cmd_perms_escalate(pe_state, pe_grant, pe_approver, pe_schedule,
                                pe_at, pe_out, machine);
    }
    if (perms_revert_cmd->parsed()) {
      return cmd_perms_revert(pr_state, pr_at, pr_out, machine);
    }
    if (perms_audit_cmd->parsed()) {
      return cmd_perms_audit_verify(pa_state, machine);
    }
    if (registry_serve_cmd->parsed()) {
      return cmd_registry_serve(rs_store, rs_host, rs_port);
    }
    if (registry_publish_cmd->parsed()) {
      return cmd_registry_publish(rp_store, rp_doc, rp_signatures, rp_link,
                                  rp_at, machine);
    }
    if (registry_fetch_cmd->parsed()) {
      return cmd_registry_fetch(rf_store, rf_agent, rf_policy, rf_staleness,
                                rf_at, rf_paranoid, machine);
    }
    if (registry_subscribe_cmd->parsed()) {
      return cmd_registry_subscribe(rb_store, rb_agent, rb_url, machine);
    }
    if (registry_deliver_cmd->parsed()) {
      return cmd_registry_deliver(rd_store, rd_timeout, machine);
    }
    if (registry_add_auth_cmd->parsed()) {
      return cmd_registry_add_authority(ra_store, ra_authority, machine);
    }
    if (demo_employee_cmd->parsed()) {
      DemoOptions options;
      options.tamper_compliance = demo_tamper;
      options.freeze_clock = demo_freeze;
      options.machine = machine;
      return run_employee_agent_demo(options);
    }
  } catch (const Error& e) {
    if (machine) {
      json err = json::object();
      err["kind"] = std::string(to_string(e.kind()));
      if (!e.path().empty()) err["path"] = e.path();
      err["message"] = e.what();
      json out = json::object();
      out["error"] = std::move(err);
      emit(out);
    }
    std::fprintf(stderr, "agentfacts: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "agentfacts: %s\n", e.what());
    return 1;
  }
  return 2;
}

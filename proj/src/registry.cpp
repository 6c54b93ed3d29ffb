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

#include "agentfacts/registry.hpp"

#include <algorithm>
#include <filesystem>

#include "agentfacts/canonical.hpp"
#include "agentfacts/document_io.hpp"
#include "agentfacts/errors.hpp"
#include "agentfacts/fsio.hpp"
#include "agentfacts/validation.hpp"

namespace agentfacts {

namespace fs = std::filesystem;

namespace {

/// Filesystem key for an agent: identifier syntax is unconstrained, so
/// directory names come from a hash instead.
std::string agent_dir_key(const std::string& agent_id) {
  return sha256_digest(to_bytes(agent_id)).hex().substr(0, 16);
}

const AuthorityRecord& require_provider(const RegistryStore& store,
                                        const std::string& provider_id) {
  auto it = store.authority_registry.find(provider_id);
  if (it == store.authority_registry.end()) {
    throw Error(ErrorKind::chain_mismatch,
                "provider " + provider_id + " is not a registered authority");
  }
  return it->second;
}

}  // namespace

Ack publish(RegistryStore& store, const AgentFactsDoc& doc,
            const std::vector<SignatureBlock>& signatures,
            const std::optional<VersionLink>& link, Timestamp now) {
  const ValidationReport report = validate_document(doc);
  if (!report.ok()) {
    for (const Finding& f : report.findings) {
      if (f.severity == Severity::error) {
        throw Error(ErrorKind::validation_failed, f.path, f.message);
      }
    }
  }

  const std::string& agent_id = doc.identity.agent_id;
  auto it = store.records.find(agent_id);

  if (it == store.records.end()) {
    // Genesis: the agent introduces itself. There is no prior head to link
    // from, so the only acceptable shape is version_seq 0 with no link.
    if (link.has_value()) {
      throw Error(ErrorKind::chain_mismatch,
                  "unknown agent: a first revision carries no link");
    }
    if (doc.identity.version_seq != 0) {
      throw Error(ErrorKind::chain_mismatch,
                  "first revision must have version_seq 0, got " +
                      std::to_string(doc.identity.version_seq));
    }
    AgentRecord rec;
    rec.versions.push_back(doc);
    rec.signatures = signatures;
    rec.cached_at = now;
    store.records.emplace(agent_id, std::move(rec));
    return Ack{0};
  }

  AgentRecord& rec = it->second;
  if (!link.has_value()) {
    throw Error(ErrorKind::chain_mismatch,
                "revision " + std::to_string(doc.identity.version_seq) +
                    " of a known agent requires a link from the current head");
  }
  if (!rec.provider_id.empty() && link->provider_id != rec.provider_id) {
    throw Error(ErrorKind::chain_mismatch,
                "provider changed mid-chain: expected " + rec.provider_id +
                    ", link names " + link->provider_id);
  }
  const AuthorityRecord& provider = require_provider(store, link->provider_id);

  const std::vector<AgentFactsDoc> docs = {rec.head(), doc};
  const std::vector<VersionLink> links = {*link};
  const ChainReport chain = verify_chain(docs, links, provider);
  if (!chain.accepted) {
    throw Error(ErrorKind::chain_mismatch, chain.reason);
  }

  rec.versions.push_back(doc);
  rec.links.push_back(*link);
  rec.signatures.insert(rec.signatures.end(), signatures.begin(),
                        signatures.end());
  rec.cached_at = now;
  rec.provider_id = link->provider_id;

  auto subs = store.subscriptions.find(agent_id);
  if (subs != store.subscriptions.end()) {
    for (const std::string& url : subs->second) {
      store.notifications.push_back(
          UpdateNotification{*link, url, DeliveryState::pending, 0});
    }
  }
  return Ack{doc.identity.version_seq};
}

json FetchResult::to_json() const {
  json v = json::object();
  v["cache_age"] = cache_age;
  v["doc"] = document_json(doc, JsonMode::display);
  v["freshness"] = freshness.to_json();
  v["head_seq"] = head_seq;
  v["provenance"] = std::string(to_token(provenance));
  if (verdict.has_value()) v["verdict"] = verdict->to_json();
  return v;
}

FetchResult fetch(const RegistryStore& store, const std::string& agent_id,
                  std::int64_t max_staleness, const TrustPolicy& policy,
                  Timestamp now, bool paranoid) {
  auto it = store.records.find(agent_id);
  if (it == store.records.end()) {
    throw Error(ErrorKind::unknown_agent, "no record for " + agent_id);
  }
  const AgentRecord& rec = it->second;

  if (paranoid && !rec.links.empty()) {
    const AuthorityRecord& provider = require_provider(store, rec.provider_id);
    const ChainReport chain = verify_chain(rec.versions, rec.links, provider);
    if (!chain.accepted) {
      throw Error(ErrorKind::chain_mismatch,
                  "stored history no longer verifies: " + chain.reason);
    }
  }

  FetchResult out;
  out.doc = rec.head();
  out.cache_age =
      std::max<std::int64_t>(0, now.epoch_seconds() -
                                    rec.cached_at.epoch_seconds());
  out.provenance = out.cache_age == 0 ? Provenance::live : Provenance::cache;
  out.freshness = freshness(rec.head(), now, StalenessPolicy{});
  out.head_seq = rec.head_seq();
  if (out.cache_age <= max_staleness) {
    out.verdict = evaluate_trust(rec.head(), policy, store.authority_registry,
                                 store.revocations, now);
  }
  return out;
}

SubscriptionId subscribe(RegistryStore& store, const std::string& agent_id,
                         const std::string& webhook_url) {
  parse_url(webhook_url);  // reject malformed URLs before any lookup
  if (store.records.find(agent_id) == store.records.end()) {
    throw Error(ErrorKind::unknown_agent, "no record for " + agent_id);
  }
  std::vector<std::string>& urls = store.subscriptions[agent_id];
  urls.push_back(webhook_url);
  return static_cast<SubscriptionId>(urls.size() - 1);
}

std::size_t DeliveryReport::delivered_count() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) {
        return o.state == DeliveryState::delivered;
      }));
}

json DeliveryReport::to_json() const {
  json list = json::array();
  for (const DeliveryOutcome& o : outcomes) {
    json v = json::object();
    v["attempts"] = o.attempts;
    v["http_status"] = o.http_status;
    v["state"] = std::string(to_token(o.state));
    v["webhook_url"] = o.webhook_url;
    list.push_back(std::move(v));
  }
  json out = json::object();
  out["delivered"] = static_cast<std::int64_t>(delivered_count());
  out["outcomes"] = std::move(list);
  return out;
}

DeliveryReport deliver_pending(RegistryStore& store,
                               WebhookTransport& transport) {
  DeliveryReport report;
  for (UpdateNotification& n : store.notifications) {
    if (n.delivery_state == DeliveryState::delivered) continue;
    json body = json::object();
    body["head_seq"] = n.link.to_seq;
    body["link"] = n.link.to_json();
    const int status = transport.post_json(n.webhook_url, body);
    n.attempts += 1;
    n.delivery_state = (status >= 200 && status < 300)
                           ? DeliveryState::delivered
                           : DeliveryState::failed;
    report.outcomes.push_back(
        DeliveryOutcome{n.webhook_url, n.delivery_state, n.attempts, status});
  }
  return report;
}

std::size_t sync(RegistryStore& dst, const RegistryStore& src, Timestamp now) {
  for (const auto& [id, authority] : src.authority_registry) {
    dst.authority_registry.emplace(id, authority);  // never overwrites
  }
  for (const RevocationEntry& entry : src.revocations) {
    if (std::find(dst.revocations.begin(), dst.revocations.end(), entry) ==
        dst.revocations.end()) {
      dst.revocations.push_back(entry);
    }
  }

  std::size_t applied = 0;
  for (const auto& [agent_id, srec] : src.records) {
    for (std::size_t i = 0; i < srec.versions.size(); ++i) {
      const AgentFactsDoc& doc = srec.versions[i];
      const std::int64_t seq = doc.identity.version_seq;
      auto dit = dst.records.find(agent_id);
      if (dit != dst.records.end() && dit->second.head_seq() >= seq) {
        continue;  // dst already has this revision (first writer wins)
      }
      std::vector<SignatureBlock> sigs;
      for (const SignatureBlock& block : srec.signatures) {
        if (block.version_seq == seq) sigs.push_back(block);
      }
      std::optional<VersionLink> link;
      if (i > 0) link = srec.links[i - 1];
      try {
        publish(dst, doc, sigs, link, now);
        ++applied;
      } catch (const Error&) {
        break;  // divergent or unverifiable history: leave dst as it was
      }
    }
  }
  return applied;
}

// -- persistence ---------------------------------------------------------------

void save_store(const RegistryStore& store, const std::string& dir) {
  ensure_directory(dir);

  json authorities = json::array();
  for (const auto& [id, rec] : store.authority_registry) {
    authorities.push_back(rec.to_json());
  }
  write_text_file((fs::path(dir) / "authorities.json").string(),
                  authorities.dump(2) + "\n");

  json revocations = json::array();
  for (const RevocationEntry& entry : store.revocations) {
    revocations.push_back(entry.to_json());
  }
  write_text_file((fs::path(dir) / "revocations.json").string(),
                  revocations.dump(2) + "\n");

  json notifications = json::array();
  for (const UpdateNotification& n : store.notifications) {
    notifications.push_back(n.to_json());
  }
  write_text_file((fs::path(dir) / "notifications.json").string(),
                  notifications.dump(2) + "\n");

  const fs::path agents = fs::path(dir) / "agents";
  ensure_directory(agents.string());
  for (const auto& [agent_id, rec] : store.records) {
    const fs::path adir = agents / agent_dir_key(agent_id);
    save_chain(adir.string(), rec.versions, rec.links);

    json sigs = json::array();
    for (const SignatureBlock& block : rec.signatures) {
      sigs.push_back(block.to_json(false));
    }
    write_text_file((adir / "signatures.json").string(), sigs.dump(2) + "\n");

    json subs = json::array();
    auto sit = store.subscriptions.find(agent_id);
    if (sit != store.subscriptions.end()) {
      for (const std::string& url : sit->second) subs.push_back(url);
    }
    write_text_file((adir / "subscriptions.json").string(),
                    subs.dump(2) + "\n");

    json meta = json::object();
    meta["agent_id"] = agent_id;
    meta["cached_at"] = timestamp_json(rec.cached_at);
    meta["provider_id"] = rec.provider_id;
    write_text_file((adir / "meta.json").string(), meta.dump(2) + "\n");
  }
}

RegistryStore load_store(const std::string& dir) {
  RegistryStore store;

  const fs::path root(dir);
  if (path_exists((root / "authorities.json").string())) {
    const json arr = parse_json_text(read_text_file(
        (root / "authorities.json").string()));
    std::size_t i = 0;
    for (const json& v : as_array(arr, "/authorities")) {
      AuthorityRecord rec =
          AuthorityRecord::from_json(v, "/authorities/" + std::to_string(i++));
      store.authority_registry.emplace(rec.authority_id, std::move(rec));
    }
  }
  if (path_exists((root / "revocations.json").string())) {
    const json arr = parse_json_text(read_text_file(
        (root / "revocations.json").string()));
    std::size_t i = 0;
    for (const json& v : as_array(arr, "/revocations")) {
      store.revocations.push_back(
          RevocationEntry::from_json(v, "/revocations/" + std::to_string(i++)));
    }
  }
  if (path_exists((root / "notifications.json").string())) {
    const json arr = parse_json_text(read_text_file(
        (root / "notifications.json").string()));
    std::size_t i = 0;
    for (const json& v : as_array(arr, "/notifications")) {
      store.notifications.push_back(UpdateNotification::from_json(
          v, "/notifications/" + std::to_string(i++)));
    }
  }

  const fs::path agents = root / "agents";
  if (!path_exists(agents.string())) return store;
  std::error_code ec;
  std::vector<fs::path> dirs;
  for (fs::directory_iterator it(agents, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_directory()) dirs.push_back(it->path());
  }
  if (ec) {
    throw Error(ErrorKind::io_error,
                "cannot list " + agents.string() + ": " + ec.message());
  }
  std::sort(dirs.begin(), dirs.end());

  for (const fs::path& adir : dirs) {
    const json meta = parse_json_text(read_text_file(
        (adir / "meta.json").string()));
    ObjReader r(meta, "/meta");
    AgentRecord rec;
    const std::string agent_id = r.require_string("agent_id");
    rec.cached_at = r.require_timestamp("cached_at");
    rec.provider_id = r.optional_string("provider_id");
    r.finish();

    auto [versions, links] = load_chain(adir.string());
    rec.versions = std::move(versions);
    rec.links = std::move(links);

    if (path_exists((adir / "signatures.json").string())) {
      const json arr = parse_json_text(read_text_file(
          (adir / "signatures.json").string()));
      std::size_t i = 0;
      for (const json& v : as_array(arr, "/signatures")) {
        rec.signatures.push_back(
            SignatureBlock::from_json(v, "/signatures/" + std::to_string(i++)));
      }
    }
    if (path_exists((adir / "subscriptions.json").string())) {
      const json arr = parse_json_text(read_text_file(
          (adir / "subscriptions.json").string()));
      std::vector<std::string> urls;
      for (const json& v : as_array(arr, "/subscriptions")) {
        urls.push_back(as_string(v, "/subscriptions"));
      }
      if (!urls.empty()) store.subscriptions.emplace(agent_id, std::move(urls));
    }
    if (rec.versions.empty()) {
      throw Error(ErrorKind::io_error,
                  "agent directory " + adir.string() + " holds no revisions");
    }
    store.records.emplace(agent_id, std::move(rec));
  }
  return store;
}

}  // namespace agentfacts

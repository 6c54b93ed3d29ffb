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

#include "agentfacts/registry_http.hpp"

#include <algorithm>
#include <mutex>

#include "agentfacts/document_io.hpp"
#include "agentfacts/errors.hpp"
#include "agentfacts/keys.hpp"
#include "agentfacts/signature.hpp"
#include "httplib.h"

namespace agentfacts {

namespace {

WireResponse json_response(int status, const json& v) {
  return WireResponse{status, v.dump(2) + "\n"};
}

WireResponse error_response(int status, const std::string& kind,
                            const std::string& message) {
  json err = json::object();
  err["kind"] = kind;
  err["message"] = message;
  json body = json::object();
  body["error"] = std::move(err);
  return json_response(status, body);
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unknown_agent:
      return 404;
    case ErrorKind::chain_mismatch:
      return 409;
    case ErrorKind::io_error:
      return 500;
    default:
      return 400;  // the caller sent something the library rejected
  }
}

WireResponse not_found(const std::string& what) {
  return error_response(404, "not_found", what);
}

std::vector<std::string> split_path(const std::string& target) {
  std::vector<std::string> segments;
  std::size_t start = 0;
  while (start < target.size()) {
    std::size_t slash = target.find('/', start);
    if (slash == std::string::npos) slash = target.size();
    if (slash > start) segments.push_back(target.substr(start, slash - start));
    start = slash + 1;
  }
  return segments;
}

const AgentRecord& require_record(const RegistryStore& store,
                                  const std::string& agent_id) {
  auto it = store.records.find(agent_id);
  if (it == store.records.end()) {
    throw Error(ErrorKind::unknown_agent, "no record for " + agent_id);
  }
  return it->second;
}

WireResponse get_facts(const RegistryStore& store, const std::string& agent_id,
                       Timestamp now) {
  const AgentRecord& rec = require_record(store, agent_id);
  json v = json::object();
  v["doc"] = document_json(rec.head(), JsonMode::display);
  v["freshness"] = freshness(rec.head(), now, StalenessPolicy{}).to_json();
  v["head_seq"] = rec.head_seq();
  json sigs = json::array();
  for (const SignatureBlock& block : rec.signatures) {
    if (block.version_seq == rec.head_seq()) sigs.push_back(block.to_json(false));
  }
  v["signatures"] = std::move(sigs);
  return json_response(200, v);
}

WireResponse get_revision(const RegistryStore& store,
                          const std::string& agent_id,
                          const std::string& seq_text) {
  const AgentRecord& rec = require_record(store, agent_id);
  if (seq_text.empty() ||
      !std::all_of(seq_text.begin(), seq_text.end(),
                   [](char c) { return c >= '0' && c <= '9'; }) ||
      seq_text.size() > 18) {
    return not_found("no such revision: " + seq_text);
  }
  const std::int64_t seq = std::stoll(seq_text);
  // Revisions are contiguous from 0, so the sequence number is the index.
  if (seq >= static_cast<std::int64_t>(rec.versions.size())) {
    return not_found(agent_id + " has no revision " + seq_text);
  }
  json v = json::object();
  v["doc"] = document_json(rec.versions[static_cast<std::size_t>(seq)],
                           JsonMode::display);
  v["seq"] = seq;
  return json_response(200, v);
}

WireResponse get_chain(const RegistryStore& store,
                       const std::string& agent_id) {
  const AgentRecord& rec = require_record(store, agent_id);
  json links = json::array();
  for (const VersionLink& link : rec.links) links.push_back(link.to_json());
  json v = json::object();
  v["agent_id"] = agent_id;
  v["head_seq"] = rec.head_seq();
  v["links"] = std::move(links);
  return json_response(200, v);
}

WireResponse post_facts(RegistryStore& store, const std::string& agent_id,
                        const std::string& body, Timestamp now) {
  const json v = parse_json_text(body);
  ObjReader r(v, "");
  const AgentFactsDoc doc = document_from_json(r.require("doc"));
  std::vector<SignatureBlock> signatures;
  if (const json* arr = r.optional("signatures")) {
    std::size_t i = 0;
    for (const json& s : as_array(*arr, r.child_path("signatures"))) {
      signatures.push_back(SignatureBlock::from_json(
          s, r.child_path("signatures") + "/" + std::to_string(i++)));
    }
  }
  std::optional<VersionLink> link;
  if (const json* lv = r.optional("link")) {
    link = VersionLink::from_json(*lv, r.child_path("link"));
  }
  r.finish();

  if (doc.identity.agent_id != agent_id) {
    throw Error(ErrorKind::invalid_request,
                "path names " + agent_id + " but the document is for " +
                    doc.identity.agent_id);
  }
  const Ack ack = publish(store, doc, signatures, link, now);
  json out = json::object();
  out["head_seq"] = ack.head_seq;
  return json_response(200, out);
}

WireResponse post_subscription(RegistryStore& store,
                               const std::string& agent_id,
                               const std::string& body) {
  const json v = parse_json_text(body);
  ObjReader r(v, "");
  const std::string url = r.require_string("webhook_url");
  r.finish();
  const SubscriptionId id = subscribe(store, agent_id, url);
  json out = json::object();
  out["subscription_id"] = id;
  return json_response(201, out);
}

WireResponse get_authorities(const RegistryStore& store) {
  json list = json::array();
  for (const auto& [id, rec] : store.authority_registry) {
    list.push_back(rec.to_json());
  }
  json v = json::object();
  v["authorities"] = std::move(list);
  return json_response(200, v);
}

WireResponse post_revocation(RegistryStore& store, const std::string& body) {
  const json v = parse_json_text(body);
  const RevocationEntry entry = RevocationEntry::from_json(v, "");
  auto it = store.authority_registry.find(entry.issuer);
  if (it == store.authority_registry.end()) {
    throw Error(ErrorKind::invalid_request,
                "issuer " + entry.issuer + " is not a registered authority");
  }
  const CanonicalBytes signed_bytes = revocation_signing_bytes(entry);
  if (!verify_bytes(it->second.algorithm, it->second.public_key,
                    signed_bytes.bytes, entry.signature)) {
    throw Error(ErrorKind::invalid_request,
                "revocation signature does not verify");
  }
  const bool fresh =
      std::find(store.revocations.begin(), store.revocations.end(), entry) ==
      store.revocations.end();
  if (fresh) store.revocations.push_back(entry);
  json out = json::object();
  out["accepted"] = fresh;
  out["count"] = static_cast<std::int64_t>(store.revocations.size());
  return json_response(200, out);
}

}  // namespace

WireResponse handle_wire_request(RegistryStore& store, const WireRequest& req,
                                 Timestamp now) {
  try {
    auto at = req.query.find("at");
    if (at != req.query.end()) now = Timestamp::parse(at->second);

    const std::vector<std::string> segs = split_path(req.target);
    const bool get = req.method == "GET";
    const bool post = req.method == "POST";

    if (segs.size() == 1 && segs[0] == "authorities" && get) {
      return get_authorities(store);
    }
    if (segs.size() == 1 && segs[0] == "revocations" && post) {
      return post_revocation(store, req.body);
    }
    if (segs.size() >= 3 && segs[0] == "agents") {
      const std::string& agent_id = segs[1];
      if (segs.size() == 3 && segs[2] == "facts") {
        if (get) return get_facts(store, agent_id, now);
        if (post) return post_facts(store, agent_id, req.body, now);
      }
      if (segs.size() == 4 && segs[2] == "facts" && get) {
        return get_revision(store, agent_id, segs[3]);
      }
      if (segs.size() == 3 && segs[2] == "chain" && get) {
        return get_chain(store, agent_id);
      }
      if (segs.size() == 3 && segs[2] == "subscriptions" && post) {
        return post_subscription(store, agent_id, req.body);
      }
    }
    return not_found(req.method + " " + req.target);
  } catch (const Error& e) {
    return error_response(status_for(e.kind()),
                          std::string(to_string(e.kind())), e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

struct RegistryHttpServer::Impl {
  explicit Impl(RegistryStore& s) : store(s) {}

  RegistryStore& store;
  std::mutex mutex;
  std::function<void(RegistryStore&)> on_mutate;
  httplib::Server server;
};

RegistryHttpServer::RegistryHttpServer(RegistryStore& store)
    : impl_(std::make_unique<Impl>(store)) {
  auto handle = [this](const httplib::Request& req, httplib::Response& res) {
    WireRequest wire;
    wire.method = req.method;
    wire.target = req.path;
    for (const auto& [key, value] : req.params) wire.query[key] = value;
    wire.body = req.body;

    WireResponse out;
    {
      std::lock_guard<std::mutex> lock(impl_->mutex);
      out = handle_wire_request(impl_->store, wire, Timestamp::now());
      if (req.method == "POST" && out.status < 300 && impl_->on_mutate) {
        impl_->on_mutate(impl_->store);
      }
    }
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  impl_->server.Get(R"(/.*)", handle);
  impl_->server.Post(R"(/.*)", handle);
}

RegistryHttpServer::~RegistryHttpServer() = default;

void RegistryHttpServer::set_on_mutate(
    std::function<void(RegistryStore&)> hook) {
  impl_->on_mutate = std::move(hook);
}

int RegistryHttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool RegistryHttpServer::serve() { return impl_->server.listen_after_bind(); }

void RegistryHttpServer::stop() { impl_->server.stop(); }

}  // namespace agentfacts

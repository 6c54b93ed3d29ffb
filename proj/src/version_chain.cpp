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

#include "agentfacts/version_chain.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "agentfacts/document_io.hpp"
#include "agentfacts/errors.hpp"
#include "agentfacts/fsio.hpp"

namespace agentfacts {

namespace fs = std::filesystem;

namespace {

std::string revision_filename(std::int64_t seq) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%06lld.af.json",
                static_cast<long long>(seq));
  return buf;
}

}  // namespace

json VersionLink::to_json() const {
  json v = json::object();
  v["agent_id"] = agent_id;
  v["created_at"] = timestamp_json(created_at);
  v["from_seq"] = from_seq;
  v["new_digest"] = new_digest.to_json();
  v["prev_digest"] = prev_digest.to_json();
  v["provider_id"] = provider_id;
  v["provider_signature"] = base64url_encode(provider_signature);
  v["to_seq"] = to_seq;
  return v;
}

VersionLink VersionLink::from_json(const json& v, const std::string& path) {
  ObjReader r(v, path);
  VersionLink link;
  link.agent_id = r.require_string("agent_id");
  link.created_at = r.require_timestamp("created_at");
  link.from_seq = r.require_int("from_seq");
  link.new_digest = Digest::from_json(r.require("new_digest"),
                                      r.child_path("new_digest"));
  link.prev_digest = Digest::from_json(r.require("prev_digest"),
                                       r.child_path("prev_digest"));
  link.provider_id = r.require_string("provider_id");
  try {
    link.provider_signature = base64url_decode(r.require_string("provider_signature"));
  } catch (const Error& e) {
    throw Error(e.kind(), r.child_path("provider_signature"),
                "bad signature encoding");
  }
  link.to_seq = r.require_int("to_seq");
  if (link.to_seq != link.from_seq + 1) {
    throw Error(ErrorKind::seq_gap, r.child_path("to_seq"),
                "to_seq must equal from_seq + 1");
  }
  r.finish();
  return link;
}

CanonicalBytes link_signing_bytes(const VersionLink& link) {
  json v = link.to_json();
  v.erase("provider_signature");
  return canonicalize(v);
}

VersionLink append_version(const AgentFactsDoc& prev, const AgentFactsDoc& next,
                           const PrivateKeyHandle& provider_key,
                           const AuthorityRecord& provider, Timestamp at) {
  if (prev.identity.agent_id != next.identity.agent_id) {
    throw Error(ErrorKind::agent_id_mismatch,
                "revisions name different agents: " + prev.identity.agent_id +
                    " vs " + next.identity.agent_id);
  }
  if (next.identity.version_seq != prev.identity.version_seq + 1) {
    throw Error(ErrorKind::seq_gap,
                "expected version_seq " +
                    std::to_string(prev.identity.version_seq + 1) + ", got " +
                    std::to_string(next.identity.version_seq));
  }
  if (next.identity.last_updated < prev.identity.last_updated) {
    throw Error(ErrorKind::clock_regression,
                "next.last_updated precedes prev.last_updated");
  }
  VersionLink link;
  link.agent_id = prev.identity.agent_id;
  link.from_seq = prev.identity.version_seq;
  link.to_seq = next.identity.version_seq;
  link.prev_digest = digest(canonicalize_document(prev));
  link.new_digest = digest(canonicalize_document(next));
  link.created_at = at;
  link.provider_id = provider.authority_id;
  link.provider_signature = provider_key.sign(link_signing_bytes(link).bytes);
  return link;
}

json ChainReport::to_json() const {
  json v = json::object();
  v["accepted"] = accepted;
  if (failing_link) {
    v["failing_link"] = static_cast<std::int64_t>(*failing_link);
  }
  if (!reason.empty()) v["reason"] = reason;
  return v;
}

ChainReport verify_chain(const std::vector<AgentFactsDoc>& docs,
                         const std::vector<VersionLink>& links,
                         const AuthorityRecord& provider) {
  ChainReport report;
  if (docs.empty()) {
    report.reason = "chain has no documents";
    return report;
  }
  if (links.size() != docs.size() - 1) {
    report.reason = "expected " + std::to_string(docs.size() - 1) +
                    " links for " + std::to_string(docs.size()) +
                    " documents, got " + std::to_string(links.size());
    return report;
  }

  auto fail = [&report](std::size_t i, std::string reason) {
    report.failing_link = i;
    report.reason = std::move(reason);
  };

  for (std::size_t i = 0; i < links.size(); ++i) {
    const VersionLink& link = links[i];
    const AgentFactsDoc& older = docs[i];
    const AgentFactsDoc& newer = docs[i + 1];
    if (link.agent_id != older.identity.agent_id ||
        link.agent_id != newer.identity.agent_id) {
      fail(i, "link names a different agent than its documents");
      return report;
    }
    if (link.from_seq != older.identity.version_seq ||
        link.to_seq != newer.identity.version_seq ||
        link.to_seq != link.from_seq + 1) {
      fail(i, "sequence discontinuity");
      return report;
    }
    if (newer.identity.last_updated < older.identity.last_updated) {
      fail(i, "last_updated regresses across the link");
      return report;
    }
    if (link.provider_id != provider.authority_id) {
      fail(i, "link was issued by a different provider");
      return report;
    }
    if (digest(canonicalize_document(older)) != link.prev_digest) {
      fail(i, "previous document does not match prev_digest");
      return report;
    }
    if (digest(canonicalize_document(newer)) != link.new_digest) {
      fail(i, "new document does not match new_digest");
      return report;
    }
    if (!verify_bytes(provider.algorithm, provider.public_key,
                      link_signing_bytes(link).bytes,
                      link.provider_signature)) {
      fail(i, "provider signature does not verify");
      return report;
    }
  }
  report.accepted = true;
  return report;
}

json UpdateNotification::to_json() const {
  json v = json::object();
  v["attempts"] = attempts;
  v["delivery_state"] = std::string(to_token(delivery_state));
  v["link"] = link.to_json();
  v["webhook_url"] = webhook_url;
  return v;
}

UpdateNotification UpdateNotification::from_json(const json& v,
                                                 const std::string& path) {
  ObjReader r(v, path);
  UpdateNotification n;
  n.attempts = r.optional_int("attempts").value_or(0);
  n.delivery_state = from_token<DeliveryState>(
      r.require_string("delivery_state"), r.child_path("delivery_state"));
  n.link = VersionLink::from_json(r.require("link"), r.child_path("link"));
  n.webhook_url = r.require_string("webhook_url");
  r.finish();
  return n;
}

void save_chain(const std::string& dir, const std::vector<AgentFactsDoc>& docs,
                const std::vector<VersionLink>& links) {
  ensure_directory(dir);
  for (const auto& doc : docs) {
    write_text_file(
        (fs::path(dir) / revision_filename(doc.identity.version_seq)).string(),
        serialize_document(doc));
  }
  json list = json::array();
  for (const auto& link : links) list.push_back(link.to_json());
  write_text_file((fs::path(dir) / "links.json").string(), list.dump(2) + "\n");
}

std::pair<std::vector<AgentFactsDoc>, std::vector<VersionLink>> load_chain(
    const std::string& dir) {
  std::vector<std::string> names;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end;
       it.increment(ec)) {
    std::string name = it->path().filename().string();
    if (name.size() > 8 && name.substr(name.size() - 8) == ".af.json") {
      names.push_back(it->path().string());
    }
  }
  if (ec) {
    throw Error(ErrorKind::io_error, "cannot list " + dir + ": " + ec.message());
  }
  std::sort(names.begin(), names.end());  // zero-padded names sort by seq

  std::vector<AgentFactsDoc> docs;
  for (const auto& name : names) {
    docs.push_back(parse_document(read_text_file(name)));
  }

  std::vector<VersionLink> links;
  fs::path links_path = fs::path(dir) / "links.json";
  if (fs::exists(links_path)) {
    const json arr = parse_json_text(read_text_file(links_path.string()));
    const json& list = as_array(arr, "/links");
    std::size_t i = 0;
    for (const json& v : list) {
      links.push_back(VersionLink::from_json(v, "/links/" + std::to_string(i++)));
    }
  }
  return {std::move(docs), std::move(links)};
}

}  // namespace agentfacts

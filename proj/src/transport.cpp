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

#include "agentfacts/transport.hpp"

#include <cctype>

#include "agentfacts/errors.hpp"
#include "httplib.h"

namespace agentfacts {

ParsedUrl parse_url(const std::string& url) {
  const auto bad = [&](const std::string& why) {
    return Error(ErrorKind::bad_url, why + ": " + url);
  };

  const std::size_t sep = url.find("://");
  if (sep == std::string::npos) throw bad("missing scheme");
  ParsedUrl out;
  out.scheme = url.substr(0, sep);
  if (out.scheme != "http" && out.scheme != "https") {
    throw bad("unsupported scheme");
  }

  std::string rest = url.substr(sep + 3);
  const std::size_t slash = rest.find('/');
  std::string hostport =
      slash == std::string::npos ? rest : rest.substr(0, slash);
  out.path = slash == std::string::npos ? "/" : rest.substr(slash);

  const std::size_t colon = hostport.rfind(':');
  if (colon == std::string::npos) {
    out.host = hostport;
    out.port = out.scheme == "https" ? 443 : 80;
  } else {
    out.host = hostport.substr(0, colon);
    const std::string digits = hostport.substr(colon + 1);
    if (digits.empty()) throw bad("empty port");
    long long port = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw bad("non-numeric port");
      }
      port = port * 10 + (c - '0');
      if (port > 65535) throw bad("port out of range");
    }
    if (port == 0) throw bad("port out of range");
    out.port = static_cast<int>(port);
  }
  if (out.host.empty()) throw bad("empty host");
  return out;
}

int RecordingTransport::post_json(const std::string& url, const json& body) {
  sent_.push_back({url, body});
  auto it = per_url_.find(url);
  return it == per_url_.end() ? default_status_ : it->second;
}

void RecordingTransport::set_status(const std::string& url, int status) {
  per_url_[url] = status;
}

int HttpWebhookTransport::post_json(const std::string& url, const json& body) {
  ParsedUrl parsed;
  try {
    parsed = parse_url(url);
  } catch (const Error&) {
    return 0;
  }
  // TLS is not compiled in; an https webhook simply never gets a response,
  // which the delivery loop records as a failed attempt.
  if (parsed.scheme != "http") return 0;

  httplib::Client client(parsed.host, parsed.port);
  client.set_connection_timeout(timeout_seconds_, 0);
  client.set_read_timeout(timeout_seconds_, 0);
  client.set_write_timeout(timeout_seconds_, 0);
  httplib::Result res =
      client.Post(parsed.path, body.dump(), "application/json");
  return res ? res->status : 0;
}

}  // namespace agentfacts

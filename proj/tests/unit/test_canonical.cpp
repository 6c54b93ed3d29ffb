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

#include <doctest.h>

#include <string>

#include "agentfacts/bytes.hpp"
#include "agentfacts/canonical.hpp"
#include "agentfacts/errors.hpp"
#include "agentfacts/jsonutil.hpp"

using namespace agentfacts;

namespace {

std::string canon_text(const json& v) {
  auto c = canonicalize(v);
  return std::string(c.as_text());
}

}  // namespace

TEST_CASE("sha-256 matches the published vectors") {
  // Hashes pinned from the FIPS 180 example values so a broken digest
  // cannot silently agree with an equally broken verifier.
  CHECK(sha256_digest(ByteVec{}).hex() ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  auto abc = to_bytes("abc");
  CHECK(sha256_digest(abc).hex() ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("canonical form sorts object keys by code point") {
  auto v = parse_json_text(R"({"b":1,"a":2})");
  CHECK(canon_text(v) == R"({"a":2,"b":1})");

  // Upper case ASCII sorts before lower case; multi-byte UTF-8 sorts after
  // all ASCII because its lead byte is >= 0xC2.
  json mixed = json::object();
  mixed["a"] = 1;
  mixed["Z"] = 2;
  mixed["\xC3\xA9"] = 3;  // e-acute
  mixed[""] = 4;
  CHECK(canon_text(mixed) == "{\"\":4,\"Z\":2,\"a\":1,\"\xC3\xA9\":3}");
}

TEST_CASE("canonical form has no insignificant whitespace") {
  auto v = parse_json_text(R"( { "k" : [ 1 , 2 ] , "m" : { } } )");
  CHECK(canon_text(v) == R"({"k":[1,2],"m":{}})");
}

TEST_CASE("canonical form nests and preserves array order") {
  auto v = parse_json_text(R"({"outer":{"y":[3,1,2],"x":null},"a":true})");
  CHECK(canon_text(v) == R"({"a":true,"outer":{"x":null,"y":[3,1,2]}})");
}

TEST_CASE("canonical escaping is minimal") {
  json v = json::object();
  v["quote"] = "say \"hi\"";
  v["slash"] = "a\\b";
  v["ctl"] = std::string("tab\there\nline\rret\bback\ffeed");
  v["low"] = std::string("x\x01y", 3);
  v["utf8"] = "caf\xC3\xA9";
  std::string expected =
      "{\"ctl\":\"tab\\there\\nline\\rret\\bback\\ffeed\","
      "\"low\":\"x\\u0001y\","
      "\"quote\":\"say \\\"hi\\\"\","
      "\"slash\":\"a\\\\b\","
      "\"utf8\":\"caf\xC3\xA9\"}";
  CHECK(canon_text(v) == expected);
}

TEST_CASE("canonical integers cover the signed range") {
  json v = json::array({int64_t{0}, int64_t{-1}, int64_t{9223372036854775807LL}});
  CHECK(canon_text(v) == "[0,-1,9223372036854775807]");
}

TEST_CASE("non-integer numbers are not canonicalizable") {
  json v = json::object();
  v["x"] = 0.5;
  try {
    canonicalize(v);
    FAIL("expected a canonicalization error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_canonicalizable);
  }
  json nested = parse_json_text(R"({"a":[1,{"b":2.25}]})");
  CHECK_THROWS_AS(canonicalize(nested), Error);
}

TEST_CASE("canonicalization is a fixpoint under reparse") {
  auto v = parse_json_text(
      R"({"z":{"n":[1,2,{"deep":"A"}],"s":"text"},"a":[true,false,null]})");
  auto once = canonicalize(v);
  auto again = canonicalize(parse_json_text(std::string(once.as_text())));
  CHECK(once == again);
}

TEST_CASE("digest json form round-trips") {
  auto d = sha256_digest(to_bytes("abc"));
  auto j = d.to_json();
  auto back = Digest::from_json(j, "d");
  CHECK(back == d);
  CHECK(j["algorithm"] == "sha-256");

  SUBCASE("wrong algorithm is rejected") {
    j["algorithm"] = "md5";
    CHECK_THROWS_AS(Digest::from_json(j, "d"), Error);
  }
  SUBCASE("wrong length is rejected") {
    j["value"] = base64url_encode(ByteVec{1, 2, 3});
    CHECK_THROWS_AS(Digest::from_json(j, "d"), Error);
  }
}

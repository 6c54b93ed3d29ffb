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

#include <random>

#include "agentfacts/bytes.hpp"
#include "agentfacts/errors.hpp"

using namespace agentfacts;

namespace {

ByteVec bytes_of(std::string_view s) {
  return ByteVec(s.begin(), s.end());
}

}  // namespace

TEST_CASE("base64url encodes the classic vectors without padding") {
  // RFC 4648 section 10 vectors, in the url-safe alphabet with padding
  // stripped.
  CHECK(base64url_encode(bytes_of("")) == "");
  CHECK(base64url_encode(bytes_of("f")) == "Zg");
  CHECK(base64url_encode(bytes_of("fo")) == "Zm8");
  CHECK(base64url_encode(bytes_of("foo")) == "Zm9v");
  CHECK(base64url_encode(bytes_of("foob")) == "Zm9vYg");
  CHECK(base64url_encode(bytes_of("fooba")) == "Zm9vYmE");
  CHECK(base64url_encode(bytes_of("foobar")) == "Zm9vYmFy");
}

TEST_CASE("base64url uses - and _ instead of + and /") {
  ByteVec raw{0xfb, 0xff};
  CHECK(base64url_encode(raw) == "-_8");
  CHECK(base64url_decode("-_8") == raw);
}

TEST_CASE("base64url round-trips random buffers") {
  std::mt19937_64 rng(0x617274'6966);
  for (int i = 0; i < 500; ++i) {
    size_t n = rng() % 130;
    ByteVec raw(n);
    for (auto& b : raw) b = static_cast<uint8_t>(rng());
    auto text = base64url_encode(raw);
    CHECK(base64url_decode(text) == raw);
  }
}

TEST_CASE("base64url decode rejects malformed input") {
  CHECK_THROWS_AS(base64url_decode("Zg="), Error);   // padding char
  CHECK_THROWS_AS(base64url_decode("A"), Error);     // impossible length
  CHECK_THROWS_AS(base64url_decode("Zm9v!"), Error); // bad alphabet
  CHECK_THROWS_AS(base64url_decode("Zm+v"), Error);  // standard alphabet
  // Trailing bits past the last full octet must be zero; "Zh" leaves 0001.
  CHECK_THROWS_AS(base64url_decode("Zh"), Error);
  CHECK_NOTHROW(base64url_decode("Zg"));
}

TEST_CASE("hex encoding is lowercase and zero padded") {
  ByteVec raw{0x00, 0x0f, 0xa0, 0xff};
  CHECK(hex_encode(raw) == "000fa0ff");
  CHECK(hex_encode(ByteVec{}) == "");
}

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

#include "agentfacts/keystore.hpp"

#include <fstream>
#include <memory>

#include <openssl/evp.h>
#include <openssl/rand.h>

#include "agentfacts/bytes.hpp"
#include "agentfacts/errors.hpp"
#include "agentfacts/jsonutil.hpp"

namespace agentfacts {

namespace {

constexpr int kPbkdf2Iterations = 100000;
constexpr std::size_t kSaltLen = 16;
constexpr std::size_t kNonceLen = 12;
constexpr std::size_t kTagLen = 16;
constexpr std::size_t kKeyLen = 32;
constexpr const char* kKdfName = "pbkdf2-hmac-sha256";
constexpr const char* kCipherName = "aes-256-gcm";

ByteVec random_bytes(std::size_t n) {
  ByteVec out(n);
  if (RAND_bytes(out.data(), static_cast<int>(n)) != 1) {
    throw Error(ErrorKind::io_error, "system random generator failed");
  }
  return out;
}

ByteVec derive_key(std::string_view passphrase, ByteSpan salt, int iterations) {
  ByteVec key(kKeyLen);
  if (PKCS5_PBKDF2_HMAC(passphrase.data(), static_cast<int>(passphrase.size()),
                        salt.data(), static_cast<int>(salt.size()), iterations,
                        EVP_sha256(), static_cast<int>(key.size()),
                        key.data()) != 1) {
    throw Error(ErrorKind::keystore_error, "key derivation failed");
  }
  return key;
}

struct CipherCtxFree {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxFree>;

struct Sealed {
  ByteVec ciphertext;
  ByteVec tag;
};

Sealed seal(ByteSpan key, ByteSpan nonce, ByteSpan plaintext) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx ||
      EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(),
                         nonce.data()) != 1) {
    throw Error(ErrorKind::keystore_error, "cipher initialization failed");
  }
  Sealed out;
  out.ciphertext.resize(plaintext.size());
  int len = 0;
  if (!plaintext.empty() &&
      EVP_EncryptUpdate(ctx.get(), out.ciphertext.data(), &len,
                        plaintext.data(),
                        static_cast<int>(plaintext.size())) != 1) {
    throw Error(ErrorKind::keystore_error, "encryption failed");
  }
  int final_len = 0;
  if (EVP_EncryptFinal_ex(ctx.get(), out.ciphertext.data() + len,
                          &final_len) != 1) {
    throw Error(ErrorKind::keystore_error, "encryption failed");
  }
  out.ciphertext.resize(static_cast<std::size_t>(len + final_len));
  out.tag.resize(kTagLen);
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG,
                          static_cast<int>(kTagLen), out.tag.data()) != 1) {
    throw Error(ErrorKind::keystore_error, "encryption failed");
  }
  return out;
}

ByteVec open_sealed(ByteSpan key, ByteSpan nonce, ByteSpan ciphertext,
                    ByteSpan tag) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx ||
      EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(),
                         nonce.data()) != 1) {
    throw Error(ErrorKind::keystore_error, "cipher initialization failed");
  }
  ByteVec plaintext(ciphertext.size());
  int len = 0;
  if (!ciphertext.empty() &&
      EVP_DecryptUpdate(ctx.get(), plaintext.data(), &len, ciphertext.data(),
                        static_cast<int>(ciphertext.size())) != 1) {
    throw Error(ErrorKind::keystore_error, "decryption failed");
  }
  ByteVec tag_copy(tag.begin(), tag.end());
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG,
                          static_cast<int>(tag_copy.size()),
                          tag_copy.data()) != 1) {
    throw Error(ErrorKind::keystore_error, "decryption failed");
  }
  int final_len = 0;
  if (EVP_DecryptFinal_ex(ctx.get(), plaintext.data() + len, &final_len) != 1) {
    throw Error(ErrorKind::keystore_error,
                "wrong passphrase or corrupted keystore");
  }
  plaintext.resize(static_cast<std::size_t>(len + final_len));
  return plaintext;
}

ByteVec decode_b64_field(ObjReader& r, std::string_view key) {
  try {
    return base64url_decode(r.require_string(key));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::syntax_error) {
      throw Error(ErrorKind::keystore_error, r.child_path(key),
                  "bad base64url field");
    }
    throw;
  }
}

}  // namespace

void Keystore::put(const std::string& authority_id, PrivateKeyHandle key) {
  keys_.insert_or_assign(authority_id, std::move(key));
}

const PrivateKeyHandle* Keystore::find(const std::string& authority_id) const {
  auto it = keys_.find(authority_id);
  return it == keys_.end() ? nullptr : &it->second;
}

std::vector<std::string> Keystore::authority_ids() const {
  std::vector<std::string> ids;
  ids.reserve(keys_.size());
  for (const auto& [id, _] : keys_) ids.push_back(id);
  return ids;
}

Keystore Keystore::load(const std::string& path, std::string_view passphrase) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::io_error, "cannot open keystore " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());

  json file;
  try {
    file = parse_json_text(text);
  } catch (const Error&) {
    throw Error(ErrorKind::keystore_error, "keystore file is not valid JSON");
  }

  ByteVec salt, nonce, tag, ciphertext;
  std::int64_t iterations = 0;
  try {
    ObjReader r(file, "");
    ObjReader kdf(r.require("kdf"), "/kdf");
    if (kdf.require_string("name") != kKdfName) {
      throw Error(ErrorKind::keystore_error, "/kdf/name",
                  "unsupported key derivation function");
    }
    iterations = kdf.require_int("iterations");
    if (iterations < 1) {
      throw Error(ErrorKind::keystore_error, "/kdf/iterations",
                  "iteration count must be positive");
    }
    salt = decode_b64_field(kdf, "salt");
    kdf.finish();
    ObjReader cipher(r.require("cipher"), "/cipher");
    if (cipher.require_string("name") != kCipherName) {
      throw Error(ErrorKind::keystore_error, "/cipher/name",
                  "unsupported cipher");
    }
    nonce = decode_b64_field(cipher, "nonce");
    tag = decode_b64_field(cipher, "tag");
    cipher.finish();
    ciphertext = decode_b64_field(r, "ciphertext");
    r.finish();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::keystore_error) throw;
    throw Error(ErrorKind::keystore_error,
                std::string("malformed keystore: ") + e.what());
  }
  if (nonce.size() != kNonceLen || tag.size() != kTagLen) {
    throw Error(ErrorKind::keystore_error, "bad nonce or tag length");
  }

  ByteVec key = derive_key(passphrase, salt, static_cast<int>(iterations));
  ByteVec plaintext = open_sealed(key, nonce, ciphertext, tag);

  Keystore store;
  try {
    const json body = parse_json_text(
        std::string_view(reinterpret_cast<const char*>(plaintext.data()),
                         plaintext.size()));
    ObjReader r(body, "");
    const json& list = as_array(r.require("keys"), "/keys");
    std::size_t i = 0;
    for (const json& entry : list) {
      std::string p = "/keys/" + std::to_string(i++);
      ObjReader re(entry, p);
      std::string authority_id = re.require_string("authority_id");
      SigAlgorithm algorithm = algorithm_from_name(re.require_string("algorithm"));
      ByteVec der = decode_b64_field(re, "private_key");
      re.finish();
      store.put(authority_id,
                PrivateKeyHandle::from_private_key_der(algorithm, der));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::keystore_error) throw;
    throw Error(ErrorKind::keystore_error,
                std::string("malformed keystore payload: ") + e.what());
  }
  return store;
}

void Keystore::save(const std::string& path, std::string_view passphrase) const {
  json list = json::array();
  for (const auto& [id, key] : keys_) {
    json entry = json::object();
    entry["algorithm"] = std::string(to_token(key.algorithm()));
    entry["authority_id"] = id;
    entry["private_key"] = base64url_encode(key.private_key_der());
    list.push_back(std::move(entry));
  }
  json body = json::object();
  body["keys"] = std::move(list);
  std::string plaintext = body.dump();

  ByteVec salt = random_bytes(kSaltLen);
  ByteVec nonce = random_bytes(kNonceLen);
  ByteVec key = derive_key(passphrase, salt, kPbkdf2Iterations);
  Sealed sealed = seal(key, nonce, to_bytes(plaintext));

  json kdf = json::object();
  kdf["name"] = kKdfName;
  kdf["iterations"] = kPbkdf2Iterations;
  kdf["salt"] = base64url_encode(salt);
  json cipher = json::object();
  cipher["name"] = kCipherName;
  cipher["nonce"] = base64url_encode(nonce);
  cipher["tag"] = base64url_encode(sealed.tag);
  json file = json::object();
  file["kdf"] = std::move(kdf);
  file["cipher"] = std::move(cipher);
  file["ciphertext"] = base64url_encode(sealed.ciphertext);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::io_error, "cannot open keystore " + path);
  }
  out << file.dump(2) << "\n";
  out.flush();
  if (!out) {
    throw Error(ErrorKind::io_error, "cannot write keystore " + path);
  }
}

}  // namespace agentfacts

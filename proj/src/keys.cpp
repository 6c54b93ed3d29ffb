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

#include "agentfacts/keys.hpp"

#include <openssl/ec.h>
#include <openssl/err.h>
#include <openssl/evp.h>
#include <openssl/rsa.h>
#include <openssl/x509.h>

#include "agentfacts/canonical.hpp"
#include "agentfacts/errors.hpp"

namespace agentfacts {

namespace {

[[noreturn]] void crypto_failure(const std::string& what) {
  unsigned long code = ERR_get_error();
  char buf[256] = {};
  if (code != 0) ERR_error_string_n(code, buf, sizeof buf);
  throw Error(ErrorKind::io_error,
              what + (buf[0] ? std::string(": ") + buf : std::string()));
}

struct CtxFree {
  void operator()(EVP_PKEY_CTX* p) const { EVP_PKEY_CTX_free(p); }
  void operator()(EVP_MD_CTX* p) const { EVP_MD_CTX_free(p); }
};
using PkeyCtx = std::unique_ptr<EVP_PKEY_CTX, CtxFree>;
using MdCtx = std::unique_ptr<EVP_MD_CTX, CtxFree>;

bool uses_prehash(SigAlgorithm a) { return a != SigAlgorithm::ed25519; }

/// Applies the PSS settings RSA signatures use: PSS padding with a salt as
/// long as the digest.
void configure_pss(EVP_PKEY_CTX* ctx) {
  if (EVP_PKEY_CTX_set_rsa_padding(ctx, RSA_PKCS1_PSS_PADDING) <= 0 ||
      EVP_PKEY_CTX_set_rsa_pss_saltlen(ctx, RSA_PSS_SALTLEN_DIGEST) <= 0) {
    crypto_failure("rsa-pss configuration");
  }
}

EVP_PKEY* public_key_to_pkey(SigAlgorithm algorithm, ByteSpan public_key) {
  if (algorithm == SigAlgorithm::ed25519) {
    if (public_key.size() != 32) return nullptr;
    return EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr,
                                       public_key.data(), public_key.size());
  }
  const unsigned char* p = public_key.data();
  return d2i_PUBKEY(nullptr, &p, static_cast<long>(public_key.size()));
}

}  // namespace

PrivateKeyHandle::PrivateKeyHandle(SigAlgorithm algorithm, EVP_PKEY* key)
    : algorithm_(algorithm), key_(key) {}

PrivateKeyHandle::PrivateKeyHandle(PrivateKeyHandle&& other) noexcept
    : algorithm_(other.algorithm_), key_(other.key_) {
  other.key_ = nullptr;
}

PrivateKeyHandle& PrivateKeyHandle::operator=(PrivateKeyHandle&& other) noexcept {
  if (this != &other) {
    EVP_PKEY_free(key_);
    algorithm_ = other.algorithm_;
    key_ = other.key_;
    other.key_ = nullptr;
  }
  return *this;
}

PrivateKeyHandle::~PrivateKeyHandle() { EVP_PKEY_free(key_); }

ByteVec PrivateKeyHandle::public_key() const {
  if (algorithm_ == SigAlgorithm::ed25519) {
    ByteVec out(32);
    std::size_t len = out.size();
    if (EVP_PKEY_get_raw_public_key(key_, out.data(), &len) <= 0 || len != 32) {
      crypto_failure("ed25519 public key export");
    }
    return out;
  }
  unsigned char* der = nullptr;
  int len = i2d_PUBKEY(key_, &der);
  if (len <= 0) crypto_failure("public key DER export");
  ByteVec out(der, der + len);
  OPENSSL_free(der);
  return out;
}

ByteVec PrivateKeyHandle::sign(ByteSpan message) const {
  MdCtx ctx(EVP_MD_CTX_new());
  if (!ctx) crypto_failure("digest context");
  EVP_PKEY_CTX* pctx = nullptr;
  const EVP_MD* md = uses_prehash(algorithm_) ? EVP_sha256() : nullptr;
  if (EVP_DigestSignInit(ctx.get(), &pctx, md, nullptr, key_) <= 0) {
    crypto_failure("sign init");
  }
  if (algorithm_ == SigAlgorithm::rsa_pss_2048) configure_pss(pctx);
  std::size_t len = 0;
  if (EVP_DigestSign(ctx.get(), nullptr, &len, message.data(),
                     message.size()) <= 0) {
    crypto_failure("sign sizing");
  }
  ByteVec sig(len);
  if (EVP_DigestSign(ctx.get(), sig.data(), &len, message.data(),
                     message.size()) <= 0) {
    crypto_failure("sign");
  }
  sig.resize(len);
  return sig;
}

ByteVec PrivateKeyHandle::private_key_der() const {
  unsigned char* der = nullptr;
  int len = i2d_PrivateKey(key_, &der);
  if (len <= 0) crypto_failure("private key DER export");
  ByteVec out(der, der + len);
  OPENSSL_free(der);
  return out;
}

PrivateKeyHandle PrivateKeyHandle::generate(SigAlgorithm algorithm) {
  EVP_PKEY* key = nullptr;
  switch (algorithm) {
    case SigAlgorithm::ed25519: {
      PkeyCtx ctx(EVP_PKEY_CTX_new_id(EVP_PKEY_ED25519, nullptr));
      if (!ctx || EVP_PKEY_keygen_init(ctx.get()) <= 0 ||
          EVP_PKEY_keygen(ctx.get(), &key) <= 0) {
        crypto_failure("ed25519 keygen");
      }
      break;
    }
    case SigAlgorithm::ecdsa_p256: {
      PkeyCtx ctx(EVP_PKEY_CTX_new_id(EVP_PKEY_EC, nullptr));
      if (!ctx || EVP_PKEY_keygen_init(ctx.get()) <= 0 ||
          EVP_PKEY_CTX_set_ec_paramgen_curve_nid(ctx.get(),
                                                 NID_X9_62_prime256v1) <= 0 ||
          EVP_PKEY_keygen(ctx.get(), &key) <= 0) {
        crypto_failure("ecdsa-p256 keygen");
      }
      break;
    }
    case SigAlgorithm::rsa_pss_2048: {
      PkeyCtx ctx(EVP_PKEY_CTX_new_id(EVP_PKEY_RSA, nullptr));
      if (!ctx || EVP_PKEY_keygen_init(ctx.get()) <= 0 ||
          EVP_PKEY_CTX_set_rsa_keygen_bits(ctx.get(), 2048) <= 0 ||
          EVP_PKEY_keygen(ctx.get(), &key) <= 0) {
        crypto_failure("rsa keygen");
      }
      break;
    }
  }
  return PrivateKeyHandle(algorithm, key);
}

PrivateKeyHandle PrivateKeyHandle::from_private_key_der(SigAlgorithm algorithm,
                                                        ByteSpan der) {
  const unsigned char* p = der.data();
  int type = EVP_PKEY_NONE;
  switch (algorithm) {
    case SigAlgorithm::ed25519: type = EVP_PKEY_ED25519; break;
    case SigAlgorithm::ecdsa_p256: type = EVP_PKEY_EC; break;
    case SigAlgorithm::rsa_pss_2048: type = EVP_PKEY_RSA; break;
  }
  EVP_PKEY* key = d2i_PrivateKey(type, nullptr, &p, static_cast<long>(der.size()));
  if (!key) {
    throw Error(ErrorKind::keystore_error, "stored private key does not parse");
  }
  return PrivateKeyHandle(algorithm, key);
}

PrivateKeyHandle PrivateKeyHandle::ed25519_from_seed(ByteSpan seed) {
  if (seed.size() != 32) {
    throw Error(ErrorKind::invalid_request, "ed25519 seed must be 32 octets");
  }
  EVP_PKEY* key = EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr,
                                               seed.data(), seed.size());
  if (!key) crypto_failure("ed25519 raw key import");
  return PrivateKeyHandle(SigAlgorithm::ed25519, key);
}

bool verify_bytes(SigAlgorithm algorithm, ByteSpan public_key,
                  ByteSpan message, ByteSpan signature) {
  EVP_PKEY* key = public_key_to_pkey(algorithm, public_key);
  if (!key) {
    ERR_clear_error();
    return false;
  }
  MdCtx ctx(EVP_MD_CTX_new());
  if (!ctx) {
    EVP_PKEY_free(key);
    return false;
  }
  EVP_PKEY_CTX* pctx = nullptr;
  const EVP_MD* md = uses_prehash(algorithm) ? EVP_sha256() : nullptr;
  bool ok = EVP_DigestVerifyInit(ctx.get(), &pctx, md, nullptr, key) > 0;
  if (ok && algorithm == SigAlgorithm::rsa_pss_2048) {
    ok = EVP_PKEY_CTX_set_rsa_padding(pctx, RSA_PKCS1_PSS_PADDING) > 0 &&
         EVP_PKEY_CTX_set_rsa_pss_saltlen(pctx, RSA_PSS_SALTLEN_DIGEST) > 0;
  }
  if (ok) {
    ok = EVP_DigestVerify(ctx.get(), signature.data(), signature.size(),
                          message.data(), message.size()) == 1;
  }
  EVP_PKEY_free(key);
  ERR_clear_error();
  return ok;
}

std::string authority_id_from_public_key(ByteSpan public_key) {
  return "auth:" + sha256_digest(public_key).hex().substr(0, 16);
}

SigAlgorithm algorithm_from_name(std::string_view name) {
  if (name == "ed25519") return SigAlgorithm::ed25519;
  if (name == "ecdsa-p256") return SigAlgorithm::ecdsa_p256;
  if (name == "rsa-pss-2048") return SigAlgorithm::rsa_pss_2048;
  throw Error(ErrorKind::unsupported_algorithm,
              "unsupported signature algorithm \"" + std::string(name) + "\"");
}

std::pair<PrivateKeyHandle, AuthorityRecord> generate_authority(
    std::string_view algorithm, std::string display_name,
    std::vector<std::string> domains) {
  SigAlgorithm alg = algorithm_from_name(algorithm);
  PrivateKeyHandle key = PrivateKeyHandle::generate(alg);
  AuthorityRecord record;
  record.public_key = key.public_key();
  record.authority_id = authority_id_from_public_key(record.public_key);
  record.display_name = std::move(display_name);
  record.algorithm = alg;
  record.domains = std::move(domains);
  return {std::move(key), std::move(record)};
}

std::pair<PrivateKeyHandle, AuthorityRecord> authority_from_seed(
    ByteSpan seed, std::string display_name, std::vector<std::string> domains) {
  PrivateKeyHandle key = PrivateKeyHandle::ed25519_from_seed(seed);
  AuthorityRecord record;
  record.public_key = key.public_key();
  record.authority_id = authority_id_from_public_key(record.public_key);
  record.display_name = std::move(display_name);
  record.algorithm = SigAlgorithm::ed25519;
  record.domains = std::move(domains);
  return {std::move(key), std::move(record)};
}

json AuthorityRecord::to_json() const {
  json v = json::object();
  v["authority_id"] = authority_id;
  v["display_name"] = display_name;
  v["public_key"] = base64url_encode(public_key);
  v["algorithm"] = std::string(to_token(algorithm));
  if (!domains.empty()) v["domains"] = domains;
  return v;
}

AuthorityRecord AuthorityRecord::from_json(const json& v,
                                           const std::string& path) {
  ObjReader r(v, path);
  AuthorityRecord a;
  a.authority_id = r.require_string("authority_id");
  a.display_name = r.require_string("display_name");
  try {
    a.public_key = base64url_decode(r.require_string("public_key"));
  } catch (const Error& e) {
    throw Error(e.kind(), r.child_path("public_key"), e.what());
  }
  a.algorithm = algorithm_from_name(r.require_string("algorithm"));
  a.domains = r.optional_string_list("domains");
  r.finish();
  if (a.algorithm == SigAlgorithm::ed25519 && a.public_key.size() != 32) {
    throw Error(ErrorKind::type_mismatch, r.child_path("public_key"),
                "ed25519 public keys are 32 octets");
  }
  return a;
}

}  // namespace agentfacts

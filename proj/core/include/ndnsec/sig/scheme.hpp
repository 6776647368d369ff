// Copyright 2026 The ndnsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// One keygen/sign/verify contract over the six signature schemes.

#include <cstddef>
#include <string>
#include <variant>

#include "ndnsec/bytes.hpp"
#include "ndnsec/error.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/bls.hpp"
#include "ndnsec/sig/dsa.hpp"
#include "ndnsec/sig/ecdsa.hpp"
#include "ndnsec/sig/group.hpp"
#include "ndnsec/sig/ring.hpp"
#include "ndnsec/sig/rsa.hpp"
#include "ndnsec/sig/scheme_id.hpp"

namespace ndnsec::sig {

struct SchemeParams {
  SchemeId scheme = SchemeId::kRsa;
  unsigned rsa_bits = rsa::kModulusBits;
  std::size_t group_size = group::kDefaultSize;
  std::size_t ring_size = ring::kDefaultSize;
};

// Alternatives are ordered by scheme code, so index() + 1 is the code.
class PublicKey {
 public:
  using Data = std::variant<rsa::PublicKey, dsa::PublicKey, ecdsa::PublicKey,
                            bls::PublicKey, group::PublicKey, ring::PublicKey>;

  PublicKey(Data data) : data_(std::move(data)) {}  // NOLINT: implicit on purpose

  SchemeId scheme() const { return static_cast<SchemeId>(data_.index() + 1); }
  const Data& data() const { return data_; }

  // Throws SchemeMismatch if the key belongs to another scheme.
  template <class T>
  const T& as() const;

  Bytes serialize() const;
  // Throws MalformedEncoding, or UnknownScheme for the network-coding code.
  static PublicKey parse(SchemeId scheme, ByteView data);

  friend bool operator==(const PublicKey& a, const PublicKey& b) {
    return a.data_ == b.data_;
  }

 private:
  Data data_;
};

class KeyPair {
 public:
  using Secret = std::variant<rsa::PrivateKey, dsa::PrivateKey, ecdsa::PrivateKey,
                              bls::PrivateKey, group::MemberKey, ring::SignerKey>;

  // Throws SchemeMismatch when the two halves disagree on the scheme.
  KeyPair(PublicKey pub, Secret secret);

  SchemeId scheme() const { return pub_.scheme(); }
  const PublicKey& public_key() const { return pub_; }
  const Secret& secret() const { return secret_; }

  Bytes serialize_private() const;
  static KeyPair parse(SchemeId scheme, ByteView data);

 private:
  PublicKey pub_;
  Secret secret_;
};

struct Signature {
  SchemeId scheme;
  Bytes bytes;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Group keygen runs a fresh group setup and hands back one member's
// credential; ring keygen creates a fresh ring and one signer slot in it.
// Throws ParameterError for inconsistent sizes and UnknownScheme for schemes
// without a plain key pair.
KeyPair keygen(const SchemeParams& params, RandomSource& rng);
Signature sign(const KeyPair& key, ByteView msg, RandomSource& rng);
// Throws SchemeMismatch when the signature and key schemes differ.
bool verify(const PublicKey& pub, ByteView msg, const Signature& sig);

template <class T>
const T& PublicKey::as() const {
  if (const T* p = std::get_if<T>(&data_)) return *p;
  throw SchemeMismatch("public key belongs to scheme " +
                       std::string(scheme_name(scheme())));
}

}  // namespace ndnsec::sig

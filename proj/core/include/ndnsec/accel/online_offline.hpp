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

// Online/offline signing through a chameleon hash over the shared DL group:
//
//   CH(m, r) = g^H(m) * h^r mod p,  h = g^k
//
// Offline, the signer picks (m', r') and signs CH(m', r') with any base
// scheme. Online, the trapdoor k yields r with CH(m, r) == CH(m', r'):
//
//   r = r' + (H(m') - H(m)) * k^-1 mod q
//
// so the online step is one hash and a few multiplications modulo q.

#include <gmpxx.h>

#include <atomic>
#include <memory>
#include <optional>

#include "ndnsec/bytes.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/scheme.hpp"

namespace ndnsec::accel {

struct ChameleonPublicKey {
  mpz_class h;
  friend bool operator==(const ChameleonPublicKey&, const ChameleonPublicKey&) = default;
};

struct ChameleonKey {
  ChameleonPublicKey pub;
  mpz_class trapdoor;      // k
  mpz_class trapdoor_inv;  // k^-1 mod q

  static ChameleonKey generate(RandomSource& rng);
};

// H(m) reduced modulo q.
mpz_class chameleon_digest(ByteView msg);
mpz_class chameleon_hash(const ChameleonPublicKey& pub, ByteView msg,
                         const mpz_class& r);

struct OnlineSignature {
  mpz_class r;
  sig::Signature base;  // base-scheme signature on the encoded CH value

  Bytes serialize() const;
  // Throws MalformedEncoding or UnknownScheme.
  static OnlineSignature parse(ByteView data);
};

// Single-use precomputed signature. Movable, not copyable.
class OfflineToken {
 public:
  OfflineToken(OfflineToken&&) noexcept = default;
  OfflineToken& operator=(OfflineToken&&) noexcept = default;

  const Bytes& pre_message() const { return pre_message_; }
  const mpz_class& pre_randomness() const { return r_; }
  // Moved-from tokens count as used.
  bool used() const { return !used_ || used_->load(); }

 private:
  friend OfflineToken offline_prepare(const sig::KeyPair&, const ChameleonKey&,
                                      RandomSource&);
  friend OnlineSignature online_sign(OfflineToken&, ByteView);

  OfflineToken() = default;

  Bytes pre_message_;
  mpz_class pre_digest_;  // H(m')
  mpz_class r_;           // r'
  mpz_class trapdoor_inv_;
  sig::Signature base_;
  std::unique_ptr<std::atomic<bool>> used_ = std::make_unique<std::atomic<bool>>(false);
};

OfflineToken offline_prepare(const sig::KeyPair& key, const ChameleonKey& ck,
                             RandomSource& rng);

// Throws TokenReused when the token was consumed before. Safe to race: only
// one caller wins a token.
OnlineSignature online_sign(OfflineToken& token, ByteView msg);

bool online_verify(const sig::PublicKey& pub, const ChameleonPublicKey& ck,
                   ByteView msg, const OnlineSignature& sig);

}  // namespace ndnsec::accel

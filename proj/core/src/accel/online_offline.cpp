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

#include "ndnsec/accel/online_offline.hpp"

#include "ndnsec/error.hpp"
#include "ndnsec/hash.hpp"
#include "ndnsec/math/bigint.hpp"
#include "ndnsec/sig/dl.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::accel {

namespace {

constexpr std::string_view kDomain = "ndnsec-chameleon";
constexpr std::size_t kPreMessageBytes = 32;

const sig::DlGroup& grp() { return sig::DlGroup::standard(); }

}  // namespace

ChameleonKey ChameleonKey::generate(RandomSource& rng) {
  ChameleonKey k;
  k.trapdoor = grp().random_nonzero_scalar(rng);
  k.trapdoor_inv = math::invert(k.trapdoor, grp().q());
  k.pub.h = grp().pow_g(k.trapdoor);
  return k;
}

mpz_class chameleon_digest(ByteView msg) {
  Sha256 h;
  h.update_framed(as_bytes(kDomain)).update(msg);
  return grp().reduce(h.finalize());
}

mpz_class chameleon_hash(const ChameleonPublicKey& pub, ByteView msg,
                         const mpz_class& r) {
  return grp().mul(grp().pow_g(chameleon_digest(msg)), grp().pow(pub.h, r));
}

Bytes OnlineSignature::serialize() const {
  Bytes code{static_cast<std::uint8_t>(base.scheme)};
  return tlv::encode_fields({grp().encode_scalar(r), code, base.bytes});
}

OnlineSignature OnlineSignature::parse(ByteView data) {
  auto f = tlv::decode_fields(data, 3);
  if (f[0].size() != grp().q_bytes() || f[1].size() != 1) {
    throw MalformedEncoding("online signature field sizes");
  }
  auto scheme = sig::scheme_from_code(f[1][0]);
  if (!scheme) throw UnknownScheme("unknown base scheme code");
  OnlineSignature s{math::from_bytes(f[0]), {*scheme, std::move(f[2])}};
  if (s.r >= grp().q()) throw MalformedEncoding("online signature scalar out of range");
  return s;
}

OfflineToken offline_prepare(const sig::KeyPair& key, const ChameleonKey& ck,
                             RandomSource& rng) {
  OfflineToken t;
  t.pre_message_ = rng.bytes(kPreMessageBytes);
  t.pre_digest_ = chameleon_digest(t.pre_message_);
  t.r_ = grp().random_scalar(rng);
  t.trapdoor_inv_ = ck.trapdoor_inv;
  mpz_class ch = chameleon_hash(ck.pub, t.pre_message_, t.r_);
  t.base_ = sig::sign(key, grp().encode_element(ch), rng);
  return t;
}

OnlineSignature online_sign(OfflineToken& token, ByteView msg) {
  if (!token.used_ || token.used_->exchange(true)) throw TokenReused("offline token already used");
  const mpz_class& q = grp().q();
  mpz_class r = (token.pre_digest_ - chameleon_digest(msg)) * token.trapdoor_inv_;
  r += token.r_;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
  return {std::move(r), token.base_};
}

bool online_verify(const sig::PublicKey& pub, const ChameleonPublicKey& ck,
                   ByteView msg, const OnlineSignature& sig) {
  if (sig.r < 0 || sig.r >= grp().q() || !grp().in_subgroup(ck.h)) return false;
  mpz_class ch = chameleon_hash(ck, msg, sig.r);
  return sig::verify(pub, grp().encode_element(ch), sig.base);
}

}  // namespace ndnsec::accel

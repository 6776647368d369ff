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

#include "ndnsec/sig/dsa.hpp"

#include "ndnsec/error.hpp"
#include "ndnsec/hash.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::sig::dsa {

namespace {

const DlGroup& grp() { return DlGroup::standard(); }

}  // namespace

PrivateKey keygen(RandomSource& rng) {
  PrivateKey key;
  key.x = grp().random_nonzero_scalar(rng);
  key.pub.y = grp().pow_g(key.x);
  return key;
}

mpz_class message_digest(ByteView msg) {
  Digest d = sha256(msg);
  mpz_class z = math::from_bytes(d);
  const std::size_t qbits = mpz_sizeinbase(grp().q().get_mpz_t(), 2);
  if (qbits < 256) z >>= 256 - qbits;
  return z;
}

Bytes sign(const PrivateKey& key, ByteView msg, RandomSource& rng) {
  const auto& G = grp();
  const mpz_class z = message_digest(msg);
  for (;;) {
    mpz_class k = G.random_nonzero_scalar(rng);
    mpz_class r = G.pow_g(k) % G.q();
    if (r == 0) continue;
    mpz_class s = math::invert(k, G.q()) * (z + key.x * r) % G.q();
    if (s == 0) continue;
    return tlv::encode_fields({G.encode_scalar(r), G.encode_scalar(s)});
  }
}

std::optional<Signature> parse_signature(ByteView sig) {
  const auto& G = grp();
  try {
    auto f = tlv::decode_fields(sig, 2);
    if (f[0].size() != G.q_bytes() || f[1].size() != G.q_bytes()) return std::nullopt;
    Signature out{math::from_bytes(f[0]), math::from_bytes(f[1])};
    if (out.r <= 0 || out.r >= G.q() || out.s <= 0 || out.s >= G.q()) {
      return std::nullopt;
    }
    return out;
  } catch (const MalformedEncoding&) {
    return std::nullopt;
  }
}

bool verify(const PublicKey& pub, ByteView msg, ByteView sig) {
  const auto& G = grp();
  auto rs = parse_signature(sig);
  if (!rs) return false;
  mpz_class w = math::invert(rs->s, G.q());
  mpz_class u1 = message_digest(msg) * w % G.q();
  mpz_class u2 = rs->r * w % G.q();
  mpz_class v = G.mul(G.pow_g(u1), G.pow(pub.y, u2)) % G.q();
  return v == rs->r;
}

Bytes serialize(const PublicKey& pub) {
  return tlv::encode_fields({grp().encode_element(pub.y)});
}

Bytes serialize(const PrivateKey& key) {
  return tlv::encode_fields(
      {grp().encode_element(key.pub.y), grp().encode_scalar(key.x)});
}

PublicKey parse_public_key(ByteView data) {
  auto f = tlv::decode_fields(data, 1);
  PublicKey pub{math::from_bytes(f[0])};
  if (!grp().in_subgroup(pub.y)) throw MalformedEncoding("DSA key not in subgroup");
  return pub;
}

PrivateKey parse_private_key(ByteView data) {
  auto f = tlv::decode_fields(data, 2);
  PrivateKey key{{math::from_bytes(f[0])}, math::from_bytes(f[1])};
  if (key.x <= 0 || key.x >= grp().q() || grp().pow_g(key.x) != key.pub.y) {
    throw MalformedEncoding("DSA private key does not match its public key");
  }
  return key;
}

}  // namespace ndnsec::sig::dsa

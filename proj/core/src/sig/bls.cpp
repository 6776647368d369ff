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

#include "ndnsec/sig/bls.hpp"

#include <array>

#include "ndnsec/error.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::sig::bls {

namespace {

constexpr std::string_view kDomain = "ndnsec-bls-sig";

const math::FixedBase<math::bn::G2Curve>& g2_table() {
  static const math::FixedBase<math::bn::G2Curve> t(G2::generator(), Fr::kBits);
  return t;
}

}  // namespace

PublicKey PublicKey::from_point(const G2& point) {
  return {point, std::make_shared<const G2Prepared>(point)};
}

const G2Prepared& neg_generator_prepared() {
  static const G2Prepared p(-G2::generator());
  return p;
}

PrivateKey keygen(RandomSource& rng) {
  Fr x = Fr::random_nonzero(rng);
  return {PublicKey::from_point(g2_table().mul(x)), x};
}

G1 hash_message(ByteView msg) { return math::bn::hash_to_g1(msg, kDomain); }

G1 sign_point(const PrivateKey& key, ByteView msg) {
  return hash_message(msg) * key.x;
}

Bytes encode_signature(const G1& sigma) {
  return tlv::encode_fields({math::bn::compress(sigma)});
}

Bytes sign(const PrivateKey& key, ByteView msg) {
  return encode_signature(sign_point(key, msg));
}

std::optional<G1> parse_signature(ByteView sig) {
  try {
    auto f = tlv::decode_fields(sig, 1);
    auto p = math::bn::decompress_g1(f[0]);
    if (!p || p->is_infinity()) return std::nullopt;
    return p;
  } catch (const MalformedEncoding&) {
    return std::nullopt;
  }
}

bool verify(const PublicKey& pub, ByteView msg, ByteView sig) {
  auto sigma = parse_signature(sig);
  if (!sigma || pub.point.is_infinity()) return false;
  std::array<G1, 2> ps = {*sigma, hash_message(msg)};
  std::array<const G2Prepared*, 2> qs = {&neg_generator_prepared(),
                                         pub.prepared.get()};
  return math::bn::multi_pairing(ps, qs).is_one();
}

Bytes serialize(const PublicKey& pub) {
  return tlv::encode_fields({math::bn::compress(pub.point)});
}

Bytes serialize(const PrivateKey& key) {
  return tlv::encode_fields({math::bn::compress(key.pub.point), key.x.to_bytes()});
}

namespace {

PublicKey public_from_field(ByteView f) {
  auto q = math::bn::decompress_g2(f);
  if (!q || q->is_infinity()) throw MalformedEncoding("invalid BLS public key");
  return PublicKey::from_point(*q);
}

}  // namespace

PublicKey parse_public_key(ByteView data) {
  return public_from_field(tlv::decode_fields(data, 1)[0]);
}

PrivateKey parse_private_key(ByteView data) {
  auto f = tlv::decode_fields(data, 2);
  PublicKey pub = public_from_field(f[0]);
  auto x = Fr::from_bytes(f[1]);
  if (!x || x->is_zero() || !(g2_table().mul(*x) == pub.point)) {
    throw MalformedEncoding("BLS private key does not match its public key");
  }
  return {pub, *x};
}

}  // namespace ndnsec::sig::bls

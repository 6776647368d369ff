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

#include "ndnsec/sig/ecdsa.hpp"

#include "ndnsec/error.hpp"
#include "ndnsec/hash.hpp"
#include "ndnsec/math/bigint.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::sig::ecdsa {

namespace {

Field fhex(std::string_view h) {
  return Field::from_canonical(math::limbs::from_hex<Field::kLimbs>(h));
}

const math::FixedBase<Curve>& base_table() {
  static const math::FixedBase<Curve> t(Point::generator(), Scalar::kBits);
  return t;
}

Scalar x_mod_order(const Point& p) {
  return Scalar::from_mpz(p.to_affine().first.to_mpz());
}

Bytes encode_scalar(const Scalar& s) { return s.to_bytes(); }

}  // namespace

#if defined(NDNSEC_ECDSA_P256)

Field Curve::b() {
  return fhex("5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b");
}
Field Curve::generator_x() {
  return fhex("6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296");
}
Field Curve::generator_y() {
  return fhex("4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5");
}

#else

Field Curve::b() { return fhex("7a556b6dae535b7b51ed2c4d7daa7a0b5c55f380"); }
Field Curve::generator_x() { return fhex("b199b13b9b34efc1397e64baeb05acc265ff2378"); }
Field Curve::generator_y() { return fhex("add6718b7c7c1961f0991b842443772152c9e0ad"); }

#endif

Scalar message_digest(ByteView msg) {
  Digest d = sha256(msg);
  mpz_class z = math::from_bytes(d);
  if (Scalar::kBits < 256) z >>= 256 - Scalar::kBits;
  return Scalar::from_mpz(z);
}

PrivateKey keygen(RandomSource& rng) {
  PrivateKey key;
  key.d = Scalar::random_nonzero(rng);
  key.pub.q = base_table().mul(key.d);
  return key;
}

Bytes sign(const PrivateKey& key, ByteView msg, RandomSource& rng) {
  const Scalar z = message_digest(msg);
  for (;;) {
    Scalar k = Scalar::random_nonzero(rng);
    Scalar r = x_mod_order(base_table().mul(k));
    if (r.is_zero()) continue;
    Scalar s = k.inv() * (z + r * key.d);
    if (s.is_zero()) continue;
    return tlv::encode_fields({encode_scalar(r), encode_scalar(s)});
  }
}

std::optional<Signature> parse_signature(ByteView sig) {
  try {
    auto f = tlv::decode_fields(sig, 2);
    auto r = Scalar::from_bytes(f[0]);
    auto s = Scalar::from_bytes(f[1]);
    if (!r || !s || r->is_zero() || s->is_zero()) return std::nullopt;
    return Signature{*r, *s};
  } catch (const MalformedEncoding&) {
    return std::nullopt;
  }
}

bool verify(const PublicKey& pub, ByteView msg, ByteView sig) {
  auto rs = parse_signature(sig);
  if (!rs || pub.q.is_infinity()) return false;
  Scalar w = rs->s.inv();
  Scalar u1 = message_digest(msg) * w;
  Scalar u2 = rs->r * w;
  Point x = base_table().mul(u1) + pub.q.mul(u2);
  if (x.is_infinity()) return false;
  return x_mod_order(x) == rs->r;
}

Bytes serialize(const PublicKey& pub) {
  auto [x, y] = pub.q.to_affine();
  return tlv::encode_fields({x.to_bytes(), y.to_bytes()});
}

Bytes serialize(const PrivateKey& key) {
  Bytes out = serialize(key.pub);
  tlv::append_field(out, encode_scalar(key.d));
  return out;
}

namespace {

PublicKey public_from_fields(const std::vector<Bytes>& f) {
  auto x = Field::from_bytes(f[0]);
  auto y = Field::from_bytes(f[1]);
  if (!x || !y || !Point::on_curve_affine(*x, *y)) {
    throw MalformedEncoding("ECDSA public key is not on the curve");
  }
  return {Point::from_affine(*x, *y)};
}

}  // namespace

PublicKey parse_public_key(ByteView data) {
  return public_from_fields(tlv::decode_fields(data, 2));
}

PrivateKey parse_private_key(ByteView data) {
  auto f = tlv::decode_fields(data, 3);
  PrivateKey key{public_from_fields(f), Scalar::zero()};
  auto d = Scalar::from_bytes(f[2]);
  if (!d || d->is_zero() || !(base_table().mul(*d) == key.pub.q)) {
    throw MalformedEncoding("ECDSA private key does not match its public key");
  }
  key.d = *d;
  return key;
}

}  // namespace ndnsec::sig::ecdsa

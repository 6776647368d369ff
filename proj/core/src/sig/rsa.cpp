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

#include "ndnsec/sig/rsa.hpp"

#include "ndnsec/error.hpp"
#include "ndnsec/hash.hpp"
#include "ndnsec/math/bigint.hpp"
#include "ndnsec/sig/scheme_id.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::sig::rsa {

namespace {

void check_size(std::size_t bits) {
  if (bits < kModulusBits && !insecure_params_allowed()) {
    throw ParameterError("RSA modulus of " + std::to_string(bits) +
                         " bits needs NDNSEC_ALLOW_INSECURE_PARAMS=1");
  }
}

}  // namespace

std::size_t PublicKey::modulus_bytes() const { return math::byte_length(n); }

std::size_t PublicKey::modulus_bits() const {
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

PrivateKey keygen(RandomSource& rng, unsigned bits) {
  if (bits < 16 || bits % 2 != 0) throw ParameterError("bad RSA modulus size");
  check_size(bits);
  const mpz_class e = kPublicExponent;
  const unsigned half = bits / 2;
  mpz_class min_gap = 1;
  min_gap <<= (half > 100 ? half - 100 : half / 2);
  for (;;) {
    // Top two bits set on both primes keeps N at exactly `bits` bits.
    // p = 1 and q = 3 (mod 4) make N = 3 (mod 4), so -1 has Jacobi symbol
    // -1 and batch verification can reject negated signatures.
    auto prime = [&](unsigned residue) {
      for (;;) {
        mpz_class c = math::random_bits(half, rng);
        mpz_setbit(c.get_mpz_t(), half - 2);
        c |= 1;
        if (mpz_tstbit(c.get_mpz_t(), 1) != static_cast<int>(residue >> 1)) mpz_combit(c.get_mpz_t(), 1);
        if (mpz_probab_prime_p(c.get_mpz_t(), 40) != 0) return c;
      }
    };
    mpz_class p = prime(1);
    mpz_class q = prime(3);
    mpz_class gap = abs(p - q);
    if (gap <= min_gap) continue;
    mpz_class phi = (p - 1) * (q - 1);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t());
    if (g != 1) continue;
    return from_primes(p, q, e);
  }
}

PrivateKey from_primes(const mpz_class& p, const mpz_class& q, const mpz_class& e) {
  if (p == q || p < 2 || q < 2) throw ParameterError("RSA primes must be distinct");
  PrivateKey key;
  key.pub.n = p * q;
  key.pub.e = e;
  check_size(key.pub.modulus_bits());
  mpz_class phi = (p - 1) * (q - 1);
  key.d = math::invert(e, phi);
  return key;
}

mpz_class encode(const PublicKey& pub, ByteView msg) {
  const std::size_t bits = pub.modulus_bits();
  const std::size_t len = pub.modulus_bytes();
  Digest seed = sha256(msg);
  Bytes mask = mgf1_sha256(seed, len);
  // Keep strictly fewer bits than N so the representative is below N.
  const std::size_t excess = 8 * len - (bits - 1);
  mask[0] &= static_cast<std::uint8_t>(0xFF >> excess);
  return math::from_bytes(mask);
}

mpz_class sign_representative(const PrivateKey& key, const mpz_class& h) {
  return math::powm(h, key.d, key.pub.n);
}

Bytes sign(const PrivateKey& key, ByteView msg) {
  mpz_class s = sign_representative(key, encode(key.pub, msg));
  Bytes raw = math::to_bytes_fixed(s, key.pub.modulus_bytes());
  return tlv::encode_fields({raw});
}

std::optional<mpz_class> parse_signature(const PublicKey& pub, ByteView sig) {
  try {
    auto f = tlv::decode_fields(sig, 1);
    if (f[0].size() != pub.modulus_bytes()) return std::nullopt;
    mpz_class s = math::from_bytes(f[0]);
    if (s >= pub.n) return std::nullopt;
    return s;
  } catch (const MalformedEncoding&) {
    return std::nullopt;
  }
}

bool verify(const PublicKey& pub, ByteView msg, ByteView sig) {
  auto s = parse_signature(pub, sig);
  if (!s) return false;
  return math::powm(*s, pub.e, pub.n) == encode(pub, msg);
}

Bytes serialize(const PublicKey& pub) {
  Bytes n = math::to_bytes_fixed(pub.n, pub.modulus_bytes());
  Bytes e = math::to_bytes_fixed(pub.e, math::byte_length(pub.e));
  return tlv::encode_fields({n, e});
}

Bytes serialize(const PrivateKey& key) {
  Bytes out = serialize(key.pub);
  tlv::append_field(out, math::to_bytes_fixed(key.d, key.pub.modulus_bytes()));
  return out;
}

namespace {

PublicKey public_from_fields(const std::vector<Bytes>& f) {
  PublicKey pub{math::from_bytes(f[0]), math::from_bytes(f[1])};
  if (pub.n < 3 || pub.e < 3 || pub.e >= pub.n) {
    throw MalformedEncoding("RSA public key out of range");
  }
  return pub;
}

}  // namespace

PublicKey parse_public_key(ByteView data) {
  return public_from_fields(tlv::decode_fields(data, 2));
}

PrivateKey parse_private_key(ByteView data) {
  auto f = tlv::decode_fields(data, 3);
  PrivateKey key{public_from_fields(f), math::from_bytes(f[2])};
  if (key.d <= 0 || key.d >= key.pub.n) {
    throw MalformedEncoding("RSA private exponent out of range");
  }
  return key;
}

}  // namespace ndnsec::sig::rsa

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

// RSA full-domain-hash signatures: sigma = FDH(m)^d mod N, where FDH expands
// SHA-256(m) with MGF1 to just below the modulus width. Signing uses d
// directly (no CRT), so the private key is the pair (N, d).

#include <gmpxx.h>

#include <optional>

#include "ndnsec/bytes.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::sig::rsa {

inline constexpr unsigned kModulusBits = 1024;
inline constexpr unsigned long kPublicExponent = 65537;
// Minimum distance between the two primes, as a power of two.
inline constexpr unsigned kPrimeGapBits = 412;

struct PublicKey {
  mpz_class n;
  mpz_class e;

  std::size_t modulus_bytes() const;
  std::size_t modulus_bits() const;
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct PrivateKey {
  PublicKey pub;
  mpz_class d;
};

// Fresh key with |N| = bits and |p - q| > 2^(bits/2 - 100), which is 2^412
// at the default size. The primes are 1 and 3 mod 4, so N = 3 (mod 4).
// Sizes below 1024 need the insecure-parameters gate.
PrivateKey keygen(RandomSource& rng, unsigned bits = kModulusBits);

// Key from given primes, d = e^-1 mod phi(N). Throws ParameterError if e is
// not invertible or the modulus is below 1024 bits without the gate.
PrivateKey from_primes(const mpz_class& p, const mpz_class& q, const mpz_class& e);

// Message representative in [0, N).
mpz_class encode(const PublicKey& pub, ByteView msg);
mpz_class sign_representative(const PrivateKey& key, const mpz_class& h);

Bytes sign(const PrivateKey& key, ByteView msg);
bool verify(const PublicKey& pub, ByteView msg, ByteView sig);

// The signature integer, or nullopt if the encoding is malformed or out of
// range.
std::optional<mpz_class> parse_signature(const PublicKey& pub, ByteView sig);

Bytes serialize(const PublicKey& pub);
Bytes serialize(const PrivateKey& key);
PublicKey parse_public_key(ByteView data);
PrivateKey parse_private_key(ByteView data);

}  // namespace ndnsec::sig::rsa

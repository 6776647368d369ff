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

// Manager-based group signature over the built-in DL group.
//
// The manager issues each member a blinded key pair (x, B = g^x) together
// with a certificate: the manager's Schnorr signature (R, s) on B. A group
// signature is (B, certificate, Schnorr signature (R, s) on the message
// under x). Verification checks that B is on the published member list, the
// certificate, and the message signature. Opening maps B back to a member
// through the manager's registry. Two signatures by the same member carry the
// same B and are therefore linkable.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ndnsec/bytes.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/dl.hpp"

namespace ndnsec::sig::group {

inline constexpr std::size_t kDefaultSize = 5;

// Schnorr signature in commitment form: g^s == R * Y^c.
struct Schnorr {
  mpz_class r, s;
};

struct PublicKey {
  mpz_class manager;               // g^manager_secret
  std::vector<mpz_class> members;  // blinded member keys

  bool contains(const mpz_class& b) const;
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct MemberKey {
  mpz_class x;  // blinded secret
  mpz_class b;  // g^x
  Schnorr cert;
};

struct Setup {
  PublicKey pub;
  mpz_class manager_secret;
  std::vector<MemberKey> members;              // indexed by member id
  std::map<mpz_class, std::size_t> registry;   // blinded key -> member id
};

struct ParsedSignature {
  mpz_class b;
  Schnorr cert;
  Schnorr sig;
};

// Throws ParameterError for n == 0.
Setup setup(std::size_t n, RandomSource& rng);
// Issues one more member and publishes its key; returns the member id.
std::size_t add_member(Setup& s, RandomSource& rng);
// Removes the member's key from the published list. Earlier signatures can
// still be opened.
void revoke(Setup& s, std::size_t member);

Bytes sign(const MemberKey& member, ByteView msg, RandomSource& rng);
bool verify(const PublicKey& pub, ByteView msg, ByteView sig);
// Member id of the signer. Throws OpenFailure.
std::size_t open(const Setup& s, ByteView sig);

std::optional<ParsedSignature> parse_signature(ByteView sig);
mpz_class certificate_challenge(const mpz_class& manager, const mpz_class& b,
                                const mpz_class& r);
mpz_class message_challenge(const mpz_class& b, const mpz_class& r, ByteView msg);

Bytes serialize(const PublicKey& pub);
Bytes serialize(const MemberKey& member);
PublicKey parse_public_key(ByteView data);
MemberKey parse_member_key(ByteView data);

}  // namespace ndnsec::sig::group

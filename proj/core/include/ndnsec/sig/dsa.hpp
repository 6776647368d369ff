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

// DSA over the built-in 1024/160 group. The digest is the leftmost |q| bits
// of SHA-256(m); signatures are the two |q|-bit integers r and s.

#include <gmpxx.h>

#include <optional>

#include "ndnsec/bytes.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/dl.hpp"

namespace ndnsec::sig::dsa {

struct PublicKey {
  mpz_class y;
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct PrivateKey {
  PublicKey pub;
  mpz_class x;
};

struct Signature {
  mpz_class r, s;
};

PrivateKey keygen(RandomSource& rng);
Bytes sign(const PrivateKey& key, ByteView msg, RandomSource& rng);
bool verify(const PublicKey& pub, ByteView msg, ByteView sig);

std::optional<Signature> parse_signature(ByteView sig);
mpz_class message_digest(ByteView msg);

Bytes serialize(const PublicKey& pub);
Bytes serialize(const PrivateKey& key);
// Both reject y outside the order-q subgroup.
PublicKey parse_public_key(ByteView data);
PrivateKey parse_private_key(ByteView data);

}  // namespace ndnsec::sig::dsa

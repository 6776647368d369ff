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

// BLS short signatures on the BN pairing curve: sk = x, pk = x * Q in G2,
// sigma = x * H(m) in G1, checked as e(sigma, -Q) * e(H(m), pk) == 1. A
// signature is one compressed G1 point.

#include <memory>
#include <optional>

#include "ndnsec/bytes.hpp"
#include "ndnsec/math/bn.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::sig::bls {

using math::bn::Fr;
using math::bn::G1;
using math::bn::G2;
using math::bn::G2Prepared;

struct PublicKey {
  G2 point;
  // Miller-loop lines for `point`, computed once per key.
  std::shared_ptr<const G2Prepared> prepared;

  static PublicKey from_point(const G2& point);
  friend bool operator==(const PublicKey& a, const PublicKey& b) {
    return a.point == b.point;
  }
};

struct PrivateKey {
  PublicKey pub;
  Fr x;
};

PrivateKey keygen(RandomSource& rng);

G1 hash_message(ByteView msg);
G1 sign_point(const PrivateKey& key, ByteView msg);
Bytes sign(const PrivateKey& key, ByteView msg);
bool verify(const PublicKey& pub, ByteView msg, ByteView sig);

Bytes encode_signature(const G1& sigma);
// Rejects malformed encodings and the point at infinity.
std::optional<G1> parse_signature(ByteView sig);

// Lines of -Q for the G2 generator Q.
const G2Prepared& neg_generator_prepared();

Bytes serialize(const PublicKey& pub);
Bytes serialize(const PrivateKey& key);
PublicKey parse_public_key(ByteView data);
PrivateKey parse_private_key(ByteView data);

}  // namespace ndnsec::sig::bls

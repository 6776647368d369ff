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

// Abe-Ohkubo-Suzuki 1-out-of-n ring signature over the built-in DL group.
// Ring members are plain DL public keys y_i = g^x_i. A signature is the
// challenge c_0 and one response per member; the challenge chain
// c_{i+1} = H(L, m, g^s_i * y_i^c_i) must close back on c_0. Nothing in it
// records which member signed.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "ndnsec/bytes.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/dl.hpp"

namespace ndnsec::sig::ring {

inline constexpr std::size_t kDefaultSize = 5;

struct PublicKey {
  std::vector<mpz_class> members;
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct SignerKey {
  std::size_t index;
  mpz_class x;
};

struct ParsedSignature {
  mpz_class c0;
  std::vector<mpz_class> s;
};

// n fresh members; secrets[i] belongs to ring.members[i].
struct Keys {
  PublicKey ring;
  std::vector<mpz_class> secrets;
};
Keys generate(std::size_t n, RandomSource& rng);

// Throws IndexOutOfRing for a bad index and ParameterError for rings with
// fewer than two or repeated keys, or a secret that does not match its slot.
Bytes sign(const PublicKey& ring, const SignerKey& signer, ByteView msg,
           RandomSource& rng);
bool verify(const PublicKey& ring, ByteView msg, ByteView sig);

std::optional<ParsedSignature> parse_signature(ByteView sig);

Bytes serialize(const PublicKey& ring);
Bytes serialize(const SignerKey& signer);
PublicKey parse_public_key(ByteView data);
SignerKey parse_signer_key(ByteView data);

}  // namespace ndnsec::sig::ring

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

// Verifying many signatures of one scheme at once.
//
//   BLS    small-exponent test: e(sum d_i s_i, -Q) * prod_pk e(sum d_i H_i, pk)
//   RSA    one signer, N = 3 (mod 4): (prod s_i^d_i)^e == prod H_i^d_i, plus
//          a Jacobi symbol check per entry
//   group  one group key: all certificate and message equations folded
//          into one check with random exponents d_i, d'_i
//
// DSA, ECDSA, ring signatures and RSA batches outside the conditions above
// are verified one by one. The exponents d_i are `security_bits` long, so an
// invalid batch passes with probability at most 2^-security_bits.

#include <vector>

#include "ndnsec/bytes.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/scheme.hpp"

namespace ndnsec::accel {

inline constexpr unsigned kDefaultSecurityBits = 80;

struct SignedMessage {
  sig::PublicKey pub;
  Bytes msg;
  sig::Signature sig;
};

struct BatchInstance {
  std::vector<SignedMessage> entries;
  unsigned security_bits = kDefaultSecurityBits;
};

// True if every entry verifies. Throws MixedScheme when entries use
// different schemes, SchemeMismatch when an entry's signature and key
// disagree, and ParameterError for an empty batch or security_bits outside
// [1, 128].
bool batch_verify(const BatchInstance& batch, RandomSource& rng);

}  // namespace ndnsec::accel

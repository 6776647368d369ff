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

// BLS aggregate signatures: the sum of the constituent G1 signatures,
// checked as e(sigma, -Q) * prod_pk e(sum H(m), pk) == 1. The covered
// messages must be pairwise distinct.

#include <utility>
#include <span>
#include <vector>

#include "ndnsec/accel/batch.hpp"
#include "ndnsec/bytes.hpp"
#include "ndnsec/math/bn.hpp"
#include "ndnsec/sig/bls.hpp"

namespace ndnsec::accel {

struct AggregateSignature {
  math::bn::G1 sigma;
  // Covered (key, message) pairs in input order.
  std::vector<std::pair<sig::bls::PublicKey, Bytes>> covered;

  // One compressed G1 element, the same encoding as a single signature.
  Bytes encode() const;
};

// Throws MixedScheme for non-BLS entries and MalformedEncoding when a
// constituent signature does not parse.
AggregateSignature aggregate(std::span<const SignedMessage> sigs);

// Rejects empty aggregates and repeated messages.
bool verify_aggregate(const AggregateSignature& agg);

}  // namespace ndnsec::accel

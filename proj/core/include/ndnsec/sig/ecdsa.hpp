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

// ECDSA over a prime-field curve with a = -3 and cofactor 1. The default is
// brainpoolP160t1, whose 160-bit order gives 320-bit signatures alongside
// the 1024/160 DL group. Define NDNSEC_ECDSA_P256 at build time to use
// NIST P-256 instead.

#include <optional>
#include <string_view>

#include "ndnsec/bytes.hpp"
#include "ndnsec/math/ec.hpp"
#include "ndnsec/math/montgomery.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::sig::ecdsa {

#if defined(NDNSEC_ECDSA_P256)

inline constexpr std::string_view kCurveName = "P-256";

struct FieldTag {
  static constexpr std::size_t kLimbs = 4;
  static constexpr auto kParams = math::MontgomeryParams<4>::make(
      "ffffffff00000001000000000000000000000000ffffffffffffffffffffffff");
};

struct ScalarTag {
  static constexpr std::size_t kLimbs = 4;
  static constexpr auto kParams = math::MontgomeryParams<4>::make(
      "ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551");
};

#else

inline constexpr std::string_view kCurveName = "brainpoolP160t1";

struct FieldTag {
  static constexpr std::size_t kLimbs = 3;
  static constexpr auto kParams = math::MontgomeryParams<3>::make(
      "e95e4a5f737059dc60dfc7ad95b3d8139515620f");
};

struct ScalarTag {
  static constexpr std::size_t kLimbs = 3;
  static constexpr auto kParams = math::MontgomeryParams<3>::make(
      "e95e4a5f737059dc60df5991d45029409e60fc09");
};

#endif

using Field = math::MontField<FieldTag>;
using Scalar = math::MontField<ScalarTag>;

struct Curve {
  using Field = ecdsa::Field;
  using Scalar = ecdsa::Scalar;
  static constexpr bool kAIsZero = false;
  static Field b();
  static Field generator_x();
  static Field generator_y();
};

using Point = math::EcPoint<Curve>;

struct PublicKey {
  Point q;
  friend bool operator==(const PublicKey& a, const PublicKey& b) { return a.q == b.q; }
};

struct PrivateKey {
  PublicKey pub;
  Scalar d;
};

struct Signature {
  Scalar r, s;
};

PrivateKey keygen(RandomSource& rng);
Bytes sign(const PrivateKey& key, ByteView msg, RandomSource& rng);
bool verify(const PublicKey& pub, ByteView msg, ByteView sig);

std::optional<Signature> parse_signature(ByteView sig);
Scalar message_digest(ByteView msg);

Bytes serialize(const PublicKey& pub);
Bytes serialize(const PrivateKey& key);
PublicKey parse_public_key(ByteView data);
PrivateKey parse_private_key(ByteView data);

}  // namespace ndnsec::sig::ecdsa

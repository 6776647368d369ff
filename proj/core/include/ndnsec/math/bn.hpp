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

// Groups of the 158-bit Barreto-Naehrig curve and its optimal ate pairing.
//
//   G1 = E(Fp),   E : y^2 = x^3 + 3            (short signatures live here)
//   G2 = E'(Fp2), E': y^2 = x^3 + 3/xi         (D-type sextic twist)
//   GT = order-n subgroup of Fp12^*
//
// Every group has prime order n = Fr::modulus. G1 has cofactor 1.

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ndnsec/bytes.hpp"
#include "ndnsec/math/ec.hpp"
#include "ndnsec/math/tower.hpp"

namespace ndnsec::math::bn {

struct G1Curve {
  using Field = Fp;
  using Scalar = Fr;
  static constexpr bool kAIsZero = true;
  static Fp b() { return Fp::from_u64(3); }
  static Fp generator_x() { return Fp::from_u64(1); }
  static Fp generator_y() { return Fp::from_u64(2); }
};

struct G2Curve {
  using Field = Fp2;
  using Scalar = Fr;
  static constexpr bool kAIsZero = true;
  static const Fp2& b();
  static Fp2 generator_x();
  static Fp2 generator_y();
};

using G1 = EcPoint<G1Curve>;
using G2 = EcPoint<G2Curve>;
using Gt = Fp12;

inline constexpr std::size_t kG1CompressedSize = Fp::kBytes;      // 20
inline constexpr std::size_t kG2CompressedSize = 2 * Fp::kBytes;  // 40
inline constexpr std::size_t kGtSize = 12 * Fp::kBytes;           // 240

// Line coefficients of the Miller loop for a fixed G2 point. Preparing costs
// roughly half a Miller loop; reusing it for many pairings with the same G2
// argument (a public key, the generator) saves that work on each pairing.
class G2Prepared {
 public:
  G2Prepared() = default;
  explicit G2Prepared(const G2& q);

  bool is_infinity() const { return lines_.empty(); }

  // Per step: l0 = a * yP, l1 = b * xP, l3 = c.
  struct Coeffs {
    Fp2 a, b, c;
  };
  const std::vector<Coeffs>& lines() const { return lines_; }

 private:
  std::vector<Coeffs> lines_;
};

Gt miller_loop(const G1& p, const G2Prepared& q);
Gt final_exponentiation(const Gt& f);

// e(p, q). Identity if either argument is the point at infinity.
Gt pairing(const G1& p, const G2& q);

// prod_i e(p_i, q_i) with a shared squaring chain and one final
// exponentiation.
Gt multi_pairing(std::span<const G1> ps, std::span<const G2Prepared* const> qs);

// Number of Miller loops evaluated on the calling thread so far. Lets callers
// attribute pairing work to a code path.
std::uint64_t pairing_count();

// e(G1::generator(), G2::generator()), stored as a constant.
const Gt& gt_generator();

// k * G1::generator() and gt_generator()^k through precomputed tables.
G1 mul_g1_generator(const Fr& k);
Gt pow_gt_generator(const Fr& k);

// Deterministic try-and-increment map of (domain, msg) into G1.
G1 hash_to_g1(ByteView msg, std::string_view domain);

// Fr element derived from a hash of (domain, msg).
Fr hash_to_fr(ByteView msg, std::string_view domain);

// x coordinate big-endian with flags in the two spare top bits
// (0x80 = infinity, 0x40 = odd y).
Bytes compress(const G1& p);
std::optional<G1> decompress_g1(ByteView bytes);

// x.c1 || x.c0 with the same flag layout in the first byte.
Bytes compress(const G2& q);
// Also rejects points outside the order-n subgroup.
std::optional<G2> decompress_g2(ByteView bytes);

Bytes serialize(const Gt& x);
std::optional<Gt> deserialize_gt(ByteView bytes);

// Order-n subgroup membership for GT: x^n == 1.
bool in_gt(const Gt& x);

}  // namespace ndnsec::math::bn

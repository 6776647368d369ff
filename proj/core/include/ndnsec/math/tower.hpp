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

// Base and scalar fields of the 158-bit Barreto-Naehrig curve and the
// extension tower used by its pairing:
//
//   Fp2  = Fp[i] / (i^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),  xi = 3 + i
//   Fp12 = Fp6[w] / (w^2 - v)
//
// The constants are reproduced by scripts/derive_bn_params.py.

#include <optional>

#include "ndnsec/math/montgomery.hpp"

namespace ndnsec::math::bn {

// Curve parameter u; p(u) = 36u^4 + 36u^3 + 24u^2 + 6u + 1.
inline constexpr std::uint64_t kU = 0x4000000031;

struct FpTag {
  static constexpr std::size_t kLimbs = 3;
  static constexpr auto kParams = MontgomeryParams<3>::make(
      "240000006ed000007fe9c000419fec800ca035c7");
};

struct FrTag {
  static constexpr std::size_t kLimbs = 3;
  static constexpr auto kParams = MontgomeryParams<3>::make(
      "240000006ed000007fe96000419f59800c9ffd81");
};

using Fp = MontField<FpTag>;
using Fr = MontField<FrTag>;

class Fp2 {
 public:
  Fp c0, c1;

  Fp2() = default;
  Fp2(const Fp& a, const Fp& b) : c0(a), c1(b) {}
  explicit Fp2(const Fp& a) : c0(a) {}

  static Fp2 zero() { return Fp2(); }
  static Fp2 one() { return Fp2(Fp::one()); }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend bool operator==(const Fp2& a, const Fp2& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }

  friend Fp2 operator+(const Fp2& a, const Fp2& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend Fp2 operator-(const Fp2& a, const Fp2& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }
  Fp2 operator-() const { return {-c0, -c1}; }
  Fp2& operator+=(const Fp2& b) { return *this = *this + b; }
  Fp2& operator-=(const Fp2& b) { return *this = *this - b; }

  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    Fp v0 = a.c0 * b.c0;
    Fp v1 = a.c1 * b.c1;
    return {v0 - v1, (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1};
  }
  Fp2& operator*=(const Fp2& b) { return *this = *this * b; }
  friend Fp2 operator*(const Fp2& a, const Fp& s) {
    return {a.c0 * s, a.c1 * s};
  }

  Fp2 sqr() const {
    Fp t = c0 * c1;
    return {(c0 + c1) * (c0 - c1), t.dbl()};
  }
  Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }
  Fp2 conj() const { return {c0, -c1}; }

  // Multiplication by xi = 3 + i.
  Fp2 mul_by_xi() const {
    Fp a3 = c0.dbl() + c0;
    Fp b3 = c1.dbl() + c1;
    return {a3 - c1, c0 + b3};
  }

  Fp2 inv() const;
  Fp2 pow(const mpz_class& e) const;
  std::optional<Fp2> sqrt() const;
  // Canonical sign used by point compression.
  bool is_odd() const { return c0.is_zero() ? c1.is_odd() : c0.is_odd(); }
};

class Fp6 {
 public:
  Fp2 c0, c1, c2;

  Fp6() = default;
  Fp6(const Fp2& a, const Fp2& b, const Fp2& c) : c0(a), c1(b), c2(c) {}

  static Fp6 zero() { return Fp6(); }
  static Fp6 one() { return Fp6(Fp2::one(), Fp2(), Fp2()); }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  friend bool operator==(const Fp6& a, const Fp6& b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
  }

  friend Fp6 operator+(const Fp6& a, const Fp6& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend Fp6 operator-(const Fp6& a, const Fp6& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }

  friend Fp6 operator*(const Fp6& a, const Fp6& b) {
    Fp2 v0 = a.c0 * b.c0;
    Fp2 v1 = a.c1 * b.c1;
    Fp2 v2 = a.c2 * b.c2;
    Fp2 r0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - v1 - v2).mul_by_xi() + v0;
    Fp2 r1 = (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1 + v2.mul_by_xi();
    Fp2 r2 = (a.c0 + a.c2) * (b.c0 + b.c2) - v0 - v2 + v1;
    return {r0, r1, r2};
  }
  friend Fp6 operator*(const Fp6& a, const Fp2& s) {
    return {a.c0 * s, a.c1 * s, a.c2 * s};
  }

  // Product with (x0 + x1 v).
  Fp6 mul_by_01(const Fp2& x0, const Fp2& x1) const {
    Fp2 v0 = c0 * x0;
    Fp2 v1 = c1 * x1;
    Fp2 r0 = (c2 * x1).mul_by_xi() + v0;
    Fp2 r1 = (c0 + c1) * (x0 + x1) - v0 - v1;
    Fp2 r2 = c2 * x0 + v1;
    return {r0, r1, r2};
  }

  Fp6 sqr() const {
    Fp2 s0 = c0.sqr();
    Fp2 s1 = (c0 * c1).dbl();
    Fp2 s2 = (c0 - c1 + c2).sqr();
    Fp2 s3 = (c1 * c2).dbl();
    Fp2 s4 = c2.sqr();
    return {s3.mul_by_xi() + s0, s4.mul_by_xi() + s1, s1 + s2 + s3 - s0 - s4};
  }

  Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fp6 inv() const;
};

class Fp12 {
 public:
  Fp6 c0, c1;

  Fp12() = default;
  Fp12(const Fp6& a, const Fp6& b) : c0(a), c1(b) {}

  static Fp12 zero() { return Fp12(); }
  static Fp12 one() { return Fp12(Fp6::one(), Fp6()); }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool is_one() const { return *this == one(); }
  friend bool operator==(const Fp12& a, const Fp12& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
  friend bool operator!=(const Fp12& a, const Fp12& b) { return !(a == b); }

  friend Fp12 operator*(const Fp12& a, const Fp12& b) {
    Fp6 v0 = a.c0 * b.c0;
    Fp6 v1 = a.c1 * b.c1;
    return {v0 + v1.mul_by_v(), (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1};
  }
  Fp12& operator*=(const Fp12& b) { return *this = *this * b; }

  Fp12 sqr() const {
    Fp6 t = c0 * c1;
    Fp6 r0 = (c0 + c1) * (c0 + c1.mul_by_v()) - t - t.mul_by_v();
    return {r0, t + t};
  }

  // Product with the sparse element l0 + l1 w + l3 w^3 produced by line
  // evaluations.
  Fp12 mul_by_line(const Fp2& l0, const Fp2& l1, const Fp2& l3) const {
    Fp6 a0 = c0 * l0;
    Fp6 a1 = c1.mul_by_01(l1, l3);
    Fp6 r1 = (c0 + c1).mul_by_01(l0 + l1, l3) - a0 - a1;
    return {a0 + a1.mul_by_v(), r1};
  }

  // Granger-Scott squaring, valid only in the cyclotomic subgroup (after the
  // easy part of the final exponentiation).
  Fp12 cyclotomic_sqr() const;

  // Equals the p^6 Frobenius; the inverse for unitary elements.
  Fp12 conj() const { return {c0, -c1}; }
  Fp12 inv() const;

  Fp12 frobenius() const;    // x^p
  Fp12 frobenius2() const;   // x^(p^2)
  Fp12 frobenius3() const;   // x^(p^3)

  template <std::size_t M>
  Fp12 pow(const Limbs<M>& e) const {
    Fp12 result = one();
    for (std::size_t i = limbs::bit_length(e); i-- > 0;) {
      result = result.sqr();
      if (limbs::bit(e, i)) result *= *this;
    }
    return result;
  }
  Fp12 pow(const Fr& e) const { return pow(e.to_canonical()); }
  Fp12 pow(const mpz_class& e) const;
};

}  // namespace ndnsec::math::bn

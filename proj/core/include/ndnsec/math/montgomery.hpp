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

// Fixed-width prime fields in Montgomery form. The modulus and all derived
// constants are computed at compile time from a hex literal carried by a tag
// type, so each field is a distinct strong type:
//
//   struct MyTag {
//     static constexpr std::size_t kLimbs = 3;
//     static constexpr auto kParams = MontgomeryParams<3>::make("...");
//   };
//   using F = MontField<MyTag>;

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string_view>

#include "ndnsec/bytes.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::math {

template <std::size_t N>
using Limbs = std::array<std::uint64_t, N>;

using u128 = unsigned __int128;

namespace limbs {

template <std::size_t N>
constexpr bool is_zero(const Limbs<N>& a) {
  std::uint64_t acc = 0;
  for (auto v : a) acc |= v;
  return acc == 0;
}

// a >= b
template <std::size_t N>
constexpr bool geq(const Limbs<N>& a, const Limbs<N>& b) {
  for (std::size_t i = N; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return true;
}

// a -= b, returns the borrow.
template <std::size_t N>
constexpr std::uint64_t sub(Limbs<N>& a, const Limbs<N>& b) {
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < N; ++i) {
    u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
    a[i] = static_cast<std::uint64_t>(d);
    borrow = static_cast<std::uint64_t>(d >> 64) & 1;
  }
  return borrow;
}

// a += b, returns the carry.
template <std::size_t N>
constexpr std::uint64_t add(Limbs<N>& a, const Limbs<N>& b) {
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < N; ++i) {
    u128 s = static_cast<u128>(a[i]) + b[i] + carry;
    a[i] = static_cast<std::uint64_t>(s);
    carry = static_cast<std::uint64_t>(s >> 64);
  }
  return carry;
}

template <std::size_t N>
constexpr std::size_t bit_length(const Limbs<N>& a) {
  for (std::size_t i = N; i-- > 0;) {
    if (a[i] != 0) {
      std::size_t b = 64;
      while (((a[i] >> (b - 1)) & 1) == 0) --b;
      return i * 64 + b;
    }
  }
  return 0;
}

template <std::size_t N>
constexpr bool bit(const Limbs<N>& a, std::size_t i) {
  return ((a[i / 64] >> (i % 64)) & 1) != 0;
}

constexpr int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

template <std::size_t N>
constexpr Limbs<N> from_hex(std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  Limbs<N> out{};
  std::size_t nibble = 0;
  for (std::size_t i = hex.size(); i-- > 0;) {
    int d = hex_digit(hex[i]);
    if (d < 0) throw "invalid hex digit";
    if (nibble / 16 >= N) {
      if (d != 0) throw "hex literal too wide";
    } else {
      out[nibble / 16] |= static_cast<std::uint64_t>(d) << (4 * (nibble % 16));
    }
    ++nibble;
  }
  return out;
}

template <std::size_t N>
mpz_class to_mpz(const Limbs<N>& a) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), N, -1, sizeof(std::uint64_t), 0, 0, a.data());
  return r;
}

// Caller guarantees 0 <= v < 2^(64N).
template <std::size_t N>
Limbs<N> from_mpz(const mpz_class& v) {
  Limbs<N> out{};
  std::size_t count = 0;
  mpz_export(out.data(), &count, -1, sizeof(std::uint64_t), 0, 0,
             v.get_mpz_t());
  return out;
}

}  // namespace limbs

template <std::size_t N>
struct MontgomeryParams {
  Limbs<N> modulus{};
  Limbs<N> r{};         // 2^(64N) mod m
  Limbs<N> r2{};        // 2^(128N) mod m
  std::uint64_t n0 = 0; // -m^{-1} mod 2^64
  std::size_t bits = 0;

  static constexpr MontgomeryParams make(std::string_view hex) {
    MontgomeryParams p;
    p.modulus = limbs::from_hex<N>(hex);
    if ((p.modulus[0] & 1) == 0) throw "modulus must be odd";
    p.bits = limbs::bit_length(p.modulus);
    std::uint64_t inv = 1;
    for (int i = 0; i < 7; ++i) inv *= 2 - p.modulus[0] * inv;
    p.n0 = ~inv + 1;
    Limbs<N> x{};
    x[0] = 1;
    for (std::size_t i = 0; i < 128 * N; ++i) {
      std::uint64_t carry = limbs::add(x, x);
      if (carry != 0 || limbs::geq(x, p.modulus)) limbs::sub(x, p.modulus);
      if (i + 1 == 64 * N) p.r = x;
    }
    p.r2 = x;
    return p;
  }
};

template <class Tag>
class MontField {
 public:
  static constexpr std::size_t kLimbs = Tag::kLimbs;
  using LimbArray = Limbs<kLimbs>;
  static constexpr const MontgomeryParams<kLimbs>& params() {
    return Tag::kParams;
  }
  static constexpr std::size_t kBits = Tag::kParams.bits;
  static constexpr std::size_t kBytes = (kBits + 7) / 8;

  constexpr MontField() = default;

  static constexpr MontField zero() { return MontField(); }
  static constexpr MontField one() { return from_raw(params().r); }

  static MontField from_u64(std::uint64_t v) {
    LimbArray a{};
    a[0] = v;
    reduce_once(a);
    return from_canonical(a);
  }

  // a < modulus required.
  static MontField from_canonical(const LimbArray& a) {
    MontField out;
    mont_mul(out.v_, a, params().r2);
    return out;
  }

  static MontField from_mpz(const mpz_class& v) {
    mpz_class r = v % modulus_mpz();
    if (r < 0) r += modulus_mpz();
    return from_canonical(limbs::from_mpz<kLimbs>(r));
  }

  // Big-endian bytes of any length, reduced modulo the field prime.
  static MontField from_bytes_reduce(ByteView bytes) {
    mpz_class v;
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return from_mpz(v);
  }

  // Exactly kBytes big-endian bytes; rejects non-canonical values.
  static std::optional<MontField> from_bytes(ByteView bytes) {
    if (bytes.size() != kBytes) return std::nullopt;
    LimbArray a{};
    for (std::size_t i = 0; i < kBytes; ++i) {
      std::size_t shift = kBytes - 1 - i;
      a[shift / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (shift % 8));
    }
    if (limbs::geq(a, params().modulus)) return std::nullopt;
    return from_canonical(a);
  }

  static MontField random(RandomSource& rng) {
    // Rejection sampling keeps the distribution exactly uniform.
    std::array<std::uint8_t, kBytes> buf{};
    const std::size_t top_bits = kBits % 8;
    for (;;) {
      rng.fill(buf);
      if (top_bits != 0) buf[0] &= static_cast<std::uint8_t>((1u << top_bits) - 1);
      if (auto v = from_bytes(buf)) return *v;
    }
  }

  static MontField random_nonzero(RandomSource& rng) {
    for (;;) {
      MontField v = random(rng);
      if (!v.is_zero()) return v;
    }
  }

  static const mpz_class& modulus_mpz() {
    static const mpz_class m = limbs::to_mpz(params().modulus);
    return m;
  }

  LimbArray to_canonical() const {
    LimbArray one{};
    one[0] = 1;
    LimbArray out;
    mont_mul(out, v_, one);
    return out;
  }

  mpz_class to_mpz() const { return limbs::to_mpz(to_canonical()); }

  void to_bytes(std::span<std::uint8_t> out) const {
    LimbArray a = to_canonical();
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::size_t shift = out.size() - 1 - i;
      out[i] = shift / 8 < kLimbs
                   ? static_cast<std::uint8_t>(a[shift / 8] >> (8 * (shift % 8)))
                   : 0;
    }
  }

  Bytes to_bytes() const {
    Bytes out(kBytes);
    to_bytes(out);
    return out;
  }

  bool is_zero() const { return limbs::is_zero(v_); }
  bool is_one() const { return v_ == params().r; }
  bool is_odd() const { return (to_canonical()[0] & 1) != 0; }

  friend bool operator==(const MontField& a, const MontField& b) {
    return a.v_ == b.v_;
  }

  friend MontField operator+(const MontField& a, const MontField& b) {
    MontField out = a;
    out += b;
    return out;
  }
  MontField& operator+=(const MontField& b) {
    constexpr auto& m = Tag::kParams.modulus;
#if defined(__x86_64__)
    if constexpr (kLimbs == 3 && (m[2] >> 63) == 0) {
      add3_x86(v_, b.v_);
      return *this;
    }
#endif
    std::uint64_t carry = 0;
#pragma GCC unroll 8
    for (std::size_t i = 0; i < kLimbs; ++i) {
      u128 s = static_cast<u128>(v_[i]) + b.v_[i] + carry;
      v_[i] = static_cast<std::uint64_t>(s);
      carry = static_cast<std::uint64_t>(s >> 64);
    }
    LimbArray d;
    std::uint64_t borrow = 0;
#pragma GCC unroll 8
    for (std::size_t i = 0; i < kLimbs; ++i) {
      u128 diff = static_cast<u128>(v_[i]) - m[i] - borrow;
      d[i] = static_cast<std::uint64_t>(diff);
      borrow = static_cast<std::uint64_t>(diff >> 64) & 1;
    }
    const bool keep = borrow != 0 && carry == 0;
#pragma GCC unroll 8
    for (std::size_t i = 0; i < kLimbs; ++i) v_[i] = keep ? v_[i] : d[i];
    return *this;
  }

  friend MontField operator-(const MontField& a, const MontField& b) {
    MontField out = a;
    out -= b;
    return out;
  }
  MontField& operator-=(const MontField& b) {
    constexpr auto& m = Tag::kParams.modulus;
#if defined(__x86_64__)
    if constexpr (kLimbs == 3) {
      sub3_x86(v_, b.v_);
      return *this;
    }
#endif
    std::uint64_t borrow = 0;
#pragma GCC unroll 8
    for (std::size_t i = 0; i < kLimbs; ++i) {
      u128 diff = static_cast<u128>(v_[i]) - b.v_[i] - borrow;
      v_[i] = static_cast<std::uint64_t>(diff);
      borrow = static_cast<std::uint64_t>(diff >> 64) & 1;
    }
    const std::uint64_t mask = 0 - borrow;
    std::uint64_t carry = 0;
#pragma GCC unroll 8
    for (std::size_t i = 0; i < kLimbs; ++i) {
      u128 s = static_cast<u128>(v_[i]) + (m[i] & mask) + carry;
      v_[i] = static_cast<std::uint64_t>(s);
      carry = static_cast<std::uint64_t>(s >> 64);
    }
    return *this;
  }

  MontField operator-() const {
    if (is_zero()) return *this;
    MontField out;
    out.v_ = params().modulus;
    limbs::sub(out.v_, v_);
    return out;
  }

  friend MontField operator*(const MontField& a, const MontField& b) {
    MontField out;
    mont_mul(out.v_, a.v_, b.v_);
    return out;
  }
  MontField& operator*=(const MontField& b) {
    mont_mul(v_, v_, b.v_);
    return *this;
  }

  MontField dbl() const { return *this + *this; }
  MontField sqr() const { return *this * *this; }

  // Exponent given as little-endian limbs of any width.
  template <std::size_t M>
  MontField pow(const Limbs<M>& e) const {
    MontField result = one();
    for (std::size_t i = limbs::bit_length(e); i-- > 0;) {
      result = result.sqr();
      if (limbs::bit(e, i)) result *= *this;
    }
    return result;
  }

  MontField pow(const mpz_class& e) const {
    MontField result = one();
    for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
      result = result.sqr();
      if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
    }
    if (e == 0) return one();
    return result;
  }

  // Multiplicative inverse; zero maps to zero.
  MontField inv() const {
    if (is_zero()) return zero();
    mpz_class v = to_mpz();
    mpz_invert(v.get_mpz_t(), v.get_mpz_t(), modulus_mpz().get_mpz_t());
    return from_mpz(v);
  }

  // Euler criterion; zero counts as a square.
  bool is_square() const {
    if (is_zero()) return true;
    static const mpz_class e = (modulus_mpz() - 1) / 2;
    return pow(e).is_one();
  }

  // Square root for moduli congruent to 3 mod 4.
  std::optional<MontField> sqrt() const {
    static_assert((Tag::kParams.modulus[0] & 3) == 3,
                  "sqrt requires a modulus congruent to 3 mod 4");
    static const mpz_class e = (modulus_mpz() + 1) / 4;
    MontField r = pow(e);
    if (r.sqr() == *this) return r;
    return std::nullopt;
  }

  const LimbArray& raw() const { return v_; }
  static constexpr MontField from_raw(const LimbArray& v) {
    MontField out;
    out.v_ = v;
    return out;
  }

 private:
  static void reduce_once(LimbArray& a) {
    if (limbs::geq(a, params().modulus)) limbs::sub(a, params().modulus);
  }

#if defined(__x86_64__)
  // a = a + b mod m for three limbs; a + b must fit in 192 bits.
  __attribute__((always_inline)) static void add3_x86(LimbArray& a, const LimbArray& b) {
    constexpr auto& m = Tag::kParams.modulus;
    std::uint64_t t0 = a[0], t1 = a[1], t2 = a[2], d0, d1, d2;
    asm("addq %[b0], %[t0]\n\t"
        "adcq %[b1], %[t1]\n\t"
        "adcq %[b2], %[t2]\n\t"
        "movq %[t0], %[d0]\n\t"
        "subq %[m0], %[d0]\n\t"
        "movq %[t1], %[d1]\n\t"
        "sbbq %[m1], %[d1]\n\t"
        "movq %[t2], %[d2]\n\t"
        "sbbq %[m2], %[d2]\n\t"
        "cmovncq %[d0], %[t0]\n\t"
        "cmovncq %[d1], %[t1]\n\t"
        "cmovncq %[d2], %[t2]\n\t"
        : [t0] "+&r"(t0), [t1] "+&r"(t1), [t2] "+&r"(t2), [d0] "=&r"(d0),
          [d1] "=&r"(d1), [d2] "=&r"(d2)
        : [b0] "m"(b[0]), [b1] "m"(b[1]), [b2] "m"(b[2]), [m0] "m"(m[0]),
          [m1] "m"(m[1]), [m2] "m"(m[2])
        : "cc");
    a[0] = t0;
    a[1] = t1;
    a[2] = t2;
  }

  // a = a - b mod m for three limbs.
  __attribute__((always_inline)) static void sub3_x86(LimbArray& a, const LimbArray& b) {
    constexpr auto& m = Tag::kParams.modulus;
    std::uint64_t t0 = a[0], t1 = a[1], t2 = a[2], c0, c1, c2, z;
    asm("xorq %[z], %[z]\n\t"
        "subq %[b0], %[t0]\n\t"
        "sbbq %[b1], %[t1]\n\t"
        "sbbq %[b2], %[t2]\n\t"
        "movq %[m0], %[c0]\n\t"
        "movq %[m1], %[c1]\n\t"
        "movq %[m2], %[c2]\n\t"
        "cmovncq %[z], %[c0]\n\t"
        "cmovncq %[z], %[c1]\n\t"
        "cmovncq %[z], %[c2]\n\t"
        "addq %[c0], %[t0]\n\t"
        "adcq %[c1], %[t1]\n\t"
        "adcq %[c2], %[t2]\n\t"
        : [t0] "+&r"(t0), [t1] "+&r"(t1), [t2] "+&r"(t2), [c0] "=&r"(c0),
          [c1] "=&r"(c1), [c2] "=&r"(c2), [z] "=&r"(z)
        : [b0] "m"(b[0]), [b1] "m"(b[1]), [b2] "m"(b[2]), [m0] "m"(m[0]),
          [m1] "m"(m[1]), [m2] "m"(m[2])
        : "cc");
    a[0] = t0;
    a[1] = t1;
    a[2] = t2;
  }

  // CIOS for three limbs with a spare top bit, kept in registers.
  static void mont_mul3_x86(LimbArray& out, const LimbArray& a, const LimbArray& b) {
    constexpr auto& m = Tag::kParams.modulus;
    static constexpr std::uint64_t n0 = Tag::kParams.n0;
    std::uint64_t t0, t1, t2, hi, c, mq, bi;
    asm(
        "movq %[b0], %[bi]\n\t"
        "movq %[a0], %%rax\n\t"
        "mulq %[bi]\n\t"
        "movq %%rax, %[t0]\n\t"
        "movq %%rdx, %[hi]\n\t"
        "movq %[a1], %%rax\n\t"
        "mulq %[bi]\n\t"
        "addq %[hi], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rax, %[t1]\n\t"
        "movq %%rdx, %[hi]\n\t"
        "movq %[a2], %%rax\n\t"
        "mulq %[bi]\n\t"
        "addq %[hi], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rax, %[t2]\n\t"
        "movq %%rdx, %[hi]\n\t"
        "movq %[t0], %[mq]\n\t"
        "imulq %[n0], %[mq]\n\t"
        "movq %[mq], %%rax\n\t"
        "mulq %[q0]\n\t"
        "addq %[t0], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rdx, %[c]\n\t"
        "movq %[mq], %%rax\n\t"
        "mulq %[q1]\n\t"
        "addq %[c], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %[t1], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rax, %[t0]\n\t"
        "movq %%rdx, %[c]\n\t"
        "movq %[mq], %%rax\n\t"
        "mulq %[q2]\n\t"
        "addq %[c], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %[t2], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rax, %[t1]\n\t"
        "leaq (%%rdx, %[hi]), %[t2]\n\t"
        "movq %[b1], %[bi]\n\t"
        "movq %[a0], %%rax\n\t"
        "mulq %[bi]\n\t"
        "addq %%rax, %[t0]\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rdx, %[hi]\n\t"
        "movq %[a1], %%rax\n\t"
        "mulq %[bi]\n\t"
        "addq %[hi], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %%rax, %[t1]\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rdx, %[hi]\n\t"
        "movq %[a2], %%rax\n\t"
        "mulq %[bi]\n\t"
        "addq %[hi], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %%rax, %[t2]\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rdx, %[hi]\n\t"
        "movq %[t0], %[mq]\n\t"
        "imulq %[n0], %[mq]\n\t"
        "movq %[mq], %%rax\n\t"
        "mulq %[q0]\n\t"
        "addq %[t0], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rdx, %[c]\n\t"
        "movq %[mq], %%rax\n\t"
        "mulq %[q1]\n\t"
        "addq %[c], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %[t1], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rax, %[t0]\n\t"
        "movq %%rdx, %[c]\n\t"
        "movq %[mq], %%rax\n\t"
        "mulq %[q2]\n\t"
        "addq %[c], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %[t2], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rax, %[t1]\n\t"
        "leaq (%%rdx, %[hi]), %[t2]\n\t"
        "movq %[b2], %[bi]\n\t"
        "movq %[a0], %%rax\n\t"
        "mulq %[bi]\n\t"
        "addq %%rax, %[t0]\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rdx, %[hi]\n\t"
        "movq %[a1], %%rax\n\t"
        "mulq %[bi]\n\t"
        "addq %[hi], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %%rax, %[t1]\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rdx, %[hi]\n\t"
        "movq %[a2], %%rax\n\t"
        "mulq %[bi]\n\t"
        "addq %[hi], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %%rax, %[t2]\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rdx, %[hi]\n\t"
        "movq %[t0], %[mq]\n\t"
        "imulq %[n0], %[mq]\n\t"
        "movq %[mq], %%rax\n\t"
        "mulq %[q0]\n\t"
        "addq %[t0], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rdx, %[c]\n\t"
        "movq %[mq], %%rax\n\t"
        "mulq %[q1]\n\t"
        "addq %[c], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %[t1], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rax, %[t0]\n\t"
        "movq %%rdx, %[c]\n\t"
        "movq %[mq], %%rax\n\t"
        "mulq %[q2]\n\t"
        "addq %[c], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "addq %[t2], %%rax\n\t"
        "adcq $0, %%rdx\n\t"
        "movq %%rax, %[t1]\n\t"
        "leaq (%%rdx, %[hi]), %[t2]\n\t"
        "movq %[t0], %[hi]\n\t"
        "subq %[q0], %[hi]\n\t"
        "movq %[t1], %[c]\n\t"
        "sbbq %[q1], %[c]\n\t"
        "movq %[t2], %[mq]\n\t"
        "sbbq %[q2], %[mq]\n\t"
        "cmovncq %[hi], %[t0]\n\t"
        "cmovncq %[c], %[t1]\n\t"
        "cmovncq %[mq], %[t2]\n\t"
        : [t0] "=&r"(t0), [t1] "=&r"(t1), [t2] "=&r"(t2), [hi] "=&r"(hi),
          [c] "=&r"(c), [mq] "=&r"(mq), [bi] "=&r"(bi)
        : [a0] "m"(a[0]), [a1] "m"(a[1]), [a2] "m"(a[2]), [b0] "m"(b[0]),
          [b1] "m"(b[1]), [b2] "m"(b[2]), [q0] "m"(m[0]), [q1] "m"(m[1]),
          [q2] "m"(m[2]), [n0] "m"(n0)
        : "rax", "rdx", "cc");
    out[0] = t0;
    out[1] = t1;
    out[2] = t2;
  }
#endif

  // Coarsely integrated operand scanning Montgomery product; out may alias
  // either input.
  __attribute__((always_inline)) static void mont_mul(LimbArray& out, const LimbArray& a, const LimbArray& b) {
    constexpr std::size_t n = kLimbs;
    constexpr auto& m = Tag::kParams.modulus;
    constexpr std::uint64_t n0 = Tag::kParams.n0;
    // With the top bit of the modulus clear the running sum never needs an
    // extra carry word.
    constexpr bool kSpareBit = (m[n - 1] >> 63) == 0;
#if defined(__x86_64__)
    // The three-limb kernel needs the top limb below 2^62 so that no carry
    // word is ever required.
    if constexpr (n == 3 && (m[2] >> 62) == 0) {
      mont_mul3_x86(out, a, b);
      return;
    }
#endif
    std::uint64_t t[n + 2] = {};
#pragma GCC unroll 8
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t carry = 0;
#pragma GCC unroll 8
      for (std::size_t j = 0; j < n; ++j) {
        u128 s = static_cast<u128>(a[j]) * b[i] + t[j] + carry;
        t[j] = static_cast<std::uint64_t>(s);
        carry = static_cast<std::uint64_t>(s >> 64);
      }
      std::uint64_t top;
      if constexpr (kSpareBit) {
        top = t[n] + carry;
      } else {
        u128 s = static_cast<u128>(t[n]) + carry;
        top = static_cast<std::uint64_t>(s);
        t[n + 1] = static_cast<std::uint64_t>(s >> 64);
      }

      std::uint64_t q = t[0] * n0;
      u128 s = static_cast<u128>(q) * m[0] + t[0];
      carry = static_cast<std::uint64_t>(s >> 64);
#pragma GCC unroll 8
      for (std::size_t j = 1; j < n; ++j) {
        s = static_cast<u128>(q) * m[j] + t[j] + carry;
        t[j - 1] = static_cast<std::uint64_t>(s);
        carry = static_cast<std::uint64_t>(s >> 64);
      }
      if constexpr (kSpareBit) {
        t[n - 1] = top + carry;
        t[n] = 0;
      } else {
        s = static_cast<u128>(top) + carry;
        t[n - 1] = static_cast<std::uint64_t>(s);
        t[n] = t[n + 1] + static_cast<std::uint64_t>(s >> 64);
      }
    }
    LimbArray d;
    std::uint64_t borrow = 0;
#pragma GCC unroll 8
    for (std::size_t j = 0; j < n; ++j) {
      u128 diff = static_cast<u128>(t[j]) - m[j] - borrow;
      d[j] = static_cast<std::uint64_t>(diff);
      borrow = static_cast<std::uint64_t>(diff >> 64) & 1;
    }
    const bool keep = borrow != 0 && t[n] == 0;
#pragma GCC unroll 8
    for (std::size_t j = 0; j < n; ++j) out[j] = keep ? t[j] : d[j];
  }

  LimbArray v_{};
};

}  // namespace ndnsec::math

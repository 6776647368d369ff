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

#include "ndnsec/math/bigint.hpp"

#include "ndnsec/error.hpp"

namespace ndnsec::math {

std::size_t byte_length(const mpz_class& v) {
  if (v == 0) return 0;
  return (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
}

Bytes to_bytes_fixed(const mpz_class& v, std::size_t length) {
  if (v < 0) throw ParameterError("negative integer cannot be encoded");
  std::size_t n = byte_length(v);
  if (n > length) throw ParameterError("integer too large for its field");
  Bytes out(length, 0);
  if (n != 0) {
    std::size_t written = 0;
    mpz_export(out.data() + (length - n), &written, 1, 1, 1, 0, v.get_mpz_t());
  }
  return out;
}

mpz_class from_bytes(ByteView bytes) {
  mpz_class v;
  if (!bytes.empty()) {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return v;
}

mpz_class random_below(const mpz_class& bound, RandomSource& rng) {
  if (bound <= 0) throw ParameterError("random_below needs a positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t len = (bits + 7) / 8;
  const unsigned extra = static_cast<unsigned>(8 * len - bits);
  for (;;) {
    Bytes buf = rng.bytes(len);
    buf[0] &= static_cast<std::uint8_t>(0xFF >> extra);
    mpz_class v = from_bytes(buf);
    if (v < bound) return v;
  }
}

mpz_class random_bits(std::size_t bits, RandomSource& rng) {
  if (bits == 0) throw ParameterError("zero-width random integer");
  mpz_class top = 1;
  top <<= bits - 1;
  return top + random_below(top, rng);
}

mpz_class random_prime(std::size_t bits, RandomSource& rng) {
  for (;;) {
    mpz_class c = random_bits(bits, rng);
    c |= 1;
    if (mpz_probab_prime_p(c.get_mpz_t(), 40) != 0) return c;
  }
}

mpz_class invert(const mpz_class& a, const mpz_class& mod) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw ParameterError("value has no modular inverse");
  }
  return r;
}

FixedBasePow::FixedBasePow(const mpz_class& base, const mpz_class& mod,
                           std::size_t max_bits)
    : base_(base), mod_(mod), windows_((max_bits + 3) / 4) {
  table_.reserve(windows_ * 15);
  mpz_class b = base % mod;
  for (std::size_t w = 0; w < windows_; ++w) {
    mpz_class acc = b;
    for (int d = 0; d < 15; ++d) {
      table_.push_back(acc);
      acc = acc * b % mod;
    }
    b = acc;
  }
}

mpz_class FixedBasePow::pow(const mpz_class& e) const {
  if (e < 0 || mpz_sizeinbase(e.get_mpz_t(), 2) > 4 * windows_) {
    return powm(base_, e, mod_);
  }
  mpz_class acc = 1;
  for (std::size_t w = 0; w < windows_; ++w) {
    unsigned digit = 0;
    for (unsigned b = 0; b < 4; ++b) {
      digit |= static_cast<unsigned>(mpz_tstbit(e.get_mpz_t(), 4 * w + b)) << b;
    }
    if (digit != 0) {
      mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), table_[w * 15 + digit - 1].get_mpz_t());
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod_.get_mpz_t());
    }
  }
  return acc;
}

}  // namespace ndnsec::math

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

// Helpers around GMP integers for the RSA and discrete-log schemes.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "ndnsec/bytes.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::math {

// Big-endian, left-padded to exactly `length` bytes. Throws ParameterError
// if the value is negative or does not fit.
Bytes to_bytes_fixed(const mpz_class& v, std::size_t length);
mpz_class from_bytes(ByteView bytes);
std::size_t byte_length(const mpz_class& v);

// Uniform in [0, bound).
mpz_class random_below(const mpz_class& bound, RandomSource& rng);
// Exactly `bits` bits long (top bit set).
mpz_class random_bits(std::size_t bits, RandomSource& rng);
mpz_class random_prime(std::size_t bits, RandomSource& rng);

inline mpz_class powm(const mpz_class& base, const mpz_class& exp,
                      const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Throws ParameterError when no inverse exists.
mpz_class invert(const mpz_class& a, const mpz_class& mod);

// Powers of a fixed base with exponents of at most `max_bits` bits, using
// precomputed g^(d * 16^j).
class FixedBasePow {
 public:
  FixedBasePow(const mpz_class& base, const mpz_class& mod, std::size_t max_bits);

  // Exponents wider than max_bits fall back to plain exponentiation.
  mpz_class pow(const mpz_class& e) const;

 private:
  mpz_class base_, mod_;
  std::size_t windows_;
  std::vector<mpz_class> table_;  // windows_ * 15 entries
};

}  // namespace ndnsec::math

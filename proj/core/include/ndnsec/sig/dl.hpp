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

// The prime-order subgroup of Z_p^* shared by DSA, the group signature, the
// ring signature and the chameleon hash.

#include <gmpxx.h>

#include <memory>
#include <string_view>

#include "ndnsec/bytes.hpp"
#include "ndnsec/hash.hpp"
#include "ndnsec/math/bigint.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::sig {

class DlGroup {
 public:
  // Built-in 1024-bit p, 160-bit q. p = 2qr + 1 with r prime
  // (scripts/gen_dl_params.py), so the only small subgroup has order 2.
  static const DlGroup& standard();

  DlGroup(mpz_class p, mpz_class q, mpz_class g);

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }
  const mpz_class& g() const { return g_; }
  std::size_t p_bytes() const { return p_bytes_; }
  std::size_t q_bytes() const { return q_bytes_; }

  // g^e mod p through the precomputed table.
  mpz_class pow_g(const mpz_class& e) const { return g_table_->pow(e); }
  mpz_class pow(const mpz_class& b, const mpz_class& e) const {
    return math::powm(b, e, p_);
  }
  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b % p_; }

  // 1 < y < p and y^q == 1.
  bool in_subgroup(const mpz_class& y) const;
  // Quadratic residue test; every subgroup element passes. Cheap filter
  // used by the batch verifiers.
  bool is_residue(const mpz_class& y) const;

  mpz_class random_scalar(RandomSource& rng) const;           // [0, q)
  mpz_class random_nonzero_scalar(RandomSource& rng) const;   // [1, q)

  // Digest reduced modulo q.
  mpz_class reduce(const Digest& d) const;

  Bytes encode_element(const mpz_class& y) const;  // p_bytes wide
  Bytes encode_scalar(const mpz_class& s) const;   // q_bytes wide

 private:
  mpz_class p_, q_, g_;
  std::size_t p_bytes_, q_bytes_;
  std::shared_ptr<const math::FixedBasePow> g_table_;
};

}  // namespace ndnsec::sig

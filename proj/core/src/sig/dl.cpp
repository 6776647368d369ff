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

#include "ndnsec/sig/dl.hpp"

#include "ndnsec/error.hpp"

namespace ndnsec::sig {

namespace {

mpz_class hex(const char* s) { return mpz_class(s, 16); }

}  // namespace

const DlGroup& DlGroup::standard() {
  static const DlGroup group(
      hex("a65ebc18fc9145a3237e5dcfe147ec8aaa38b07cfff4463e93328345e7cd4189"
          "6404d34f38cb43cd9c78c5ab37cbd6f8b21757431b443a763cbc525d91beaf1a"
          "054596656a4da501841772a6b06e5e25f75a6e238d5599cd527dc0b7b1e31e5a"
          "1f50f0dac51e0996906a9bd1a0040d844112e0cc7c1b7820001eb35dd46eabd7"),
      hex("cc5da05dbde64898109a05bdbcdcf3194006a251"),
      hex("92ced3f4a8381bb340a58c3d780f13c22ec9aba7e2da2d82a33e24d39034ae1b"
          "7d2924715802084dace0eaa5fb2e38163f7a406c5fa085de72844abab3283256"
          "17df853096648fa7b1aea31fa8055ac62daf7bfce7bdb52d785b2ff4a20c1a47"
          "331209bfc310d06d7bedce4f24f0070e13bec4dacf62829d823bd4a2026d2137"));
  return group;
}

DlGroup::DlGroup(mpz_class p, mpz_class q, mpz_class g)
    : p_(std::move(p)), q_(std::move(q)), g_(std::move(g)) {
  if (p_ <= 3 || q_ <= 1 || (p_ - 1) % q_ != 0) {
    throw ParameterError("q must divide p - 1");
  }
  if (g_ <= 1 || g_ >= p_ || math::powm(g_, q_, p_) != 1) {
    throw ParameterError("g does not generate the order-q subgroup");
  }
  p_bytes_ = math::byte_length(p_);
  q_bytes_ = math::byte_length(q_);
  g_table_ = std::make_shared<math::FixedBasePow>(
      g_, p_, mpz_sizeinbase(q_.get_mpz_t(), 2));
}

bool DlGroup::in_subgroup(const mpz_class& y) const {
  return y > 1 && y < p_ && math::powm(y, q_, p_) == 1;
}

bool DlGroup::is_residue(const mpz_class& y) const {
  return y > 0 && y < p_ && mpz_jacobi(y.get_mpz_t(), p_.get_mpz_t()) == 1;
}

mpz_class DlGroup::random_scalar(RandomSource& rng) const {
  return math::random_below(q_, rng);
}

mpz_class DlGroup::random_nonzero_scalar(RandomSource& rng) const {
  for (;;) {
    mpz_class k = random_scalar(rng);
    if (k != 0) return k;
  }
}

mpz_class DlGroup::reduce(const Digest& d) const {
  return math::from_bytes(d) % q_;
}

Bytes DlGroup::encode_element(const mpz_class& y) const {
  return math::to_bytes_fixed(y, p_bytes_);
}

Bytes DlGroup::encode_scalar(const mpz_class& s) const {
  return math::to_bytes_fixed(s, q_bytes_);
}

}  // namespace ndnsec::sig

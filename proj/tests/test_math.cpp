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

#include <gtest/gtest.h>

#include "ndnsec/math/bn.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/ecdsa.hpp"

namespace ndnsec::math {
namespace {

using bn::Fp;
using bn::Fr;
using bn::G1;
using bn::G2;
using bn::Gt;

template <class F>
void check_field_against_gmp(std::uint64_t seed) {
  SeededRandom rng(seed);
  const mpz_class& m = F::modulus_mpz();
  auto edge = [&](int i) {
    switch (i % 4) {
      case 0: return F::zero();
      case 1: return F::from_mpz(m - 1);
      case 2: return F::one();
      default: return F::random(rng);
    }
  };
  for (int i = 0; i < 2000; ++i) {
    F a = i < 16 ? edge(i) : F::random(rng);
    F b = i < 16 ? edge(i / 4) : F::random(rng);
    mpz_class x = a.to_mpz(), y = b.to_mpz();
    mpz_class sum = (x + y) % m;
    mpz_class diff = ((x - y) % m + m) % m;
    mpz_class prod = x * y % m;
    ASSERT_EQ((a + b).to_mpz(), sum);
    ASSERT_EQ((a - b).to_mpz(), diff);
    ASSERT_EQ((a * b).to_mpz(), prod);
    ASSERT_EQ(a.sqr().to_mpz(), x * x % m);
    F c = a;
    c += b;
    ASSERT_EQ(c.to_mpz(), sum);
    c = a;
    c -= b;
    ASSERT_EQ(c.to_mpz(), diff);
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inv()).is_one());
    }
  }
}

TEST(Field, BnBaseFieldMatchesGmp) { check_field_against_gmp<Fp>(1); }
TEST(Field, BnScalarFieldMatchesGmp) { check_field_against_gmp<Fr>(2); }
TEST(Field, EcdsaFieldsMatchGmp) {
  check_field_against_gmp<sig::ecdsa::Field>(3);
  check_field_against_gmp<sig::ecdsa::Scalar>(4);
}

TEST(Curve, GeneratorsAreOnCurveWithPrimeOrder) {
  EXPECT_TRUE(G1::generator().on_curve());
  EXPECT_TRUE(G2::generator().on_curve());
  Fr minus_one = Fr::zero() - Fr::one();
  EXPECT_EQ(G1::generator() * minus_one + G1::generator(), G1::infinity());
  EXPECT_EQ(G2::generator() * minus_one + G2::generator(), G2::infinity());
}

TEST(Curve, FixedBaseAgreesWithGenericMultiplication) {
  SeededRandom rng(5);
  for (int i = 0; i < 50; ++i) {
    Fr k = Fr::random(rng);
    EXPECT_EQ(bn::mul_g1_generator(k), G1::generator() * k);
  }
}

TEST(Curve, CompressionRoundTrips) {
  SeededRandom rng(6);
  for (int i = 0; i < 50; ++i) {
    G1 p = G1::generator() * Fr::random_nonzero(rng);
    G2 q = G2::generator() * Fr::random_nonzero(rng);
    auto p2 = bn::decompress_g1(bn::compress(p));
    auto q2 = bn::decompress_g2(bn::compress(q));
    ASSERT_TRUE(p2 && q2);
    EXPECT_EQ(*p2, p);
    EXPECT_EQ(*q2, q);
  }
  EXPECT_EQ(bn::compress(G1::generator()).size(), bn::kG1CompressedSize);
}

TEST(Pairing, IsBilinearAndNonDegenerate) {
  SeededRandom rng(8);
  Gt base = bn::pairing(G1::generator(), G2::generator());
  EXPECT_FALSE(base.is_one());
  EXPECT_TRUE(bn::in_gt(base));
  for (int i = 0; i < 5; ++i) {
    Fr a = Fr::random_nonzero(rng), b = Fr::random_nonzero(rng);
    Gt lhs = bn::pairing(G1::generator() * a, G2::generator() * b);
    EXPECT_EQ(lhs, base.pow(a * b));
    EXPECT_EQ(bn::pairing(G1::generator() * a, G2::generator()),
              bn::pairing(G1::generator(), G2::generator() * a));
  }
}

TEST(Pairing, StoredGeneratorMatchesComputedPairing) {
  EXPECT_EQ(bn::gt_generator(), bn::pairing(G1::generator(), G2::generator()));
}

TEST(Pairing, FixedBaseGtPowerAgreesWithPow) {
  SeededRandom rng(9);
  for (int i = 0; i < 10; ++i) {
    Fr k = Fr::random(rng);
    EXPECT_EQ(bn::pow_gt_generator(k), bn::gt_generator().pow(k));
  }
}

TEST(Pairing, MultiPairingMatchesProduct) {
  SeededRandom rng(10);
  std::vector<G1> ps;
  std::vector<G2> qs;
  std::vector<bn::G2Prepared> prepared;
  Gt expected = Gt::one();
  for (int i = 0; i < 3; ++i) {
    ps.push_back(G1::generator() * Fr::random_nonzero(rng));
    qs.push_back(G2::generator() * Fr::random_nonzero(rng));
    expected *= bn::pairing(ps.back(), qs.back());
  }
  for (const auto& q : qs) prepared.emplace_back(q);
  std::vector<const bn::G2Prepared*> ptrs;
  for (const auto& p : prepared) ptrs.push_back(&p);
  std::uint64_t before = bn::pairing_count();
  EXPECT_EQ(bn::multi_pairing(ps, ptrs), expected);
  EXPECT_EQ(bn::pairing_count() - before, 3u);
}

TEST(Pairing, GtSerializationRoundTrips) {
  Gt g = bn::gt_generator();
  auto back = bn::deserialize_gt(bn::serialize(g));
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, g);
  EXPECT_EQ(bn::serialize(g).size(), bn::kGtSize);
}

}  // namespace
}  // namespace ndnsec::math

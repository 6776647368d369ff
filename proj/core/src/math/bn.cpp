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

#include "ndnsec/math/bn.hpp"

#include <array>

#include "ndnsec/hash.hpp"

namespace ndnsec::math::bn {

namespace {

thread_local std::uint64_t g_pairing_count = 0;

const mpz_class& p_mpz() { return Fp::modulus_mpz(); }

Fp fp_hex(std::string_view hex) {
  return Fp::from_canonical(limbs::from_hex<Fp::kLimbs>(hex));
}

const Fp2& xi() {
  static const Fp2 v(Fp::from_u64(3), Fp::from_u64(1));
  return v;
}

// gamma_j[k] = xi^(k (p^j - 1) / 6), the Frobenius twist factors of w^k.
struct FrobeniusConstants {
  std::array<Fp2, 6> g1, g2, g3;

  FrobeniusConstants() {
    const mpz_class p = p_mpz();
    const mpz_class e1 = (p - 1) / 6;
    const mpz_class e2 = (p * p - 1) / 6;
    const mpz_class e3 = (p * p * p - 1) / 6;
    for (unsigned k = 0; k < 6; ++k) {
      g1[k] = xi().pow(e1 * k);
      g2[k] = xi().pow(e2 * k);
      g3[k] = xi().pow(e3 * k);
    }
  }
};

const FrobeniusConstants& frob() {
  static const FrobeniusConstants c;
  return c;
}

// Coefficient k of the element in the w-power basis:
// w^0 = c0.c0, w^1 = c1.c0, w^2 = c0.c1, w^3 = c1.c1, w^4 = c0.c2, w^5 = c1.c2.
template <class F>
Fp12 map_coefficients(const Fp12& x, F&& f) {
  Fp12 r;
  r.c0.c0 = f(x.c0.c0, 0);
  r.c1.c0 = f(x.c1.c0, 1);
  r.c0.c1 = f(x.c0.c1, 2);
  r.c1.c1 = f(x.c1.c1, 3);
  r.c0.c2 = f(x.c0.c2, 4);
  r.c1.c2 = f(x.c1.c2, 5);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tower

Fp2 Fp2::inv() const {
  Fp t = (c0.sqr() + c1.sqr()).inv();
  return {c0 * t, -(c1 * t)};
}

Fp2 Fp2::pow(const mpz_class& e) const {
  Fp2 result = one();
  for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    result = result.sqr();
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

std::optional<Fp2> Fp2::sqrt() const {
  if (is_zero()) return *this;
  // Adj and Rodriguez-Henriquez, algorithm 9 (p = 3 mod 4).
  static const mpz_class e34 = (p_mpz() - 3) / 4;
  static const mpz_class e12 = (p_mpz() - 1) / 2;
  const Fp2 minus_one(-Fp::one());
  Fp2 a1 = pow(e34);
  Fp2 alpha = a1.sqr() * *this;
  Fp2 a0 = alpha.conj() * alpha;
  if (a0 == minus_one) return std::nullopt;
  Fp2 x0 = a1 * *this;
  Fp2 r;
  if (alpha == minus_one) {
    r = Fp2(Fp::zero(), Fp::one()) * x0;
  } else {
    r = (alpha + one()).pow(e12) * x0;
  }
  if (!(r.sqr() == *this)) return std::nullopt;
  return r;
}

Fp6 Fp6::inv() const {
  Fp2 a = c0.sqr() - (c1 * c2).mul_by_xi();
  Fp2 b = c2.sqr().mul_by_xi() - c0 * c1;
  Fp2 c = c1.sqr() - c0 * c2;
  Fp2 f = c0 * a + (c2 * b + c1 * c).mul_by_xi();
  Fp2 fi = f.inv();
  return {a * fi, b * fi, c * fi};
}

Fp12 Fp12::inv() const {
  Fp6 t = c0 * c0 - (c1 * c1).mul_by_v();
  Fp6 ti = t.inv();
  return {c0 * ti, -(c1 * ti)};
}

Fp12 Fp12::frobenius() const {
  const auto& g = frob().g1;
  return map_coefficients(*this,
                          [&](const Fp2& c, unsigned k) { return c.conj() * g[k]; });
}

Fp12 Fp12::frobenius2() const {
  const auto& g = frob().g2;
  return map_coefficients(*this, [&](const Fp2& c, unsigned k) { return c * g[k]; });
}

Fp12 Fp12::frobenius3() const {
  const auto& g = frob().g3;
  return map_coefficients(*this,
                          [&](const Fp2& c, unsigned k) { return c.conj() * g[k]; });
}

Fp12 Fp12::pow(const mpz_class& e) const {
  Fp12 result = one();
  for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    result = result.sqr();
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Curves

const Fp2& G2Curve::b() {
  static const Fp2 v = Fp2(Fp::from_u64(3)) * xi().inv();
  return v;
}

Fp2 G2Curve::generator_x() {
  return {fp_hex("201b707f02b9a48cad76c7923f9b501308050a6b"),
          fp_hex("235efa72971270818c3f8fb2ede11a6d1f99f20b")};
}

Fp2 G2Curve::generator_y() {
  return {fp_hex("0db1ce23e6c4a645d32d9ba00f8319d372a9e3aa"),
          fp_hex("1bf283802c0a8bea266f546eab46c78a29ab1e69")};
}

// ---------------------------------------------------------------------------
// Pairing

namespace {

// Homogeneous projective point on the twist: x = X/Z, y = Y/Z.
struct TwistPoint {
  Fp2 x, y, z;
};

using Coeffs = G2Prepared::Coeffs;

// Tangent at t, scaled by 2YZ^2; t <- 2t.
Coeffs double_step(TwistPoint& t) {
  Fp2 xx = t.x.sqr();
  Fp2 w = xx.dbl() + xx;
  Fp2 s = (t.y * t.z).dbl();
  Fp2 ss = s.sqr();
  Fp2 sss = s * ss;
  Fp2 r = t.y * s;
  Fp2 rr = r.sqr();
  Fp2 b = (t.x + r).sqr() - xx - rr;
  Fp2 h = w.sqr() - b.dbl();

  Coeffs line{s * t.z, -(w * t.z), w * t.x - r};

  t.y = w * (b - h) - rr.dbl();
  t.x = h * s;
  t.z = sss;
  return line;
}

// Chord through t and affine q, scaled by (xq Z - X); t <- t + q.
Coeffs add_step(TwistPoint& t, const Fp2& qx, const Fp2& qy) {
  Fp2 theta = qy * t.z - t.y;
  Fp2 delta = qx * t.z - t.x;

  Coeffs line{delta, -theta, theta * qx - delta * qy};

  Fp2 uu = theta.sqr();
  Fp2 vv = delta.sqr();
  Fp2 vvv = delta * vv;
  Fp2 r = vv * t.x;
  Fp2 a = uu * t.z - vvv - r.dbl();
  t.x = delta * a;
  t.y = theta * (r - a) - vvv * t.y;
  t.z = vvv * t.z;
  return line;
}

// 6u + 2, the optimal ate loop count.
constexpr std::uint64_t kLoop = 6 * kU + 2;

constexpr int loop_bits() {
  int b = 0;
  while ((kLoop >> b) > 1) ++b;
  return b;  // index of the top bit
}

struct MillerInput {
  Fp px, py;
  const G2Prepared* q;
};

void apply(Gt& f, const Coeffs& c, const MillerInput& m) {
  f = f.mul_by_line(c.a * m.py, c.b * m.px, c.c);
}

Gt miller_loop_many(std::span<const MillerInput> in) {
  Gt f = Gt::one();
  std::size_t step = 0;
  for (int i = loop_bits() - 1; i >= 0; --i) {
    f = f.sqr();
    for (const auto& m : in) apply(f, m.q->lines()[step], m);
    ++step;
    if (((kLoop >> i) & 1) != 0) {
      for (const auto& m : in) apply(f, m.q->lines()[step], m);
      ++step;
    }
  }
  for (int k = 0; k < 2; ++k, ++step) {
    for (const auto& m : in) apply(f, m.q->lines()[step], m);
  }
  g_pairing_count += in.size();
  return f;
}

Gt pow_u(const Gt& x) {
  Gt r = x;
  for (int i = 62 - __builtin_clzll(kU); i >= 0; --i) {
    r = r.cyclotomic_sqr();
    if (((kU >> i) & 1) != 0) r *= x;
  }
  return r;
}

}  // namespace

Fp12 Fp12::cyclotomic_sqr() const {
  // Coefficients grouped as (c0.c0, c1.c1), (c1.c0, c0.c2), (c0.c1, c1.c2)
  // pairs in Fp4 = Fp2[w^3].
  Fp2 t0 = c1.c1.sqr();
  Fp2 t1 = c0.c0.sqr();
  Fp2 t6 = (c1.c1 + c0.c0).sqr() - t0 - t1;
  Fp2 t2 = c0.c2.sqr();
  Fp2 t3 = c1.c0.sqr();
  Fp2 t7 = (c0.c2 + c1.c0).sqr() - t2 - t3;
  Fp2 t4 = c1.c2.sqr();
  Fp2 t5 = c0.c1.sqr();
  Fp2 t8 = ((c1.c2 + c0.c1).sqr() - t4 - t5).mul_by_xi();

  t0 = t0.mul_by_xi() + t1;
  t2 = t2.mul_by_xi() + t3;
  t4 = t4.mul_by_xi() + t5;

  Fp12 z;
  z.c0.c0 = (t0 - c0.c0).dbl() + t0;
  z.c0.c1 = (t2 - c0.c1).dbl() + t2;
  z.c0.c2 = (t4 - c0.c2).dbl() + t4;
  z.c1.c0 = (t8 + c1.c0).dbl() + t8;
  z.c1.c1 = (t6 + c1.c1).dbl() + t6;
  z.c1.c2 = (t7 + c1.c2).dbl() + t7;
  return z;
}

G2Prepared::G2Prepared(const G2& q) {
  if (q.is_infinity()) return;
  auto [qx, qy] = q.to_affine();
  TwistPoint t{qx, qy, Fp2::one()};
  lines_.reserve(2 * loop_bits() + 2);
  for (int i = loop_bits() - 1; i >= 0; --i) {
    lines_.push_back(double_step(t));
    if (((kLoop >> i) & 1) != 0) lines_.push_back(add_step(t, qx, qy));
  }
  // q1 = pi(q), q2 = -pi^2(q), both on the twist.
  const auto& c = frob();
  lines_.push_back(add_step(t, qx.conj() * c.g1[2], qy.conj() * c.g1[3]));
  lines_.push_back(add_step(t, qx * c.g2[2], qy));
}

Gt miller_loop(const G1& p, const G2Prepared& q) {
  if (p.is_infinity() || q.is_infinity()) return Gt::one();
  auto [px, py] = p.to_affine();
  MillerInput in{px, py, &q};
  return miller_loop_many(std::span<const MillerInput>(&in, 1));
}

Gt final_exponentiation(const Gt& f) {
  // Easy part: f^((p^6 - 1)(p^2 + 1)).
  Gt t1 = f.conj() * f.inv();
  t1 = t1.frobenius2() * t1;

  // Hard part, (p^4 - p^2 + 1)/n, via the u-adic decomposition.
  Gt fp = t1.frobenius();
  Gt fp2 = t1.frobenius2();
  Gt fp3 = fp2.frobenius();

  Gt fu = pow_u(t1);
  Gt fu2 = pow_u(fu);
  Gt fu3 = pow_u(fu2);

  Gt y3 = fu.frobenius();
  Gt fu2p = fu2.frobenius();
  Gt fu3p = fu3.frobenius();
  Gt y2 = fu2.frobenius2();

  Gt y0 = fp * fp2 * fp3;
  Gt y1 = t1.conj();
  Gt y5 = fu2.conj();
  y3 = y3.conj();
  Gt y4 = (fu * fu2p).conj();
  Gt y6 = (fu3 * fu3p).conj();

  Gt t0 = y6.cyclotomic_sqr() * y4 * y5;
  t1 = y3 * y5 * t0;
  t0 = t0 * y2;
  t1 = t1.cyclotomic_sqr() * t0;
  t1 = t1.cyclotomic_sqr();
  t0 = t1 * y1;
  t1 = t1 * y0;
  t0 = t0.cyclotomic_sqr();
  return t0 * t1;
}

Gt pairing(const G1& p, const G2& q) {
  if (p.is_infinity() || q.is_infinity()) return Gt::one();
  return final_exponentiation(miller_loop(p, G2Prepared(q)));
}

Gt multi_pairing(std::span<const G1> ps, std::span<const G2Prepared* const> qs) {
  std::vector<MillerInput> in;
  in.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size() && i < qs.size(); ++i) {
    if (ps[i].is_infinity() || qs[i]->is_infinity()) continue;
    auto [px, py] = ps[i].to_affine();
    in.push_back({px, py, qs[i]});
  }
  if (in.empty()) return Gt::one();
  return final_exponentiation(miller_loop_many(in));
}

std::uint64_t pairing_count() { return g_pairing_count; }

const Gt& gt_generator() {
  // e(G1::generator(), G2::generator()) in the serialize() layout. Stored so
  // that using it never evaluates a pairing.
  static const Gt g = *deserialize_gt(from_hex(
      "17a63003016b3c709edda67fa90d05be3aadebd10d37c7d1c4f64491e42aafdafd5fa361a7c52e22"
      "1177ae5e5deaa2183e3ec137eeff92927b627e7a0dac540d3c78632284cdcf91be56499f809a3c0b"
      "01d6180d6758cb5758df27b9d2819adadc753a6020126a6fd0e378f8514ff5808891c01f22386104"
      "07393a73ddfbbc5eed054e4eb2148ade19c887800a980cfbf86e5840e0a4c9ddd4b050c08fe974d0"
      "0b704777fcd80104b83a756ea22f9e5eb780022115df61b73cf4589cb571f6e85b297898fc5deb08"
      "10c2572355870cdd1921fe738d40c676ba89010823499c41ed4c00238fe256f885c1cc9fb5c924a8"));
  return g;
}

G1 mul_g1_generator(const Fr& k) {
  static const FixedBase<G1Curve> table(G1::generator(), Fr::kBits);
  return table.mul(k);
}

Gt pow_gt_generator(const Fr& k) {
  // table[16 * j + d] = Z^(d * 16^j)
  constexpr std::size_t kWindows = (Fr::kBits + 3) / 4;
  static const std::vector<Gt> table = [] {
    std::vector<Gt> t(16 * kWindows);
    Gt base = gt_generator();
    for (std::size_t j = 0; j < kWindows; ++j) {
      t[16 * j] = Gt::one();
      for (std::size_t d = 1; d < 16; ++d) t[16 * j + d] = t[16 * j + d - 1] * base;
      base = t[16 * j + 15] * base;
    }
    return t;
  }();
  const auto e = k.to_canonical();
  Gt acc = Gt::one();
  for (std::size_t j = 0; j < kWindows; ++j) {
    std::size_t idx = 4 * j;
    unsigned d = static_cast<unsigned>((e[idx / 64] >> (idx % 64)) & 0xF);
    if (d != 0) acc *= table[16 * j + d];
  }
  return acc;
}

bool in_gt(const Gt& x) {
  return x.pow(FrTag::kParams.modulus).is_one();
}

// ---------------------------------------------------------------------------
// Hashing

G1 hash_to_g1(ByteView msg, std::string_view domain) {
  for (std::uint64_t ctr = 0;; ++ctr) {
    Sha256 h;
    h.update_framed(as_bytes(domain)).update_framed(msg).update_u64(ctr);
    Digest d = h.finalize();
    Fp x = Fp::from_bytes_reduce(d);
    Fp rhs = x.sqr() * x + G1Curve::b();
    auto y = rhs.sqrt();
    if (!y) continue;
    if (y->is_odd() != ((d[31] & 1) != 0)) *y = -*y;
    return G1::from_affine(x, *y);
  }
}

Fr hash_to_fr(ByteView msg, std::string_view domain) {
  Sha256 h;
  h.update_framed(as_bytes(domain)).update_framed(msg);
  return Fr::from_bytes_reduce(h.finalize());
}

// ---------------------------------------------------------------------------
// Encoding

namespace {

constexpr std::uint8_t kInfinityFlag = 0x80;
constexpr std::uint8_t kOddFlag = 0x40;
constexpr std::uint8_t kFlagMask = 0xc0;

static_assert(Fp::kBits <= 8 * Fp::kBytes - 2,
              "compression needs two spare bits in the top byte");

}  // namespace

Bytes compress(const G1& p) {
  Bytes out(kG1CompressedSize, 0);
  if (p.is_infinity()) {
    out[0] = kInfinityFlag;
    return out;
  }
  auto [x, y] = p.to_affine();
  x.to_bytes(out);
  if (y.is_odd()) out[0] |= kOddFlag;
  return out;
}

std::optional<G1> decompress_g1(ByteView bytes) {
  if (bytes.size() != kG1CompressedSize) return std::nullopt;
  const std::uint8_t flags = bytes[0] & kFlagMask;
  Bytes body(bytes.begin(), bytes.end());
  body[0] &= static_cast<std::uint8_t>(~kFlagMask);
  if (flags == kInfinityFlag) {
    for (auto b : body) {
      if (b != 0) return std::nullopt;
    }
    return G1::infinity();
  }
  if (flags == (kInfinityFlag | kOddFlag)) return std::nullopt;
  auto x = Fp::from_bytes(body);
  if (!x) return std::nullopt;
  auto y = (x->sqr() * *x + G1Curve::b()).sqrt();
  if (!y) return std::nullopt;
  if (y->is_odd() != (flags == kOddFlag)) *y = -*y;
  return G1::from_affine(*x, *y);
}

Bytes compress(const G2& q) {
  Bytes out(kG2CompressedSize, 0);
  if (q.is_infinity()) {
    out[0] = kInfinityFlag;
    return out;
  }
  auto [x, y] = q.to_affine();
  std::span<std::uint8_t> s(out);
  x.c1.to_bytes(s.first(Fp::kBytes));
  x.c0.to_bytes(s.subspan(Fp::kBytes));
  if (y.is_odd()) out[0] |= kOddFlag;
  return out;
}

std::optional<G2> decompress_g2(ByteView bytes) {
  if (bytes.size() != kG2CompressedSize) return std::nullopt;
  const std::uint8_t flags = bytes[0] & kFlagMask;
  Bytes body(bytes.begin(), bytes.end());
  body[0] &= static_cast<std::uint8_t>(~kFlagMask);
  if (flags == kInfinityFlag) {
    for (auto b : body) {
      if (b != 0) return std::nullopt;
    }
    return G2::infinity();
  }
  if (flags == (kInfinityFlag | kOddFlag)) return std::nullopt;
  ByteView v(body);
  auto c1 = Fp::from_bytes(v.first(Fp::kBytes));
  auto c0 = Fp::from_bytes(v.subspan(Fp::kBytes));
  if (!c0 || !c1) return std::nullopt;
  Fp2 x(*c0, *c1);
  auto y = (x.sqr() * x + G2Curve::b()).sqrt();
  if (!y) return std::nullopt;
  if (y->is_odd() != (flags == kOddFlag)) *y = -*y;
  G2 q = G2::from_affine(x, *y);
  if (!q.mul(FrTag::kParams.modulus).is_infinity()) return std::nullopt;
  return q;
}

namespace {

template <class F>
void for_each_fp(const Gt& x, F&& f) {
  for (const Fp6* c6 : {&x.c0, &x.c1}) {
    for (const Fp2* c2 : {&c6->c0, &c6->c1, &c6->c2}) {
      f(c2->c0);
      f(c2->c1);
    }
  }
}

}  // namespace

Bytes serialize(const Gt& x) {
  Bytes out;
  out.reserve(kGtSize);
  for_each_fp(x, [&](const Fp& c) {
    Bytes b = c.to_bytes();
    out.insert(out.end(), b.begin(), b.end());
  });
  return out;
}

std::optional<Gt> deserialize_gt(ByteView bytes) {
  if (bytes.size() != kGtSize) return std::nullopt;
  std::array<Fp, 12> coeffs;
  for (std::size_t i = 0; i < 12; ++i) {
    auto c = Fp::from_bytes(bytes.subspan(i * Fp::kBytes, Fp::kBytes));
    if (!c) return std::nullopt;
    coeffs[i] = *c;
  }
  Gt x;
  std::size_t k = 0;
  for (Fp6* c6 : {&x.c0, &x.c1}) {
    for (Fp2* c2 : {&c6->c0, &c6->c1, &c6->c2}) {
      c2->c0 = coeffs[k++];
      c2->c1 = coeffs[k++];
    }
  }
  return x;
}

}  // namespace ndnsec::math::bn

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

// Short Weierstrass curves y^2 = x^3 + a*x + b with a in {0, -3}, in Jacobian
// coordinates (x = X/Z^2, y = Y/Z^3). The curve is described by a traits
// type:
//
//   struct Curve {
//     using Field = ...;               // coordinate field
//     using Scalar = ...;              // MontField of the group order
//     static constexpr bool kAIsZero;  // false means a = -3
//     static Field b();
//     static Field generator_x();
//     static Field generator_y();
//   };

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ndnsec/math/montgomery.hpp"

namespace ndnsec::math {

template <class Curve>
class EcPoint {
 public:
  using Field = typename Curve::Field;
  using Scalar = typename Curve::Scalar;

  // Point at infinity.
  EcPoint() : x_(Field::one()), y_(Field::one()), z_(Field::zero()) {}

  static EcPoint infinity() { return EcPoint(); }

  static EcPoint from_affine(const Field& x, const Field& y) {
    return EcPoint(x, y, Field::one());
  }

  static const EcPoint& generator() {
    static const EcPoint g =
        from_affine(Curve::generator_x(), Curve::generator_y());
    return g;
  }

  static bool on_curve_affine(const Field& x, const Field& y) {
    Field rhs = x.sqr() * x + Curve::b();
    if constexpr (!Curve::kAIsZero) rhs -= x.dbl() + x;
    return y.sqr() == rhs;
  }

  bool is_infinity() const { return z_.is_zero(); }

  bool on_curve() const {
    if (is_infinity()) return true;
    auto [x, y] = to_affine();
    return on_curve_affine(x, y);
  }

  // Requires !is_infinity().
  std::pair<Field, Field> to_affine() const {
    Field zi = z_.inv();
    Field zi2 = zi.sqr();
    return {x_ * zi2, y_ * zi2 * zi};
  }

  EcPoint operator-() const { return EcPoint(x_, -y_, z_); }

  EcPoint dbl() const {
    if (is_infinity()) return *this;
    if constexpr (Curve::kAIsZero) {
      // dbl-2009-l
      Field a = x_.sqr();
      Field b = y_.sqr();
      Field c = b.sqr();
      Field d = ((x_ + b).sqr() - a - c).dbl();
      Field e = a.dbl() + a;
      Field f = e.sqr();
      Field x3 = f - d.dbl();
      Field c8 = c.dbl().dbl().dbl();
      Field y3 = e * (d - x3) - c8;
      Field z3 = (y_ * z_).dbl();
      return EcPoint(x3, y3, z3);
    } else {
      // dbl-2001-b
      Field delta = z_.sqr();
      Field gamma = y_.sqr();
      Field beta = x_ * gamma;
      Field t = (x_ - delta) * (x_ + delta);
      Field alpha = t.dbl() + t;
      Field beta4 = beta.dbl().dbl();
      Field x3 = alpha.sqr() - beta4.dbl();
      Field z3 = (y_ + z_).sqr() - gamma - delta;
      Field g2 = gamma.sqr();
      Field y3 = alpha * (beta4 - x3) - g2.dbl().dbl().dbl();
      return EcPoint(x3, y3, z3);
    }
  }

  friend EcPoint operator+(const EcPoint& p, const EcPoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    // add-2007-bl
    Field z1z1 = p.z_.sqr();
    Field z2z2 = q.z_.sqr();
    Field u1 = p.x_ * z2z2;
    Field u2 = q.x_ * z1z1;
    Field s1 = p.y_ * q.z_ * z2z2;
    Field s2 = q.y_ * p.z_ * z1z1;
    Field h = u2 - u1;
    Field r = (s2 - s1).dbl();
    if (h.is_zero()) {
      if (r.is_zero()) return p.dbl();
      return infinity();
    }
    Field i = h.dbl().sqr();
    Field j = h * i;
    Field v = u1 * i;
    Field x3 = r.sqr() - j - v.dbl();
    Field y3 = r * (v - x3) - (s1 * j).dbl();
    Field z3 = ((p.z_ + q.z_).sqr() - z1z1 - z2z2) * h;
    return EcPoint(x3, y3, z3);
  }

  EcPoint& operator+=(const EcPoint& q) { return *this = *this + q; }
  friend EcPoint operator-(const EcPoint& p, const EcPoint& q) {
    return p + (-q);
  }

  // Mixed addition with an affine point (qx, qy).
  EcPoint add_affine(const Field& qx, const Field& qy) const {
    if (is_infinity()) return from_affine(qx, qy);
    // madd-2007-bl
    Field z1z1 = z_.sqr();
    Field u2 = qx * z1z1;
    Field s2 = qy * z_ * z1z1;
    Field h = u2 - x_;
    Field r = (s2 - y_).dbl();
    if (h.is_zero()) {
      if (r.is_zero()) return dbl();
      return infinity();
    }
    Field hh = h.sqr();
    Field i = hh.dbl().dbl();
    Field j = h * i;
    Field v = x_ * i;
    Field x3 = r.sqr() - j - v.dbl();
    Field y3 = r * (v - x3) - (y_ * j).dbl();
    Field z3 = (z_ + h).sqr() - z1z1 - hh;
    return EcPoint(x3, y3, z3);
  }

  // Fixed 4-bit window scalar multiplication.
  template <std::size_t M>
  EcPoint mul(const Limbs<M>& k) const {
    std::array<EcPoint, 16> table;
    table[0] = infinity();
    table[1] = *this;
    for (std::size_t i = 2; i < 16; ++i) table[i] = table[i - 1] + *this;
    EcPoint acc;
    std::size_t bits = limbs::bit_length(k);
    std::size_t windows = (bits + 3) / 4;
    for (std::size_t w = windows; w-- > 0;) {
      acc = acc.dbl().dbl().dbl().dbl();
      unsigned digit = 0;
      for (int b = 3; b >= 0; --b) {
        std::size_t idx = 4 * w + static_cast<std::size_t>(b);
        digit = (digit << 1) | (idx < 64 * M && limbs::bit(k, idx) ? 1u : 0u);
      }
      if (digit != 0) acc += table[digit];
    }
    return acc;
  }

  EcPoint mul(const Scalar& k) const { return mul(k.to_canonical()); }
  friend EcPoint operator*(const EcPoint& p, const Scalar& k) {
    return p.mul(k);
  }

  // Straus interleaving: sum_i k_i * P_i with one shared doubling chain.
  static EcPoint multi_mul(std::span<const EcPoint> points,
                           std::span<const Scalar> scalars) {
    const std::size_t n = std::min(points.size(), scalars.size());
    std::vector<std::array<EcPoint, 16>> tables(n);
    std::vector<typename Scalar::LimbArray> ks(n);
    std::size_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ks[i] = scalars[i].to_canonical();
      bits = std::max(bits, limbs::bit_length(ks[i]));
      auto& t = tables[i];
      t[0] = infinity();
      t[1] = points[i];
      for (std::size_t j = 2; j < 16; ++j) t[j] = t[j - 1] + points[i];
    }
    EcPoint acc;
    for (std::size_t w = (bits + 3) / 4; w-- > 0;) {
      acc = acc.dbl().dbl().dbl().dbl();
      for (std::size_t i = 0; i < n; ++i) {
        unsigned digit = 0;
        for (int b = 3; b >= 0; --b) {
          std::size_t idx = 4 * w + static_cast<std::size_t>(b);
          digit = (digit << 1) |
                  (idx < 64 * Scalar::kLimbs && limbs::bit(ks[i], idx) ? 1u : 0u);
        }
        if (digit != 0) acc += tables[i][digit];
      }
    }
    return acc;
  }

  friend bool operator==(const EcPoint& p, const EcPoint& q) {
    if (p.is_infinity() || q.is_infinity()) {
      return p.is_infinity() && q.is_infinity();
    }
    Field z1z1 = p.z_.sqr();
    Field z2z2 = q.z_.sqr();
    if (!(p.x_ * z2z2 == q.x_ * z1z1)) return false;
    return p.y_ * q.z_ * z2z2 == q.y_ * p.z_ * z1z1;
  }

  const Field& x() const { return x_; }
  const Field& y() const { return y_; }
  const Field& z() const { return z_; }

 private:
  EcPoint(const Field& x, const Field& y, const Field& z)
      : x_(x), y_(y), z_(z) {}

  Field x_, y_, z_;
};

// Affine multiples d * 16^j * P for d in 1..15, so that multiplying the fixed
// point by a scalar costs one mixed addition per 4-bit window and no
// doublings.
template <class Curve>
class FixedBase {
 public:
  using Point = EcPoint<Curve>;
  using Field = typename Curve::Field;
  using Scalar = typename Curve::Scalar;

  FixedBase(const Point& p, std::size_t bits) : windows_((bits + 3) / 4) {
    table_.resize(windows_);
    Point base = p;
    for (std::size_t w = 0; w < windows_; ++w) {
      Point acc = base;
      for (std::size_t d = 0; d < 15; ++d) {
        table_[w][d] = acc.to_affine();
        acc += base;
      }
      base = acc;  // 16 * previous base
    }
  }

  template <std::size_t M>
  Point mul(const Limbs<M>& k) const {
    Point acc;
    for (std::size_t w = 0; w < windows_; ++w) {
      std::size_t idx = 4 * w;
      if (idx >= 64 * M) break;
      unsigned digit = static_cast<unsigned>((k[idx / 64] >> (idx % 64)) & 0xF);
      if (digit != 0) {
        const auto& [x, y] = table_[w][digit - 1];
        acc = acc.add_affine(x, y);
      }
    }
    return acc;
  }

  Point mul(const Scalar& k) const { return mul(k.to_canonical()); }

 private:
  std::size_t windows_;
  std::vector<std::array<std::pair<Field, Field>, 15>> table_;
};

}  // namespace ndnsec::math

#!/usr/bin/env python3
# Copyright 2026 The ndnsec Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Derives the constants of the 158-bit Barreto-Naehrig curve used by the
pairing code (core/src/math/bn_params.cpp). Prints C++-ready hex literals."""
import sys
from sympy import isprime, sqrt_mod


def bn(u):
    p = 36 * u**4 + 36 * u**3 + 24 * u**2 + 6 * u + 1
    n = 36 * u**4 + 36 * u**3 + 18 * u**2 + 6 * u + 1
    return p, n


def find_u():
    for k in range(1, 38):
        for j in range(0, k):
            u = 2**38 + 2**k + 2**j + 1 if j else 2**38 + 2**k + 1
            if u % 2 == 0:
                continue
            p, n = bn(u)
            if p.bit_length() != 158:
                continue
            if isprime(p) and isprime(n):
                return u
    raise SystemExit("no u")


class Fp2:
    def __init__(s, a, b, p):
        s.a, s.b, s.p = a % p, b % p, p

    def __add__(s, o):
        return Fp2(s.a + o.a, s.b + o.b, s.p)

    def __sub__(s, o):
        return Fp2(s.a - o.a, s.b - o.b, s.p)

    def __mul__(s, o):
        if isinstance(o, int):
            return Fp2(s.a * o, s.b * o, s.p)
        return Fp2(s.a * o.a - s.b * o.b, s.a * o.b + s.b * o.a, s.p)

    def __eq__(s, o):
        return s.a == o.a and s.b == o.b

    def inv(s):
        d = pow(s.a * s.a + s.b * s.b, -1, s.p)
        return Fp2(s.a * d, -s.b * d, s.p)

    def __pow__(s, e):
        r, b = Fp2(1, 0, s.p), s
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def is_zero(s):
        return s.a == 0 and s.b == 0


def sqrt_fp2(a, p):
    # p = 3 mod 4: algorithm 9 of Adj/Rodriguez-Henriquez
    a1 = a ** ((p - 3) // 4)
    alpha = a1 * a1 * a
    a0 = alpha ** p * alpha
    if a0 == Fp2(-1, 0, p):
        return None
    x0 = a1 * a
    if alpha == Fp2(-1, 0, p):
        return Fp2(0, 1, p) * x0
    b = (alpha + Fp2(1, 0, p)) ** ((p - 1) // 2)
    return b * x0


def ec_add(P, Q, field_one, field_zero):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) == field_zero:
            return None
        lam = (x1 * x1 * 3) * (y1 * 2).inv()
    else:
        lam = (y2 - y1) * (x2 - x1).inv()
    x3 = lam * lam - x1 - x2
    return (x3, lam * (x1 - x3) - y1)


def ec_mul(P, k, one, zero):
    R = None
    while k:
        if k & 1:
            R = ec_add(R, P, one, zero)
        P = ec_add(P, P, one, zero)
        k >>= 1
    return R


class Fp:
    def __init__(s, v, p):
        s.v, s.p = v % p, p

    def __add__(s, o):
        return Fp(s.v + o.v, s.p)

    def __sub__(s, o):
        return Fp(s.v - o.v, s.p)

    def __mul__(s, o):
        if isinstance(o, int):
            return Fp(s.v * o, s.p)
        return Fp(s.v * o.v, s.p)

    def __eq__(s, o):
        return s.v == o.v

    def inv(s):
        return Fp(pow(s.v, -1, s.p), s.p)


def main():
    u = find_u()
    p, n = bn(u)
    assert p % 4 == 3 and p % 6 == 1
    # G1: y^2 = x^3 + b with #E = n
    b = None
    for cand in range(1, 50):
        rhs = (1 + cand) % p
        ys = sqrt_mod(rhs, p, all_roots=False)
        if ys is None:
            continue
        P = (Fp(1, p), Fp(ys, p))
        if ec_mul(P, n, Fp(1, p), Fp(0, p)) is None:
            b = cand
            g1 = (1, min(ys, p - ys))
            break
    assert b is not None
    # twist: y^2 = x^3 + b/xi, xi non-square non-cube, order n(2p-n)
    h2 = 2 * p - n
    q2 = p * p
    found = None
    for xa in range(1, 20):
        xi = Fp2(xa, 1, p)
        if (xi ** ((q2 - 1) // 2)) == Fp2(1, 0, p):
            continue
        if (xi ** ((q2 - 1) // 3)) == Fp2(1, 0, p):
            continue
        bt = Fp2(b, 0, p) * xi.inv()
        # find a twist point
        for x0 in range(0, 50):
            x = Fp2(x0, 1, p)
            y = sqrt_fp2(x * x * x + bt, p)
            if y is None:
                continue
            assert y * y == x * x * x + bt
            Q = ec_mul((x, y), h2, Fp2(1, 0, p), Fp2(0, 0, p))
            if Q is None:
                continue
            if ec_mul(Q, n, Fp2(1, 0, p), Fp2(0, 0, p)) is None:
                found = (xa, Q)
            break
        if found:
            break
    assert found
    xa, Q = found
    print(f"u = {u:#x} ({u.bit_length()} bits)")
    print(f"p = {p:#x} ({p.bit_length()} bits)")
    print(f"n = {n:#x} ({n.bit_length()} bits)")
    print(f"b = {b}")
    print(f"xi = {xa} + i")
    print(f"g1 = ({g1[0]:#x}, {g1[1]:#x})")
    print(f"g2.x = ({Q[0].a:#x}, {Q[0].b:#x})")
    print(f"g2.y = ({Q[1].a:#x}, {Q[1].b:#x})")
    print(f"six_u_plus_2 = {6*u+2:#x}")


if __name__ == "__main__":
    main()

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

"""Deterministic generation of the built-in 1024/160 discrete-log group.

p = 2*q*r + 1 with q (160 bits) and r (863 bits) both prime, so the only
small subgroup of Z_p^* has order 2. g generates the order-q subgroup.
Candidates come from a SHA-256 counter stream over a fixed seed, so anyone
can rerun this and get the same numbers.
"""

import hashlib

import gmpy2

SEED = b"ndnsec dl group 1024/160"


def stream(label, bits):
    ctr = 0
    while True:
        out = b""
        i = 0
        while len(out) * 8 < bits:
            out += hashlib.sha256(SEED + label + ctr.to_bytes(8, "big") + i.to_bytes(4, "big")).digest()
            i += 1
        v = int.from_bytes(out, "big") >> (len(out) * 8 - bits)
        yield ctr, v | (1 << (bits - 1)) | 1
        ctr += 1


def main():
    for _, q in stream(b"q", 160):
        if gmpy2.is_prime(q, 50):
            break
    for ctr, r in stream(b"r", 1024 - 161):
        p = 2 * q * r + 1
        if p.bit_length() != 1024:
            continue
        if gmpy2.is_prime(r, 30) and gmpy2.is_prime(p, 50):
            break
    h = 2
    while True:
        g = pow(h, 2 * r, p)
        if g != 1:
            break
        h += 1
    assert pow(g, q, p) == 1
    print("counter", ctr)
    print("p", format(p, "x"))
    print("q", format(q, "x"))
    print("g", format(g, "x"))


if __name__ == "__main__":
    main()

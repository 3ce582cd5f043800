#!/usr/bin/env python3
# Copyright 2026 The sumrank Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/field_registry.json.

Every entry is the lexicographically least monic irreducible polynomial of
the given degree (smallest value of sum c_i * h^i over the non-leading
coefficients). Coefficients are stored in ascending degree order; for a
prime-power base h = p^e each coefficient is the base-p digit encoding of an
F_h element under the "p,e" subfield entry.
"""

import argparse
import json

MAX_ORDER_BITS = 48
BASES = [2, 3, 4, 5, 7, 8, 9, 16]


def factor_prime_power(h):
    for p in range(2, h + 1):
        if h % p == 0:
            e, r = 0, h
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                raise ValueError(f"{h} is not a prime power")
            return p, e
    raise ValueError(h)


class SmallField:
    def __init__(self, p, e, modulus):
        self.p, self.e, self.h = p, e, p**e
        h = self.h
        digits = [[(x // p**i) % p for i in range(e)] for x in range(h)]
        enc = lambda d: sum(c * p**i for i, c in enumerate(d))
        self.add = [[enc([(a + b) % p for a, b in zip(digits[x], digits[y])]) for y in range(h)] for x in range(h)]
        self.neg = [enc([(-a) % p for a in digits[x]]) for x in range(h)]
        self.mul = [[0] * h for _ in range(h)]
        for x in range(h):
            for y in range(h):
                prod = [0] * (2 * e - 1)
                for i, a in enumerate(digits[x]):
                    for j, b in enumerate(digits[y]):
                        prod[i + j] = (prod[i + j] + a * b) % p
                for d in range(2 * e - 2, e - 1, -1):
                    c = prod[d]
                    if c:
                        for u in range(e + 1):
                            prod[d - e + u] = (prod[d - e + u] - c * modulus[u]) % p
                self.mul[x][y] = enc(prod[:e])
        self.inv = [0] * h
        for x in range(1, h):
            self.inv[x] = next(y for y in range(1, h) if self.mul[x][y] == 1)


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(F, a, b):
    a = list(a)
    trim(a)
    lead_inv = F.inv[b[-1]]
    while len(a) >= len(b):
        c = F.mul[a[-1]][lead_inv]
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = F.add[a[shift + i]][F.neg[F.mul[c][bc]]]
        trim(a)
    return a


def poly_mulmod(F, a, b, mod):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = F.add[prod[i + j]][F.mul[x][y]]
    return poly_mod(F, prod, mod)


def poly_gcd(F, a, b):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, poly_mod(F, a, b)
    return a


def poly_pow_mod(F, base, e, mod):
    result, b = [1], list(base)
    while e:
        if e & 1:
            result = poly_mulmod(F, result, b, mod)
        b = poly_mulmod(F, b, b, mod)
        e >>= 1
    return result


def is_irreducible(F, f):
    t = len(f) - 1
    x = [0, 1]
    power = list(x)
    for _ in range(1, t // 2 + 1):
        power = poly_pow_mod(F, power, F.h, f)
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = F.add[diff[1]][F.neg[1]]
        g = poly_gcd(F, f, trim(diff))
        if len(g) > 1:
            return False
    return True


def lex_least_irreducible(F, t):
    for value in range(F.h**t):
        coeffs = [(value // F.h**i) % F.h for i in range(t)] + [1]
        if t > 1 and coeffs[0] == 0:
            continue
        if is_irreducible(F, coeffs):
            return coeffs
    raise RuntimeError("no irreducible polynomial found")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/field_registry.json")
    args = ap.parse_args()

    subfields = {}
    prime_fields = {}
    for h in BASES:
        p, e = factor_prime_power(h)
        if p not in prime_fields:
            prime_fields[p] = SmallField(p, 1, [0, 1])
        if e > 1:
            subfields[f"{p},{e}"] = lex_least_irreducible(prime_fields[p], e)

    towers = {}
    for h in BASES:
        p, e = factor_prime_power(h)
        F = prime_fields[p] if e == 1 else SmallField(p, e, subfields[f"{p},{e}"])
        t = 1
        while h ** t < 2**MAX_ORDER_BITS:
            towers[f"{h},{t}"] = lex_least_irreducible(F, t)
            t += 1

    doc = {
        "version": 1,
        "convention": "lexicographically least monic irreducible, ascending coefficients",
        "subfields": subfields,
        "towers": towers,
    }
    def key(k):
        a, b = k.split(",")
        return int(a), int(b)

    lines = ["{", f' "version": {doc["version"]},', f' "convention": "{doc["convention"]}",']
    for section in ("subfields", "towers"):
        entries = doc[section]
        body = ",\n".join(f'  "{k}": {json.dumps(entries[k])}' for k in sorted(entries, key=key))
        lines.append(f' "{section}": {{\n{body}\n }}' + ("," if section == "subfields" else ""))
    lines.append("}")
    with open(args.out, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Build the JSON-lines isogeny corpus used by the acceptance tests.

Records: a seeded sample of elliptic isogeny classes over F_q, q <= 16 (Waterhouse),
products of two elliptic classes as abelian surfaces, and Jacobians of genus-2
curves y^2 = f(x) over F_p and F_{p^2} (p = 3, 5, 7) found by point counting.
Deterministic; no network access.
"""

import argparse
import json
import math
import random


def factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            a, r = 0, q
            while r % p == 0:
                r //= p
                a += 1
            return (p, a) if r == 1 else None
    return None


def elliptic_traces(q):
    p, k = factor_prime_power(q)
    out = []
    for a in range(-2 * q, 2 * q + 1):
        if a * a > 4 * q:
            continue
        if a % p != 0:
            out.append(a)
            continue
        if k % 2 == 0:
            r = math.isqrt(q)
            ok = abs(a) == 2 * r or (abs(a) == r and p % 3 != 1) or (a == 0 and p % 4 != 1)
        else:
            ok = a == 0 or (p == 2 and a * a == 2 * q) or (p == 3 and a * a == 3 * q)
        if ok:
            out.append(a)
    return out


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class Field:
    """F_{p^k} as F_p[x]/(m) with m a fixed irreducible polynomial."""

    def __init__(self, p, k):
        self.p, self.k = p, k
        self.mod = self._irreducible()
        self.elements = [self._from_index(i) for i in range(p ** k)]

    def _from_index(self, i):
        digits = []
        for _ in range(self.k):
            digits.append(i % self.p)
            i //= self.p
        return tuple(digits)

    def _irreducible(self):
        p, k = self.p, self.k
        if k == 1:
            return None
        for i in range(p ** k):
            tail = self._from_index(i) if k > 0 else ()
            m = list(tail) + [1]
            if all(self._peval(m, x) != 0 for x in range(p)) and (k < 4 or not self._has_quadratic(m)):
                return m
        raise ValueError("no irreducible polynomial")

    def _peval(self, m, x):
        return sum(c * x ** i for i, c in enumerate(m)) % self.p

    def _has_quadratic(self, m):
        p = self.p
        for b in range(p):
            for c in range(p):
                if self._pdivides([c, b, 1], m):
                    return True
        return False

    def _pdivides(self, d, m):
        r = list(m)
        while len(r) >= len(d):
            f = r[-1]
            shift = len(r) - len(d)
            for i, c in enumerate(d):
                r[shift + i] = (r[shift + i] - f * c) % self.p
            r.pop()
        return all(c == 0 for c in r)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        if k > 1:
            for deg in range(2 * k - 2, k - 1, -1):
                c = prod[deg]
                if c:
                    for i in range(k):
                        prod[deg - k + i] = (prod[deg - k + i] - c * self.mod[i]) % p
        return tuple(prod[:k])

    def const(self, c):
        return tuple([c % self.p] + [0] * (self.k - 1))

    def squares(self):
        return {self.mul(x, x) for x in self.elements}


def count_points(coeffs, field):
    """Points on the smooth model of y^2 = f(x), deg f in {5, 6}."""
    sq = field.squares()
    zero = field.const(0)
    n = 0
    fc = [field.const(c) for c in coeffs]
    for x in field.elements:
        v = zero
        for c in reversed(fc):
            v = field.add(field.mul(v, x), c)
        n += 1 if v == zero else (2 if v in sq else 0)
    lead = field.const(coeffs[-1])
    if len(coeffs) == 6:
        n += 1
    else:
        n += 2 if lead in sq else 0
    return n


def squarefree_mod_p(coeffs, p):
    def trim(a):
        while a and a[-1] % p == 0:
            a.pop()
        return a

    def pmod(a, b):
        a = [x % p for x in a]
        inv = pow(b[-1], p - 2, p)
        while len(trim(a)) >= len(b):
            f = a[-1] * inv % p
            s = len(a) - len(b)
            for i, c in enumerate(b):
                a[s + i] = (a[s + i] - f * c) % p
        return trim(a)

    a = trim(list(coeffs))
    b = trim([(i * c) % p for i, c in enumerate(coeffs)][1:])
    while b:
        a, b = b, pmod(a, b)
    return len(a) == 1


def genus2_records(rng, p, k, want):
    q = p ** k
    small, big = Field(p, k), Field(p, 2 * k)
    seen, out = set(), []
    tries = 0
    while len(out) < want and tries < 2000:
        tries += 1
        deg = rng.choice([5, 6])
        coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
        if not squarefree_mod_p(coeffs, p):
            continue
        n1, n2 = count_points(coeffs, small), count_points(coeffs, big)
        s1, s2 = q + 1 - n1, q * q + 1 - n2
        e1, e2 = s1, (s1 * s1 - s2) // 2
        l = [1, -e1, e2, -q * e1, q * q]
        if tuple(l) in seen:
            continue
        seen.add(tuple(l))
        f = "+".join(f"{c}x^{i}" for i, c in enumerate(coeffs) if c)
        out.append({"label": f"jac.{q}.y2={f}", "q": q, "g": 2, "coeffs": l})
    return out


def build(total, seed):
    rng = random.Random(seed)
    elliptic = []
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]:
        for a in elliptic_traces(q):
            elliptic.append({"label": f"ell.{q}.a{a}", "q": q, "g": 1, "coeffs": [1, -a, q]})
    jac = []
    for p, k in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)]:
        jac += genus2_records(rng, p, k, 4)
    n_prod = total * 3 // 10
    products = []
    while len(products) < n_prod:
        e1, e2 = rng.sample(elliptic, 2)
        if e1["q"] != e2["q"]:
            continue
        label = f"prod.{e1['label']}x{e2['label']}"
        if any(r["label"] == label for r in products):
            continue
        products.append({"label": label, "q": e1["q"], "g": 2, "coeffs": poly_mul(e1["coeffs"], e2["coeffs"])})
    n_ell = total - len(jac) - len(products)
    picked = sorted(rng.sample(range(len(elliptic)), n_ell))
    return [elliptic[i] for i in picked] + jac + products


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/isogeny_corpus.jsonl")
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=20240)
    args = ap.parse_args()
    records = build(args.count, args.seed)
    with open(args.out, "w") as f:
        for r in records:
            f.write(json.dumps(r, separators=(",", ":")) + "\n")
    print(f"wrote {len(records)} records to {args.out}")


if __name__ == "__main__":
    main()

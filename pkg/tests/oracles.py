"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools


class SlowField:
    """GF(p^m) on coordinate tuples with schoolbook reduction."""

    def __init__(self, p: int, modulus):
        self.p = p
        self.modulus = list(modulus)
        self.m = len(modulus) - 1
        self.order = p**self.m

    def coords(self, idx: int) -> list[int]:
        return [(idx // self.p**i) % self.p for i in range(self.m)]

    def index(self, c) -> int:
        return sum(int(x) * self.p**i for i, x in enumerate(c))

    def add(self, a: int, b: int) -> int:
        return self.index([(x + y) % self.p for x, y in zip(self.coords(a), self.coords(b))])

    def neg(self, a: int) -> int:
        return self.index([(-x) % self.p for x in self.coords(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        x, y, p, m = self.coords(a), self.coords(b), self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                prod[i + j] = (prod[i + j] + xi * yj) % p
        for d in range(len(prod) - 1, m - 1, -1):
            c = prod[d]
            if c:
                for t in range(m + 1):
                    prod[d - m + t] = (prod[d - m + t] - c * self.modulus[t]) % p
        return self.index(prod[:m])

    def pow(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def inv(self, a: int) -> int:
        for b in range(1, self.order):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError


# polynomials over SlowField as coefficient lists, constant term first

def ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(F, a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return ptrim([F.add(x, y) for x, y in zip(a, b)])


def pmul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return ptrim(out)


def pmod(F, a, b):
    a = ptrim(a)
    inv = F.inv(b[-1])
    while len(a) >= len(b):
        c = F.mul(a[-1], inv)
        shift = len(a) - len(b)
        for t, y in enumerate(b):
            a[shift + t] = F.sub(a[shift + t], F.mul(c, y))
        a = ptrim(a)
    return a


def pgcd(F, a, b):
    a, b = ptrim(a), ptrim(b)
    while b:
        a, b = b, pmod(F, a, b)
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(x, inv) for x in a]
    return a


def symbolic_det(F, M):
    """Laplace expansion of a square matrix of polynomials."""
    k = len(M)
    if k == 1:
        return M[0][0]
    out = []
    for j in range(k):
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = pmul(F, M[0][j], symbolic_det(F, minor))
        if j % 2:
            term = [F.neg(x) for x in term]
        out = padd(F, out, term)
    return out


def minors_gcd(F, mats):
    """gcd of all full-size minors of sum_j mats[j] D^j (lists of lists)."""
    k, n = len(mats[0]), len(mats[0][0])
    entries = [[ptrim([m[r][c] for m in mats]) for c in range(n)] for r in range(k)]
    g = []
    for cols in itertools.combinations(range(n), k):
        sub = [[entries[r][c] for c in cols] for r in range(k)]
        g = pgcd(F, g, symbolic_det(F, sub))
    return g


def brute_free_distance(F, mats, max_input_degree: int) -> int:
    """Minimum weight over inputs u(D) of degree <= max_input_degree with u_0 != 0.

    An upper bound on the free distance; equal to it once the input degree
    covers a minimum-weight path.  All inputs are enumerated at once.
    """
    import numpy as np

    k, n = mats[0].shape
    L = max_input_degree + 1
    total = F.order ** (k * L)
    digits = np.arange(total, dtype=np.int64)
    u = np.stack([(digits // F.order**i) % F.order for i in range(k * L)], axis=1).reshape(total, L, k)
    u = u[u[:, 0, :].any(axis=1)]
    wt = np.zeros(len(u), dtype=np.int64)
    for t in range(L + len(mats) - 1):
        block = np.zeros((len(u), n), dtype=np.int64)
        for j, Gj in enumerate(mats):
            if 0 <= t - j < L:
                contrib = F.sum(F.mul(u[:, t - j, :, None], np.asarray(Gj)[None, :, :]), axis=1)
                block = F.add(block, contrib)
        wt += np.count_nonzero(block, axis=1)
    return int(wt.min())

"""Univariate polynomials over a GF; coefficients constant term first."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .fields import GF, SubfieldEmbedding, Tower


def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = [int(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class DensePolynomial:
    field: GF = field(repr=False, compare=False)
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, F: GF, degree: int, c: int = 1) -> "DensePolynomial":
        return cls(F, (0,) * degree + (c,))

    @classmethod
    def one(cls, F: GF) -> "DensePolynomial":
        return cls(F, (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other: "DensePolynomial"):
        if other.field.spec != self.field.spec:
            raise ValueError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=np.int64)
        b = np.zeros(n, dtype=np.int64)
        a[: len(self.coeffs)] = self.coeffs
        b[: len(other.coeffs)] = other.coeffs
        return DensePolynomial(self.field, self.field.add(a, b))

    def __neg__(self):
        return DensePolynomial(self.field, self.field.neg(np.array(self.coeffs, dtype=np.int64)))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return DensePolynomial(F, ())
        a = np.array(self.coeffs, dtype=np.int64)
        b = np.array(other.coeffs, dtype=np.int64)
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        for i, ai in enumerate(a):
            if ai:
                out[i : i + len(b)] = F.add(out[i : i + len(b)], F.mul(ai, b))
        return DensePolynomial(F, out)

    def scale(self, c: int) -> "DensePolynomial":
        return DensePolynomial(self.field, self.field.mul(c, np.array(self.coeffs, dtype=np.int64)))

    def monic(self) -> "DensePolynomial":
        if self.is_zero():
            return self
        return self.scale(int(self.field.inv(self.lead)))

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        db = other.degree
        inv_lead = int(F.inv(other.lead))
        b = np.array(other.coeffs, dtype=np.int64)
        quot = [0] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            c = int(F.mul(r[-1], inv_lead))
            shift = len(r) - 1 - db
            quot[shift] = c
            seg = np.array(r[shift:], dtype=np.int64)
            r[shift:] = [int(x) for x in F.sub(seg, F.mul(c, b))]
            r = list(_trim(r))
        return DensePolynomial(F, quot), DensePolynomial(F, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation at x (int or array) in the coefficient field."""
        F = self.field
        acc = np.zeros_like(np.asarray(x, dtype=np.int64))
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def to_record(self) -> list[int]:
        return list(self.coeffs)


def poly_gcd(a: DensePolynomial, b: DensePolynomial) -> DensePolynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_arith(a: DensePolynomial, b: DensePolynomial, kind: str):
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "divmod":
        return divmod(a, b)
    if kind == "gcd":
        return poly_gcd(a, b)
    raise ValueError(f"unknown operation {kind!r}")


def x_n_plus_one(F: GF, n: int) -> DensePolynomial:
    return DensePolynomial(F, (1,) + (0,) * (n - 1) + (1,))


def minimal_polynomial(x: int, embedding: SubfieldEmbedding, q: int) -> DensePolynomial:
    """Minimal polynomial over GF(q^2) of x in GF(q^4): the product of
    (X - y) over the orbit of x under y -> y**(q^2)."""
    big = embedding.target
    orbit = [int(x)]
    y = int(big.pow(x, q * q))
    while y != orbit[0]:
        orbit.append(y)
        y = int(big.pow(y, q * q))
    poly = DensePolynomial(big, (1,))
    for r in orbit:
        poly = poly * DensePolynomial(big, (int(big.neg(r)), 1))
    coeffs = embedding.restrict(np.array(poly.coeffs, dtype=np.int64))
    return DensePolynomial(embedding.source, coeffs)


def generator_from_cosets(cosets: Iterable, beta: int, tower: Tower) -> DensePolynomial:
    """Product of the minimal polynomials of beta**rep over pairwise disjoint cosets."""
    F = tower.small
    seen: set[int] = set()
    g = DensePolynomial.one(F)
    for cos in cosets:
        members = set(cos.members)
        if members & seen:
            raise ValueError(f"coset {sorted(members)} overlaps an earlier coset")
        seen |= members
        root = int(tower.big.pow(beta, cos.representative))
        g = g * minimal_polynomial(root, tower.embedding, tower.q)
    return g

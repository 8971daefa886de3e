"""Odd-characteristic finite fields and the quadratic tower GF(q^2) < GF(q^4).

Elements are plain integers: the element with power-basis coordinates
(c_0, ..., c_{m-1}) is stored as sum(c_i * p**i).  All field operations accept
Python ints or numpy integer arrays and broadcast like numpy ufuncs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

TABLE_LIMIT = 1024  # full add/mul tables only below this order


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q == p**e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    e = 0
    r = q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


# -- polynomials over GF(p) as coefficient lists, constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - c * mj) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, m, p)


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    b = _pmod(list(base), m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, b, m, p)
        b = _pmulmod(b, b, m, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, p**m, f, p) != _pmod(x, f, p):
        return False
    for r in prime_factors(m):
        h = _ppowmod(x, p ** (m // r), f, p)
        diff = _trim([(a - b) % p for a, b in itertools.zip_longest(h, x, fillvalue=0)])
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True


# -- field specification ------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int
    modulus: tuple[int, ...]  # monic, degree m, constant term first

    @property
    def order(self) -> int:
        return self.p**self.m

    def to_record(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}


@lru_cache(maxsize=None)
def field_create(p: int, m: int) -> FieldSpec:
    """FieldSpec for GF(p^m) with the lexicographically smallest monic irreducible.

    Candidates (c_0, ..., c_{m-1}, 1) are compared coefficient by coefficient
    starting from the constant term.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"characteristic must be an odd prime, got {p}")
    if m < 1:
        raise ValueError(f"extension degree must be positive, got {m}")
    for low in itertools.product(range(p), repeat=m):
        f = list(low) + [1]
        if m > 1 and low[0] == 0:
            continue
        if is_irreducible(f, p):
            return FieldSpec(p, m, tuple(f))
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


def _coord_mul(a: np.ndarray, b: np.ndarray, spec: FieldSpec) -> np.ndarray:
    """Schoolbook product of coordinate rows, reduced by the modulus."""
    p, m = spec.p, spec.m
    a = np.atleast_2d(a)
    b = np.atleast_2d(b)
    rows = max(a.shape[0], b.shape[0])
    prod = np.zeros((rows, 2 * m - 1), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            prod[:, i + j] += a[:, i] * b[:, j]
    prod %= p
    mod = np.array(spec.modulus[:m], dtype=np.int64)
    for d in range(2 * m - 2, m - 1, -1):
        c = prod[:, d].copy()
        prod[:, d - m : d] -= c[:, None] * mod[None, :]
        prod[:, d] = 0
        prod %= p
    return prod[:, :m]


class GF:
    """Table-backed arithmetic for one FieldSpec.

    Logarithms are taken to the base of `generator`, the first primitive
    element in coordinate-lexicographic order.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.order = spec.order
        q = self.order
        self.weights = self.p ** np.arange(self.m, dtype=np.int64)
        digits = np.arange(q, dtype=np.int64)
        self.coords = np.stack([(digits // w) % self.p for w in self.weights], axis=1)

        self.generator = self._least_primitive()
        self.exp = self._build_exp(self.generator)
        self.log = np.full(q, -1, dtype=np.int64)
        self.log[self.exp[: q - 1]] = np.arange(q - 1)

        self._add = self._mul = None
        if q <= TABLE_LIMIT:
            a, b = np.meshgrid(digits, digits, indexing="ij")
            self._add = self._add_coords(a, b)
            self._mul = self._mul_logs(a, b)
        self._neg = self.from_coords((-self.coords) % self.p)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = self.exp[(-self.log[1:]) % (q - 1)]
        self._inv = inv
        self._check_tables()

    # construction helpers

    def from_coords(self, c) -> np.ndarray:
        return np.asarray(c, dtype=np.int64) @ self.weights

    def _pow_coords(self, idx: int, e: int) -> int:
        base = self.coords[idx][None, :]
        result = np.zeros((1, self.m), dtype=np.int64)
        result[0, 0] = 1
        while e:
            if e & 1:
                result = _coord_mul(result, base, self.spec)
            base = _coord_mul(base, base, self.spec)
            e >>= 1
        return int(self.from_coords(result[0]))

    def _least_primitive(self) -> int:
        q1 = self.order - 1
        tests = [q1 // r for r in prime_factors(q1)] if q1 > 1 else []
        for c in itertools.product(range(self.p), repeat=self.m):
            idx = int(self.from_coords(c))
            if idx == 0:
                continue
            if all(self._pow_coords(idx, t) != 1 for t in tests):
                return idx
        raise RuntimeError("multiplicative group has no generator")

    def _build_exp(self, g: int) -> np.ndarray:
        q1 = self.order - 1
        block = min(256, q1)
        head = np.zeros((block, self.m), dtype=np.int64)
        head[0, 0] = 1
        gc = self.coords[g][None, :]
        for t in range(1, block):
            head[t] = _coord_mul(head[t - 1][None, :], gc, self.spec)[0]
        step = _coord_mul(head[-1][None, :], gc, self.spec)  # g**block
        chunks = [head]
        done = block
        cur = head
        while done < q1:
            cur = _coord_mul(cur, step, self.spec)
            chunks.append(cur)
            done += block
        powers = np.concatenate(chunks)[:q1]
        exp = self.from_coords(powers)
        if len(np.unique(exp)) != q1:
            raise RuntimeError("generator is not primitive")
        # doubled so that exp[a + b] needs no reduction for a, b < q - 1
        return np.concatenate([exp, exp])

    def _add_coords(self, a, b):
        return self.from_coords((self.coords[a] + self.coords[b]) % self.p)

    def _mul_logs(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        out = self.exp[(la + lb) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def _check_tables(self, samples: int = 10_000) -> None:
        # deterministic stride sample; compares log multiplication to schoolbook
        k = np.arange(samples, dtype=np.int64)
        a = (k * 7919 + 3) % self.order
        b = (k * 104729 + 11) % self.order
        direct = self.from_coords(_coord_mul(self.coords[a], self.coords[b], self.spec))
        if not np.array_equal(direct, self._mul_logs(a, b)):
            raise RuntimeError(f"log tables disagree with coordinate arithmetic in {self}")

    # arithmetic

    def add(self, a, b):
        if self._add is not None:
            return self._add[a, b]
        return self._add_coords(a, b)

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if self._mul is not None:
            return self._mul[a, b]
        return self._mul_logs(a, b)

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return np.ones_like(a)[()]
        q1 = self.order - 1
        out = np.where(a == 0, 0, self.exp[(self.log[a] * (e % q1)) % q1])
        return out[()]

    def sum(self, a, axis=-1):
        """Field sum along an axis."""
        c = self.coords[np.asarray(a)].sum(axis=axis if axis >= 0 else axis - 1) % self.p
        return self.from_coords(c)

    def dot(self, a, b, axis=-1):
        return self.sum(self.mul(a, b), axis=axis)

    def element(self, value) -> "FieldElement":
        if isinstance(value, (tuple, list)):
            value = int(self.from_coords(value))
        return FieldElement(self, int(value) % self.order)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"

    def __reduce__(self):
        return (get_field, (self.spec.p, self.spec.m))


@lru_cache(maxsize=None)
def get_field(p: int, m: int) -> GF:
    return GF(field_create(p, m))


@dataclass(frozen=True)
class FieldElement:
    """A single element with operator sugar; arithmetic delegates to its GF."""

    field: GF = field(repr=False, compare=False)
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"{self.value} out of range for {self.field}")

    @property
    def spec(self) -> FieldSpec:
        return self.field.spec

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.field.coords[self.value])

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.spec != self.field.spec:
                raise ValueError("operands live in different fields")
            return other.value
        return int(other) % self.field.order

    def _wrap(self, v) -> "FieldElement":
        return FieldElement(self.field, int(v))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.spec == other.field.spec and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.spec, self.value))

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0


def arith(a: FieldElement, b: FieldElement | int | None, kind: str) -> FieldElement:
    """Dispatch one of add/sub/mul/div/neg/inv/pow."""
    if isinstance(b, FieldElement) and a.spec != b.spec:
        raise ValueError("operands live in different fields")
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "neg":
        return -a
    if kind == "inv":
        return a.inverse()
    if kind == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {kind!r}")


def frobenius(x: FieldElement, e: int) -> FieldElement:
    """x**e for e a power of the characteristic; additive and multiplicative."""
    return x**e


# -- the quadratic tower -------------------------------------------------------

class SubfieldEmbedding:
    """Injective map GF(q^2) -> GF(q^4) sending the source's power-basis
    generator to `generator_image` (a root of the source modulus)."""

    def __init__(self, source: GF, target: GF, generator_image: int):
        self.source = source
        self.target = target
        self.generator_image = int(generator_image)
        m = source.m
        powers = [1]
        for _ in range(1, m):
            powers.append(int(target.mul(powers[-1], self.generator_image)))
        powers = np.array(powers, dtype=np.int64)
        # image of each source element: sum_i c_i * r^i
        scaled = target.mul(source.coords, powers[None, :])
        self.image = target.sum(scaled, axis=1)
        self.preimage = np.full(target.order, -1, dtype=np.int64)
        self.preimage[self.image] = np.arange(source.order)
        if len(np.unique(self.image)) != source.order:
            raise RuntimeError("embedding is not injective")

    def embed(self, a):
        return self.image[a]

    def restrict(self, x):
        """Inverse image; raises when x is outside the embedded subfield."""
        out = self.preimage[x]
        if np.any(out < 0):
            raise ValueError("element is outside the embedded subfield")
        return out

    def contains(self, x):
        return self.preimage[x] >= 0


@dataclass(frozen=True)
class BasisExpansion:
    """GF(q^2)-basis (b1, b2) of GF(q^4), stored as target-field ints."""

    tower: "Tower" = field(repr=False, compare=False)
    b1: int
    b2: int

    def __post_init__(self):
        if int(self._det()) == 0:
            raise ValueError(f"({self.b1}, {self.b2}) is not a basis over the subfield")

    def _det(self):
        big, fr = self.tower.big, self.tower.conj4
        return big.sub(big.mul(self.b1, fr(self.b2)), big.mul(self.b2, fr(self.b1)))

    def expand(self, x):
        """Coordinates (c1, c2) in GF(q^2) with x = c1*b1 + c2*b2 (vectorized)."""
        big, fr = self.tower.big, self.tower.conj4
        x = np.asarray(x, dtype=np.int64)
        sx = fr(x)
        det_inv = big.inv(self._det())
        c1 = big.mul(big.sub(big.mul(x, fr(self.b2)), big.mul(self.b2, sx)), det_inv)
        c2 = big.mul(big.sub(big.mul(self.b1, sx), big.mul(fr(self.b1), x)), det_inv)
        emb = self.tower.embedding
        return emb.restrict(c1), emb.restrict(c2)

    def reconstruct(self, c1, c2):
        big, emb = self.tower.big, self.tower.embedding
        return big.add(big.mul(emb.embed(c1), self.b1), big.mul(emb.embed(c2), self.b2))


class Tower:
    """GF(q^2) and GF(q^4), both built directly over GF(p), plus the embedding."""

    def __init__(self, q: int):
        p, e = prime_power(q)
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.q, self.p, self.e = q, p, e
        self.small = get_field(p, 2 * e)
        self.big = get_field(p, 4 * e)
        self.embedding = SubfieldEmbedding(self.small, self.big, self._generator_root())
        self._conj2 = self.small.pow(np.arange(self.small.order), q)

    def _generator_root(self) -> int:
        big = self.big
        xs = np.arange(big.order, dtype=np.int64)
        acc = np.zeros_like(xs)
        for c in reversed(self.small.spec.modulus):
            acc = big.add(big.mul(acc, xs), int(c))
        roots = np.nonzero(acc == 0)[0]
        if roots.size == 0:
            raise RuntimeError("subfield modulus has no root in the extension")
        return int(roots[0])

    def conj2(self, a):
        """a -> a**q on GF(q^2), an involution."""
        return self._conj2[a]

    def conj4(self, x):
        """x -> x**(q^2) on GF(q^4), fixing exactly the embedded subfield."""
        return self.big.pow(x, self.q**2)

    def default_basis(self) -> BasisExpansion:
        # 1 and the power-basis generator x of GF(q^4); x lies in no proper subfield
        return BasisExpansion(self, 1, self.p if self.big.m > 1 else 1)

    def __repr__(self):
        return f"Tower(q={self.q})"


@lru_cache(maxsize=None)
def get_tower(q: int) -> Tower:
    return Tower(q)


def primitive_2n_root(big: GF, n: int) -> int:
    """beta = g**((|F|-1)/2n) for the field's least primitive element g."""
    q1 = big.order - 1
    if n < 1 or q1 % (2 * n):
        raise ValueError(f"2n = {2 * n} does not divide {q1}")
    beta = int(big.exp[q1 // (2 * n)])
    return beta


def expand_column(x, basis: BasisExpansion):
    c1, c2 = basis.expand(x)
    return c1, c2


def multiplicative_order(F: GF, a: int) -> int:
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    return (F.order - 1) // math.gcd(int(F.log[a]), F.order - 1)

"""Convolutional codes from split parity-check matrices.

A polynomial matrix G(D) = G_0 + G_1 D + ... + G_mu D^mu is stored as the
list of its constant coefficient matrices.  Hermitian products use the
conjugation x -> x^q of GF(q^2).
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .fields import GF
from .negacyclic import DEFAULT_BUDGET, BlockMatrix, BudgetExceeded
from .polyring import DensePolynomial, poly_gcd


def hermitian_conj(F: GF) -> np.ndarray:
    """Table of x -> x^q on GF(q^2)."""
    q = math.isqrt(F.order)
    if q * q != F.order:
        raise ValueError(f"{F} is not a quadratic extension")
    return F.pow(np.arange(F.order), q)


@dataclass
class PolyMatrix:
    field: GF = field(repr=False)
    mats: list[np.ndarray]

    def __post_init__(self):
        mats = [np.asarray(m, dtype=np.int64) for m in self.mats]
        if not mats:
            raise ValueError("empty polynomial matrix")
        shape = mats[0].shape
        if any(m.shape != shape for m in mats):
            raise ValueError("coefficient matrices differ in shape")
        while len(mats) > 1 and not mats[-1].any():
            mats.pop()
        self.mats = mats

    @property
    def shape(self) -> tuple[int, int]:
        return self.mats[0].shape

    @property
    def mu(self) -> int:
        return len(self.mats) - 1

    @property
    def row_degrees(self) -> list[int]:
        """Per-row degree; -1 marks a zero row."""
        out = []
        for r in range(self.shape[0]):
            nz = [j for j, m in enumerate(self.mats) if m[r].any()]
            out.append(max(nz) if nz else -1)
        return out

    def at(self, lam: int) -> np.ndarray:
        """Evaluate G(lam)."""
        F = self.field
        acc = np.zeros(self.shape, dtype=np.int64)
        for m in reversed(self.mats):
            acc = F.add(F.mul(acc, lam), m)
        return acc

    def high_order(self) -> np.ndarray:
        degs = self.row_degrees
        return np.array([self.mats[max(d, 0)][r] for r, d in enumerate(degs)], dtype=np.int64)

    def coefficient(self, j: int) -> np.ndarray:
        if 0 <= j < len(self.mats):
            return self.mats[j]
        return np.zeros(self.shape, dtype=np.int64)

    def to_record(self) -> dict:
        return {"shape": list(self.shape), "mu": self.mu, "mats": [m.tolist() for m in self.mats]}


# -- splitting a parity check ----------------------------------------------------

def _entries(part) -> np.ndarray:
    return part.entries if isinstance(part, BlockMatrix) else np.asarray(part, dtype=np.int64)


def split_and_pad(parts, F: GF | None = None) -> PolyMatrix:
    """G(D) = sum_i Htilde_i D^i where each part is padded with zero rows at
    the bottom to the largest part's row count."""
    mats = [_entries(p) for p in parts]
    if F is None:
        F = parts[0].field
    cols = {m.shape[1] for m in mats}
    if len(cols) != 1:
        raise ValueError(f"parts have different column counts {sorted(cols)}")
    kappa = max(m.shape[0] for m in mats)
    n = cols.pop()
    padded = []
    for m in mats:
        t = np.zeros((kappa, n), dtype=np.int64)
        t[: m.shape[0]] = m
        padded.append(t)
    return PolyMatrix(F, padded)


@dataclass
class RankReport:
    kappa: int
    ranks: list[int]
    passed: bool

    def to_record(self) -> dict:
        return {"kappa": self.kappa, "ranks": self.ranks, "pass": self.passed}


def check_rank_conditions(parts, F: GF | None = None) -> RankReport:
    """kappa (the largest row count) must equal rk H_0 and bound every rk H_i."""
    mats = [_entries(p) for p in parts]
    if F is None:
        F = parts[0].field
    kappa = max(m.shape[0] for m in mats)
    ranks = [linalg.rank(F, m) for m in mats]
    passed = ranks[0] == kappa and all(r <= kappa for r in ranks[1:])
    return RankReport(kappa, ranks, passed)


# -- basic / reduced -------------------------------------------------------------

@dataclass
class BasicReport:
    status: str  # verified | not-basic | deferred
    gcd: list[int]
    minors_checked: int

    @property
    def verified(self) -> bool:
        return self.status == "verified"


def _interpolate(F: GF, xs, ys) -> DensePolynomial:
    out = DensePolynomial(F, ())
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        term = DensePolynomial(F, (int(yi),))
        for j, xj in enumerate(xs):
            if j != i:
                denom = int(F.inv(F.sub(xi, xj)))
                term = term * DensePolynomial(F, (int(F.mul(F.neg(xj), denom)), denom))
        out = out + term
    return out


def polynomial_rank(G: PolyMatrix) -> int:
    """Rank over F(D): the maximum rank of G(lam) over deg+1 field points."""
    F = G.field
    gamma = sum(max(d, 0) for d in G.row_degrees)
    pts = range(min(F.order, gamma + 1))
    return max(linalg.rank(F, G.at(lam)) for lam in pts)


def verify_basic(G: PolyMatrix, budget: int = DEFAULT_BUDGET) -> BasicReport:
    """gcd of all full-size minors must be a nonzero constant.

    Each minor has degree at most the sum of row degrees, so it is recovered
    by interpolating determinants at that many plus one field points.
    """
    F = G.field
    k, n = G.shape
    degs = [max(d, 0) for d in G.row_degrees]
    gamma = sum(degs)
    if F.order < gamma + 1:
        return BasicReport("deferred", [], 0)
    xs = list(range(gamma + 1))
    evals = [G.at(x) for x in xs]
    g = DensePolynomial(F, ())
    checked = 0
    for cols in itertools.combinations(range(n), k):
        if checked >= budget:
            return BasicReport("deferred", list(g.coeffs), checked)
        cols = list(cols)
        ys = [linalg.det(F, E[:, cols]) for E in evals]
        checked += 1
        minor = _interpolate(F, xs, ys)
        g = poly_gcd(g, minor) if not g.is_zero() else minor.monic()
        if g.degree == 0:
            return BasicReport("verified", [1], checked)
    return BasicReport("not-basic", list(g.coeffs), checked)


def is_reduced(G: PolyMatrix) -> bool:
    """High-order coefficient matrix has full row rank."""
    return linalg.rank(G.field, G.high_order()) == G.shape[0]


def generalized_singleton(n: int, k: int, gamma: int) -> int:
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    if gamma < 0:
        raise ValueError("degree must be nonnegative")
    return (n - k) * (gamma // k + 1) + gamma + 1


# -- Hermitian orthogonality and duals -------------------------------------------

def shifted_products(A: PolyMatrix, B: PolyMatrix) -> dict[int, np.ndarray]:
    """P_t[a, b] = sum_j A_j[a] . conj(B_{j+t}[b]) for every shift t with a
    possibly nonzero value."""
    F = A.field
    conj = hermitian_conj(F)
    out = {}
    for t in range(-A.mu, B.mu + 1):
        acc = np.zeros((A.shape[0], B.shape[0]), dtype=np.int64)
        for j in range(A.mu + 1):
            Bj = B.coefficient(j + t)
            if Bj.any():
                acc = F.add(acc, linalg.matmul(F, A.mats[j], conj[Bj].T))
        out[t] = acc
    return out


def shifted_hermitian_orthogonal(G: PolyMatrix) -> bool:
    """Every row pair of G is Hermitian-orthogonal under every shift."""
    return all(not P.any() for P in shifted_products(G, G).values())


def mutually_orthogonal(A: PolyMatrix, B: PolyMatrix) -> bool:
    return all(not P.any() for P in shifted_products(A, B).values())


class DegreeCapExceeded(RuntimeError):
    pass


@dataclass
class DualBasis:
    matrix: PolyMatrix
    cap: int

    @property
    def matrix_gamma(self) -> int:
        return sum(self.matrix.row_degrees)


def _orthogonality_system(G: PolyMatrix, d: int) -> np.ndarray:
    """Rows: for shift s in [-mu, d] and row a, sum_j G_j[a] . w_{s+j} = 0."""
    k, n = G.shape
    rows = []
    for s in range(-G.mu, d + 1):
        block = np.zeros((k, n * (d + 1)), dtype=np.int64)
        for j in range(G.mu + 1):
            t = s + j
            if 0 <= t <= d:
                block[:, t * n : (t + 1) * n] = G.mats[j]
        rows.append(block)
    return np.vstack(rows)


def dual_basis_bounded(G: PolyMatrix, degree_cap: int, target_rank: int | None = None) -> DualBasis:
    """Minimal polynomial basis of the Hermitian dual with rows of degree <= cap.

    Works with w = v^q, which turns the semilinear condition into the linear
    system sum_j G_j w_{s+j} = 0; v is recovered as w^q.  Degrees are scanned
    upward and a solution of degree d joins the basis only when its top
    coefficient is independent of the leading coefficients already chosen,
    which keeps the basis row-reduced.
    """
    F = G.field
    k, n = G.shape
    if target_rank is None:
        target_rank = n - polynomial_rank(G)
    conj = hermitian_conj(F)
    chosen: list[np.ndarray] = []  # w-vectors, length n*(deg+1)
    degrees: list[int] = []
    leading = linalg.Echelon(F, n)
    for d in range(degree_cap + 1):
        if len(chosen) == target_rank:
            break
        N = linalg.nullspace(F, _orthogonality_system(G, d), cols=n * (d + 1))
        for w in N:
            if leading.add(w[d * n :]):
                chosen.append(w)
                degrees.append(d)
                if len(chosen) == target_rank:
                    break
    if len(chosen) < target_rank:
        raise DegreeCapExceeded(f"dual rank {len(chosen)} < {target_rank} at degree cap {degree_cap}")
    top = max(degrees, default=0)
    mats = np.zeros((top + 1, len(chosen), n), dtype=np.int64)
    for r, w in enumerate(chosen):
        blocks = w.reshape(-1, n)
        mats[: blocks.shape[0], r] = conj[blocks]
    return DualBasis(PolyMatrix(F, list(mats)), top)


def hermitian_dual(G: PolyMatrix, start_cap: int = 1, max_cap: int = 4) -> DualBasis:
    """dual_basis_bounded with the cap raised one step at a time."""
    target = G.shape[1] - polynomial_rank(G)
    for cap in range(start_cap, max_cap + 1):
        try:
            basis = dual_basis_bounded(G, cap, target)
            basis.cap = cap
            return basis
        except DegreeCapExceeded:
            continue
    raise DegreeCapExceeded(f"Hermitian dual not reached by degree {max_cap}")


# -- codes and free distance ---------------------------------------------------

@dataclass
class ConvolutionalCode:
    G: PolyMatrix

    def __post_init__(self):
        if any(d < 0 for d in self.G.row_degrees):
            raise ValueError("generator matrix has a zero row")

    @property
    def n(self) -> int:
        return self.G.shape[1]

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def row_degrees(self) -> list[int]:
        return self.G.row_degrees

    @property
    def gamma(self) -> int:
        return sum(self.row_degrees)

    @property
    def mu(self) -> int:
        return max(self.row_degrees)

    def rank(self) -> int:
        return polynomial_rank(self.G)

    def params(self) -> tuple[int, int, int, int]:
        return self.n, self.k, self.gamma, self.mu

    def encode(self, inputs) -> np.ndarray:
        """Output blocks v_t for an input sequence u_0, u_1, ... (rows)."""
        F = self.G.field
        u = np.atleast_2d(np.asarray(inputs, dtype=np.int64))
        L = u.shape[0] + self.G.mu
        out = np.zeros((L, self.n), dtype=np.int64)
        for t in range(u.shape[0]):
            for j, Gj in enumerate(self.G.mats):
                out[t + j] = F.add(out[t + j], F.sum(F.mul(u[t][:, None], Gj), axis=0))
        return out


@dataclass
class FreeDistanceResult:
    value: int | None
    lower: int
    upper: int | None
    method: str  # state-search | bracket | bound-certified
    weight_cap: int | None = None
    states: int | None = None
    codeword: list[list[int]] | None = field(default=None, repr=False)

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_record(self) -> dict:
        return {
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method,
            "weight_cap": self.weight_cap,
            "states": self.states,
        }


def _digits(values: np.ndarray, base: int, width: int) -> np.ndarray:
    return np.stack([(values // base**i) % base for i in range(width)], axis=1) if width else \
        np.zeros((len(values), 0), dtype=np.int64)


def free_distance_exact(code: ConvolutionalCode, weight_cap: int | None = None,
                        budget: int = DEFAULT_BUDGET) -> FreeDistanceResult:
    """Minimum weight over paths that leave the zero state and return to it.

    States are the memory cells of the controller-canonical realization (row
    r keeps its last row_degree[r] inputs).  Edge (s, s') carries the minimum
    output weight over inputs that move s to s'; a Dijkstra search from the
    zero state with a nonzero first input finds the shortest return.
    """
    G = code.G
    F = G.field
    Q, k, n = F.order, code.k, code.n
    nu = code.row_degrees
    gamma = sum(nu)
    S, U = Q**gamma, Q**k
    if S * U > budget:
        raise BudgetExceeded(f"{S} states x {U} inputs exceed budget {budget}")
    if polynomial_rank(G) != k:
        raise ValueError("generator matrix is not of full rank")
    if weight_cap is None:
        weight_cap = 2 * generalized_singleton(n, k, gamma) if 0 < k < n else 2 * n

    us = _digits(np.arange(U), Q, k)
    in_contrib = F.sum(F.mul(us[:, :, None], G.mats[0][None, :, :]), axis=1)  # U x n
    cells = [(r, j) for r in range(k) for j in range(1, nu[r] + 1)]
    ss = _digits(np.arange(S), Q, gamma)
    mem_contrib = np.zeros((S, n), dtype=np.int64)
    for c, (r, j) in enumerate(cells):
        mem_contrib = F.add(mem_contrib, F.mul(ss[:, c][:, None], G.mats[j][r][None, :]))
    next_from_state = np.zeros(S, dtype=np.int64)
    next_from_input = np.zeros(U, dtype=np.int64)
    for c, (r, j) in enumerate(cells):
        if j == 1:
            next_from_input += us[:, r] * Q**c
        else:
            next_from_state += ss[:, cells.index((r, j - 1))] * Q**c

    big = np.iinfo(np.int64).max // 4
    W = np.full((S, S), big, dtype=np.int64)
    for s in range(S):
        wt = np.count_nonzero(F.add(mem_contrib[s][None, :], in_contrib), axis=1)
        nxt = next_from_state[s] + next_from_input
        if s == 0:
            wt = np.where(np.arange(U) == 0, big, wt)  # the first input is nonzero
        np.minimum.at(W[s], nxt, wt)

    # Dijkstra; the zero state is a sink once reached after the first step
    dist = W[0].copy()
    pred = np.zeros(S, dtype=np.int64)  # predecessor; 0 means the start
    done = np.zeros(S, dtype=bool)
    done[0] = True
    heap = [(int(dist[s]), s) for s in range(1, S) if dist[s] <= weight_cap]
    heapq.heapify(heap)
    while heap:
        dv, v = heapq.heappop(heap)
        if done[v] or dv != dist[v]:
            continue
        if dv >= dist[0] or dv > weight_cap:
            break
        done[v] = True
        cand = dv + W[v]
        better = (cand < dist) & ~(done & (np.arange(S) != 0))
        for s in np.nonzero(better)[0]:
            dist[s] = cand[s]
            pred[s] = v
            if s != 0 and cand[s] <= weight_cap:
                heapq.heappush(heap, (int(cand[s]), int(s)))

    d = int(dist[0])
    if d > weight_cap:
        return FreeDistanceResult(None, weight_cap + 1, None, "state-search", weight_cap, S)

    # rebuild one minimum-weight codeword
    path = [0]
    s = 0
    while True:
        s = int(pred[s])
        path.append(s)
        if s == 0:
            break
    path.reverse()  # 0, s1, ..., 0
    blocks = []
    for a, b in zip(path[:-1], path[1:]):
        nxt = next_from_state[a] + next_from_input
        wt = np.count_nonzero(F.add(mem_contrib[a][None, :], in_contrib), axis=1)
        ok = (nxt == b) & (wt == W[a, b])
        if a == 0 and len(blocks) == 0:
            ok &= np.arange(U) != 0
        u = int(np.nonzero(ok)[0][0])
        blocks.append(F.add(mem_contrib[a], in_contrib[u]).tolist())
    return FreeDistanceResult(d, d, d, "state-search", weight_cap, S, blocks)


def free_distance_bracket(d0: int, dmu: int, d: int) -> tuple[int, int]:
    """Lower and upper bounds min(d0 + dmu, d) <= d_f(dual) <= d."""
    return min(d0 + dmu, d), d


def in_code(word_blocks, dual: PolyMatrix) -> bool:
    """Membership of a polynomial word in the Hermitian dual of `dual`.

    For a basic generator G this tests membership in the code of G when
    `dual` generates its Hermitian dual.
    """
    blocks = np.atleast_2d(np.asarray(word_blocks, dtype=np.int64))
    word = PolyMatrix(dual.field, [b[None, :] for b in blocks])
    return mutually_orthogonal(dual, word)

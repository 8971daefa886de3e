"""Dense linear algebra over a GF, with matrices as int64 numpy arrays."""

from __future__ import annotations

import numpy as np

from .fields import GF


def matmul(F: GF, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    return F.sum(F.mul(A[:, :, None], B[None, :, :]), axis=1)


def row_reduce(F: GF, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (zero rows dropped) and the pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = F.mul(F.inv(A[r, c]), A[r])
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = F.sub(A[others], F.mul(A[others, c][:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: GF, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(row_reduce(F, M)[1])


def nullspace(F: GF, M, cols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}."""
    M = np.asarray(M, dtype=np.int64)
    if cols is None:
        cols = M.shape[1]
    if M.size == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = row_reduce(F, M)
    free = [c for c in range(cols) if c not in set(pivots)]
    N = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        N[t, f] = 1
        for i, pc in enumerate(pivots):
            N[t, pc] = F.neg(R[i, f])
    return N


class Echelon:
    """Incrementally grown row space; rows are kept in insertion order."""

    def __init__(self, F: GF, width: int):
        self.F = F
        self.width = width
        self.basis: list[np.ndarray] = []
        self.pivots: list[int] = []

    def reduce(self, v) -> np.ndarray:
        F = self.F
        v = np.array(v, dtype=np.int64, copy=True)
        for pc, b in zip(self.pivots, self.basis):
            if v[pc]:
                v = F.sub(v, F.mul(v[pc], b))
        return v

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def add(self, v) -> bool:
        """Insert v; False when it already lies in the span."""
        r = self.reduce(v)
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            return False
        pc = int(nz[0])
        self.basis.append(self.F.mul(self.F.inv(r[pc]), r))
        self.pivots.append(pc)
        return True

    @property
    def rank(self) -> int:
        return len(self.basis)


def independent_rows(F: GF, M) -> list[int]:
    """Indices of rows kept when each row is dropped iff it lies in the span
    of the rows kept before it."""
    M = np.asarray(M, dtype=np.int64)
    ech = Echelon(F, M.shape[1])
    return [i for i, row in enumerate(M) if ech.add(row)]


def same_rowspace(F: GF, A, B) -> bool:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    ra, rb = rank(F, A), rank(F, B)
    return ra == rb == rank(F, np.vstack([A, B]))


def columns_dependent(F: GF, stack: np.ndarray) -> np.ndarray:
    """For a batch of r x w matrices, True where the w columns are dependent.

    Batched elimination; each column must find a pivot at or below its own
    diagonal position, otherwise that matrix is marked dependent.
    """
    A = np.array(stack, dtype=np.int64, copy=True)
    B, r, w = A.shape
    if w > r:
        return np.ones(B, dtype=bool)
    dep = np.zeros(B, dtype=bool)
    idx = np.arange(B)
    for c in range(w):
        sub = A[:, c:, c]
        has = sub != 0
        found = has.any(axis=1)
        dep |= ~found
        piv = c + np.argmax(has, axis=1)
        swap = piv != c
        if swap.any():
            rows_c = A[idx[swap], c].copy()
            A[idx[swap], c] = A[idx[swap], piv[swap]]
            A[idx[swap], piv[swap]] = rows_c
        pivot = A[:, c, c]
        pivot = np.where(pivot == 0, 1, pivot)  # dependent entries are ignored
        if c + 1 < r:
            factor = F.mul(A[:, c + 1 :, c], F.inv(pivot)[:, None])
            A[:, c + 1 :, :] = F.sub(A[:, c + 1 :, :], F.mul(factor[:, :, None], A[:, c, None, :]))
    return dep


def det(F: GF, M) -> int:
    A = np.array(M, dtype=np.int64, copy=True)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    result = 1
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            A[[c, piv]] = A[[piv, c]]
            result = int(F.neg(result))
        result = int(F.mul(result, A[c, c]))
        if c + 1 < n:
            f = F.mul(A[c + 1 :, c], F.inv(A[c, c]))
            A[c + 1 :] = F.sub(A[c + 1 :], F.mul(f[:, None], A[c][None, :]))
    return result

"""Parameters of convolutional stabilizer codes built from Hermitian
self-orthogonal convolutional codes over GF(q^2)."""

from __future__ import annotations

from dataclasses import dataclass

from .convolutional import ConvolutionalCode, FreeDistanceResult


def quantum_singleton(n: int, k: int, gamma: int) -> int:
    """Singleton-type bound for pure convolutional stabilizer codes."""
    if not n > k:
        raise ValueError(f"need n > k, got n={n}, k={k}")
    if (n - k) % 2:
        raise ValueError(f"n - k = {n - k} is odd")
    if gamma < 0:
        raise ValueError("degree must be nonnegative")
    return (n - k) // 2 * ((2 * gamma) // (n + k) + 1) + gamma + 1


@dataclass(frozen=True)
class QuantumConvParams:
    q: int
    n: int
    k: int
    mu: int
    gamma: int
    d_f: int
    d_f_status: str  # exact | lower-bound
    purity_note: str  # verified | assumed

    def __post_init__(self):
        if (self.n - self.k) % 2:
            raise ValueError("n - k must be even")

    @property
    def singleton(self) -> int:
        return quantum_singleton(self.n, self.k, self.gamma)

    @property
    def mds(self) -> bool:
        return quantum_mds_check(self)

    def tuple_text(self) -> str:
        return f"[({self.n},{self.k},{self.mu};{self.gamma},{self.d_f})]_{self.q}"

    def to_record(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "mu": self.mu,
            "gamma": self.gamma,
            "d_f": self.d_f,
            "d_f_status": self.d_f_status,
            "mds": self.mds,
            "purity_note": self.purity_note,
        }


def from_selforthogonal(V: ConvolutionalCode, orthogonal: bool, dual_distance: FreeDistanceResult,
                        stabilizer_lower_bound: int | None = None) -> QuantumConvParams:
    """Map a self-orthogonal V over GF(q^2) to [(n, n - 2 dim V, mu; gamma, d_f)]_q.

    The dual's free distance bounds wt(dual minus V) from below.  When V is
    known to have no nonzero word lighter than stabilizer_lower_bound and that
    exceeds the dual's distance, every minimum-weight dual word lies outside
    V, so the value is exact and the code is pure.
    """
    if not orthogonal:
        raise ValueError("V is not Hermitian self-orthogonal")
    q2 = V.G.field.order
    q = int(round(q2**0.5))
    if q * q != q2:
        raise ValueError("V must be defined over GF(q^2)")
    k = V.n - 2 * V.k
    if k <= 0:
        raise ValueError(f"dim V = {V.k} too large for length {V.n}")
    d = dual_distance.value if dual_distance.exact else dual_distance.lower
    separated = stabilizer_lower_bound is not None and stabilizer_lower_bound > d
    status = "exact" if dual_distance.exact and separated else "lower-bound"
    return QuantumConvParams(q, V.n, k, V.mu, V.gamma, d, status, "verified" if separated else "assumed")


def quantum_mds_check(params: QuantumConvParams) -> bool:
    """d_f meets the bound.  A lower bound that reaches the bound is exact,
    since the bound cannot be exceeded."""
    return params.d_f == quantum_singleton(params.n, params.k, params.gamma)

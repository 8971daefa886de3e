"""The five negacyclic BCH families, their verification pipeline and the
reproduction of the published parameter tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .convolutional import (
    ConvolutionalCode,
    DegreeCapExceeded,
    DualBasis,
    FreeDistanceResult,
    PolyMatrix,
    check_rank_conditions,
    free_distance_bracket,
    free_distance_exact,
    generalized_singleton,
    hermitian_dual,
    in_code,
    is_reduced,
    mutually_orthogonal,
    polynomial_rank,
    shifted_hermitian_orthogonal,
    split_and_pad,
    verify_basic,
)
from .fields import prime_power
from .negacyclic import (
    DEFAULT_BUDGET,
    BlockMatrix,
    BudgetExceeded,
    DistanceResult,
    NegacyclicCode,
    RankMismatch,
    bch_defining_set,
    build_code,
    generator_matrix,
    hermitian_dual_containment,
    min_distance_exact,
    parity_check_matrix,
    verify_coset_structure,
)
from .polyring import x_n_plus_one
from .quantum import QuantumConvParams, from_selforthogonal, quantum_singleton

FAMILIES = ("I", "II", "III", "IV", "V")


# -- family layouts ------------------------------------------------------------

@dataclass(frozen=True)
class Layout:
    """Where the BCH exponent runs start and how long they are.

    C2 uses exponents b, b+2, ..., b+2(delta2-2); C1 drops the last one and
    C0 is the coset of that last exponent.
    """

    family: str
    q: int
    i: int
    n: int
    b: int
    delta2: int

    @property
    def last(self) -> int:
        return self.b + 2 * (self.delta2 - 2)

    @property
    def quantum(self) -> bool:
        return self.family in ("IV", "V")

    @property
    def coset_kind(self) -> str:
        return "full-length" if self.family in ("I", "IV") else "half-length"

    def expected_classical(self) -> tuple[int, int, int, int, int]:
        """(n, k, gamma, mu, d_f) of the dual convolutional code."""
        n, i = self.n, self.i
        if self.family in ("II", "V"):
            return n, n - 2 * i + 2, 2, 1, 2 * i + 1
        return n, n - 2 * i + 1, 2, 1, 2 * i + 2

    def expected_quantum(self) -> tuple[int, int, int, int, int] | None:
        """(n, k, mu, gamma, d_f) of the stabilizer code."""
        n, i = self.n, self.i
        if self.family == "IV":
            return n, n - 4 * i + 2, 1, 2, 2 * i + 2
        if self.family == "V":
            return n, n - 4 * i + 4, 1, 2, 2 * i + 1
        return None


def _check_q(q: int) -> None:
    try:
        p, _ = prime_power(q)
    except ValueError:
        raise ValueError(f"q = {q} is not a prime power") from None
    if p == 2:
        raise ValueError(f"q = {q} must be odd")


def i_range(family: str, q: int) -> tuple[int, int]:
    """Inclusive range of i, after validating q for the family."""
    _check_q(q)
    if family in ("I", "IV"):
        if q % 4 != 1:
            raise ValueError(f"family {family} needs q = 1 mod 4, got q = {q}")
        n = q * q + 1
        return 2, (n // 2 - 1 if family == "I" else (q - 1) // 2)
    n = (q * q + 1) // 2
    if family == "II":
        return 2, (n - 1) // 2
    if family == "III":
        if q < 5:
            raise ValueError(f"family III needs q >= 5, got q = {q}")
        return 2, (n - 1) // 2 - 1
    if family == "V":
        if q < 7:
            raise ValueError(f"family V needs q >= 7, got q = {q}")
        return 2, (q - 1) // 2
    raise ValueError(f"unknown family {family!r}")


def layout(family: str, q: int, i: int) -> Layout:
    lo, hi = i_range(family, q)
    if not lo <= i <= hi:
        raise ValueError(f"family {family} at q = {q} needs {lo} <= i <= {hi}, got i = {i}")
    if family in ("I", "IV"):
        n = q * q + 1
        return Layout(family, q, i, n, n // 2, i + 2)
    n = (q * q + 1) // 2
    if family in ("II", "V"):
        return Layout(family, q, i, n, 1, i + 1)
    return Layout(family, q, i, n, n, i + 2)


# -- certificates ------------------------------------------------------------------

@dataclass
class Check:
    name: str
    method: str
    status: str  # pass | fail | skipped | deferred
    detail: str = ""
    mandatory: bool = True

    def to_record(self) -> dict:
        return {"name": self.name, "method": self.method, "status": self.status,
                "detail": self.detail, "mandatory": self.mandatory}


@dataclass
class VerificationCertificate:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, method: str, ok: bool | None, detail: str = "", mandatory: bool = True,
            status: str | None = None) -> bool:
        if status is None:
            status = "skipped" if ok is None else ("pass" if ok else "fail")
        self.checks.append(Check(name, method, status, detail, mandatory))
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks if c.mandatory)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.mandatory and c.status != "pass"]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_record(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_record() for c in self.checks]}


# -- instances -----------------------------------------------------------------

@dataclass
class FamilyInstance:
    layout: Layout
    codes: dict[str, NegacyclicCode]
    parity: dict[str, BlockMatrix]
    G: PolyMatrix
    V: ConvolutionalCode
    certificate: VerificationCertificate
    distances: dict[str, DistanceResult] = field(default_factory=dict)
    dual: DualBasis | None = None
    dual_distance: FreeDistanceResult | None = None
    search: FreeDistanceResult | None = None
    quantum: QuantumConvParams | None = None

    @property
    def family(self) -> str:
        return self.layout.family

    @property
    def q(self) -> int:
        return self.layout.q

    @property
    def i(self) -> int:
        return self.layout.i

    @property
    def n(self) -> int:
        return self.layout.n

    @property
    def dual_params(self) -> tuple[int, int, int, int, int | None]:
        """(n, k, gamma, mu, d_f) of the Hermitian dual of V."""
        n, kappa = self.V.n, self.V.k
        if self.dual is not None:
            gamma, mu = self.dual.matrix_gamma, self.dual.matrix.mu
        else:
            gamma, mu = self.V.gamma, self.V.mu
        d = self.dual_distance.value if self.dual_distance is not None else None
        return n, n - kappa, gamma, mu, d

    @property
    def status(self) -> str:
        if self.dual_distance is None:
            return "parameter-only"
        if self.search is not None and self.search.exact:
            return "verified-exact"
        if self.distances and all(d.status == "exact" for d in self.distances.values()):
            return "verified-exact"
        return "bound-certified"

    def classical_text(self) -> str:
        n, k, g, m, d = self.dual_params
        d_txt = "?" if d is None else str(d)
        return f"({n}, {k}, {g}; {m}, {d_txt}) over GF({self.q ** 2})"

    def to_record(self) -> dict:
        n, k, g, m, d = self.dual_params
        rec = {
            "family": self.family,
            "q": self.q,
            "i": self.i,
            "field": self.q**2,
            "status": self.status,
            "dual": {"n": n, "k": k, "gamma": g, "mu": m, "d_f": d},
            "V": {"n": self.V.n, "k": self.V.k, "gamma": self.V.gamma, "mu": self.V.mu,
                  "row_degrees": self.V.row_degrees},
            "codes": {name: c.to_record(self.distances[name].status if name in self.distances else None)
                      for name, c in self.codes.items()},
            "distances": {name: d.to_record() for name, d in self.distances.items()},
            "G": self.G.to_record(),
            "certificate": self.certificate.to_record(),
        }
        if self.dual_distance is not None:
            rec["dual_distance"] = self.dual_distance.to_record()
        if self.search is not None:
            rec["state_search"] = self.search.to_record()
        if self.quantum is not None:
            rec["quantum"] = self.quantum.to_record()
        return rec

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, indent=2)


def _stack_matches(F, full: np.ndarray, parts: list[np.ndarray]) -> bool:
    return linalg.same_rowspace(F, full, np.vstack(parts))


def _designed_distance(code: NegacyclicCode) -> DistanceResult:
    r = code.n - code.k
    if code.designed_distance == r + 1:
        return DistanceResult(r + 1, "bound-certified", "bch+singleton", "designed distance meets the Singleton bound")
    return DistanceResult(code.designed_distance, "lower-bound", "bch", "designed distance")


def build_instance(family: str, q: int, i: int, budget: int = DEFAULT_BUDGET,
                   verify: bool = True) -> FamilyInstance:
    """Construct one family member; with verify=True run the whole pipeline.

    Without verification only ranks and degrees are checked, which is what
    the parameters need.
    """
    lay = layout(family, q, i)
    n, b = lay.n, lay.b
    cert = VerificationCertificate()
    lo, hi = i_range(family, q)
    cert.add("range", "closed-form", True, f"{lo} <= i={i} <= {hi}")

    Z2 = bch_defining_set(n, q, b, lay.delta2)
    Z1 = bch_defining_set(n, q, b, lay.delta2 - 1)
    Z0 = bch_defining_set(n, q, lay.last, 2)
    codes = {name: build_code(n, q, Z) for name, Z in (("C2", Z2), ("C1", Z1), ("C0", Z0))}
    split_ok = set(Z1.residues).isdisjoint(Z0.residues) and \
        set(Z1.residues) | set(Z0.residues) == set(Z2.residues)
    cert.add("defining-sets", "coset arithmetic", split_ok,
             f"|Z2|={len(Z2)}, |Z1|={len(Z1)}, |Z0|={len(Z0)}")

    parity: dict[str, BlockMatrix] = {}
    try:
        parity["C2"] = parity_check_matrix(codes["C2"], b, lay.delta2)
        parity["C1"] = parity_check_matrix(codes["C1"], b, lay.delta2 - 1)
        parity["C0"] = parity_check_matrix(codes["C0"], lay.last, 2)
        cert.add("parity-ranks", "elimination", True,
                 ", ".join(f"{k}:{v.rows}" for k, v in parity.items()))
    except RankMismatch as exc:
        cert.add("parity-ranks", "elimination", False, str(exc))
        raise
    F = codes["C2"].field

    rank_report = check_rank_conditions([parity["C1"], parity["C0"]])
    cert.add("rank-conditions", "elimination", rank_report.passed,
             f"kappa={rank_report.kappa}, ranks={rank_report.ranks}")
    G = split_and_pad([parity["C1"], parity["C0"]])
    V = ConvolutionalCode(G)
    cert.add("degree-memory", "row degrees", (V.gamma, V.mu) == (2, 1),
             f"gamma={V.gamma}, mu={V.mu}, row_degrees={V.row_degrees}")
    kappa = rank_report.kappa
    exp_n, exp_k, _, _, exp_d = lay.expected_classical()
    cert.add("dual-dimension", "closed-form", (n, n - kappa) == (exp_n, exp_k),
             f"n - kappa = {n - kappa}, expected {exp_k}")
    inst = FamilyInstance(lay, codes, parity, G, V, cert)
    if not verify:
        inst.distances = {name: _designed_distance(c) for name, c in codes.items()}
        lo, hi = free_distance_bracket(inst.distances["C1"].value, inst.distances["C0"].value,
                                       inst.distances["C2"].value)
        exact = inst.distances["C2"].status != "lower-bound" and lo == hi
        inst.dual_distance = FreeDistanceResult(hi if exact else None, lo, hi if exact else None,
                                                "bracket")
        return inst

    _verify(inst, budget)
    return inst


def _verify(inst: FamilyInstance, budget: int) -> None:
    lay, cert = inst.layout, inst.certificate
    codes, parity, G, V = inst.codes, inst.parity, inst.G, inst.V
    q, n = lay.q, lay.n
    F = codes["C2"].field
    exp_n, exp_k, exp_g, exp_m, exp_d = lay.expected_classical()

    rep = verify_coset_structure(q, lay.coset_kind)
    cert.add("coset-structure", f"enumeration ({lay.coset_kind})", rep.ok, "; ".join(rep.mismatches))

    xn1 = x_n_plus_one(F, n)
    divides = all((xn1 % c.g).is_zero() for c in codes.values())
    cert.add("generator-divides", "polynomial division", divides, "g | x^n + 1 for C2, C1, C0")

    orth = all(not np.any(linalg.matmul(F, generator_matrix(codes[k]).entries, parity[k].entries.T))
               for k in codes)
    cert.add("generator-parity", "G H^T = 0", orth)
    cert.add("parity-split", "row space", _stack_matches(F, parity["C2"].entries,
                                                         [parity["C1"].entries, parity["C0"].entries]))

    cert.add("polynomial-rank", "evaluation", polynomial_rank(G) == V.k, f"k = {V.k}")
    cert.add("reduced", "high-order coefficients", is_reduced(G))
    basic = verify_basic(G, budget=min(budget, 10_000))
    cert.add("basic", "minor gcd", basic.verified, f"{basic.minors_checked} minors",
             mandatory=False, status="deferred" if basic.status == "deferred" else None)

    # Hermitian dual of V
    try:
        dual = hermitian_dual(G)
        inst.dual = dual
        ok = mutually_orthogonal(G, dual.matrix) and polynomial_rank(dual.matrix) == n - V.k
        cert.add("dual-basis", f"degree cap {dual.cap}", ok,
                 f"{dual.matrix.shape[0]} rows, row degrees {dual.matrix.row_degrees}")
        cert.add("dual-degree", "row degrees", (dual.matrix_gamma, dual.matrix.mu) == (exp_g, exp_m),
                 f"gamma={dual.matrix_gamma}, mu={dual.matrix.mu}")
    except DegreeCapExceeded as exc:
        cert.add("dual-basis", "degree cap 4", False, str(exc))

    # block distances
    for name in ("C2", "C1", "C0"):
        inst.distances[name] = min_distance_exact(codes[name], budget=budget)
    d2, d1, d0 = (inst.distances[k] for k in ("C2", "C1", "C0"))
    for name, d in inst.distances.items():
        # the bracket needs d(C2) exactly but only lower bounds for C1 and C0
        ok = d.value >= codes[name].designed_distance
        if name == "C2":
            ok = ok and d.status in ("exact", "bound-certified")
        cert.add(f"distance-{name}", d.method, ok, f"d={d.value} ({d.status})")
    c2_mds = d2.value == n - codes["C2"].k + 1
    cert.add("C2-mds", "Singleton", c2_mds, f"d={d2.value}, n-k+1={n - codes['C2'].k + 1}")

    lo, hi = free_distance_bracket(d1.value, d0.value, d2.value)
    pinned = lo == hi
    inst.dual_distance = FreeDistanceResult(hi if pinned else None, lo, hi, "bracket")
    cert.add("free-distance-bracket", "block distances", pinned,
             f"min({d1.value}+{d0.value}, {d2.value}) = {lo} <= d_f <= {hi}")
    bound = generalized_singleton(n, n - V.k, exp_g)
    cert.add("singleton-equality", "generalized Singleton bound", pinned and hi == bound == exp_d,
             f"d_f={hi}, bound={bound}, expected {exp_d}")

    # exact search where the trellis is small
    if inst.dual is not None:
        dual_code = ConvolutionalCode(inst.dual.matrix)
        try:
            res = free_distance_exact(dual_code, budget=budget)
            inst.search = res
            agree = res.exact and lo <= res.value <= hi
            cert.add("state-search", f"{res.states} states", agree, f"d_f={res.value}", mandatory=False)
            if res.exact:
                outside = not in_code(res.codeword, inst.dual.matrix)
                cert.add("minimum-word-outside-V", "orthogonality test", outside, mandatory=False)
        except BudgetExceeded as exc:
            cert.add("state-search", "trellis", None, str(exc), mandatory=False)

    if lay.quantum:
        _verify_quantum(inst, budget)


def _verify_quantum(inst: FamilyInstance, budget: int) -> None:
    lay, cert, codes = inst.layout, inst.certificate, inst.codes
    n = lay.n
    try:
        cont = hermitian_dual_containment(codes["C2"], budget=budget)
        cert.add("dual-containment", "defining set", cont.by_defining_set,
                 "Z and -qZ disjoint" if cont.by_defining_set else "Z meets -qZ")
        cert.add("dual-containment-matrix", "dual basis at roots", cont.by_matrix,
                 "over budget" if cont.by_matrix is None else "")
    except RuntimeError as exc:
        cert.add("dual-containment-matrix", "dual basis at roots", False, str(exc))
        return
    orth = shifted_hermitian_orthogonal(inst.G)
    cert.add("self-orthogonal", "all row pairs and shifts", orth)
    if not (orth and cont.contained):
        return

    # every coefficient block of a word of V is a word of C2's dual, an MDS code
    z2 = len(codes["C2"].Z)
    d_dual_block = n - z2 + 1 if cert.get("C2-mds").status == "pass" else None
    qp = from_selforthogonal(inst.V, orth, inst.dual_distance, d_dual_block)
    inst.quantum = qp
    expected = lay.expected_quantum()
    got = (qp.n, qp.k, qp.mu, qp.gamma, qp.d_f)
    cert.add("quantum-parameters", "dimension map", got == expected, f"{qp.tuple_text()}, expected {expected}")
    cert.add("quantum-distance", "separation from V", qp.d_f_status == "exact",
             f"V has no nonzero word below {d_dual_block}; purity {qp.purity_note}")
    bound = quantum_singleton(qp.n, qp.k, qp.gamma)
    cert.add("quantum-singleton-equality", "quantum Singleton bound", qp.d_f == bound,
             f"d_f={qp.d_f}, bound={bound}")


def family_I(q: int, i: int, budget: int = DEFAULT_BUDGET, verify: bool = True) -> FamilyInstance:
    return build_instance("I", q, i, budget, verify)


def family_II(q: int, i: int, budget: int = DEFAULT_BUDGET, verify: bool = True) -> FamilyInstance:
    return build_instance("II", q, i, budget, verify)


def family_III(q: int, i: int, budget: int = DEFAULT_BUDGET, verify: bool = True) -> FamilyInstance:
    return build_instance("III", q, i, budget, verify)


def family_IV(q: int, i: int, budget: int = DEFAULT_BUDGET, verify: bool = True) -> FamilyInstance:
    return build_instance("IV", q, i, budget, verify)


def family_V(q: int, i: int, budget: int = DEFAULT_BUDGET, verify: bool = True) -> FamilyInstance:
    return build_instance("V", q, i, budget, verify)


# -- published tables ------------------------------------------------------------

# (family, field size, (n, k, gamma, mu, d_f)) exactly as printed
TABLE1 = [
    ("I", 25, (26, 23, 2, 1, 6)),
    ("I", 25, (26, 21, 2, 1, 8)),
    ("I", 25, (26, 19, 2, 1, 10)),
    ("I", 25, (26, 9, 2, 1, 20)),
    ("I", 25, (26, 7, 2, 1, 22)),
    ("I", 25, (26, 5, 2, 1, 24)),
    ("I", 81, (82, 63, 2, 1, 22)),
    ("I", 81, (82, 53, 2, 1, 32)),
    ("I", 81, (82, 43, 2, 1, 42)),
    ("I", 81, (82, 23, 2, 1, 62)),
    ("I", 81, (82, 13, 2, 1, 72)),
    ("II", 9, (5, 3, 2, 1, 5)),
    ("II", 49, (25, 23, 2, 1, 5)),
    ("II", 49, (25, 21, 2, 1, 7)),
    ("II", 49, (25, 19, 2, 1, 9)),
    ("II", 49, (25, 17, 2, 1, 11)),
    ("II", 49, (25, 15, 2, 1, 13)),
    ("II", 49, (25, 13, 2, 1, 15)),
    ("II", 49, (25, 11, 2, 1, 17)),
    ("II", 49, (25, 7, 2, 1, 21)),
    ("III", 25, (13, 10, 2, 1, 6)),
    ("III", 25, (13, 8, 2, 1, 8)),
    ("III", 25, (13, 6, 2, 1, 10)),
    ("III", 25, (13, 4, 2, 1, 12)),
    ("III", 49, (25, 16, 2, 1, 12)),
    ("III", 49, (25, 10, 2, 1, 18)),
    ("III", 49, (25, 4, 2, 1, 24)),
    ("III", 81, (41, 38, 2, 1, 6)),
    ("III", 81, (41, 32, 2, 1, 12)),
    ("III", 81, (41, 24, 2, 1, 20)),
    ("III", 81, (41, 4, 2, 1, 40)),
    ("III", 121, (61, 32, 2, 1, 32)),
    ("III", 121, (61, 22, 2, 1, 42)),
    ("III", 121, (61, 4, 2, 1, 60)),
]

# (family, q, (n, k, first, second, d_f)); the printed middle pair is "2; 1"
TABLE2 = [
    ("IV", 5, (26, 20, 2, 1, 6)),
    ("IV", 9, (82, 80, 2, 1, 4)),
    ("IV", 9, (82, 76, 2, 1, 6)),
    ("IV", 9, (82, 72, 2, 1, 8)),
    ("IV", 9, (82, 68, 2, 1, 10)),
    ("IV", 13, (170, 168, 2, 1, 4)),
    ("IV", 13, (170, 164, 2, 1, 6)),
    ("IV", 13, (170, 160, 2, 1, 8)),
    ("IV", 13, (170, 156, 2, 1, 10)),
    ("IV", 13, (170, 152, 2, 1, 12)),
    ("IV", 13, (170, 148, 2, 1, 14)),
    ("V", 7, (25, 21, 2, 1, 5)),
    ("V", 7, (25, 17, 2, 1, 7)),
    ("V", 11, (61, 57, 2, 1, 5)),
    ("V", 11, (61, 53, 2, 1, 7)),
    ("V", 11, (61, 49, 2, 1, 9)),
    ("V", 11, (61, 45, 2, 1, 11)),
    ("V", 17, (145, 141, 2, 1, 5)),
    ("V", 17, (145, 137, 2, 1, 7)),
    ("V", 17, (145, 133, 2, 1, 9)),
    ("V", 17, (145, 129, 2, 1, 11)),
    ("V", 17, (145, 125, 2, 1, 13)),
    ("V", 17, (145, 121, 2, 1, 15)),
    ("V", 17, (145, 117, 2, 1, 17)),
]

ORDERING_DIFF = "printed (2; 1) where the construction gives (mu; gamma) = (1; 2)"


def invert_k(family: str, n: int, k: int, quantum: bool) -> int | None:
    """Recover i from the dimension, or None when no integer i fits."""
    if quantum:
        num = n + (2 if family == "IV" else 4) - k
        return num // 4 if num % 4 == 0 else None
    num = n + (2 if family == "II" else 1) - k
    return num // 2 if num % 2 == 0 else None


@dataclass
class TableRow:
    family: str
    q: int
    i: int | None
    literal: tuple[int, ...]
    produced: tuple[int, ...] | None
    status: str
    diffs: list[str] = field(default_factory=list)
    unexpected: list[str] = field(default_factory=list)

    def csv_fields(self) -> list:
        if self.produced is None:
            n, k, g, m, d = self.literal[0], self.literal[1], "", "", ""
        else:
            n, k, g, m, d = self.produced
        return [self.family, self.q, "" if self.i is None else self.i, n, k, g, m, d, self.status]

    def to_record(self) -> dict:
        return {
            "family": self.family, "q": self.q, "i": self.i,
            "literal": list(self.literal),
            "produced": None if self.produced is None else list(self.produced),
            "status": self.status, "diffs": self.diffs, "unexpected": self.unexpected,
        }


@dataclass
class TableReport:
    which: int
    rows: list[TableRow]
    omissions: list[tuple[str, int, int]]

    @property
    def unexpected(self) -> list[str]:
        return [f"{r.family} q={r.q} {r.literal}: {u}" for r in self.rows for u in r.unexpected]

    @property
    def ok(self) -> bool:
        return not self.unexpected

    def csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "q", "i", "n", "k", "gamma", "mu", "d_f", "status"])
        for r in self.rows:
            w.writerow(r.csv_fields())
        return buf.getvalue()

    def diff_text(self) -> str:
        lines = [f"table {self.which}: {len(self.rows)} rows"]
        for r in self.rows:
            tag = "ok" if not r.diffs and not r.unexpected else ("UNEXPECTED" if r.unexpected else "known")
            msg = "; ".join(r.unexpected + r.diffs)
            lines.append(f"  [{tag}] {r.family} q={r.q} i={r.i} {r.literal} {r.status}" + (f": {msg}" if msg else ""))
        if self.omissions:
            listed = ", ".join(f"{f}(q={q}, i={i})" for f, q, i in self.omissions)
            lines.append(f"  info: in-range instances not printed: {listed}")
        lines.append(f"unexpected diffs: {len(self.unexpected)}")
        return "\n".join(lines)

    def to_record(self) -> dict:
        return {"table": self.which, "rows": [r.to_record() for r in self.rows],
                "omissions": [list(o) for o in self.omissions], "unexpected": self.unexpected}


def _field_to_q(size: int) -> int:
    q = int(round(size**0.5))
    if q * q != size:
        raise ValueError(f"{size} is not a square")
    return q


def reproduce_table(which: int, budget: int = DEFAULT_BUDGET) -> TableReport:
    """Rebuild every printed row through the full pipeline and diff it."""
    if which not in (1, 2):
        raise ValueError(f"unknown table {which!r}; expected 1 or 2")
    quantum = which == 2
    source = TABLE2 if quantum else TABLE1
    rows: list[TableRow] = []
    seen: set[tuple[str, int, int]] = set()
    for family, fsize, lit in source:
        q = fsize if quantum else _field_to_q(fsize)
        n, k = lit[0], lit[1]
        i = invert_k(family, n, k, quantum)
        try:
            lo, hi = i_range(family, q)
        except ValueError as exc:
            rows.append(TableRow(family, q, i, lit, None, "rejected", [], [str(exc)]))
            continue
        if i is None or not lo <= i <= hi:
            rows.append(TableRow(family, q, i, lit, None, "outside-family-range", [],
                                 [f"i = {i} outside {lo} <= i <= {hi}; no member of the family has this k"]))
            continue
        seen.add((family, q, i))
        inst = build_instance(family, q, i, budget)
        row = TableRow(family, q, i, lit, None, inst.status)
        if not inst.certificate.passed:
            row.unexpected.append("certificate failed: " + ", ".join(c.name for c in inst.certificate.failures()))
        if quantum:
            qp = inst.quantum
            if qp is None:
                row.unexpected.append("no quantum parameters")
            else:
                row.produced = (qp.n, qp.k, qp.mu, qp.gamma, qp.d_f)
                if (qp.n, qp.k, qp.d_f) != (lit[0], lit[1], lit[4]):
                    row.unexpected.append(f"(n, k, d_f) = {(qp.n, qp.k, qp.d_f)}")
                if (qp.mu, qp.gamma) == (lit[2], lit[3]):
                    pass
                elif (qp.mu, qp.gamma) == (lit[3], lit[2]):
                    row.diffs.append(ORDERING_DIFF)
                else:
                    row.unexpected.append(f"(mu; gamma) = ({qp.mu}; {qp.gamma})")
        else:
            row.produced = tuple(inst.dual_params)
            if row.produced != lit:
                row.unexpected.append(f"produced {row.produced}")
        rows.append(row)

    omissions = []
    for family, q in sorted({(f, s if quantum else _field_to_q(s)) for f, s, _ in source},
                            key=lambda t: (FAMILIES.index(t[0]), t[1])):
        lo, hi = i_range(family, q)
        omissions += [(family, q, i) for i in range(lo, hi + 1) if (family, q, i) not in seen]
    return TableReport(which, rows, omissions)

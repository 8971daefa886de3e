from functools import lru_cache

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from negaconv import linalg
from negaconv.convolutional import (
    ConvolutionalCode,
    PolyMatrix,
    free_distance_bracket,
    free_distance_exact,
    hermitian_dual,
    mutually_orthogonal,
    polynomial_rank,
)
from negaconv.fields import BasisExpansion, get_field, get_tower
from negaconv.negacyclic import (
    DefiningSet,
    bch_defining_set,
    build_code,
    generator_matrix,
    min_weight_enumerate,
    odd_cosets,
    parity_check_matrix,
)
from negaconv.polyring import x_n_plus_one
from negaconv.quantum import quantum_singleton

CASES = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])

FIELDS = [(3, 1), (3, 2), (5, 2), (7, 2), (3, 4)]


def _lengths(q):
    q4 = q**4 - 1
    return [n for n in range(2, 60) if q4 % (2 * n) == 0 and n % q]


LENGTHS = {q: _lengths(q) for q in (3, 5, 7)}


@st.composite
def field_triples(draw):
    p, m = draw(st.sampled_from(FIELDS))
    F = get_field(p, m)
    el = st.integers(0, F.order - 1)
    return F, draw(el), draw(el), draw(el)


@CASES
@given(field_triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0 and F.mul(a, 1) == a and F.add(a, 0) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1


@CASES
@given(st.sampled_from([3, 5, 7]), st.data())
def test_expand_reconstruct_round_trip(q, data):
    T = get_tower(q)
    x = data.draw(st.integers(0, T.big.order - 1))
    b1 = data.draw(st.integers(1, T.big.order - 1))
    b2 = data.draw(st.integers(1, T.big.order - 1))
    try:
        basis = BasisExpansion(T, b1, b2)
    except ValueError:
        basis = T.default_basis()
    c1, c2 = basis.expand(x)
    assert int(basis.reconstruct(c1, c2)) == x


@st.composite
def random_defining_sets(draw):
    q = draw(st.sampled_from([3, 5, 7]))
    n = draw(st.sampled_from(LENGTHS[q]))
    cosets = odd_cosets(n, q)
    picks = draw(st.lists(st.booleans(), min_size=len(cosets), max_size=len(cosets)))
    residues = [z for c, keep in zip(cosets, picks) if keep for z in c.members]
    return DefiningSet(n, q, tuple(residues))


@lru_cache(maxsize=None)
def _code(n, q, residues):
    return build_code(n, q, DefiningSet(n, q, residues))


@CASES
@given(random_defining_sets())
def test_generator_divides_x_n_plus_one(Z):
    code = _code(Z.n, Z.q, Z.residues)
    assert code.g.degree == len(Z)
    assert (x_n_plus_one(code.field, Z.n) % code.g).is_zero()


@st.composite
def bch_params(draw):
    q = draw(st.sampled_from([3, 5, 7]))
    n = draw(st.sampled_from([m for m in LENGTHS[q] if m >= 3]))
    b = draw(st.integers(0, n - 1)) * 2 + 1
    delta = draw(st.integers(2, max(2, n // 2)))
    return n, q, b, delta


@lru_cache(maxsize=None)
def _bch(n, q, b, delta):
    Z = bch_defining_set(n, q, b, delta)
    code = _code(n, q, Z.residues)
    return code, parity_check_matrix(code, b, delta)


@CASES
@given(bch_params())
def test_generator_times_parity_is_zero(params):
    code, H = _bch(*params)
    if code.k == 0:
        return
    G = generator_matrix(code).entries
    assert not np.any(linalg.matmul(code.field, G, H.entries.T))


@lru_cache(maxsize=None)
def _enumerated_distance(n, q, residues):
    code = _code(n, q, residues)
    return min_weight_enumerate(code.field, generator_matrix(code).entries, budget=10**5)


@st.composite
def small_dimension_sets(draw):
    """Defining sets whose code has at most 10^5 words: Z is everything but
    a few cosets."""
    q = draw(st.sampled_from([3, 5, 7]))
    n = draw(st.sampled_from(LENGTHS[q]))
    cosets = odd_cosets(n, q)
    limit = {3: 5, 5: 3, 7: 2}[q]
    left_out = draw(st.lists(st.integers(0, len(cosets) - 1), min_size=1, max_size=limit, unique=True))
    k = sum(len(cosets[j]) for j in left_out)
    if k > limit:
        left_out = left_out[:1]
    residues = [z for j, c in enumerate(cosets) if j not in left_out for z in c.members]
    return DefiningSet(n, q, tuple(residues))


@CASES
@given(small_dimension_sets())
def test_bch_bound(Z):
    code = _code(Z.n, Z.q, Z.residues)
    assert 0 < code.k and code.field.order**code.k <= 10**5
    assert _enumerated_distance(Z.n, Z.q, Z.residues) >= code.designed_distance


@CASES
@given(bch_params(), st.data())
def test_parity_rank_independent_of_basis(params, data):
    code, H = _bch(*params)
    T = code.tower
    b1 = data.draw(st.integers(1, T.big.order - 1))
    b2 = data.draw(st.integers(1, T.big.order - 1))
    try:
        basis = BasisExpansion(T, b1, b2)
    except ValueError:
        return
    n, q, b, delta = params
    other = parity_check_matrix(code, b, delta, basis)
    assert other.rows == H.rows == len(code.Z)
    assert linalg.same_rowspace(code.field, H.entries, other.entries)


@st.composite
def small_polymatrices(draw):
    k = draw(st.integers(1, 2))
    n = draw(st.integers(k + 1, 4))
    mu = draw(st.integers(0, 1))
    el = st.integers(0, 8)
    mats = [np.array(draw(st.lists(el, min_size=k * n, max_size=k * n)), dtype=np.int64).reshape(k, n)
            for _ in range(mu + 1)]
    return mats


@CASES
@given(small_polymatrices())
def test_dual_basis_orthogonal_and_full_rank(mats):
    F = get_field(3, 2)
    G = PolyMatrix(F, mats)
    r = polynomial_rank(G)
    D = hermitian_dual(G)
    assert mutually_orthogonal(G, D.matrix)
    assert D.matrix.shape[0] == G.shape[1] - r
    if D.matrix.shape[0]:
        assert polynomial_rank(D.matrix) == G.shape[1] - r


@CASES
@given(small_polymatrices().filter(lambda m: m[0].any()))
def test_memory_zero_lift_matches_block_distance(mats):
    F = get_field(3, 2)
    G0 = mats[0]
    if linalg.rank(F, G0) < G0.shape[0]:
        return
    res = free_distance_exact(ConvolutionalCode(PolyMatrix(F, [G0])))
    assert res.value == min_weight_enumerate(F, G0)


@CASES
@given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 60))
def test_bracket_ordering(d0, dmu, d):
    lo, hi = free_distance_bracket(d0, dmu, d)
    assert lo <= hi == d


@CASES
@given(st.integers(2, 200), st.data())
def test_quantum_singleton_reduces_at_degree_zero(n, data):
    k = data.draw(st.integers(0, n - 2).filter(lambda k: (n - k) % 2 == 0))
    assert quantum_singleton(n, k, 0) == (n - k) // 2 + 1

import numpy as np
import pytest

from negaconv.convolutional import (
    ConvolutionalCode,
    PolyMatrix,
    check_rank_conditions,
    dual_basis_bounded,
    DegreeCapExceeded,
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
from negaconv.families import family_I, family_II
from negaconv.fields import get_field
from negaconv.negacyclic import min_weight_enumerate
from oracles import SlowField, brute_free_distance, minors_gcd

F9 = get_field(3, 2)


@pytest.fixture(scope="module")
def flagship():
    return family_II(3, 2, verify=False)


def test_split_single_part_is_memory_zero():
    H = np.array([[1, 2, 0], [0, 1, 1]])
    G = split_and_pad([H], F9)
    assert G.mu == 0 and np.array_equal(G.mats[0], H)


def test_split_pads_shorter_part():
    inst = family_I(5, 2, verify=False)
    G = inst.G
    assert G.shape == (3, 26)
    assert not G.mats[1][2].any() and G.mats[1][:2].any()


def test_split_rejects_column_mismatch():
    with pytest.raises(ValueError):
        split_and_pad([np.ones((1, 3)), np.ones((1, 4))], F9)


def test_rank_conditions_flagship(flagship):
    rep = check_rank_conditions([flagship.parity["C1"], flagship.parity["C0"]])
    assert (rep.kappa, rep.ranks, rep.passed) == (2, [2, 2], True)
    inst = family_I(5, 2, verify=False)
    rep = check_rank_conditions([inst.parity["C1"], inst.parity["C0"]])
    assert (rep.kappa, rep.ranks, rep.passed) == (3, [3, 2], True)
    rep = check_rank_conditions([inst.parity["C0"], inst.parity["C1"]])
    assert not rep.passed


def test_basic_trivial_and_common_factor():
    G = PolyMatrix(F9, [np.array([[1, 0]]), np.array([[0, 1]])])
    assert verify_basic(G).verified
    D_row = PolyMatrix(F9, [np.array([[0, 0], [1, 0]]), np.array([[1, 2], [0, 1]])])
    rep = verify_basic(D_row)
    # single minor D^2 - 2D = D(D + 1)
    assert rep.status == "not-basic" and rep.gcd == [0, 1, 1]


def test_basic_flagship_matches_symbolic_minors(flagship):
    slow = SlowField(3, F9.spec.modulus)
    assert minors_gcd(slow, [m.tolist() for m in flagship.G.mats]) == [1]
    assert verify_basic(flagship.G).verified
    assert is_reduced(flagship.G)


def test_generalized_singleton_values():
    assert generalized_singleton(26, 23, 2) == 6
    assert generalized_singleton(5, 3, 2) == 5
    assert generalized_singleton(9, 4, 0) == 6
    with pytest.raises(ValueError):
        generalized_singleton(5, 5, 1)


def test_self_orthogonality():
    assert shifted_hermitian_orthogonal(PolyMatrix(F9, [np.zeros((2, 3), dtype=np.int64)]))
    assert shifted_hermitian_orthogonal(family_I(5, 2, verify=False).G)
    dense = PolyMatrix(F9, [np.array([[1, 2, 3]]), np.array([[4, 5, 6]])])
    assert not shifted_hermitian_orthogonal(dense)


def test_dual_memory_zero_is_nullspace():
    H = np.array([[1, 0, 2], [0, 1, 1]])
    D = dual_basis_bounded(PolyMatrix(F9, [H]), 0)
    assert D.matrix.shape == (1, 3) and D.matrix.mu == 0
    assert mutually_orthogonal(PolyMatrix(F9, [H]), D.matrix)


def test_dual_flagship(flagship):
    D = hermitian_dual(flagship.G)
    assert D.cap == 1 and D.matrix.shape == (3, 5)
    assert (D.matrix_gamma, D.matrix.mu) == (2, 1)
    assert mutually_orthogonal(flagship.G, D.matrix)
    assert polynomial_rank(D.matrix) == 3


def test_dual_cap_too_small_raises(flagship):
    with pytest.raises(DegreeCapExceeded):
        dual_basis_bounded(flagship.G, 0)


def test_free_distance_flagship(flagship):
    D = hermitian_dual(flagship.G).matrix
    res = free_distance_exact(ConvolutionalCode(D))
    assert (res.value, res.states, res.method) == (5, 81, "state-search")
    # brute force over all inputs of degree <= 1 reaches the same weight
    assert brute_free_distance(F9, D.mats, 1) == 5
    assert not in_code(res.codeword, D)  # the minimum word is not in V
    V = free_distance_exact(ConvolutionalCode(flagship.G))
    assert V.value == 8 == brute_free_distance(F9, flagship.G.mats, 1)
    assert V.value >= 2  # dual of the [5,1,5] code has distance 2


def test_free_distance_memory_zero_is_block_distance():
    G = np.array([[1, 1, 0, 2], [0, 1, 1, 1]])
    res = free_distance_exact(ConvolutionalCode(PolyMatrix(F9, [G])))
    assert res.value == min_weight_enumerate(F9, G)


def test_free_distance_budget():
    from negaconv.negacyclic import BudgetExceeded

    G = family_I(5, 2, verify=False).G
    with pytest.raises(BudgetExceeded):
        free_distance_exact(ConvolutionalCode(G), budget=100)


def test_bracket():
    assert free_distance_bracket(2, 4, 6) == (6, 6)
    assert free_distance_bracket(2, 3, 5) == (5, 5)
    assert free_distance_bracket(1, 3, 5) == (4, 5)


def test_encode_matches_polynomial_product(flagship):
    code = ConvolutionalCode(flagship.G)
    out = code.encode([[1, 0], [0, 2]])
    assert out.shape == (3, 5)
    assert in_code(out.tolist(), hermitian_dual(flagship.G).matrix)


def test_polymatrix_serialization(flagship):
    rec = flagship.G.to_record()
    assert rec["shape"] == [2, 5] and rec["mu"] == 1 and len(rec["mats"]) == 2

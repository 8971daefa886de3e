import pytest

from negaconv.convolutional import ConvolutionalCode, FreeDistanceResult
from negaconv.families import family_I, family_IV
from negaconv.quantum import QuantumConvParams, from_selforthogonal, quantum_mds_check, quantum_singleton


def test_quantum_singleton_values():
    assert quantum_singleton(26, 20, 2) == 6
    assert quantum_singleton(25, 21, 2) == 5
    assert quantum_singleton(10, 4, 0) == 4
    with pytest.raises(ValueError):
        quantum_singleton(10, 5, 1)
    with pytest.raises(ValueError):
        quantum_singleton(4, 4, 1)


def test_from_selforthogonal_q5():
    inst = family_I(5, 2, verify=False)
    V = ConvolutionalCode(inst.G)
    dual = FreeDistanceResult(6, 6, 6, "bracket")
    qp = from_selforthogonal(V, True, dual, stabilizer_lower_bound=22)
    assert (qp.n, qp.k, qp.mu, qp.gamma, qp.d_f) == (26, 20, 1, 2, 6)
    assert qp.tuple_text() == "[(26,20,1;2,6)]_5"
    assert qp.d_f_status == "exact" and qp.purity_note == "verified" and qp.mds


def test_without_separation_only_lower_bound():
    inst = family_I(5, 2, verify=False)
    qp = from_selforthogonal(ConvolutionalCode(inst.G), True, FreeDistanceResult(6, 6, 6, "bracket"))
    assert qp.d_f_status == "lower-bound" and qp.purity_note == "assumed"
    # a lower bound meeting the bound is still MDS
    assert qp.mds


def test_not_self_orthogonal_rejected():
    inst = family_I(5, 2, verify=False)
    with pytest.raises(ValueError):
        from_selforthogonal(ConvolutionalCode(inst.G), False, FreeDistanceResult(6, 6, 6, "bracket"))


def test_mds_check():
    assert quantum_mds_check(QuantumConvParams(11, 61, 57, 1, 2, 5, "exact", "verified"))
    assert not quantum_mds_check(QuantumConvParams(5, 26, 20, 1, 2, 5, "lower-bound", "assumed"))


def test_record_keys():
    qp = family_IV(5, 2).quantum
    assert set(qp.to_record()) == {"q", "n", "k", "mu", "gamma", "d_f", "d_f_status", "mds", "purity_note"}


def test_odd_difference_rejected():
    with pytest.raises(ValueError):
        QuantumConvParams(5, 26, 21, 1, 2, 6, "exact", "verified")

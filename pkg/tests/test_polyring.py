import pytest

from negaconv.fields import get_field, get_tower
from negaconv.negacyclic import bch_defining_set, build_code, coset_of, default_beta
from negaconv.polyring import DensePolynomial, minimal_polynomial, poly_arith, poly_gcd, x_n_plus_one


@pytest.fixture
def F9():
    return get_field(3, 2)


def test_degree_and_trim(F9):
    assert DensePolynomial(F9, (1, 2, 0, 0)).degree == 1
    assert DensePolynomial(F9, ()).degree == -1


def test_divmod_identity(F9):
    a = DensePolynomial(F9, (3, 1, 4, 1, 5))
    b = DensePolynomial(F9, (2, 7, 1))
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


def test_division_by_zero(F9):
    with pytest.raises(ZeroDivisionError):
        divmod(DensePolynomial(F9, (1,)), DensePolynomial(F9, ()))


def test_gcd_is_monic_common_factor(F9):
    f = DensePolynomial(F9, (1, 1))
    a = f * DensePolynomial(F9, (2, 0, 1))
    b = f * DensePolynomial(F9, (5, 1))
    g = poly_gcd(a, b)
    assert g.lead == 1 and (a % g).is_zero() and (b % g).is_zero()
    assert g.degree >= 1


def test_poly_arith_rejects_unknown(F9):
    with pytest.raises(ValueError):
        poly_arith(DensePolynomial(F9, (1,)), DensePolynomial(F9, (1,)), "pow")


def test_mixed_fields_rejected(F9):
    with pytest.raises(ValueError):
        DensePolynomial(F9, (1,)) + DensePolynomial(get_field(5, 2), (1,))


def test_minimal_polynomial_of_fixed_coset():
    # beta^13 = -beta^0 * ... lies in GF(25) when n = 26: its coset is {13}
    T = get_tower(5)
    beta = default_beta(26, 5)
    assert coset_of(13, 26, 5).members == (13,)
    mp = minimal_polynomial(int(T.big.pow(beta, 13)), T.embedding, 5)
    assert mp.degree == 1


def test_generator_divides_x_n_plus_one():
    code = build_code(26, 5, bch_defining_set(26, 5, 13, 4))
    assert code.g.degree == 5
    assert (x_n_plus_one(code.field, 26) % code.g).is_zero()
    roots = code.roots()
    big = code.tower.big
    emb = code.tower.embedding
    g_big = DensePolynomial(big, emb.embed(list(code.g.coeffs)))
    assert all(int(g_big(r)) == 0 for r in roots)

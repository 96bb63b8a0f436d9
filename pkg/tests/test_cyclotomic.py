from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from maxcyclic.cyclotomic import (
    CyclotomicField,
    PrimeField,
    check_ell,
    cyclotomic_field,
    laurent_qbinom,
    laurent_qint,
    qbinom,
    qint,
    specialize_v1,
)

v = sympy.Symbol("v")


def sym_reduce(expr, ell):
    """Oracle: clear v^-k with v^ell = 1, then take the remainder mod Phi_ell in Q[v]."""
    expr = sympy.expand(expr * v ** (ell * 40))
    poly = sympy.Poly(expr, v)
    folded = [0] * ell
    for (e,), c in poly.terms():
        folded[e % ell] += c
    rem = sympy.rem(sympy.Poly(list(reversed(folded)), v), sympy.Poly(sympy.cyclotomic_poly(ell, v), v))
    coeffs = list(reversed(rem.all_coeffs()))
    d = sympy.totient(ell)
    coeffs += [0] * (d - len(coeffs))
    return tuple(Fraction(str(c)) for c in coeffs)


def sym_qint(r):
    return sum((v ** (r - 1 - 2 * k) for k in range(r)), sympy.Integer(0)) if r >= 0 else -sym_qint(-r)


def sym_qbinom(a, r):
    num = sympy.Integer(1)
    for s in range(r):
        num *= sym_qint(a - s)
    den = sympy.Integer(1)
    for s in range(1, r + 1):
        den *= sym_qint(s)
    return sympy.cancel(num / den)


def elems(ell, lo=-6, hi=6):
    d = CyclotomicField(ell).degree
    return st.lists(st.integers(lo, hi), min_size=d, max_size=d).map(cyclotomic_field(ell))


def test_zeta_products():
    K = cyclotomic_field(3)
    z = K.zeta
    assert z * z * z == 1
    assert z * (z * z) == K.one
    assert z + z * z == -1


def test_invert_one():
    for ell in (3, 5, 7, 9, 15):
        K = cyclotomic_field(ell)
        assert K.one.inv() == K.one


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        cyclotomic_field(5).zero.inv()


def test_degree_is_totient():
    for ell in (3, 5, 7, 9, 15, 21):
        assert cyclotomic_field(ell).degree == sympy.totient(ell)


@pytest.mark.parametrize("ell", [4, 2, 1, 0, -3])
def test_bad_ell(ell):
    with pytest.raises(ValueError):
        check_ell(ell)
    with pytest.raises(ValueError):
        CyclotomicField(ell)


def test_qint_examples():
    for ell in (3, 5, 7):
        assert qint(0, ell) == 0
        assert qint(1, ell) == 1
        assert qint(ell, ell) == 0
    assert qint(2, 3) == -1


def test_qbinom_examples():
    for ell in (3, 5):
        for a in range(-4, 8):
            assert qbinom(a, 0, ell) == 1
    assert qbinom(1, 1, 3) == 1
    assert qbinom(2, 1, 3) == -1
    assert qbinom(2, 1, 3) == qint(2, 3)


def test_qbinom_negative_r():
    with pytest.raises(ValueError):
        qbinom(3, -1, 5)


@pytest.mark.parametrize("ell", [3, 5, 7, 9])
def test_qint_against_sympy(ell):
    K = cyclotomic_field(ell)
    for r in range(-3 * ell, 3 * ell + 1):
        assert K.qint(r).coeffs == sym_reduce(sym_qint(r), ell), r


@pytest.mark.parametrize("ell", [3, 5])
def test_qbinom_against_sympy(ell):
    for a in range(-3 * ell, 3 * ell + 1, 2):
        for r in range(0, 5):
            assert qbinom(a, r, ell).coeffs == sym_reduce(sym_qbinom(a, r), ell), (a, r)


def test_qint_times_denominator():
    for ell in (3, 5, 7, 9):
        K = cyclotomic_field(ell)
        z = K.zeta
        for r in range(-2 * ell, 2 * ell):
            assert K.qint(r) * (z - z.inv()) == K.power(r) - K.power(-r)


def test_laurent_qint_is_palindromic():
    for r in range(-6, 7):
        p = laurent_qint(r)
        assert p.terms == {-e: c for e, c in p.terms.items()}


def test_laurent_q_pascal():
    # [a+1, r] = v^-r [a, r] + v^(a+1-r) [a, r-1]
    from maxcyclic.cyclotomic import LaurentPoly
    for a in range(-5, 8):
        for r in range(1, 6):
            lhs = laurent_qbinom(a + 1, r)
            rhs = LaurentPoly.monomial(-r) * laurent_qbinom(a, r) + LaurentPoly.monomial(a + 1 - r) * laurent_qbinom(a, r - 1)
            assert lhs == rhs


@given(st.sampled_from([3, 5, 7]), st.integers(-20, 20), st.integers(1, 6))
def test_q_pascal_in_field(ell, a, r):
    K = cyclotomic_field(ell)
    assert qbinom(a + 1, r, ell) == K.power(-r) * qbinom(a, r, ell) + K.power(a + 1 - r) * qbinom(a, r - 1, ell)


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_commutator_identity(m, lam):
    # [m-1][-lam-m] - [-lam-m-1][m] = [lam+2m]
    for ell in (3, 5):
        K = cyclotomic_field(ell)
        q = K.qint
        assert q(m - 1) * q(-lam - m) - q(-lam - m - 1) * q(m) == q(lam + 2 * m)


@settings(max_examples=200)
@given(st.data())
def test_inverse_pairs(data):
    ell = data.draw(st.sampled_from([3, 5, 7, 9, 15]))
    x = data.draw(elems(ell))
    if not x:
        return
    assert x * x.inv() == 1
    assert x.inv().inv() == x


@given(st.data())
def test_field_axioms(data):
    ell = data.draw(st.sampled_from([3, 5, 9]))
    x, y, z = (data.draw(elems(ell)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


def test_fraction_coefficients():
    K = cyclotomic_field(5)
    half = K(Fraction(1, 2))
    assert half * 2 == 1
    assert not half.is_integral()
    assert half.to_json()[0] == "1/2"


@given(st.data())
def test_specialize_is_ring_hom(data):
    p = data.draw(st.sampled_from([3, 5, 7]))
    x, y = data.draw(elems(p)), data.draw(elems(p))
    s = lambda e: specialize_v1(e, p)
    assert s(x + y) == s(x) + s(y)
    assert s(x * y) == s(x) * s(y)


def test_specialize_examples():
    for p in (3, 5, 7):
        K = cyclotomic_field(p)
        assert specialize_v1(K.one, p) == 1
        for r in range(0, 3 * p):
            assert specialize_v1(K.qint(r), p).to_json() == r % p
    assert specialize_v1(qint(2, 3), 3).to_json() == 2


def test_specialize_errors():
    with pytest.raises(ValueError):
        specialize_v1(cyclotomic_field(9).one, 9)
    with pytest.raises(ValueError):
        specialize_v1(cyclotomic_field(5).one, 3)
    with pytest.raises(ValueError):
        specialize_v1(cyclotomic_field(5)(Fraction(1, 3)), 5)


def test_prime_field():
    F = PrimeField(7)
    assert F(3) * F(5) == 1
    assert F(3).inv() == 5
    assert F(0) == F.zero
    assert -F(1) == 6
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ZeroDivisionError):
        F.zero.inv()

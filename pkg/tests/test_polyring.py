import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracedual import polyring
from tracedual.gf import make_field
from tracedual.polyring import (
    BothZero,
    DegreeExceedsLength,
    FactorizationMismatch,
    Poly,
    gcd,
    lcm,
    validate_factorization,
    xgcd,
    xn_minus_1,
)

from conftest import P

FIELDS = [make_field(3), make_field(5), make_field(7), make_field(3, 2, (1, 0, 1))]


@st.composite
def polys(draw, field=None, maxdeg=24):
    F = field if field is not None else draw(st.sampled_from(FIELDS))
    coeffs = draw(st.lists(st.integers(0, F.q - 1), max_size=maxdeg + 1))
    return Poly.from_elements(F, coeffs)


@st.composite
def poly_pairs(draw, maxdeg=24):
    F = draw(st.sampled_from(FIELDS))
    return draw(polys(F, maxdeg)), draw(polys(F, maxdeg))


def _python_only(monkeypatch):
    monkeypatch.setattr(polyring, "_KERNEL_WORK", 10 ** 9)


def test_basic_construction(F3):
    f = P(F3, 1, 2, 0, 1, 0, 0)
    assert f.coeffs == (1, 2, 0, 1)
    assert f.degree == 3
    assert P(F3, 4, -1) == P(F3, 1, 2)
    assert Poly.zero(F3).degree is None
    assert str(P(F3, 2, 0, 1)) == "X^2 + 2"
    assert f(1) == (1 + 2 + 1) % 3


def test_reciprocal_hat_flip(F5):
    f = P(F5, 0, 3, 0, 1)        # 3X + X^3
    assert f.reciprocal() == P(F5, 1, 0, 3)
    assert f.flip() == P(F5, 0, 2, 0, 4)
    n = 6
    # hat f = f(X^(n-1)) mod X^n - 1
    direct = Poly.zero(F5)
    for i, c in enumerate(f.coeffs):
        direct = direct + Poly.monomial(F5, (i * (n - 1)) % n, c)
    assert f.hat(n).mod_xn1(n) == direct.mod_xn1(n)
    assert f.hat(n) == f.reciprocal().shift(n - f.degree)
    with pytest.raises(DegreeExceedsLength):
        P(F5, *([1] * 9)).hat(6)


def test_xgcd_and_gcd(F7):
    a = P(F7, 1, 1) * P(F7, 2, 0, 1) * P(F7, 3, 1)
    b = P(F7, 1, 1) * P(F7, 3, 1) * P(F7, 5, 5, 1)
    h, u, v = xgcd(a, b)
    assert h == (P(F7, 1, 1) * P(F7, 3, 1)).monic()
    assert u * a + v * b == h
    assert gcd(a, b) == h
    assert gcd(a, Poly.zero(F7)) == a.monic()
    assert lcm(a, b) == (a * b).exact_div(h).monic()
    with pytest.raises(BothZero):
        xgcd(Poly.zero(F7), Poly.zero(F7))


def test_validate_factorization(F3):
    N = xn_minus_1(F3, 4)
    one = Poly.one(F3)
    validate_factorization(P(F3, 1, 1), P(F3, 2, 1), P(F3, 1, 0, 1), one, 4)
    with pytest.raises(FactorizationMismatch) as err:
        validate_factorization(P(F3, 1, 1), one, one, one, 4)
    assert err.value.product == P(F3, 1, 1)
    assert N == P(F3, 2, 0, 0, 0, 1)


@settings(max_examples=150, deadline=None)
@given(poly_pairs())
def test_ring_axioms(pair):
    a, b = pair
    assert a + b == b + a
    assert a * b == b * a
    assert (a - b) + b == a
    if b:
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree is None or r.degree < b.degree


@settings(max_examples=150, deadline=None)
@given(poly_pairs(maxdeg=40))
def test_kernel_matches_python(pair):
    a, b = pair
    prod, dm = a * b, (divmod(a, b) if b else None)
    with pytest.MonkeyPatch.context() as mp:
        _python_only(mp)
        assert a * b == prod
        if b:
            assert divmod(a, b) == dm


@settings(max_examples=150, deadline=None)
@given(poly_pairs())
def test_xgcd_bezout(pair):
    a, b = pair
    if not a and not b:
        return
    h, u, v = xgcd(a, b)
    assert u * a + v * b == h
    assert h.lc == 1
    if a:
        assert not (a % h)
    if b:
        assert not (b % h)


@settings(max_examples=100, deadline=None)
@given(polys(), st.integers(1, 30))
def test_mod_xn1_is_remainder(f, n):
    assert f.mod_xn1(n) == f % xn_minus_1(f.field, n)

import pytest

from tracedual.factor import (
    count_factorizations,
    factor_by_trial_division,
    factor_xn_minus_1,
    factorizations,
    monic_divisors,
)
from tracedual.gf import make_field
from tracedual.polyring import Poly, xn_minus_1

CASES = [(make_field(3), n) for n in range(1, 12)] + \
        [(make_field(5), n) for n in range(1, 12)] + \
        [(make_field(7), n) for n in range(1, 7)] + \
        [(make_field(3, 2, (1, 0, 1)), n) for n in range(1, 7)]


@pytest.mark.parametrize("F,n", CASES, ids=lambda x: str(x))
def test_matches_trial_division(F, n):
    assert factor_xn_minus_1(F, n) == factor_by_trial_division(F, n)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_product_recovers_xn_minus_1(q):
    F = make_field(q)
    for n in range(1, 65):
        prod = Poly.one(F)
        for f, m in factor_xn_minus_1(F, n):
            assert f.lc == 1 and f.degree >= 1
            prod = prod * f ** m
        assert prod == xn_minus_1(F, n)


def test_repeated_factors_when_p_divides_n():
    F = make_field(3)
    # X^6 - 1 = (X - 1)^3 (X + 1)^3 over F_3
    assert factor_xn_minus_1(F, 6) == ((Poly(F, [1, 1]), 3), (Poly(F, [2, 1]), 3))


def test_factorizations_are_ordered_and_complete():
    F = make_field(5)
    for n in (4, 5, 8, 10):
        seen = list(factorizations(F, n))
        assert len(seen) == len(set(seen)) == count_factorizations(F, n)
        N = xn_minus_1(F, n)
        for w, l, f, g in seen:
            assert w * l * f * g == N
        assert seen == list(factorizations(F, n))


def test_divisor_count():
    F = make_field(3)
    # X^4 - 1 = (X - 1)(X + 1)(X^2 + 1)
    assert len(monic_divisors(F, 4)) == 8


def test_sweep_size():
    total = sum(count_factorizations(make_field(q), n) for q in (3, 5) for n in range(1, 13))
    total += sum(count_factorizations(make_field(q), n) for q in (3, 5) for n in range(2, 13, 2))
    assert total == 166_672

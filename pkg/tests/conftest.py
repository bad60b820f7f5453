import random
from pathlib import Path

import pytest

from tracedual import CodeSpec, Poly, make_field
from tracedual.skewring import Variant

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "tracedual" / "fixtures"


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


@pytest.fixture(scope="session")
def F5():
    return make_field(5)


@pytest.fixture(scope="session")
def F7():
    return make_field(7)


@pytest.fixture(scope="session")
def F9():
    # F_9 = F_3[t]/(t^2 + 1)
    return make_field(3, 2, (1, 0, 1))


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def P(F, *coeffs):
    return Poly(F, coeffs)


def rand_poly(F, rng: random.Random, maxdeg: int, allow_zero=True) -> Poly:
    while True:
        d = rng.randint(0, maxdeg)
        p = Poly.from_elements(F, [rng.randrange(F.q) for _ in range(d + 1)])
        if p or allow_zero:
            return p


def example_n28(F3):
    """Cyclic n = 28 example, w-multiplied shape with q = X."""
    w = P(F3, 2, 1)
    f = P(F3, 1, 0, 1)
    g = P(F3, 1, 2, 0, 2, 0, 2, 1)
    N = P(F3, *([2] + [0] * 27 + [1]))
    l = N.exact_div(w * f * g)
    return CodeSpec(Variant.CYCLIC, 28, w, l, f, g, P(F3, 0, 1), "w-multiplied")


def example_n10(F3):
    """Skew n = 10 example with q = X + 1."""
    return CodeSpec(Variant.SKEW, 10, P(F3, 1, 1), P(F3, 1, 1, 1, 1, 1),
                    P(F3, 1, -1, 1, -1, 1), P(F3, -1, 1), P(F3, 1, 1))

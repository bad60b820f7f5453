import itertools

import pytest

from tracedual.gf import (
    EvenCharacteristic,
    FieldError,
    Fq2,
    NonPrimeP,
    ReducibleModulus,
    frobenius,
    make_field,
    trace,
)


def test_rejects_even_and_composite():
    with pytest.raises(EvenCharacteristic):
        make_field(2)
    with pytest.raises(NonPrimeP):
        make_field(9)
    with pytest.raises(FieldError):
        make_field(3, 2)  # modulus missing
    with pytest.raises(ReducibleModulus):
        make_field(3, 2, (2, 0, 1))  # t^2 - 1


@pytest.mark.parametrize("q,delta", [(3, 2), (5, 2), (7, 3), (11, 2), (13, 2)])
def test_delta_is_first_nonsquare(q, delta):
    F = make_field(q)
    assert F.delta == delta
    assert not F.is_square(F.delta)
    assert all(F.is_square(x) for x in range(1, delta))


def test_fields_are_cached_and_hashable(F3):
    assert make_field(3) is F3
    assert {F3: 1}[make_field(3)] == 1


def test_extension_field_axioms(F9):
    q = F9.q
    assert q == 9
    elems = list(F9.elements())
    for a in elems:
        assert F9.add(a, F9.neg(a)) == 0
        if a:
            assert F9.mul(a, F9.inv(a)) == 1
            assert F9.pow(a, q - 1) == 1
    for a, b, c in itertools.product(elems[:5], elems[3:8], elems[::2]):
        assert F9.mul(a, F9.add(b, c)) == F9.add(F9.mul(a, b), F9.mul(a, c))
    # delta of F_9 is a nonsquare
    assert not F9.is_square(F9.delta)


def test_digit_encoding_round_trip(F9):
    for x in F9.elements():
        assert F9(F9.digits(x)) == x
    # t^2 = -1 in F_3[t]/(t^2 + 1)
    t = F9([0, 1])
    assert F9.mul(t, t) == F9(-1)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_gamma_trace_and_frobenius(q):
    F = make_field(q)
    g = F.gamma
    assert trace(g) == 0
    assert g * g == Fq2(F, F.delta, 0)
    # gamma^q = -gamma, gamma^(q+1) = -gamma^2
    assert g ** q == -g
    assert (g ** (q + 1)).a == F.neg(F.delta)
    for x in F.ext_elements():
        assert frobenius(x) == x ** q
        assert frobenius(frobenius(x)) == x
        assert trace(x) == F.add(x.a, x.a)
        assert (x + frobenius(x)) == Fq2(F, trace(x), 0)
        assert frobenius(x) * x == Fq2(F, x.norm(), 0)
        if not x.is_zero():
            assert x * x.inverse() == Fq2(F, 1, 0)


def test_trace_kernel_is_gamma_fq(F5):
    kernel = [x for x in F5.ext_elements() if trace(x) == 0]
    assert kernel == [Fq2(F5, 0, b) for b in range(5)]


def test_describe_q(F3, F9):
    assert F3.describe_q() == "3"
    assert F9.describe_q() == "3^2"

import random
import warnings

import pytest

from tracedual.codespace import CodeSpec, QShape, SpecViolation, build_code
from tracedual.dual import (
    NotADivisor,
    dual_te_cyclic_general,
    dual_te_cyclic_special,
    dual_te_cyclic_wq,
    dual_te_skew_general,
    dual_te_skew_special,
    dual_th_cyclic_general,
    dual_th_skew_general,
    euclidean_dual_linear,
    trace_dual,
)
from tracedual.factor import factorizations
from tracedual.oracle import brute_dual
from tracedual.polyring import Poly, xn_minus_1
from tracedual.skewring import Form, Variant

from conftest import P, example_n10, example_n28, rand_poly

GENERAL = {
    (Variant.CYCLIC, Form.TE): dual_te_cyclic_general,
    (Variant.CYCLIC, Form.TH): dual_th_cyclic_general,
    (Variant.SKEW, Form.TE): dual_te_skew_general,
    (Variant.SKEW, Form.TH): dual_th_skew_general,
}


def bezout_inputs(spec):
    """(A, B) of the Bezout equation c' A + s d' B = h."""
    n = spec.n
    q = spec.as_plain().qpoly
    if spec.variant is Variant.CYCLIC:
        return spec.w.hat(n).shift(n - spec.f.degree), spec.l.reciprocal() * q.hat(n)
    ls, fs = spec.l.reciprocal(), spec.f.reciprocal()
    return spec.w.hat(n) * spec.f.hat(n), ls.flip() * fs.flip() * q.hat(n).flip()


def test_euclidean_dual_of_linear_code(F3):
    # <X - 1> in length 4: dual generated by ((X^4 - 1)/(X - 1))*
    assert euclidean_dual_linear(P(F3, 2, 1), 4) == P(F3, 1, 1, 1, 1)
    with pytest.raises(NotADivisor):
        euclidean_dual_linear(P(F3, 1, 0, 0, 1), 4)


def test_examples_reproduce(F3):
    rep = trace_dual(example_n28(F3))
    assert rep.construction == "te_cyclic_wq"
    assert rep.h == Poly.monomial(F3, 26)
    assert rep.verified and (rep.dim_code, rep.dim_dual) == (46, 10)
    rep = dual_te_skew_general(example_n10(F3))
    assert rep.h == Poly.monomial(F3, 9) * P(F3, 1, 2, 1, 2, 1)
    assert rep.k == P(F3, 1, 2, 1, 2, 1)
    assert rep.verified


@pytest.mark.parametrize("variant", [Variant.CYCLIC, Variant.SKEW])
@pytest.mark.parametrize("form", [Form.TE, Form.TH])
def test_general_constructions_small_sweep(F5, variant, form):
    rng = random.Random(9)
    fn = GENERAL[variant, form]
    for n in (2, 4, 6):
        for w, l, f, g in factorizations(F5, n):
            spec = CodeSpec(variant, n, w, l, f, g, rand_poly(F5, rng, n - 1))
            rep = fn(spec)
            assert rep.verified, (spec, rep.verification.summary())
            assert rep.construction == f"{form.value}_{variant.value}_general"


@pytest.mark.parametrize("variant", [Variant.CYCLIC, Variant.SKEW])
@pytest.mark.parametrize("form", [Form.TE, Form.TH])
def test_any_bezout_pair_gives_the_same_module(F3, variant, form):
    """(c' + s t B/h, d' - t A/h) solves the same equation and must give the same dual."""
    rng = random.Random(4)
    fn = GENERAL[variant, form]
    s = form.gamma_norm(F3)
    checked = 0
    for w, l, f, g in factorizations(F3, 6):
        spec = CodeSpec(variant, 6, w, l, f, g, rand_poly(F3, rng, 5))
        base = fn(spec, verify=False)
        A, B = bezout_inputs(spec)
        h = base.h
        for _ in range(3):
            t = rand_poly(F3, rng, 4, allow_zero=False)
            cp = base.cprime + (t * B.exact_div(h)).scale(s)
            dp = base.dprime - t * A.exact_div(h)
            alt = fn(spec, bezout=(cp, dp))
            assert alt.verified
            assert alt.dual == base.dual
            checked += 1
    assert checked > 50


def test_bad_bezout_pair_is_rejected(F3):
    spec = example_n10(F3)
    rep = dual_te_skew_general(spec, verify=False)
    with pytest.raises(SpecViolation):
        dual_te_skew_general(spec, bezout=(rep.cprime + Poly.one(F3), rep.dprime))


def test_extension_field(F9):
    rng = random.Random(8)
    for variant in Variant:
        for w, l, f, g in factorizations(F9, 4):
            q = Poly.from_elements(F9, [rng.randrange(9) for _ in range(4)])
            spec = CodeSpec(variant, 4, w, l, f, g, q)
            for form in Form:
                assert GENERAL[variant, form](spec).verified


@pytest.mark.parametrize("variant", [Variant.CYCLIC, Variant.SKEW])
def test_qzero_collapses_to_special(F5, variant):
    special = dual_te_cyclic_special if variant is Variant.CYCLIC else dual_te_skew_special
    for n in (4, 6, 10):
        for w, l, f, g in factorizations(F5, n):
            spec = CodeSpec(variant, n, w, l, f, g, Poly.zero(F5))
            sp = special(spec)
            assert sp.verified
            assert GENERAL[variant, Form.TE](spec, verify=False).dual == sp.dual
            assert sp.gen1.c == (l.reciprocal() * g.reciprocal()).mod_xn1(n)


def test_wq_needs_its_shape_and_warns_when_p_divides_n(F3):
    spec = example_n28(F3)
    with pytest.raises(SpecViolation):
        dual_te_cyclic_wq(spec.as_plain())
    one = Poly.one(F3)
    n = 6
    wspec = CodeSpec(Variant.CYCLIC, n, one, one, one, xn_minus_1(F3, n), P(F3, 1), QShape.W_MULTIPLIED)
    with pytest.warns(UserWarning):
        dual_te_cyclic_wq(wspec)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        dual_te_cyclic_wq(CodeSpec(Variant.CYCLIC, 4, one, one, one, xn_minus_1(F3, 4), P(F3, 1),
                                   QShape.W_MULTIPLIED))


def test_wrong_ring_or_nonzero_q_is_rejected(F3):
    spec = example_n10(F3)
    with pytest.raises(SpecViolation):
        dual_te_cyclic_general(spec)
    with pytest.raises(SpecViolation):
        dual_te_skew_special(spec)


def test_skip_verification(F3):
    rep = trace_dual(example_n10(F3), "th", verify=False)
    assert rep.verified is None
    assert rep.dual == brute_dual(build_code(example_n10(F3)), Form.TH)

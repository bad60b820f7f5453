import itertools
import random

import numpy as np
import pytest

from tracedual.codespace import Code, CodeSpec, build_code
from tracedual.factor import factorizations
from tracedual.oracle import (
    TooLarge,
    brute_dual,
    enumerate_codewords,
    gram_matrix,
    pairing_matrix,
    verify_dual,
)
from tracedual.polyring import Poly
from tracedual.skewring import Form, RnElem, Variant, trace_form

from conftest import rand_poly


@pytest.mark.parametrize("q", [3, 5, 7])
def test_gram_is_diagonal(q):
    from tracedual.gf import make_field
    F = make_field(q)
    n = 3
    two, d = 2 % q, F.delta
    te = gram_matrix(F, n, Form.TE)
    th = gram_matrix(F, n, Form.TH)
    assert np.array_equal(te, np.diag([two] * n + [2 * d % q] * n))
    assert np.array_equal(th, np.diag([two] * n + [-2 * d % q] * n))


def test_pairing_matches_coefficientwise_forms(F5):
    rng = random.Random(1)
    n = 4
    elems = [RnElem(n, rand_poly(F5, rng, n - 1), rand_poly(F5, rng, n - 1)) for _ in range(6)]
    vecs = np.array([u.to_vector() for u in elems])
    for form in Form:
        P = pairing_matrix(vecs, vecs, F5, n, form)
        for (i, u), (j, v) in itertools.product(enumerate(elems), repeat=2):
            assert P[i, j] == trace_form(u, v, form)


@pytest.mark.parametrize("variant", [Variant.CYCLIC, Variant.SKEW])
@pytest.mark.parametrize("form", [Form.TE, Form.TH])
def test_dual_is_an_involution_and_a_module(F3, variant, form):
    rng = random.Random(2)
    n = 6
    for w, l, f, g in factorizations(F3, n):
        spec = CodeSpec(variant, n, w, l, f, g, rand_poly(F3, rng, n - 1))
        code = build_code(spec)
        dual = brute_dual(code, form)
        assert code.dim + dual.dim == 2 * n
        assert dual.is_module()
        assert brute_dual(dual, form) == code


def test_against_codeword_enumeration(F3):
    n = 4
    spec = CodeSpec(Variant.SKEW, n, Poly(F3, [1, 1]), Poly(F3, [2, 1]), Poly.one(F3),
                    Poly(F3, [1, 0, 1]), Poly(F3, [0, 1]))
    code = build_code(spec)
    for form in Form:
        dual = brute_dual(code, form)
        words = list(enumerate_codewords(code))
        assert len(words) == 3 ** code.dim
        # a vector is in the dual iff it pairs to zero with every codeword
        for vec in itertools.product(range(3), repeat=2 * n):
            u = RnElem.from_vector(F3, n, vec)
            orth = all(trace_form(u, c, form) == 0 for c in words)
            assert orth == dual.contains(u)


def test_enumeration_cap(F5):
    code = Code.full(F5, 6, Variant.CYCLIC)
    with pytest.raises(TooLarge):
        next(enumerate_codewords(code))


def test_verify_reports_mismatch(F5):
    n = 5
    spec = CodeSpec(Variant.CYCLIC, n, Poly.one(F5), Poly.one(F5), Poly(F5, [4, 1]),
                    Poly(F5, [1, 1, 1, 1, 1]), Poly(F5, [2]))
    code = build_code(spec)
    ref = brute_dual(code, Form.TE)
    ok = verify_dual(ref, code, Form.TE)
    assert ok.equal and not ok.violations
    wrong = Code.from_generators(F5, n, Variant.CYCLIC, [RnElem(n, Poly.one(F5), Poly.zero(F5))])
    rep = verify_dual(wrong, code, Form.TE)
    assert not rep
    assert rep.violations and rep.violations[0][0] == "claimed"
    assert rep.extra > 0
    assert "MISMATCH" in rep.summary()


def test_empty_code_has_full_dual(F3):
    zero = Code.zero(F3, 4, Variant.CYCLIC)
    assert brute_dual(zero, Form.TE) == Code.full(F3, 4, Variant.CYCLIC)

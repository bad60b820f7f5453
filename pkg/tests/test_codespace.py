import random

import numpy as np
import pytest

from tracedual import linalg
from tracedual.codespace import (
    Code,
    CodeSpec,
    NotAModule,
    QShape,
    SpecViolation,
    build_code,
    canonical_decomposition,
    code_equals,
    fq_dimension,
    shift_closure,
)
from tracedual.factor import factorizations
from tracedual.polyring import FactorizationMismatch, Poly
from tracedual.skewring import RnElem, Variant, left_action

from conftest import P, example_n10, rand_poly


def test_spec_validation(F3):
    one = Poly.one(F3)
    with pytest.raises(FactorizationMismatch):
        CodeSpec(Variant.CYCLIC, 4, P(F3, 1, 1), one, one, one, Poly.zero(F3))
    with pytest.raises(SpecViolation):
        CodeSpec(Variant.CYCLIC, 2, P(F3, 2, 0, 1), one, one, one, P(F3, 0, 0, 1))
    with pytest.raises(ValueError):
        CodeSpec(Variant.SKEW, 3, P(F3, 2, 0, 0, 1), one, one, one, Poly.zero(F3))


def test_w_multiplied_gamma_part(F3):
    spec = CodeSpec(Variant.CYCLIC, 4, P(F3, 1, 1), P(F3, 2, 1), P(F3, 1, 0, 1), Poly.one(F3),
                    P(F3, 1, 1), QShape.W_MULTIPLIED)
    assert spec.gamma_part == P(F3, 1, 2, 1)
    assert spec.as_plain().qpoly == P(F3, 1, 2, 1)
    assert build_code(spec) == build_code(spec.as_plain())


@pytest.mark.parametrize("variant", [Variant.CYCLIC, Variant.SKEW])
def test_fast_closure_matches_generic(F5, variant):
    rng = random.Random(5)
    n = 6
    for _ in range(30):
        gens = [RnElem(n, rand_poly(F5, rng, n - 1), rand_poly(F5, rng, n - 1)) for _ in range(2)]
        code = Code.from_generators(F5, n, variant, gens)
        vecs = np.array([u.to_vector() for u in gens])
        B, piv = linalg.rref(shift_closure(vecs, n, variant) % 5, F5, 2 * n)
        assert code.pivots == piv and np.array_equal(code.basis, B)
        assert code.is_module()


def test_module_closure_over_extension_field(F9):
    n = 4
    u = RnElem(n, Poly.from_elements(F9, [5, 0, 1]), Poly.from_elements(F9, [0, 7]))
    for variant in Variant:
        code = Code.from_generators(F9, n, variant, [u])
        assert code.is_module()
        x = P(F9, 0, 1)
        assert code.contains(left_action(x, u, variant))


def test_from_basis_rejects_non_modules(F3):
    with pytest.raises(NotAModule):
        Code.from_basis(F3, 3, Variant.CYCLIC, [[1, 0, 0, 0, 0, 0]])
    full = Code.from_basis(F3, 3, Variant.CYCLIC, np.eye(6, dtype=np.int64))
    assert full == Code.full(F3, 3, Variant.CYCLIC)


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("variant", [Variant.CYCLIC, Variant.SKEW])
def test_closure_dimension_bounds(q, variant):
    from tracedual.gf import make_field
    F = make_field(q)
    rng = random.Random(q)
    for n in (4, 6):
        for w, l, f, g in factorizations(F, n):
            spec = CodeSpec(variant, n, w, l, f, g, rand_poly(F, rng, n - 1))
            k, kstar = fq_dimension(build_code(spec))
            assert k / 2 <= kstar <= k
            # gamma w g and w f + gamma q alone already span this much
            assert k >= 2 * n - 2 * w.degree - f.degree - g.degree


def test_dimension_of_special_codes(F3):
    # <w f, gamma w g> has F_q-dimension (n - deg wf) + (n - deg wg)
    for n in (4, 5, 6):
        for w, l, f, g in factorizations(F3, n):
            spec = CodeSpec(Variant.CYCLIC, n, w, l, f, g, Poly.zero(F3))
            assert build_code(spec).dim == 2 * n - 2 * w.degree - f.degree - g.degree


def test_n10_generators_decompose(F3):
    spec = example_n10(F3)
    code = build_code(spec)
    canon = canonical_decomposition(code)
    # the module's own canonical data; the listed (w, l, f, g, q) describes the same code
    assert canon.w == P(F3, 1, 1)
    assert canon.l == P(F3, 2, 0, 0, 0, 0, 1)
    assert canon.f == P(F3, 1, 2, 1, 2, 1)
    assert canon.g == Poly.one(F3)
    assert not canon.qpoly
    assert build_code(canon) == code


@pytest.mark.parametrize("variant", [Variant.CYCLIC, Variant.SKEW])
def test_canonical_round_trip(F5, variant):
    rng = random.Random(17)
    n = 6
    for _ in range(40):
        gens = [RnElem(n, rand_poly(F5, rng, n - 1), rand_poly(F5, rng, n - 1))
                for _ in range(rng.randint(1, 3))]
        code = Code.from_generators(F5, n, variant, gens)
        spec = canonical_decomposition(gens, variant)
        assert code_equals(build_code(spec), code)
        assert not spec.qpoly or spec.qpoly.degree < (spec.w * spec.g).degree
        # canonical data is idempotent
        assert canonical_decomposition(build_code(spec)) == spec


def test_empty_generating_set(F3):
    spec = canonical_decomposition([], Variant.CYCLIC, F3, 4)
    assert build_code(spec).dim == 0
    assert spec.w == P(F3, 2, 0, 0, 0, 1)

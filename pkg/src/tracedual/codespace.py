"""F_q-linear cyclic and skew cyclic codes inside R_n.

A :class:`Code` stores an F_q basis in reduced row echelon form.  Rows are
vectors of length 2n laid out as the c-coordinates 0..n-1 followed by the
d-coordinates 0..n-1 of ``c(X) + gamma*d(X)``.  Because RREF is unique, two
codes are equal exactly when their stored bases are identical.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .gf import Field
from .polyring import Poly, gcd, validate_factorization, xn_minus_1
from .skewring import LengthMismatch, RnElem, Variant

__all__ = [
    "QShape",
    "CodeSpec",
    "Code",
    "NotAModule",
    "SpecViolation",
    "build_code",
    "fq_dimension",
    "contains",
    "code_equals",
    "canonical_decomposition",
    "shift_closure",
]


class NotAModule(ValueError):
    pass


class SpecViolation(ValueError):
    pass


class QShape(enum.Enum):
    PLAIN = "plain"                # w f + gamma q
    W_MULTIPLIED = "w-multiplied"  # w f + gamma w q

    @classmethod
    def parse(cls, value: "str | QShape") -> "QShape":
        if isinstance(value, QShape):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValueError(f"unknown qshape {value!r} (expected plain or w-multiplied)") from None


@dataclass(frozen=True)
class CodeSpec:
    """The code <w f + gamma Q, gamma w g> with X^n - 1 = w l f g.

    Q is ``qpoly`` for the plain shape and ``w * qpoly`` for the w-multiplied one.
    """

    variant: Variant
    n: int
    w: Poly
    l: Poly
    f: Poly
    g: Poly
    qpoly: Poly
    qshape: QShape = QShape.PLAIN

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant.parse(self.variant))
        object.__setattr__(self, "qshape", QShape.parse(self.qshape))
        self.variant.check_length(self.n)
        validate_factorization(self.w, self.l, self.f, self.g, self.n)
        if self.qpoly and self.qpoly.degree >= self.n:
            raise SpecViolation(f"deg qpoly = {self.qpoly.degree} must be < n = {self.n}")
        # specs key several caches; hashing five polynomials each time adds up
        object.__setattr__(self, "_hash", hash((self.variant, self.n, self.w, self.l, self.f,
                                                 self.g, self.qpoly, self.qshape)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def field(self) -> Field:
        return self.w.field

    @property
    def gamma_part(self) -> Poly:
        """The gamma-part Q of the first generator."""
        if self.qshape is QShape.W_MULTIPLIED:
            return (self.w * self.qpoly).mod_xn1(self.n)
        return self.qpoly

    def generators(self) -> tuple[RnElem, RnElem]:
        n = self.n
        wf, wg = _products(self.w, self.f, self.g)
        g1 = RnElem(n, wf, self.gamma_part)
        g2 = RnElem(n, Poly.zero(self.field), wg)
        return g1, g2

    def as_plain(self) -> CodeSpec:
        """Same code, written in the plain shape."""
        if self.qshape is QShape.PLAIN:
            return self
        return CodeSpec(self.variant, self.n, self.w, self.l, self.f, self.g,
                        self.gamma_part, QShape.PLAIN)

    def with_qpoly(self, qpoly: Poly) -> CodeSpec:
        return CodeSpec(self.variant, self.n, self.w, self.l, self.f, self.g, qpoly, self.qshape)


@lru_cache(maxsize=64)
def _products(w: Poly, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    # shared by every qpoly on the same factorization
    return w * f, w * g


def shift_closure(vectors: np.ndarray, n: int, variant: Variant) -> np.ndarray:
    """All X^i * v (0 <= i < n) for each row v, as a (rows*n, 2n) matrix.

    X * (c + gamma d) = Xc + gamma (+/-) X d, the sign being - in the skew ring.
    Entries are left unreduced (skew rows may hold -x); callers reduce mod p.
    """
    V = np.asarray(vectors, dtype=np.int64).reshape(-1, 2 * n)
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    c = V[:, :n][:, idx]            # (k, n, n): row i is X^i c
    d = V[:, n:][:, idx]
    if variant is Variant.SKEW:
        signs = np.where(np.arange(n) % 2 == 0, 1, -1)
        d = d * signs[None, :, None]
    return np.concatenate([c, d], axis=2).reshape(-1, 2 * n)


def _negate_odd(rows: np.ndarray, n: int, field: Field) -> np.ndarray:
    # Only needed for extension fields: signs must be applied through F.neg.
    out = rows.copy()
    for r in range(out.shape[0]):
        for j in range(out.shape[1]):
            x = int(out[r, j])
            if x < 0:
                out[r, j] = field.neg(-x)
    return out


class Code:
    """An F_q[X]-submodule of R_n, stored as an RREF F_q basis."""

    def __init__(self, field: Field, n: int, variant: Variant, basis: np.ndarray,
                 pivots: tuple[int, ...], generators: Sequence[RnElem] = (),
                 spec: CodeSpec | None = None):
        self.field = field
        self.n = n
        self.variant = Variant.parse(variant)
        self.basis = basis
        self.pivots = pivots
        self.generators = tuple(generators)
        self.spec = spec

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_generators(cls, field: Field, n: int, variant: Variant,
                        generators: Iterable[RnElem], spec: CodeSpec | None = None) -> Code:
        """The module generated by ``generators`` under the variant's X-action."""
        variant = Variant.parse(variant)
        variant.check_length(n)
        gens = tuple(generators)
        for u in gens:
            if u.n != n:
                raise LengthMismatch(f"generator of length {u.n} in a code of length {n}")
        vecs = np.zeros((len(gens), 2 * n), np.int64)
        for i, u in enumerate(gens):
            vecs[i, :len(u.c.coeffs)] = u.c.coeffs
            vecs[i, n:n + len(u.d.coeffs)] = u.d.coeffs
        fast = linalg.module_rref(vecs, n, variant is Variant.SKEW, field, reduced=True)
        if fast is not None:
            basis, pivots = fast
        else:
            rows = _negate_odd(shift_closure(vecs, n, variant), n, field)
            basis, pivots = linalg.rref(rows, field, 2 * n)
        return cls(field, n, variant, basis, pivots, gens, spec)

    @classmethod
    def from_basis(cls, field: Field, n: int, variant: Variant, rows) -> Code:
        """The F_q-span of ``rows``; raises :class:`NotAModule` if not X-closed."""
        variant = Variant.parse(variant)
        variant.check_length(n)
        basis, pivots = linalg.rref(np.asarray(rows, np.int64).reshape(-1, 2 * n), field, 2 * n)
        code = cls(field, n, variant, basis, pivots)
        if not code.is_module():
            raise NotAModule("the span is not closed under multiplication by X")
        return code

    @classmethod
    def full(cls, field: Field, n: int, variant: Variant) -> Code:
        return cls(field, n, variant, np.eye(2 * n, dtype=np.int64), tuple(range(2 * n)))

    @classmethod
    def zero(cls, field: Field, n: int, variant: Variant) -> Code:
        return cls(field, n, variant, np.zeros((0, 2 * n), np.int64), ())

    # -- queries --------------------------------------------------------------

    @property
    def dim(self) -> int:
        """F_q-dimension k."""
        return len(self.pivots)

    @cached_property
    def closure_dim(self) -> int:
        """k*: dimension over F_{q^2} of the F_{q^2}-span of the code."""
        n = self.n
        B = self.basis
        if B.shape[0] == 0:
            return 0
        F = self.field
        # gamma * (c + gamma d) = delta d + gamma c
        dpart = B[:, n:]
        if F.e == 1:
            gB = np.concatenate([dpart * F.delta % F.p, B[:, :n]], axis=1)
        else:
            scaled = np.vectorize(lambda x: F.mul(int(x), F.delta), otypes=[np.int64])(dpart)
            gB = np.concatenate([scaled, B[:, :n]], axis=1)
        return linalg.rank(np.concatenate([B, gB]), F) // 2

    def basis_elements(self) -> list[RnElem]:
        return [RnElem.from_vector(self.field, self.n, row) for row in self.basis]

    def contains(self, u: RnElem) -> bool:
        if u.n != self.n:
            raise LengthMismatch(f"element of length {u.n} vs code of length {self.n}")
        return bool(linalg.in_row_space(self.basis, self.pivots, [u.to_vector()], self.field)[0])

    def contains_rows(self, rows) -> np.ndarray:
        return linalg.in_row_space(self.basis, self.pivots, rows, self.field)

    def is_module(self) -> bool:
        if self.basis.shape[0] == 0:
            return True
        shifted = shift_closure(self.basis, self.n, self.variant)
        shifted = shifted.reshape(self.basis.shape[0], self.n, 2 * self.n)[:, 1, :]
        if self.field.e > 1:
            shifted = _negate_odd(shifted, self.n, self.field)
        return bool(self.contains_rows(shifted).all())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return code_equals(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Code(n={self.n}, {self.variant.value}, dim={self.dim})"


def build_code(spec: CodeSpec) -> Code:
    return Code.from_generators(spec.field, spec.n, spec.variant, spec.generators(), spec)


def fq_dimension(code: Code) -> tuple[int, int]:
    """(k, k*): F_q-dimension and dimension of the F_{q^2}-linear closure."""
    return code.dim, code.closure_dim


def contains(code: Code, u: RnElem) -> bool:
    return code.contains(u)


def code_equals(a: Code, b: Code) -> bool:
    if a.n != b.n:
        raise LengthMismatch(f"codes of lengths {a.n} and {b.n}")
    if a.variant is not b.variant:
        raise ValueError("codes live in different rings (cyclic vs skew)")
    return a.pivots == b.pivots and np.array_equal(a.basis, b.basis)


def canonical_decomposition(generators: Iterable[RnElem] | Code, variant: Variant | None = None,
                            field: Field | None = None, n: int | None = None) -> CodeSpec:
    """Recover (w, l, f, g, q) in the plain shape from any generating set.

    F generates the image of the projection onto the c-part, G generates
    {d : gamma d in C}; then w = gcd(F, G), f = F/w, g = G/w,
    l = (X^n - 1)/(w f g), and q is the gamma-part of a codeword with c-part F,
    reduced modulo G so that deg q < deg(w g).
    """
    if isinstance(generators, Code):
        code = generators
    else:
        gens = list(generators)
        if variant is None:
            raise ValueError("variant is required when passing generators")
        if not gens and (field is None or n is None):
            raise ValueError("field and n are required for an empty generating set")
        field = field or gens[0].field
        n = n or gens[0].n
        code = Code.from_generators(field, n, variant, gens)
    F_, n, variant = code.field, code.n, code.variant
    N = xn_minus_1(F_, n)
    B, piv = code.basis, code.pivots
    c_rows = [B[i, :n] for i, pc in enumerate(piv) if pc < n]
    d_rows = [B[i, n:] for i, pc in enumerate(piv) if pc >= n]
    F = gcd(N, *(Poly.from_elements(F_, r) for r in c_rows))
    G = gcd(N, *(Poly.from_elements(F_, r) for r in d_rows))

    Fr = F.mod_xn1(n)
    if Fr:
        target = np.array([Fr.padded(n) + [0] * n], np.int64)
        res = linalg.reduce_rows(B, piv, target, F_)[0]
        if res[:n].any():
            raise AssertionError("c-part generator not reached by the code")
        Q = -Poly.from_elements(F_, res[n:])
    else:
        Q = Poly.zero(F_)
    w = gcd(F, G)
    f = F.exact_div(w)
    g = G.exact_div(w)
    l = N.exact_div(w * f * g)
    q = Q % G
    return CodeSpec(variant, n, w, l, f, g, q, QShape.PLAIN)

"""The ambient module R_n and its inner products.

An :class:`RnElem` is ``c(X) + gamma*d(X)`` with c, d in F_q[X] of degree
< n.  Both the commutative ring F_{q^2}[X]/(X^n - 1) and the skew ring
F_{q^2}[X; sigma]/(X^n - 1) share this representation; they only differ in
how X (and hence any a(X) in F_q[X]) passes gamma:

    cyclic:  a(X) gamma = gamma a(X)
    skew:    a(X) gamma = gamma a(-X)

The inner products read coefficients positionally and never multiply
polynomials.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .gf import Field, Fq2, trace
from .polyring import Poly

__all__ = [
    "Variant",
    "Form",
    "OddLength",
    "LengthMismatch",
    "RnElem",
    "left_action",
    "skew_mul",
    "star",
    "bullet",
    "trace_form",
]


class Variant(enum.Enum):
    CYCLIC = "cyclic"
    SKEW = "skew"

    @classmethod
    def parse(cls, value: "str | Variant") -> "Variant":
        if isinstance(value, Variant):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValueError(f"unknown variant {value!r} (expected cyclic or skew)") from None

    def check_length(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"length must be positive, got {n}")
        if self is Variant.SKEW and n % 2:
            raise OddLength(f"skew cyclic codes need sigma^n = id, so n must be even (got {n})")


class Form(enum.Enum):
    """Trace Euclidean (TE) or trace Hermitian (TH) pairing."""

    TE = "te"
    TH = "th"

    @classmethod
    def parse(cls, value: "str | Form") -> "Form":
        if isinstance(value, Form):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValueError(f"unknown form {value!r} (expected te or th)") from None

    def gamma_norm(self, field: Field) -> int:
        """The scalar multiplying the gamma-gamma pairing: delta for TE, -delta for TH."""
        return field.delta if self is Form.TE else field.neg(field.delta)


class OddLength(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RnElem:
    """``c(X) + gamma*d(X)`` reduced modulo X^n - 1."""

    n: int
    c: Poly
    d: Poly

    def __post_init__(self):
        object.__setattr__(self, "c", self.c.mod_xn1(self.n))
        object.__setattr__(self, "d", self.d.mod_xn1(self.n))

    @property
    def field(self) -> Field:
        return self.c.field

    @classmethod
    def zero(cls, field: Field, n: int) -> RnElem:
        z = Poly.zero(field)
        return cls(n, z, z)

    @classmethod
    def from_vector(cls, field: Field, n: int, vec: Sequence[int]) -> RnElem:
        """Inverse of :meth:`to_vector` (c-block then d-block)."""
        if len(vec) != 2 * n:
            raise LengthMismatch(f"expected a vector of length {2 * n}, got {len(vec)}")
        return cls(n, Poly.from_elements(field, vec[:n]), Poly.from_elements(field, vec[n:]))

    def to_vector(self) -> list[int]:
        return self.c.padded(self.n) + self.d.padded(self.n)

    def coefficient(self, i: int) -> Fq2:
        return Fq2(self.field, self.c[i], self.d[i])

    def is_zero(self) -> bool:
        return not self.c and not self.d

    def __add__(self, other: RnElem) -> RnElem:
        _same_length(self, other)
        return RnElem(self.n, self.c + other.c, self.d + other.d)

    def __sub__(self, other: RnElem) -> RnElem:
        _same_length(self, other)
        return RnElem(self.n, self.c - other.c, self.d - other.d)

    def __neg__(self) -> RnElem:
        return RnElem(self.n, -self.c, -self.d)

    def scale(self, a: int) -> RnElem:
        """Multiply by a scalar of F_q (commutes with gamma in both variants)."""
        return RnElem(self.n, self.c.scale(a), self.d.scale(a))

    def times_gamma(self) -> RnElem:
        """gamma * (c + gamma d) = delta d + gamma c."""
        return RnElem(self.n, self.d.scale(self.field.delta), self.c)

    def __str__(self) -> str:
        return f"({self.c}) + γ({self.d})"


def _same_length(u: RnElem, v: RnElem) -> None:
    if u.n != v.n:
        raise LengthMismatch(f"lengths differ: {u.n} vs {v.n}")


def left_action(a: Poly, u: RnElem, variant: Variant) -> RnElem:
    """a(X) * u for a in F_q[X]; in the skew ring a(X) gamma = gamma a(-X)."""
    n = u.n
    if variant is Variant.SKEW:
        return RnElem(n, (a * u.c).mod_xn1(n), (a.flip() * u.d).mod_xn1(n))
    return RnElem(n, (a * u.c).mod_xn1(n), (a * u.d).mod_xn1(n))


def skew_mul(u: RnElem, v: RnElem, variant: Variant) -> RnElem:
    """Ring product in R_n.

    (c1 + g d1)(c2 + g d2) with g = gamma:
      cyclic: (c1 c2 + delta d1 d2) + g (c1 d2 + d1 c2)
      skew:   (c1 c2 + delta d1(-X) d2) + g (c1(-X) d2 + d1 c2)
    """
    _same_length(u, v)
    n = u.n
    delta = u.field.delta
    if variant is Variant.SKEW:
        variant.check_length(n)
        c = u.c * v.c + (u.d.flip() * v.d).scale(delta)
        d = u.c.flip() * v.d + u.d * v.c
    else:
        c = u.c * v.c + (u.d * v.d).scale(delta)
        d = u.c * v.d + u.d * v.c
    return RnElem(n, c.mod_xn1(n), d.mod_xn1(n))


def star(u: RnElem, v: RnElem) -> Fq2:
    """Euclidean pairing sum_i u_i v_i (F_{q^2}-bilinear)."""
    _same_length(u, v)
    F = u.field
    acc = Fq2(F, 0, 0)
    for i in range(u.n):
        acc = acc + u.coefficient(i) * v.coefficient(i)
    return acc


def bullet(u: RnElem, v: RnElem) -> Fq2:
    """Hermitian pairing sum_i u_i v_i^q."""
    _same_length(u, v)
    F = u.field
    acc = Fq2(F, 0, 0)
    for i in range(u.n):
        vi = v.coefficient(i)
        acc = acc + u.coefficient(i) * Fq2(F, vi.a, F.neg(vi.b))
    return acc


def trace_form(u: RnElem, v: RnElem, form: Form) -> int:
    """Tr(u star v) for TE, Tr(u bullet v) for TH."""
    form = Form.parse(form)
    return trace(star(u, v) if form is Form.TE else bullet(u, v))

"""Dense polynomials over F_q.

A :class:`Poly` holds an ascending coefficient tuple with no trailing zeros,
the empty tuple being the zero polynomial.  ``Poly.degree`` is ``None`` for
zero; callers handle that case explicitly instead of relying on -1.

Besides ring arithmetic this module provides the coefficient-reversing
operators used throughout the dual constructions:

* ``f.reciprocal()`` -- f*(X) = X^deg(f) f(1/X),
* ``f.hat(n)``       -- X^(n - deg f) f*(X), the canonical representative of
  f(X^(n-1)) modulo X^n - 1,
* ``f.flip()``       -- f(-X).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np

from . import _primepoly as _kern
from .gf import Field

__all__ = [
    "Poly",
    "DegreeExceedsLength",
    "BothZero",
    "FactorizationMismatch",
    "xgcd",
    "gcd",
    "lcm",
    "xn_minus_1",
    "validate_factorization",
]


class DegreeExceedsLength(ValueError):
    pass


class BothZero(ValueError):
    pass


class FactorizationMismatch(ValueError):
    def __init__(self, message: str, product: "Poly"):
        super().__init__(message)
        self.product = product


# Prime-field products/divisions above this many coefficient pairs go to the
# compiled kernels; below it the conversion overhead is not worth it.
_KERNEL_WORK = 48


def _arr(c: tuple[int, ...]) -> np.ndarray:
    return np.array(c, dtype=np.int64)


def _trim(c: list[int]) -> tuple[int, ...]:
    i = len(c)
    while i and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


class Poly:
    """Polynomial over a :class:`~tracedual.gf.Field`.

    ``Poly(F, [1, 2, 0, 1])`` is 1 + 2X + X^3.  Integer coefficients are
    reduced into the prime subfield; for e > 1 pass digit vectors or already
    encoded field elements via :meth:`from_elements`.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        self.field = field
        self.coeffs = _trim([field(c) for c in coeffs])

    @classmethod
    def _raw(cls, field: Field, coeffs: tuple[int, ...]) -> Poly:
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_elements(cls, field: Field, elems: Iterable[int]) -> Poly:
        """Build from already-encoded F_q elements (ints in range(q))."""
        return cls._raw(field, _trim([int(x) for x in elems]))

    @classmethod
    def zero(cls, field: Field) -> Poly:
        return cls._raw(field, ())

    @classmethod
    def one(cls, field: Field) -> Poly:
        return cls._raw(field, (1,))

    @classmethod
    def constant(cls, field: Field, c: int) -> Poly:
        return cls._raw(field, (c,) if c else ())

    @classmethod
    def monomial(cls, field: Field, k: int, c: int = 1) -> Poly:
        if c == 0:
            return cls._raw(field, ())
        return cls._raw(field, (0,) * k + (c,))

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> list[int]:
        if len(self.coeffs) > n:
            raise DegreeExceedsLength(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def valuation(self) -> int:
        """X-adic valuation (index of the lowest nonzero coefficient)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero polynomial has no valuation")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.field == other.field

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        F = self.field
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c) if F.e == 1 else "[" + " ".join(map(str, F.digits(c))) + "]"
            if i == 0:
                terms.append(cs)
            else:
                mono = "X" if i == 1 else f"X^{i}"
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms)

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    # -- ring operations ------------------------------------------------------

    def _check(self, other: Poly) -> None:
        if other.field is not self.field and other.field != self.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        if F.e == 1:
            p = F.p
            out = list(a)
            for i, y in enumerate(b):
                out[i] = (out[i] + y) % p
        else:
            out = list(a)
            for i, y in enumerate(b):
                out[i] = F.add(out[i], y)
        return Poly._raw(F, _trim(out))

    def __neg__(self) -> Poly:
        F = self.field
        if F.e == 1:
            p = F.p
            return Poly._raw(F, tuple(-c % p for c in self.coeffs))
        return Poly._raw(F, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, c: int) -> Poly:
        F = self.field
        if c == 0:
            return Poly._raw(F, ())
        if F.e == 1:
            p = F.p
            return Poly._raw(F, tuple(x * c % p for x in self.coeffs))
        return Poly._raw(F, tuple(F.mul(x, c) for x in self.coeffs))

    def shift(self, k: int) -> Poly:
        """Multiply by X^k."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (0,) * k + self.coeffs)

    def __mul__(self, other: Poly | int) -> Poly:
        if type(other) is not Poly:
            if isinstance(other, int):
                return self.scale(self.field(other))
            return NotImplemented
        F = self.field
        if other.field is not F:
            self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(F, ())
        if F.e == 1:
            p = F.p
            if len(a) * len(b) > _KERNEL_WORK:
                return Poly._raw(F, tuple(_kern.mul(np.array(a, np.int64), np.array(b, np.int64),
                                                    p).tolist()))
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b, i):
                        out[j] += x * y
            return Poly._raw(F, _trim([c % p for c in out]))
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b, i):
                    if y:
                        out[j] = add(out[j], mul(x, y))
        return Poly._raw(F, _trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        acc = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        F = self.field
        b = other.coeffs
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(b) - 1
        if len(rem) - 1 < db:
            return Poly._raw(F, ()), self
        quot = [0] * (len(rem) - db)
        inv_lc = F.inv(b[-1])
        if F.e == 1:
            p = F.p
            if len(quot) * len(b) > _KERNEL_WORK:
                q_, r_ = _kern.divmod_(_arr(self.coeffs), _arr(b), p, inv_lc)
                return Poly._raw(F, tuple(q_.tolist())), Poly._raw(F, tuple(r_.tolist()))
            for k in range(len(rem) - 1 - db, -1, -1):
                c = rem[k + db] * inv_lc % p
                if c:
                    quot[k] = c
                    for i in range(db + 1):
                        rem[k + i] = (rem[k + i] - c * b[i]) % p
        else:
            for k in range(len(rem) - 1 - db, -1, -1):
                c = F.mul(rem[k + db], inv_lc)
                if c:
                    quot[k] = c
                    for i in range(db + 1):
                        rem[k + i] = F.sub(rem[k + i], F.mul(c, b[i]))
        return Poly._raw(F, _trim(quot)), Poly._raw(F, _trim(rem[:db]))

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        """Quotient that must leave no remainder."""
        quo, rem = divmod(self, other)
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quo

    def divides(self, other: Poly) -> bool:
        return not (other % self)

    def mod_xn1(self, n: int) -> Poly:
        """Reduce modulo X^n - 1 by folding coefficient i onto i mod n."""
        c = self.coeffs
        if len(c) <= n:
            return self
        F = self.field
        out = list(c[:n])
        if F.e == 1:
            p = F.p
            for i in range(n, len(c)):
                out[i % n] += c[i]
            return Poly._raw(F, _trim([x % p for x in out]))
        for i in range(n, len(c)):
            out[i % n] = F.add(out[i % n], c[i])
        return Poly._raw(F, _trim(out))

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return self.scale(self.field.inv(lc))

    # -- coefficient-reversing operators --------------------------------------

    def reciprocal(self) -> Poly:
        """f*(X) = sum f_i X^(m-i) with m = deg f; 0* = 0."""
        return Poly._raw(self.field, _trim(list(reversed(self.coeffs))))

    def hat(self, n: int) -> Poly:
        """Canonical representative X^(n - deg f) f*(X) of f(X^(n-1)) mod X^n - 1."""
        if not self.coeffs:
            return self
        d = len(self.coeffs) - 1
        if d > n:
            raise DegreeExceedsLength(f"hat needs deg f <= n, got deg {d} > {n}")
        return self.reciprocal().shift(n - d)

    def flip(self) -> Poly:
        """f(-X): odd coefficients change sign."""
        F = self.field
        c = self.coeffs
        if F.e == 1:
            p = F.p
            return Poly._raw(F, tuple(x if i % 2 == 0 else -x % p for i, x in enumerate(c)))
        return Poly._raw(F, tuple(x if i % 2 == 0 else F.neg(x) for i, x in enumerate(c)))


def xn_minus_1(field: Field, n: int) -> Poly:
    return Poly._raw(field, (field.neg(1),) + (0,) * (n - 1) + (1,))


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (h, u, v) with u*a + v*b = h = monic gcd(a, b).

    Cofactors are the ones produced by the classical remainder sequence,
    which is the minimal-degree Bezout pair.
    """
    F = a.field
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    if F.e == 1:
        h, u, v = _kern.xgcd(_arr(a.coeffs), _arr(b.coeffs), F.p, _kern.inv_table(F.p))
        return (Poly._raw(F, tuple(h.tolist())), Poly._raw(F, tuple(u.tolist())),
                Poly._raw(F, tuple(v.tolist())))
    r0, r1 = a, b
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = F.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def gcd(*polys: Poly) -> Poly:
    """Monic gcd of any number of polynomials; zeros are ignored."""
    acc = None
    for f in polys:
        if acc is None:
            acc = f
            continue
        if f.field.e == 1 and acc and f:
            p = f.field.p
            acc = Poly._raw(f.field, tuple(_kern.gcd(_arr(acc.coeffs), _arr(f.coeffs), p,
                                                     _kern.inv_table(p)).tolist()))
            continue
        while f:
            acc, f = f, acc % f
    if acc is None or not acc:
        raise BothZero("gcd of zero polynomials is undefined")
    return acc.monic()


def lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(gcd(a, b)).monic()


@lru_cache(maxsize=256)
def _is_factorization(w: Poly, l: Poly, f: Poly, g: Poly, n: int) -> Poly | None:
    prod = w * l * f * g
    return None if prod == xn_minus_1(w.field, n) else prod


def validate_factorization(w: Poly, l: Poly, f: Poly, g: Poly, n: int) -> None:
    """Raise :class:`FactorizationMismatch` unless w*l*f*g == X^n - 1."""
    prod = _is_factorization(w, l, f, g, n)
    if prod is not None:
        raise FactorizationMismatch(f"w*l*f*g = {prod} but X^{n} - 1 = {xn_minus_1(w.field, n)}", prod)


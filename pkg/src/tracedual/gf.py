"""Exact arithmetic in F_q (q = p^e odd) and the quadratic extension F_{q^2}.

Elements of F_q are plain Python ints in ``range(q)``.  For ``e == 1`` the int
is the residue mod p.  For ``e > 1`` the int packs the power-basis digits of
the element, ``x = d_0 + d_1 p + ... + d_{e-1} p^{e-1}``, relative to the
user-supplied monic irreducible ``base_modulus``.  The ints ``0 .. p-1`` are
therefore exactly the prime subfield.

F_{q^2} is never built from a second modulus.  It is F_q + gamma F_q where
gamma^2 = delta is a fixed nonsquare of F_q, so gamma^q = -gamma and
Tr(gamma) = 0 hold by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "FieldError",
    "NonPrimeP",
    "EvenCharacteristic",
    "ReducibleModulus",
    "Field",
    "Fq2",
    "make_field",
    "trace",
    "frobenius",
]

EXHAUSTIVE_SQUARE_LIMIT = 10_000


class FieldError(ValueError):
    pass


class NonPrimeP(FieldError):
    pass


class EvenCharacteristic(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- tiny F_p[t] helpers, only used to vet and apply the base modulus --------

def _pp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pp_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = _pp_trim([x % p for x in a])
    dm = len(m) - 1
    inv_lc = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lc % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _pp_trim(a)
    return a


def _pp_mulmod(a: list[int], b: list[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pp_mod(out, m, p)


def _pp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _pp_trim(list(a)), _pp_trim(list(b))
    while b:
        a, b = b, _pp_mod(a, b, p)
    return a


def _is_irreducible_mod_p(m: Sequence[int], p: int) -> bool:
    """Rabin-style test: gcd(m, t^(p^i) - t) = 1 for 1 <= i <= deg/2."""
    e = len(m) - 1
    if e <= 0:
        return False
    if e == 1:
        return True
    t = [0, 1]
    power = list(t)
    for _ in range(e // 2):
        # power <- power^p mod m
        acc = [1]
        base = list(power)
        k = p
        while k:
            if k & 1:
                acc = _pp_mulmod(acc, base, m, p)
            base = _pp_mulmod(base, base, m, p)
            k >>= 1
        power = acc
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        g = _pp_gcd(list(m), _pp_trim(diff), p)
        if len(g) > 1:
            return False
    return True


class Field:
    """The finite field F_q together with the data fixing F_{q^2}.

    Use :func:`make_field` to construct one.  Instances are immutable and
    compare equal when ``(p, e, base_modulus)`` agree.
    """

    __slots__ = (
        "p", "e", "q", "base_modulus", "delta",
        "_exp", "_log", "_add", "_neg", "_inv_table",
    )

    def __init__(self, p: int, e: int = 1, base_modulus: Sequence[int] | None = None):
        if p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported; q must be odd")
        if not _is_prime(p):
            raise NonPrimeP(f"p={p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")
        if e == 1:
            if base_modulus is not None and len(base_modulus) not in (0, 2):
                raise FieldError("a base modulus for e=1 must be linear or absent")
            mod = None
        else:
            if base_modulus is None:
                raise FieldError(f"e={e} requires a monic irreducible base modulus")
            mod = tuple(int(c) % p for c in base_modulus)
            if len(mod) != e + 1 or mod[-1] != 1:
                raise FieldError(f"base modulus must be monic of degree {e}")
            if not _is_irreducible_mod_p(mod, p):
                raise ReducibleModulus(f"modulus {list(mod)} is reducible over F_{p}")
        self.p = p
        self.e = e
        self.q = p ** e
        self.base_modulus = mod
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._add: list[list[int]] | None = None
        if e > 1:
            self._build_tables()
        self._inv_table = [0] + [self._slow_inv(x) for x in range(1, self.q)] if self.q <= 1 << 16 else None
        self.delta = self._first_nonsquare()

    # -- construction helpers -------------------------------------------------

    def _to_digits(self, x: int) -> list[int]:
        p = self.p
        ds = []
        for _ in range(self.e):
            x, r = divmod(x, p)
            ds.append(r)
        return ds

    def _from_digits(self, ds: Sequence[int]) -> int:
        x = 0
        for d in reversed(ds):
            x = x * self.p + d % self.p
        return x

    def _digit_mul(self, a: int, b: int) -> int:
        prod = _pp_mulmod(_pp_trim(self._to_digits(a)), _pp_trim(self._to_digits(b)),
                          self.base_modulus, self.p)
        return self._from_digits(prod)

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        factors = _prime_factors(order)
        gen = None
        for cand in range(2, q):
            ok = True
            for r in factors:
                if self._digit_pow(cand, order // r) == 1:
                    ok = False
                    break
            if ok:
                gen = cand
                break
        assert gen is not None
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._digit_mul(x, gen)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp, self._log = exp, log
        if q <= 4096:
            digits = [self._to_digits(x) for x in range(q)]
            self._add = [
                [self._from_digits([u + v for u, v in zip(digits[a], digits[b])]) for b in range(q)]
                for a in range(q)
            ]

    def _digit_pow(self, a: int, k: int) -> int:
        acc = 1
        while k:
            if k & 1:
                acc = self._digit_mul(acc, a)
            a = self._digit_mul(a, a)
            k >>= 1
        return acc

    def _slow_inv(self, x: int) -> int:
        return self.pow(x, self.q - 2)

    def _first_nonsquare(self) -> int:
        q = self.q
        if q <= EXHAUSTIVE_SQUARE_LIMIT:
            squares = {self.mul(x, x) for x in range(q)}
            for cand in range(q):
                if cand not in squares:
                    assert self.pow(cand, (q - 1) // 2) == self.neg(1)
                    return cand
            raise AssertionError("no nonsquare found")
        for cand in range(1, q):
            if self.pow(cand, (q - 1) // 2) != 1:
                return cand
        raise AssertionError("no nonsquare found")

    # -- arithmetic on F_q ----------------------------------------------------

    def __call__(self, x: int | Sequence[int]) -> int:
        """Coerce an int (reduced mod p into the prime subfield) or a digit vector."""
        if isinstance(x, int):
            return x % self.p
        ds = list(x)
        if len(ds) > self.e:
            raise FieldError(f"digit vector {ds} longer than e={self.e}")
        return self._from_digits(ds + [0] * (self.e - len(ds)))

    def digits(self, x: int) -> list[int]:
        return self._to_digits(x)

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._from_digits([u + v for u, v in zip(self._to_digits(a), self._to_digits(b))])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        return self._from_digits([-u for u in self._to_digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self._slow_inv(a)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if self.e == 1:
            return pow(a, k, self.p)
        if k < 0:
            return self.pow(self.inv(a), -k)
        if a == 0:
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def is_square(self, a: int) -> bool:
        return a == 0 or self.pow(a, (self.q - 1) // 2) == 1

    # -- the extension --------------------------------------------------------

    @property
    def gamma(self) -> "Fq2":
        return Fq2(self, 0, 1)

    def ext(self, a: int, b: int = 0) -> "Fq2":
        return Fq2(self, a, b)

    def ext_elements(self) -> Iterator["Fq2"]:
        for a in range(self.q):
            for b in range(self.q):
                yield Fq2(self, a, b)

    # -- identity -------------------------------------------------------------

    def _key(self):
        return (self.p, self.e, self.base_modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.e == 1:
            return f"Field(F_{self.p}, delta={self.delta})"
        return f"Field(F_{self.p}^{self.e}, modulus={list(self.base_modulus)}, delta={self.delta})"

    def describe_q(self) -> str:
        return str(self.p) if self.e == 1 else f"{self.p}^{self.e}"


_FIELD_CACHE: dict[tuple, Field] = {}


def make_field(p: int, e: int = 1, base_modulus: Sequence[int] | None = None) -> Field:
    """Build (or fetch the cached) context for F_q, q = p**e, and F_{q^2}.

    delta is the first nonsquare of F_q in integer-code order, so for q = 3
    it is 2 = -1 and gamma^2 = -1.
    """
    key = (p, e, tuple(base_modulus) if base_modulus is not None else None)
    fld = _FIELD_CACHE.get(key)
    if fld is None:
        fld = Field(p, e, base_modulus)
        _FIELD_CACHE[key] = fld
    return fld


@dataclass(frozen=True, slots=True)
class Fq2:
    """The element ``a + gamma*b`` of F_{q^2}."""

    field: Field
    a: int
    b: int = 0

    def __add__(self, other: Fq2) -> Fq2:
        F = self.field
        return Fq2(F, F.add(self.a, other.a), F.add(self.b, other.b))

    def __sub__(self, other: Fq2) -> Fq2:
        F = self.field
        return Fq2(F, F.sub(self.a, other.a), F.sub(self.b, other.b))

    def __neg__(self) -> Fq2:
        F = self.field
        return Fq2(F, F.neg(self.a), F.neg(self.b))

    def __mul__(self, other: Fq2 | int) -> Fq2:
        F = self.field
        if isinstance(other, int):
            return Fq2(F, F.mul(self.a, other), F.mul(self.b, other))
        a, b, c, d = self.a, other.a, self.b, other.b
        # (a + gamma c)(b + gamma d) = (ab + delta cd) + gamma (ad + cb)
        re = F.add(F.mul(a, b), F.mul(F.delta, F.mul(c, d)))
        im = F.add(F.mul(a, d), F.mul(c, b))
        return Fq2(F, re, im)

    __rmul__ = __mul__

    def norm(self) -> int:
        """x^(q+1) = a^2 - delta b^2."""
        F = self.field
        return F.sub(F.mul(self.a, self.a), F.mul(F.delta, F.mul(self.b, self.b)))

    def inverse(self) -> Fq2:
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero in F_{q^2}")
        F = self.field
        inv = F.inv(nrm)
        return Fq2(F, F.mul(self.a, inv), F.neg(F.mul(self.b, inv)))

    def __truediv__(self, other: Fq2) -> Fq2:
        return self * other.inverse()

    def __pow__(self, k: int) -> Fq2:
        if k < 0:
            return self.inverse() ** (-k)
        acc = Fq2(self.field, 1, 0)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def in_base_field(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        return f"Fq2({self.a} + γ·{self.b})"


def frobenius(x: Fq2) -> Fq2:
    """sigma(a + gamma b) = a - gamma b, i.e. x -> x^q."""
    return Fq2(x.field, x.a, x.field.neg(x.b))


def trace(x: Fq2) -> int:
    """Tr(x) = x + x^q = 2a, an element of F_q."""
    return x.field.add(x.a, x.a)

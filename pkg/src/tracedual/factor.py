"""Factoring X^n - 1 over F_q and listing its ordered factorizations w l f g.

Write n = m p^s with p not dividing m.  Then X^n - 1 = (X^m - 1)^(p^s) and
X^m - 1 is squarefree, so distinct-degree plus Cantor-Zassenhaus
equal-degree splitting gives its irreducible factors.  A tiny trial-division
factoriser is kept as a cross-check for small n.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator

from .gf import Field
from .polyring import Poly, gcd, xn_minus_1

__all__ = [
    "factor_xn_minus_1",
    "factor_by_trial_division",
    "monic_divisors",
    "factorizations",
    "count_factorizations",
]


def _powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _sort_key(f: Poly) -> tuple:
    return (f.degree, f.coeffs[::-1])


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a squarefree f whose irreducible factors all have degree d."""
    F = f.field
    if f.degree == d:
        return [f]
    e = (F.q ** d - 1) // 2
    one = Poly.one(F)
    while True:
        a = Poly.from_elements(F, [rng.randrange(F.q) for _ in range(f.degree)])
        if not a or a.degree == 0:
            continue
        b = gcd(f, _powmod(a, e, f) - one)
        if 0 < b.degree < f.degree:
            return _equal_degree(b, d, rng) + _equal_degree(f.exact_div(b), d, rng)


def _squarefree_factors(f: Poly, rng: random.Random) -> list[Poly]:
    F = f.field
    X = Poly.monomial(F, 1)
    out = []
    d = 1
    xp = X
    rest = f
    while rest.degree is not None and rest.degree >= 2 * d:
        xp = _powmod(xp, F.q, rest)
        part = gcd(rest, xp - X)
        if part.degree:
            out += _equal_degree(part, d, rng)
            rest = rest.exact_div(part)
            xp = xp % rest
        d += 1
    if rest.degree:
        out.append(rest.monic())
    return out


@lru_cache(maxsize=None)
def factor_xn_minus_1(field: Field, n: int) -> tuple[tuple[Poly, int], ...]:
    """Monic irreducible factors of X^n - 1 with multiplicities, sorted."""
    p = field.p
    m, mult = n, 1
    while m % p == 0:
        m //= p
        mult *= p
    rng = random.Random(0x5EED ^ n ^ (field.q << 8))
    facs = _squarefree_factors(xn_minus_1(field, m), rng)
    return tuple((f, mult) for f in sorted(facs, key=_sort_key))


def factor_by_trial_division(field: Field, n: int) -> tuple[tuple[Poly, int], ...]:
    """Same answer as :func:`factor_xn_minus_1` by brute search over monic polynomials.

    Exponential in n; only for cross-checking small cases.
    """
    rest = xn_minus_1(field, n)
    out = []
    d = 1
    while rest.degree:
        for tail in itertools.product(range(field.q), repeat=d):
            cand = Poly.from_elements(field, list(tail) + [1])
            k = 0
            while rest.degree and not rest % cand:
                rest = rest.exact_div(cand)
                k += 1
            if k:
                out.append((cand, k))
            if not rest.degree:
                break
        d += 1
    return tuple(sorted(out, key=lambda t: _sort_key(t[0])))


def _expand(factors, exps) -> Poly:
    F = factors[0][0].field if factors else None
    out = Poly.one(F)
    for (f, _), e in zip(factors, exps):
        for _ in range(e):
            out = out * f
    return out


def monic_divisors(field: Field, n: int) -> list[Poly]:
    facs = factor_xn_minus_1(field, n)
    return [_expand(facs, exps) for exps in itertools.product(*(range(m + 1) for _, m in facs))]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def count_factorizations(field: Field, n: int) -> int:
    from math import comb
    out = 1
    for _, m in factor_xn_minus_1(field, n):
        out *= comb(m + 3, 3)
    return out


def factorizations(field: Field, n: int) -> Iterator[tuple[Poly, Poly, Poly, Poly]]:
    """Every ordered (w, l, f, g) of monic polynomials with w l f g = X^n - 1.

    The order is deterministic: each irreducible factor's multiplicity is
    split among (w, l, f, g) in lexicographic order, factors taken smallest first.
    """
    facs = factor_xn_minus_1(field, n)
    one = Poly.one(field)
    # powers[i][e] = facs[i]^e
    powers = []
    for f, m in facs:
        pw = [one]
        for _ in range(m):
            pw.append(pw[-1] * f)
        powers.append(pw)
    splits = [list(_compositions(m, 4)) for _, m in facs]
    for choice in itertools.product(*splits):
        parts = [one, one, one, one]
        for pw, split in zip(powers, choice):
            for j, e in enumerate(split):
                if e:
                    parts[j] = parts[j] * pw[e]
        yield tuple(parts)

"""Brute-force trace duals by linear algebra on F_q^(2n).

Nothing here touches reciprocals, hats, sign flips or gcds: the dual is the
nullspace of (basis of C) * Gram, where Gram is the matrix of the trace form
in the c-block/d-block coordinates.  Agreement with the closed forms in
:mod:`tracedual.dual` is therefore independent evidence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import linalg
from .codespace import Code
from .gf import Field, Fq2, frobenius, trace
from .skewring import Form, LengthMismatch, RnElem

__all__ = [
    "TooLarge",
    "gram_matrix",
    "pairing_matrix",
    "brute_dual",
    "enumerate_codewords",
    "verify_dual",
    "VerifyReport",
]


class TooLarge(ValueError):
    pass


def _scalar_block(F: Field, form: Form) -> list[list[int]]:
    """Pairing of the F_q basis {1, gamma} of F_{q^2} at a single coordinate."""
    basis = [Fq2(F, 1, 0), Fq2(F, 0, 1)]
    if form is Form.TE:
        return [[trace(x * y) for y in basis] for x in basis]
    return [[trace(x * frobenius(y)) for y in basis] for x in basis]


@lru_cache(maxsize=256)
def gram_matrix(F: Field, n: int, form: Form) -> np.ndarray:
    """2n x 2n matrix G with u (.) v = u_vec G v_vec^T for the chosen trace form."""
    form = Form.parse(form)
    blk = _scalar_block(F, form)
    G = np.zeros((2 * n, 2 * n), np.int64)
    for i in range(n):
        for a in range(2):
            for b in range(2):
                G[a * n + i, b * n + i] = blk[a][b]
    G.setflags(write=False)
    return G


@lru_cache(maxsize=256)
def _gram_diagonal(F: Field, n: int, form: Form) -> np.ndarray | None:
    G = gram_matrix(F, n, form)
    d = np.ascontiguousarray(np.diag(G))
    return d if np.array_equal(G, np.diag(d)) else None


def pairing_matrix(left: np.ndarray, right: np.ndarray, F: Field, n: int, form: Form) -> np.ndarray:
    """Matrix of trace-form values between the rows of ``left`` and ``right``."""
    G = gram_matrix(F, n, Form.parse(form))
    L = np.asarray(left, np.int64).reshape(-1, 2 * n)
    R = np.asarray(right, np.int64).reshape(-1, 2 * n)
    return linalg.matmul(linalg.matmul(L, G, F), np.ascontiguousarray(R.T), F)


def brute_dual(code: Code, form: Form) -> Code:
    """C^perp for the trace form, as the nullspace of basis(C) * Gram."""
    form = Form.parse(form)
    F, n = code.field, code.n
    if code.dim == 0:
        return Code.full(F, n, code.variant)
    diag = _gram_diagonal(F, n, form)
    fast = None if diag is None else linalg.scaled_nullspace_rref(code.basis, diag, F)
    if fast is None:
        M = linalg.matmul(code.basis, gram_matrix(F, n, form), F)
        fast = linalg.nullspace_rref(M, F, 2 * n)
    basis, pivots = fast
    return Code(F, n, code.variant, basis, pivots)


def enumerate_codewords(code: Code, cap: int = 1 << 20) -> Iterator[RnElem]:
    """Every codeword exactly once, as F_q-combinations of the basis rows."""
    F = code.field
    k = code.dim
    if F.q ** k > cap:
        raise TooLarge(f"{F.q}^{k} codewords exceed the cap of {cap}")
    B = [list(map(int, row)) for row in code.basis]
    width = 2 * code.n
    for coeffs in itertools.product(range(F.q), repeat=k):
        vec = [0] * width
        for a, row in zip(coeffs, B):
            if a:
                vec = [F.add(x, F.mul(a, y)) for x, y in zip(vec, row)]
        yield RnElem.from_vector(F, code.n, vec)


@dataclass
class VerifyReport:
    equal: bool
    dim_claimed: int
    dim_reference: int
    dim_primal: int
    # (side, row index, primal row index, pairing value); side is "claimed" or "reference"
    violations: list[tuple[str, int, int, int]] = field(default_factory=list)
    missing: int = 0      # reference basis rows outside the claimed code
    extra: int = 0        # claimed basis rows outside the reference code

    def __bool__(self) -> bool:
        return self.equal

    def summary(self) -> str:
        if self.equal:
            return f"ok: dual dimension {self.dim_claimed} = 2n - {self.dim_primal}"
        lines = [f"MISMATCH: claimed dim {self.dim_claimed}, reference dim {self.dim_reference}, "
                 f"{self.missing} reference rows missing, {self.extra} claimed rows extra"]
        for side, i, j, val in self.violations[:20]:
            lines.append(f"  {side} basis row {i} pairs to {val} with primal row {j}")
        return "\n".join(lines)


def verify_dual(claimed: Code, primal: Code, form: Form,
                reference: Code | None = None) -> VerifyReport:
    """Compare a claimed dual against the brute-force dual of ``primal``."""
    if claimed.n != primal.n:
        raise LengthMismatch(f"lengths {claimed.n} and {primal.n}")
    form = Form.parse(form)
    F, n = primal.field, primal.n
    ref = reference if reference is not None else brute_dual(primal, form)
    equal = claimed.pivots == ref.pivots and np.array_equal(claimed.basis, ref.basis)
    report = VerifyReport(equal, claimed.dim, ref.dim, primal.dim)
    if equal:
        # ref is the exact dual, so equal bases leave nothing to report
        return report
    if primal.dim:
        for side, code in (("claimed", claimed), ("reference", ref)):
            if code.dim == 0:
                continue
            P = pairing_matrix(code.basis, primal.basis, F, n, form)
            for i, j in zip(*np.nonzero(P)):
                report.violations.append((side, int(i), int(j), int(P[i, j])))
    report.missing = int((~claimed.contains_rows(ref.basis)).sum()) if ref.dim else 0
    report.extra = int((~ref.contains_rows(claimed.basis)).sum()) if claimed.dim else 0
    return report

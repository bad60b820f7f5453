"""Row reduction over F_q.

Prime fields go through a small numba kernel working on int64 arrays; other
fields use a pure-Python Gauss-Jordan on the integer codes of
:mod:`tracedual.gf`.  Both return the reduced row echelon form with zero rows
dropped, plus the pivot columns.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ._primepoly import inv_table as _inv_table
from .gf import Field

__all__ = ["module_rref", "nullspace_rref", "scaled_nullspace_rref", "rref", "rank", "nullspace", "reduce_rows", "in_row_space", "same_row_space", "matmul"]


@njit(cache=True)
def _rref_prime(M, p, inv):
    rows, cols = M.shape
    piv = np.empty(min(rows, cols), np.int64)
    nz = np.empty(cols, np.int64)  # nonzero columns of the pivot row
    r = 0
    for col in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if M[i, col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for j in range(col, cols):
                t = M[r, j]
                M[r, j] = M[sel, j]
                M[sel, j] = t
        s = inv[M[r, col]]
        m = 0
        for j in range(col, cols):
            if M[r, j] != 0:
                if s != 1:
                    M[r, j] = M[r, j] * s % p
                nz[m] = j
                m += 1
        for i in range(rows):
            if i != r:
                f = M[i, col]
                if f != 0:
                    g = p - f
                    for t in range(m):
                        j = nz[t]
                        M[i, j] = (M[i, j] + g * M[r, j]) % p
        piv[r] = col
        r += 1
    return r, piv[:r]


@njit(cache=True)
def _closure_rref_prime(G, n, skew, p, inv):
    # rows X^i * g for each generator g, then rref; skew flips the sign of
    # d-coefficients for odd i
    k = G.shape[0]
    M = np.empty((k * n, 2 * n), np.int64)
    for r in range(k):
        for i in range(n):
            row = r * n + i
            sgn = -1 if (skew and i % 2 == 1) else 1
            for j in range(n):
                src = (j - i) % n
                M[row, j] = G[r, src]
                M[row, n + j] = (sgn * G[r, n + src]) % p
    rank, piv = _rref_prime(M, p, inv)
    return M[:rank].copy(), piv


@njit(cache=True)
def _nullspace_rref_prime(M, p, inv):
    rank, piv = _rref_prime(M, p, inv)
    cols = M.shape[1]
    is_piv = np.zeros(cols, np.bool_)
    for i in range(rank):
        is_piv[piv[i]] = True
    N = np.zeros((cols - rank, cols), np.int64)
    k = 0
    for j in range(cols):
        if not is_piv[j]:
            N[k, j] = 1
            for i in range(rank):
                N[k, piv[i]] = (p - M[i, j]) % p
            k += 1
    r2, piv2 = _rref_prime(N, p, inv)
    return N[:r2].copy(), piv2


@njit(cache=True)
def _scaled_nullspace_prime(B, diag, p, inv):
    # nullspace of B * diag(diag)
    M = np.empty_like(B)
    for i in range(B.shape[0]):
        for j in range(B.shape[1]):
            M[i, j] = B[i, j] * diag[j] % p
    return _nullspace_rref_prime(M, p, inv)


@njit(cache=True)
def _reduce_prime(R, piv, V, p):
    # V rows are reduced in place against the rref rows R.
    for k in range(V.shape[0]):
        for i in range(R.shape[0]):
            col = piv[i]
            f = V[k, col]
            if f != 0:
                for j in range(R.shape[1]):
                    V[k, j] = (V[k, j] - f * R[i, j]) % p
    return V


@njit(cache=True)
def _matmul_prime(A, B, p):
    out = np.zeros((A.shape[0], B.shape[1]), np.int64)
    for i in range(A.shape[0]):
        for k in range(A.shape[1]):
            a = A[i, k]
            if a != 0:
                for j in range(B.shape[1]):
                    out[i, j] += a * B[k, j]
        for j in range(B.shape[1]):
            out[i, j] %= p
    return out


def _as_matrix(M, cols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size or cols is None else A.reshape(0, cols)
    if A.size == 0 and cols is not None:
        A = A.reshape(0, cols)
    return A


def _rref_generic(A: np.ndarray, F: Field) -> tuple[np.ndarray, tuple[int, ...]]:
    rows = [list(map(int, r)) for r in A]
    ncols = A.shape[1]
    pivots = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        sel = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        s = F.inv(rows[r][col])
        rows[r] = [F.mul(x, s) for x in rows[r]]
        for i in range(len(rows)):
            f = rows[i][col]
            if i != r and f:
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    out = np.array(rows[:r], dtype=np.int64).reshape(r, ncols)
    return out, tuple(pivots)


def rref(M, field: Field, cols: int | None = None) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form of M over F_q without zero rows, and its pivots."""
    A = _as_matrix(M, cols)
    if A.shape[0] == 0:
        return A.reshape(0, A.shape[1] if A.ndim == 2 else (cols or 0)), ()
    if field.e == 1:
        A %= field.p
        r, piv = _rref_prime(A, field.p, _inv_table(field.p))
        return A[:r].copy(), tuple(piv.tolist())
    return _rref_generic(A, field)


def rank(M, field: Field) -> int:
    return len(rref(M, field)[1])


def reduce_rows(R: np.ndarray, pivots: tuple[int, ...], V, field: Field) -> np.ndarray:
    """Residues of the rows of V after elimination against an rref basis."""
    Vm = _as_matrix(V, R.shape[1])
    if field.e == 1:
        Vm %= field.p
        if R.shape[0] == 0 or Vm.shape[0] == 0:
            return Vm
        return _reduce_prime(R, np.asarray(pivots, np.int64), Vm, field.p)
    F = field
    out = []
    for v in Vm:
        v = list(map(int, v))
        for row, col in zip(R, pivots):
            f = v[col]
            if f:
                v = [F.sub(x, F.mul(f, int(y))) for x, y in zip(v, row)]
        out.append(v)
    return np.array(out, dtype=np.int64).reshape(len(out), R.shape[1])


def in_row_space(R: np.ndarray, pivots: tuple[int, ...], V, field: Field) -> np.ndarray:
    """Boolean per row of V: does it lie in the span of the rref rows R?"""
    res = reduce_rows(R, pivots, V, field)
    return ~res.any(axis=1)


def same_row_space(A, B, field: Field) -> bool:
    Ra, pa = rref(A, field)
    Rb, pb = rref(B, field)
    return pa == pb and np.array_equal(Ra, Rb)


def nullspace(M, field: Field, cols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}."""
    A = _as_matrix(M, cols)
    ncols = A.shape[1]
    R, piv = rref(A, field, ncols)
    pivset = set(piv)
    free = [j for j in range(ncols) if j not in pivset]
    N = np.zeros((len(free), ncols), dtype=np.int64)
    N[np.arange(len(free)), free] = 1
    if piv:
        block = R[:, free].T
        if field.e == 1:
            N[:, list(piv)] = (-block) % field.p
        else:
            N[:, list(piv)] = np.vectorize(lambda x: field.neg(int(x)), otypes=[np.int64])(block)
    return N


def matmul(A, B, field: Field) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if field.e == 1:
        return _matmul_prime(np.ascontiguousarray(A), np.ascontiguousarray(B), field.p)
    F = field
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            acc = 0
            for k in range(A.shape[1]):
                if A[i, k] and B[k, j]:
                    acc = F.add(acc, F.mul(int(A[i, k]), int(B[k, j])))
            out[i, j] = acc
    return out


def module_rref(G, n: int, skew: bool, field: Field,
                reduced: bool = False) -> tuple[np.ndarray, tuple[int, ...]] | None:
    """RREF of all X^i * g (g a row of G) over a prime field; None for e > 1.

    ``reduced`` promises an int64 (k, 2n) array with entries in range(p).
    """
    if field.e != 1:
        return None
    if not reduced:
        G = np.asarray(G, dtype=np.int64).reshape(-1, 2 * n) % field.p
    if G.shape[0] == 0:
        return np.zeros((0, 2 * n), np.int64), ()
    B, piv = _closure_rref_prime(G, n, skew, field.p, _inv_table(field.p))
    return B, tuple(piv.tolist())


def scaled_nullspace_rref(B: np.ndarray, diag: np.ndarray,
                          field: Field) -> tuple[np.ndarray, tuple[int, ...]] | None:
    """Like ``nullspace_rref(B @ diag(diag))`` for reduced int64 B; None for e > 1."""
    if field.e != 1 or B.shape[0] == 0:
        return None
    N, piv = _scaled_nullspace_prime(B, diag, field.p, _inv_table(field.p))
    return N, tuple(piv.tolist())


def nullspace_rref(M, field: Field, cols: int | None = None) -> tuple[np.ndarray, tuple[int, ...]]:
    """RREF basis of {x : M x^T = 0} and its pivots."""
    A = _as_matrix(M, cols)
    if field.e == 1 and A.shape[0]:
        A %= field.p
        N, piv = _nullspace_rref_prime(A, field.p, _inv_table(field.p))
        return N, tuple(piv.tolist())
    return rref(nullspace(A, field, A.shape[1]), field, A.shape[1])

"""Compiled kernels for polynomial arithmetic over prime fields.

Inputs are int64 arrays of ascending coefficients already reduced mod p
with no trailing zeros.  Outputs are trimmed the same way.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _trim_len(a):
    k = a.shape[0]
    while k > 0 and a[k - 1] == 0:
        k -= 1
    return k


@njit(cache=True)
def mul(a, b, p):
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros(0, np.int64)
    out = np.zeros(a.shape[0] + b.shape[0] - 1, np.int64)
    for i in range(a.shape[0]):
        x = a[i]
        if x != 0:
            for j in range(b.shape[0]):
                out[i + j] += x * b[j]
    for i in range(out.shape[0]):
        out[i] %= p
    return out[:_trim_len(out)]


@njit(cache=True)
def _divmod_into(rem, b, p, inv_lc, quot):
    # rem is overwritten with the remainder; quot must be zeroed, length len(rem)-deg b
    db = b.shape[0] - 1
    for k in range(rem.shape[0] - 1 - db, -1, -1):
        c = rem[k + db] * inv_lc % p
        if c != 0:
            quot[k] = c
            for i in range(db + 1):
                rem[k + i] = (rem[k + i] - c * b[i]) % p


@njit(cache=True)
def divmod_(a, b, p, inv_lc):
    db = b.shape[0] - 1
    if a.shape[0] - 1 < db:
        return np.zeros(0, np.int64), a.copy()
    rem = a.copy()
    quot = np.zeros(a.shape[0] - db, np.int64)
    _divmod_into(rem, b, p, inv_lc, quot)
    r = rem[:db]
    return quot[:_trim_len(quot)], r[:_trim_len(r)]


@njit(cache=True)
def _submul(s0, quo, s1, p):
    # s0 - quo * s1, trimmed
    prod = mul(quo, s1, p)
    m = max(s0.shape[0], prod.shape[0])
    out = np.zeros(m, np.int64)
    out[:s0.shape[0]] += s0
    out[:prod.shape[0]] -= prod
    for i in range(m):
        out[i] %= p
    return out[:_trim_len(out)]


@njit(cache=True)
def _deg(row, d):
    while d >= 0 and row[d] == 0:
        d -= 1
    return d


@njit(cache=True)
def _axpy_shift(dst, src, ds, c, k, p):
    # dst -= c X^k src over the first ds + 1 entries of src
    for m in range(ds + 1):
        dst[k + m] = (dst[k + m] - c * src[m]) % p


@njit(cache=True)
def xgcd(a, b, p, inv):
    """Classical extended Euclid; returns monic (h, u, v) with u a + v b = h.

    The remainder sequence runs in place in two-row buffers; each quotient
    term is applied to the cofactors as soon as it is found.
    """
    L = a.shape[0] + b.shape[0] + 1
    R = np.zeros((2, L), np.int64)
    S = np.zeros((2, L), np.int64)
    T = np.zeros((2, L), np.int64)
    R[0, :a.shape[0]] = a
    R[1, :b.shape[0]] = b
    S[0, 0] = 1
    T[1, 0] = 1
    dr = np.array([a.shape[0] - 1, b.shape[0] - 1])
    ds = np.array([0, -1])
    dt = np.array([-1, 0])
    i, j = 0, 1
    while dr[j] >= 0:
        lc_inv = inv[R[j, dr[j]]]
        while dr[i] >= dr[j]:
            k = dr[i] - dr[j]
            c = R[i, dr[i]] * lc_inv % p
            _axpy_shift(R[i], R[j], dr[j], c, k, p)
            _axpy_shift(S[i], S[j], ds[j], c, k, p)
            _axpy_shift(T[i], T[j], dt[j], c, k, p)
            ds[i] = max(ds[i], k + ds[j])
            dt[i] = max(dt[i], k + dt[j])
            dr[i] = _deg(R[i], dr[i] - 1)
        ds[i] = _deg(S[i], ds[i])
        dt[i] = _deg(T[i], dt[i])
        i, j = j, i
    c = inv[R[i, dr[i]]]
    return (R[i, :dr[i] + 1] * c % p, S[i, :ds[i] + 1] * c % p, T[i, :dt[i] + 1] * c % p)


@njit(cache=True)
def gcd(a, b, p, inv):
    L = max(a.shape[0], b.shape[0])
    R = np.zeros((2, L), np.int64)
    R[0, :a.shape[0]] = a
    R[1, :b.shape[0]] = b
    dr = np.array([a.shape[0] - 1, b.shape[0] - 1])
    i, j = 0, 1
    while dr[j] >= 0:
        lc_inv = inv[R[j, dr[j]]]
        while dr[i] >= dr[j]:
            c = R[i, dr[i]] * lc_inv % p
            _axpy_shift(R[i], R[j], dr[j], c, dr[i] - dr[j], p)
            dr[i] = _deg(R[i], dr[i] - 1)
        i, j = j, i
    if dr[i] < 0:
        return np.zeros(0, np.int64)
    return R[i, :dr[i] + 1] * inv[R[i, dr[i]]] % p


_INV: dict[int, np.ndarray] = {}


def inv_table(p: int) -> np.ndarray:
    """Array t with t[x] = x^-1 mod p (t[0] = 0)."""
    tab = _INV.get(p)
    if tab is None:
        tab = np.zeros(p, np.int64)
        for x in range(1, p):
            tab[x] = pow(x, p - 2, p)
        tab.setflags(write=False)
        _INV[p] = tab
    return tab


@njit(cache=True)
def _trimmed(a):
    return a[:_trim_len(a)]


@njit(cache=True)
def _exact_div(a, b, p, inv):
    q, _ = divmod_(a, b, p, inv[b[b.shape[0] - 1]])
    return q


@njit(cache=True)
def mod_xn1(a, n, p):
    if a.shape[0] <= n:
        return a
    out = np.zeros(n, np.int64)
    for i in range(a.shape[0]):
        out[i % n] += a[i]
    for i in range(n):
        out[i] %= p
    return _trimmed(out)


@njit(cache=True)
def neg(a, p):
    return (p - a) % p


@njit(cache=True)
def flip(a, p):
    out = a.copy()
    for i in range(1, a.shape[0], 2):
        out[i] = (p - out[i]) % p
    return out


@njit(cache=True)
def hat(a, n):
    # X^(n - deg a) a*(X), unreduced
    if a.shape[0] == 0:
        return a
    out = np.zeros(n + 1, np.int64)
    for i in range(a.shape[0]):
        out[n - i] = a[i]
    return _trimmed(out)


@njit(cache=True)
def cyclic_pieces(A, lstar, qpoly, wlg, lf, n, p, inv, u_in, v_in, override):
    """Form-independent parts of the general cyclic dual, see dual._Pieces."""
    B = mul(lstar, hat(qpoly, n), p)
    h, u, v = xgcd(A, B, p, inv)
    if override:
        u, v = u_in, v_in
    k = gcd(h, wlg, p, inv)
    M = _exact_div(wlg, k, p, inv)
    g1c = mod_xn1(mul(u, M, p), n, p)
    g1d_v = mod_xn1(mul(mul(v, M, p), lf, p), n, p)
    g2c_b = mod_xn1(_exact_div(B, h, p, inv), n, p)
    g2d = neg(mod_xn1(mul(_exact_div(A, h, p, inv), lf, p), n, p), p)
    return h, k, u, v, g1c, g1d_v, g2c_b, g2d, B


@njit(cache=True)
def skew_pieces(A, lf_flip, qpoly, N, lf, n, p, inv, u_in, v_in, override):
    """Skew counterpart of :func:`cyclic_pieces`."""
    B = mul(lf_flip, flip(hat(qpoly, n), p), p)
    h, u, v = xgcd(A, B, p, inv)
    if override:
        u, v = u_in, v_in
    k = gcd(h, N, p, inv)
    Nk = _exact_div(N, k, p, inv)
    g1c = mod_xn1(mul(u, Nk, p), n, p)
    g1d_v = mod_xn1(mul(mul(flip(v, p), flip(Nk, p), p), lf, p), n, p)
    g2c_b = mod_xn1(_exact_div(B, h, p, inv), n, p)
    g2d = neg(mod_xn1(mul(_exact_div(flip(A, p), flip(h, p), p, inv), lf, p), n, p), p)
    return h, k, u, v, g1c, g1d_v, g2c_b, g2d, B

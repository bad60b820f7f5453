"""Closed-form generators for trace duals of cyclic and skew cyclic codes.

Every function takes a :class:`~tracedual.codespace.CodeSpec` and returns a
:class:`DualReport` holding two generators of the dual module together with
the gcd/Bezout witnesses used to build them.  By default the result is also
checked against :func:`tracedual.oracle.brute_dual`.

Conventions shared by all constructions (``*`` = reciprocal, ``^`` = hat,
``N`` = X^n - 1, ``s`` = delta for the TE form and -delta for TH):

* Bezout data solves ``c' A + s d' B = h``.  We run plain xgcd(A, B) =
  (h, u, v) and set c' = u, d' = v / s.
* Generator parts are reduced mod N right away; only module equality is
  meaningful, since Bezout pairs are not unique.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from math import gcd as int_gcd

import numpy as np

from . import _primepoly as _kern
from .codespace import Code, CodeSpec, QShape, SpecViolation, build_code
from .oracle import VerifyReport, verify_dual
from .polyring import Poly, gcd, xgcd, xn_minus_1
from .skewring import Form, RnElem, Variant

__all__ = [
    "NotADivisor",
    "DualReport",
    "euclidean_dual_linear",
    "dual_te_cyclic_special",
    "dual_te_cyclic_wq",
    "dual_te_cyclic_general",
    "dual_th_cyclic_general",
    "dual_te_skew_special",
    "dual_te_skew_general",
    "dual_th_skew_general",
    "trace_dual",
]


class NotADivisor(ValueError):
    pass


@dataclass
class DualReport:
    construction: str
    form: Form
    spec: CodeSpec
    gen1: RnElem
    gen2: RnElem
    h: Poly | None
    k: Poly | None
    cprime: Poly | None
    dprime: Poly | None
    code: Code
    dual: Code
    verification: VerifyReport | None = None

    @property
    def dim_code(self) -> int:
        return self.code.dim

    @property
    def dim_dual(self) -> int:
        return self.dual.dim

    @property
    def verified(self) -> bool | None:
        """Oracle agreement, or None when the check was skipped."""
        return None if self.verification is None else self.verification.equal


def euclidean_dual_linear(f: Poly, n: int) -> Poly:
    """Generator ((X^n - 1)/f)* of the Euclidean dual of the linear cyclic code <f>."""
    N = xn_minus_1(f.field, n)
    if not f or N % f:
        raise NotADivisor(f"{f} does not divide X^{n} - 1")
    return (N // f).reciprocal()


# -- helpers -------------------------------------------------------------------

def _require(spec: CodeSpec, variant: Variant, *, qzero: bool = False) -> None:
    if spec.variant is not variant:
        raise SpecViolation(f"this construction needs a {variant.value} code, got {spec.variant.value}")
    if qzero and spec.qpoly:
        raise SpecViolation("this construction needs qpoly = 0")


# TE and TH runs on the same spec share A, B and hence the xgcd; sweeps also
# revisit each factorization once per qpoly.
_xgcd = lru_cache(maxsize=256)(xgcd)
_gcd = lru_cache(maxsize=256)(gcd)


@dataclass(frozen=True)
class _FactorData:
    ws: Poly
    ls: Poly
    fs: Poly
    gs: Poly
    lf: Poly       # l* f*
    wlg: Poly      # w* l* g*
    a_cyc: Poly    # X^(n - deg f) w^
    a_skew: Poly   # w^ f^
    lf_flip: Poly  # l*(-X) f*(-X)
    N: Poly
    arrays: dict   # int64 coefficient arrays of the above, prime fields only


@lru_cache(maxsize=64)
def _factor_data(w: Poly, l: Poly, f: Poly, g: Poly, n: int) -> _FactorData:
    ws, ls, fs, gs = w.reciprocal(), l.reciprocal(), f.reciprocal(), g.reciprocal()
    what = w.hat(n)
    parts = dict(ls=ls, lf=ls * fs, wlg=ws * ls * gs, a_cyc=what.shift(n - f.degree),
                 a_skew=what * f.hat(n), lf_flip=ls.flip() * fs.flip(), N=xn_minus_1(w.field, n))
    arrays = {k: np.array(v.coeffs, np.int64) for k, v in parts.items()} if w.field.e == 1 else {}
    return _FactorData(ws, ls, fs, gs, parts["lf"], parts["wlg"], parts["a_cyc"],
                       parts["a_skew"], parts["lf_flip"], parts["N"], arrays)


def _data(spec: CodeSpec) -> _FactorData:
    return _factor_data(spec.w, spec.l, spec.f, spec.g, spec.n)


def _bezout(A: Poly, B: Poly, s: int, bezout: tuple[Poly, Poly] | None):
    """(h, c', d') with c' A + s d' B = h, h = monic gcd(A, B)."""
    F = A.field
    h, u, v = _xgcd(A, B)
    if bezout is None:
        return h, u, v.scale(F.inv(s))
    cp, dp = bezout
    if cp * A + (dp * B).scale(s) != h:
        raise SpecViolation("supplied Bezout pair does not solve c' A + s d' B = h")
    return h, cp, dp


def _finish(construction: str, form: Form, spec: CodeSpec, gen1: RnElem, gen2: RnElem,
            h, k, cp, dp, verify: bool, code: Code | None) -> DualReport:
    F, n = spec.field, spec.n
    if code is None:
        code = build_code(spec)
    dual = Code.from_generators(F, n, spec.variant, (gen1, gen2))
    report = DualReport(construction, form, spec, gen1, gen2, h, k, cp, dp, code, dual)
    if verify:
        report.verification = verify_dual(dual, code, form)
    return report


def _special(spec: CodeSpec, name: str, verify: bool, code: Code | None) -> DualReport:
    n = spec.n
    fd = _data(spec)
    zero = Poly.zero(spec.field)
    gen1 = RnElem(n, fd.ls * fd.gs, zero)
    gen2 = RnElem(n, zero, fd.lf)
    return _finish(name, Form.TE, spec, gen1, gen2, None, None, None, None, verify, code)


@dataclass(frozen=True)
class _Pieces:
    """Form-independent parts of the general constructions.

    With s the form's gamma scalar, c' = u and d' = v / s:
      gen1 = g1c + gamma * g1d_v / s,   gen2 = s * g2c_b + gamma * g2d
    so the TE and TH duals of one spec share everything but two scalings.
    """

    h: Poly
    k: Poly
    u: Poly
    v: Poly
    g1c: Poly
    g1d_v: Poly
    g2c_b: Poly
    g2d: Poly
    A: Poly
    B: Poly


_EMPTY = np.zeros(0, np.int64)

_cached_pieces = lru_cache(maxsize=128)(lambda build, spec: build(spec))


def _general(spec: CodeSpec, form: Form, verify: bool, code: Code | None,
             bezout: tuple[Poly, Poly] | None, build, ring: str) -> DualReport:
    F, n = spec.field, spec.n
    s = form.gamma_norm(F)
    s_inv = F.inv(s)
    if bezout is None:
        pc = _cached_pieces(build, spec)
        cp, dp = pc.u, pc.v.scale(s_inv)
    else:
        pc = _cached_pieces(build, spec)
        cp, dp = bezout
        if cp * pc.A + (dp * pc.B).scale(s) != pc.h:
            raise SpecViolation("supplied Bezout pair does not solve c' A + s d' B = h")
        pc = build(spec, (cp, dp.scale(s)))
    gen1 = RnElem(n, pc.g1c, pc.g1d_v.scale(s_inv))
    gen2 = RnElem(n, pc.g2c_b.scale(s), pc.g2d)
    name = f"{form.value}_{ring}_general"
    return _finish(name, form, spec, gen1, gen2, pc.h, pc.k, cp, dp, verify, code)


# -- cyclic codes --------------------------------------------------------------

def dual_te_cyclic_special(spec: CodeSpec, *, verify: bool = True,
                           code: Code | None = None) -> DualReport:
    """TE dual of <w f, gamma w g>: <l* g*, gamma l* f*>."""
    _require(spec, Variant.CYCLIC, qzero=True)
    return _special(spec, "te_cyclic_special", verify, code)


def dual_te_cyclic_wq(spec: CodeSpec, *, verify: bool = True, code: Code | None = None,
                      bezout: tuple[Poly, Poly] | None = None) -> DualReport:
    """TE dual of <w f + gamma w q, gamma w g>, stated for gcd(n, q) = 1.

    h = gcd(X^(n - deg f), q^) and
      gen1 = g* c' l* + gamma g* d' l* f*
      gen2 = (delta q^/h) l* - gamma (X^(n - deg f)/h) l* f*
    The formula is still evaluated when gcd(n, p) != 1; the oracle decides.
    """
    _require(spec, Variant.CYCLIC)
    if spec.qshape is not QShape.W_MULTIPLIED and spec.qpoly:
        raise SpecViolation("this construction needs the w-multiplied shape <w f + gamma w q, ...>")
    F, n = spec.field, spec.n
    if int_gcd(n, F.p) != 1:
        warnings.warn(f"gcd(n={n}, q={F.q}) != 1; outside the stated hypothesis", stacklevel=2)
    fd = _data(spec)
    delta = F.delta
    A = Poly.monomial(F, n - spec.f.degree)
    B = spec.qpoly.hat(n)
    h, cp, dp = _bezout(A, B, delta, bezout)
    gl = fd.gs * fd.ls
    gen1 = RnElem(n, gl * cp, gl * dp * fd.fs)
    gen2 = RnElem(n, B.exact_div(h).scale(delta) * fd.ls, -(A.exact_div(h) * fd.lf))
    return _finish("te_cyclic_wq", Form.TE, spec, gen1, gen2, h, None, cp, dp, verify, code)


def _kernel_pieces(kernel, spec: CodeSpec, names: tuple[str, str, str],
                   uv: tuple[Poly, Poly] | None) -> _Pieces:
    F, n = spec.field, spec.n
    fd = _data(spec)
    arr = fd.arrays
    if uv is None:
        u_in = v_in = _EMPTY
    else:
        u_in, v_in = (np.array(x.coeffs, np.int64) for x in uv)
    A, side, mod = (arr[k] for k in names)
    out = kernel(A, side, np.array(spec.as_plain().qpoly.coeffs, np.int64), mod, arr["lf"],
                 n, F.p, _kern.inv_table(F.p), u_in, v_in, uv is not None)
    h, k, u, v, g1c, g1d_v, g2c_b, g2d, B = (Poly._raw(F, tuple(a.tolist())) for a in out)
    return _Pieces(h, k, u, v, g1c, g1d_v, g2c_b, g2d, getattr(fd, names[0]), B)


def _cyclic_pieces(spec: CodeSpec, uv: tuple[Poly, Poly] | None = None) -> _Pieces:
    n = spec.n
    fd = _data(spec)
    A = fd.a_cyc
    if spec.field.e == 1:
        return _kernel_pieces(_kern.cyclic_pieces, spec, ("a_cyc", "ls", "wlg"), uv)
    B = fd.ls * spec.as_plain().qpoly.hat(n)
    h, u, v = _xgcd(A, B)
    if uv is not None:
        u, v = uv
    k = _gcd(h, fd.wlg)
    M = fd.wlg.exact_div(k)
    return _Pieces(h, k, u, v, (u * M).mod_xn1(n), (v * M * fd.lf).mod_xn1(n),
                   B.exact_div(h).mod_xn1(n), (-(A.exact_div(h) * fd.lf)).mod_xn1(n), A, B)


def _cyclic_general(spec: CodeSpec, form: Form, verify: bool, code: Code | None,
                    bezout: tuple[Poly, Poly] | None) -> DualReport:
    _require(spec, Variant.CYCLIC)
    return _general(spec, form, verify, code, bezout, _cyclic_pieces, "cyclic")


def dual_te_cyclic_general(spec: CodeSpec, *, verify: bool = True, code: Code | None = None,
                           bezout: tuple[Poly, Poly] | None = None) -> DualReport:
    """TE dual of <w f + gamma q, gamma w g>, no condition on n.

    h' = gcd(X^(n - deg f) w^, l* q^), k' = gcd(h', w* l* g*), M = w* l* g* / k':
      gen1 = c' M + gamma d' M l* f*
      gen2 = delta l* q^ / h' - gamma (X^(n - deg f) w^ / h') l* f*
    """
    return _cyclic_general(spec, Form.TE, verify, code, bezout)


def dual_th_cyclic_general(spec: CodeSpec, *, verify: bool = True, code: Code | None = None,
                           bezout: tuple[Poly, Poly] | None = None) -> DualReport:
    """TH dual: as the TE construction with delta replaced by gamma^(q+1) = -delta."""
    return _cyclic_general(spec, Form.TH, verify, code, bezout)


# -- skew cyclic codes ---------------------------------------------------------

def dual_te_skew_special(spec: CodeSpec, *, verify: bool = True,
                         code: Code | None = None) -> DualReport:
    """TE dual of the skew code <w f, gamma w g>: <l* g*, gamma l* f*>."""
    _require(spec, Variant.SKEW, qzero=True)
    return _special(spec, "te_skew_special", verify, code)


def _skew_pieces(spec: CodeSpec, uv: tuple[Poly, Poly] | None = None) -> _Pieces:
    n = spec.n
    fd = _data(spec)
    A = fd.a_skew
    if spec.field.e == 1:
        return _kernel_pieces(_kern.skew_pieces, spec, ("a_skew", "lf_flip", "N"), uv)
    B = fd.lf_flip * spec.as_plain().qpoly.hat(n).flip()
    h, u, v = _xgcd(A, B)
    if uv is not None:
        u, v = uv
    k = _gcd(h, fd.N)
    Nk = fd.N.exact_div(k)
    return _Pieces(h, k, u, v, (u * Nk).mod_xn1(n), (v.flip() * Nk.flip() * fd.lf).mod_xn1(n),
                   B.exact_div(h).mod_xn1(n),
                   (-(A.flip().exact_div(h.flip()) * fd.lf)).mod_xn1(n), A, B)


def _skew_general(spec: CodeSpec, form: Form, verify: bool, code: Code | None,
                  bezout: tuple[Poly, Poly] | None) -> DualReport:
    _require(spec, Variant.SKEW)
    spec.variant.check_length(spec.n)
    return _general(spec, form, verify, code, bezout, _skew_pieces, "skew")


def dual_te_skew_general(spec: CodeSpec, *, verify: bool = True, code: Code | None = None,
                         bezout: tuple[Poly, Poly] | None = None) -> DualReport:
    """TE dual of the skew code <w f + gamma q, gamma w g> (n even).

    h = gcd(w^ f^, l*(-X) f*(-X) q^(-X)), k = gcd(h, X^n - 1):
      gen1 = c' N/k + gamma d'(-X) (N/k)(-X) l* f*
      gen2 = delta l*(-X) f*(-X) q^(-X) / h - gamma (w^ f^)(-X) / h(-X) l* f*
    """
    return _skew_general(spec, Form.TE, verify, code, bezout)


def dual_th_skew_general(spec: CodeSpec, *, verify: bool = True, code: Code | None = None,
                         bezout: tuple[Poly, Poly] | None = None) -> DualReport:
    """TH dual of the skew code: delta becomes -delta in the Bezout equation and gen2."""
    return _skew_general(spec, Form.TH, verify, code, bezout)


def trace_dual(spec: CodeSpec, form: Form | str = Form.TE, *, verify: bool = True,
               code: Code | None = None) -> DualReport:
    """Pick the construction matching the spec's ring, shape and form."""
    form = Form.parse(form)
    if spec.variant is Variant.CYCLIC:
        if form is Form.TE and spec.qshape is QShape.W_MULTIPLIED:
            return dual_te_cyclic_wq(spec, verify=verify, code=code)
        return _cyclic_general(spec, form, verify, code, None)
    return _skew_general(spec, form, verify, code, None)


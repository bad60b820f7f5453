"""Reading and writing the line-oriented spec and generator files.

A spec file is a list of ``key: value`` lines::

    # the skew example of length 10 over F_3
    variant: skew
    q: 3
    n: 10
    w: 1, 1
    l: 1, 1, 1, 1, 1
    f: 1, -1, 1, -1, 1
    g: -1, 1
    qpoly: 1, 1

Polynomials are comma-separated coefficients in ascending degree.  Integers
may be negative and are reduced mod p.  Over F_{p^e} with e > 1, give
``q: p^e`` and ``modulus:`` (a monic irreducible over F_p), and write each
coefficient as a bracketed digit vector ``[d0 d1 ...]``; plain integers are
read as elements of the prime field.  ``#`` starts a comment.

A generator file uses the same header keys (variant, q, modulus, n) and then
one generator per line, written ``c=<coeffs>; d=<coeffs>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .codespace import CodeSpec, QShape
from .gf import Field, FieldError, make_field
from .polyring import Poly
from .skewring import Form, RnElem, Variant

__all__ = [
    "SpecFileError",
    "ParsedSpec",
    "ParsedGenerators",
    "parse_q",
    "parse_poly",
    "format_poly",
    "parse_spec",
    "format_spec",
    "parse_generators",
    "format_generators",
]

SPEC_KEYS = ("variant", "form", "q", "modulus", "n", "w", "l", "f", "g", "qpoly", "qshape")
REQUIRED_SPEC_KEYS = ("variant", "q", "n", "w", "l", "f", "g")
GEN_KEYS = ("variant", "q", "modulus", "n")

_COEFF = re.compile(r"\s*(?:(-?\d+)|\[([-\d\s]*)\])\s*$")


class SpecFileError(ValueError):
    """Malformed input; ``line`` is 1-based, or None when no single line is at fault."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass(frozen=True)
class ParsedSpec:
    spec: CodeSpec
    form: Form | None


@dataclass(frozen=True)
class ParsedGenerators:
    field: Field
    variant: Variant
    n: int
    generators: tuple[RnElem, ...]


def parse_q(text: str) -> tuple[int, int]:
    """``"9"`` is rejected in favour of ``"3^2"``; returns (p, e)."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+)\s*)?", text)
    if not m:
        raise ValueError(f"q must be p or p^e, got {text!r}")
    return int(m.group(1)), int(m.group(2) or 1)


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text.strip()!r}") from None


def parse_poly(text: str, field: Field) -> Poly:
    text = text.strip()
    if text == "":
        raise ValueError("empty polynomial (write 0 for the zero polynomial)")
    coeffs = []
    for part in text.split(","):
        m = _COEFF.match(part)
        if not m:
            raise ValueError(f"bad coefficient {part.strip()!r}")
        if m.group(1) is not None:
            coeffs.append(field(int(m.group(1))))
        else:
            digits = [int(d) for d in m.group(2).split()]
            if field.e == 1 and len(digits) > 1:
                raise ValueError(f"digit vector {part.strip()} over a prime field")
            coeffs.append(field(digits))
    return Poly.from_elements(field, coeffs)


def format_poly(poly: Poly) -> str:
    F = poly.field
    if not poly:
        return "0"
    if F.e == 1:
        return ", ".join(str(c) for c in poly.coeffs)
    return ", ".join("[" + " ".join(map(str, F.digits(c))) + "]" for c in poly.coeffs)


def _read_pairs(text: str, allowed: tuple[str, ...], extra_line=None) -> dict[str, tuple[str, int]]:
    pairs: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if extra_line is not None and extra_line(line, lineno):
            continue
        if ":" not in line:
            raise SpecFileError(f"expected 'key: value', got {line!r}", lineno)
        key, value = (s.strip() for s in line.split(":", 1))
        key = key.lower()
        if key not in allowed:
            raise SpecFileError(f"unknown key {key!r}", lineno)
        if key in pairs:
            raise SpecFileError(f"duplicate key {key!r}", lineno)
        pairs[key] = (value, lineno)
    return pairs


def _field_from(pairs) -> Field:
    q_text, q_line = pairs["q"]
    try:
        p, e = parse_q(q_text)
        mod = None
        if "modulus" in pairs:
            mod_text, q_line = pairs["modulus"]
            mod = [int(c) for c in mod_text.split(",")]
        return make_field(p, e, mod)
    except (ValueError, FieldError) as exc:
        raise SpecFileError(str(exc), q_line) from None


def _require(pairs, keys) -> None:
    missing = [k for k in keys if k not in pairs]
    if missing:
        raise SpecFileError(f"missing required key(s): {', '.join(missing)}")


def _header(pairs) -> tuple[Field, Variant, int]:
    F = _field_from(pairs)
    v_text, v_line = pairs["variant"]
    n_text, n_line = pairs["n"]
    try:
        variant = Variant.parse(v_text)
    except ValueError as exc:
        raise SpecFileError(str(exc), v_line) from None
    try:
        n = _parse_int(n_text, "n")
        variant.check_length(n)
    except ValueError as exc:
        raise SpecFileError(str(exc), n_line) from None
    return F, variant, n


def parse_spec(text: str) -> ParsedSpec:
    """Parse and validate a spec file; errors carry the offending line number."""
    pairs = _read_pairs(text, SPEC_KEYS)
    _require(pairs, REQUIRED_SPEC_KEYS)
    F, variant, n = _header(pairs)
    polys = {}
    for key in ("w", "l", "f", "g", "qpoly"):
        if key not in pairs:
            continue
        value, lineno = pairs[key]
        try:
            polys[key] = parse_poly(value, F)
        except ValueError as exc:
            raise SpecFileError(f"{key}: {exc}", lineno) from None
    form = None
    if "form" in pairs:
        try:
            form = Form.parse(pairs["form"][0])
        except ValueError as exc:
            raise SpecFileError(str(exc), pairs["form"][1]) from None
    qshape = QShape.PLAIN
    if "qshape" in pairs:
        try:
            qshape = QShape.parse(pairs["qshape"][0])
        except ValueError as exc:
            raise SpecFileError(str(exc), pairs["qshape"][1]) from None
    qpoly = polys.get("qpoly", Poly.zero(F))
    try:
        spec = CodeSpec(variant, n, polys["w"], polys["l"], polys["f"], polys["g"], qpoly, qshape)
    except ValueError as exc:
        line = pairs["qpoly"][1] if "deg qpoly" in str(exc) else None
        raise SpecFileError(str(exc), line) from None
    return ParsedSpec(spec, form)


def _header_lines(F: Field, variant: Variant, n: int) -> list[str]:
    lines = [f"variant: {variant.value}", f"q: {F.describe_q()}"]
    if F.e > 1:
        lines.append("modulus: " + ", ".join(map(str, F.base_modulus)))
    lines.append(f"n: {n}")
    return lines


def format_spec(spec: CodeSpec, form: Form | None = None) -> str:
    lines = _header_lines(spec.field, spec.variant, spec.n)
    if form is not None:
        lines.insert(1, f"form: {Form.parse(form).value}")
    for key, poly in (("w", spec.w), ("l", spec.l), ("f", spec.f), ("g", spec.g),
                      ("qpoly", spec.qpoly)):
        lines.append(f"{key}: {format_poly(poly)}")
    lines.append(f"qshape: {spec.qshape.value}")
    return "\n".join(lines) + "\n"


_GEN_LINE = re.compile(r"c\s*=\s*(?P<c>[^;]*);\s*d\s*=\s*(?P<d>.*)$")


def parse_generators(text: str) -> ParsedGenerators:
    """Parse a generator file: header keys plus ``c=...; d=...`` lines."""
    raw_gens: list[tuple[str, str, int]] = []

    def grab(line: str, lineno: int) -> bool:
        if not line.startswith("c"):
            return False
        m = _GEN_LINE.match(line)
        if not m:
            raise SpecFileError(f"expected 'c=<coeffs>; d=<coeffs>', got {line!r}", lineno)
        raw_gens.append((m.group("c"), m.group("d"), lineno))
        return True

    pairs = _read_pairs(text, GEN_KEYS, grab)
    _require(pairs, ("variant", "q", "n"))
    F, variant, n = _header(pairs)
    gens = []
    for c_text, d_text, lineno in raw_gens:
        try:
            c, d = parse_poly(c_text, F), parse_poly(d_text, F)
        except ValueError as exc:
            raise SpecFileError(str(exc), lineno) from None
        gens.append(RnElem(n, c, d))
    return ParsedGenerators(F, variant, n, tuple(gens))


def format_generators(field: Field, variant: Variant, n: int, generators) -> str:
    lines = _header_lines(field, Variant.parse(variant), n)
    for u in generators:
        lines.append(f"c={format_poly(u.c)}; d={format_poly(u.d)}")
    return "\n".join(lines) + "\n"

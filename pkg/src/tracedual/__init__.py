"""Trace Euclidean and trace Hermitian duals of additive cyclic and skew cyclic codes.

Codes live in R_n = F_{q^2}[X]/(X^n - 1) (or its skew analogue with
a(X) gamma = gamma a(-X)) and are F_q[X]-submodules written
<w f + gamma q, gamma w g> with w l f g = X^n - 1.  The closed-form dual
generators are in :mod:`tracedual.dual`; :mod:`tracedual.oracle` recomputes
every dual by plain linear algebra.
"""

from .codespace import (
    Code,
    CodeSpec,
    NotAModule,
    QShape,
    SpecViolation,
    build_code,
    canonical_decomposition,
    code_equals,
    contains,
    fq_dimension,
)
from .dual import (
    DualReport,
    NotADivisor,
    dual_te_cyclic_general,
    dual_te_cyclic_special,
    dual_te_cyclic_wq,
    dual_te_skew_general,
    dual_te_skew_special,
    dual_th_cyclic_general,
    dual_th_skew_general,
    euclidean_dual_linear,
    trace_dual,
)
from .gf import Field, Fq2, frobenius, make_field, trace
from .oracle import brute_dual, enumerate_codewords, gram_matrix, verify_dual
from .polyring import Poly, gcd, validate_factorization, xgcd, xn_minus_1
from .skewring import Form, RnElem, Variant, bullet, left_action, skew_mul, star, trace_form

__version__ = "0.1.0"

__all__ = [
    "Code", "CodeSpec", "NotAModule", "QShape", "SpecViolation", "build_code",
    "canonical_decomposition", "code_equals", "contains", "fq_dimension",
    "DualReport", "NotADivisor", "dual_te_cyclic_general", "dual_te_cyclic_special",
    "dual_te_cyclic_wq", "dual_te_skew_general", "dual_te_skew_special",
    "dual_th_cyclic_general", "dual_th_skew_general", "euclidean_dual_linear", "trace_dual",
    "Field", "Fq2", "frobenius", "make_field", "trace",
    "brute_dual", "enumerate_codewords", "gram_matrix", "verify_dual",
    "Poly", "gcd", "validate_factorization", "xgcd", "xn_minus_1",
    "Form", "RnElem", "Variant", "bullet", "left_action", "skew_mul", "star", "trace_form",
]

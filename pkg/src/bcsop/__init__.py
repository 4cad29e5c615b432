"""Symmetric orthogonal polynomials ``S_n(p, q, r, s; x)``.

The class consists of the polynomial solutions of

    x^2 (p x^2 + q) y'' + x (r x^2 + s) y' - (n (r + (n - 1) p) x^2 + (1 - (-1)^n) s / 2) y = 0,

normalized so that the lowest-order coefficient is 1 (:func:`explicit_poly`)
or so that the leading coefficient is 1 (:func:`monic_poly`).
"""

from .chebyshev import (
    Cheb56Kind,
    cheb56_poly,
    cheb56_roots,
    cheb56_roots_csv,
    cheb56_trig_eval,
    classical_eval,
    nevai_limit_check,
)
from .errors import *  # noqa: F401,F403
from .errors import BCSOPError
from .identify import LogDerivSpec, params_from_logderiv, params_from_recurrence, parse_cn_template
from .ortho import OrthoReport, favard_norm_sq, finite_bound, gram_report, positivity_scan, total_mass
from .params import (
    TAGS,
    ParamVector,
    SubclassTag,
    Verdict,
    odd_shift,
    params_equivalent,
    subclass_vector,
    validate_params,
)
from .poly import (
    SymPolynomial,
    boundary_value,
    eval_hypergeometric,
    eval_recurrence,
    explicit_poly,
    monic_poly,
    ode_residual,
    recurrence_coefficient,
    recurrence_coefficients,
    recurrence_poly,
)
from .quadrature import QuadratureRule, gauss_rule, integrate, jacobi_matrix, recurrence_nodes
from .weights import (
    FORMS,
    Transform,
    WeightSpec,
    closed_form_mass,
    dual_pdf_eval,
    log_derivative,
    moment,
    pdf_constant,
    pearson_residual,
    weight_closed_form,
    weight_eval,
)

__version__ = "0.1.0"

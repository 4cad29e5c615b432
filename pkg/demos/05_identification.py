"""Recover parameters from a weight or from recurrence coefficients."""

from bcsop import (
    LogDerivSpec,
    Transform,
    params_from_logderiv,
    params_from_recurrence,
    parse_cn_template,
    weight_closed_form,
)

# W'/W = (6x^2 - 16) / (x (x^2 - 4)), ascending coefficients
v = params_from_logderiv(LogDerivSpec([-16, 0, 6], [0, -4, 0, 1]))
print("from (6x^2-16)/(x^3-4x):", v.as_tuple())

# W'/W given in x, with the symmetric variable t = 2x - 1/2; the match keeps the input's scale
spec = LogDerivSpec([6, 16, -32], [-1, 4], Transform(2, -0.5))
print("from a shifted log-derivative:", params_from_logderiv(spec).as_tuple())

cn = parse_cn_template("-2*(6+(-1)**n*(n-6))/((2*n-11)*(2*n-13))")
v = params_from_recurrence(cn)
print("\nfrom C_n:", tuple(round(c, 12) for c in v))
print("weight:", weight_closed_form(v).formula())

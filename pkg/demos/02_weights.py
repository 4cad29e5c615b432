"""Closed-form weights, their masses and the normalized densities."""

from bcsop import (
    ParamVector,
    Transform,
    closed_form_mass,
    moment,
    pdf_constant,
    weight_closed_form,
)

vectors = {
    "Gegenbauer-like (-1,1,-6,2)": ParamVector(-1, 1, -6, 2),
    "Hermite-like (0,1,-2,2)": ParamVector(0, 1, -2, 2),
    "Cauchy type (1,1,-6,2)": ParamVector(1, 1, -6, 2),
    "inverse exponential (1,0,-10,2)": ParamVector(1, 0, -10, 2),
}
for name, v in vectors.items():
    spec = weight_closed_form(v)
    print(f"{name:34s} {spec.form:16s} {spec.formula():28s} mass {closed_form_mass(spec):.12g}")

spec = weight_closed_form(ParamVector(-1, 1, -6, 2))
print("\neven moments of x^2 (1 - x^2):", [round(moment(spec, j), 10) for j in (0, 2, 4, 6)])
print("pdf constant for AlgebraicBeta a=1, b=1:", pdf_constant("AlgebraicBeta", 1, 1))

shifted = weight_closed_form(ParamVector(1, 1, -6, 2), Transform(2, 1))
print("\nshifted weight:", shifted.formula(), "mass", closed_form_mass(shifted))

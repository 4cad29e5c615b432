"""Build members of the class and evaluate them three ways."""

import numpy as np

from bcsop import (
    SubclassTag,
    eval_hypergeometric,
    eval_recurrence,
    explicit_poly,
    monic_poly,
    ode_residual,
    recurrence_coefficients,
    subclass_vector,
)

v = subclass_vector(SubclassTag("gup", 1, 1))
print("GUP(1,1) vector:", v.as_tuple())

for n in range(5):
    print(f"S_{n} coefficients (lowest term first):", np.round(explicit_poly(v, n).coeffs, 6))

print("C_1..C_6:", np.round(recurrence_coefficients(v, 6), 6))

x = 0.37
P = monic_poly(v, 7)
print("\nmonic S_7 at x = 0.37")
print("  explicit      ", P(x))
print("  recurrence    ", eval_recurrence(v, 7, x))
print("  hypergeometric", eval_hypergeometric(v, 7, x))
print("  ODE residual  ", ode_residual(v, 7, x))

"""Fifth and sixth kind Chebyshev polynomials."""

import math

import numpy as np

from bcsop import Cheb56Kind, cheb56_poly, cheb56_roots, cheb56_trig_eval, nevai_limit_check

for kind in Cheb56Kind:
    print(f"{kind.value} kind, weight {kind.weight_formula}")
    th = 0.7
    for n in (2, 4, 6):
        alg = cheb56_poly(kind, n, monic=False)(math.cos(th))
        print(f"  n={n}: trig {cheb56_trig_eval(kind, n, th): .15f}  algebraic {alg: .15f}")
    print("  zeros of degree 6:", np.round(cheb56_roots(kind, 6), 12))

# the recurrence coefficients approach -1/4 slowly, at rate O(1/n)
for n in (20, 200, 2000):
    c, _ = nevai_limit_check(Cheb56Kind.FIFTH.vector, n)
    print(f"fifth kind C_{n} = {c:.8f}, distance to -1/4: {abs(c + 0.25):.2e}")

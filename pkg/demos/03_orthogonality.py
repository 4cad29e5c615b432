"""Numerical Gram matrices against the norms predicted by the recurrence."""

import numpy as np

from bcsop import ParamVector, SubclassTag, finite_bound, gram_report, positivity_scan, subclass_vector

np.set_printoptions(precision=3, linewidth=120)

rep = gram_report(subclass_vector(SubclassTag("gup", 0.5, 2)), 6)
print("GUP(1/2, 2), degrees 0..6")
print("  max off-diagonal (relative):", rep.max_offdiag_rel)
print("  max norm error (relative):  ", rep.max_norm_rel_err)

v = ParamVector(1, 0, -10, 2)
print("\nfinite family x^{-12} e^{-1/x^2}")
print("  finite_bound:", finite_bound(SubclassTag("finite_exponential", 6)))
print("  positivity_scan:", positivity_scan(v, 20))
rep = gram_report(v, 6)
print("  diagonal beyond the bound:", rep.numeric_norms)
print("  divergent pairs:", rep.divergent)
print("  degrees with non-positive predicted norm:", rep.non_positive)

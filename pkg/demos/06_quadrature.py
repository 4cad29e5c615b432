"""Gauss rules from the Jacobi matrix."""

import math

from bcsop import ParamVector, gauss_rule, integrate

v = ParamVector(-1, 1, -3, 2)  # fifth kind, weight x^2 / sqrt(1 - x^2)
rule = gauss_rule(v, 4)
print("nodes:  ", rule.nodes)
print("weights:", rule.weights)
print("cos(pi/10), cos(3pi/10):", math.cos(math.pi / 10), math.cos(3 * math.pi / 10))

# exact for x^6: integral of x^8 / sqrt(1 - x^2) over [-1, 1] is 35 pi / 128
print("\nrule on x^6:", integrate(rule, lambda x: x**6), " exact:", 35 * math.pi / 128)

print("\nCSV form:\n" + rule.to_csv())

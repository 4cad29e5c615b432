"""Shared generators for the test modules."""

from bcsop import ParamVector, monic_poly


def random_valid_vectors(rng, count, need_pq=False):
    """Vectors with no vanishing linear form up to degree 12 and a well-conditioned explicit sum."""
    out = []
    while len(out) < count:
        v = ParamVector(*rng.uniform(-3, 3, 4))
        if need_pq and (abs(v.p) < 0.2 or abs(v.q) < 0.2):
            continue
        try:
            polys = [monic_poly(v, n) for n in range(13)]
        except ArithmeticError:
            continue
        if max(max(abs(c) for c in P.coeffs) for P in polys) > 1e6:
            continue
        out.append(v)
    return out


# criterion number -> list of (part, passed, detail); filled by test_acceptance
ACCEPTANCE = {}


def record(criterion, part, passed, detail):
    ACCEPTANCE.setdefault(criterion, []).append((part, bool(passed), detail))
    line = f"criterion {criterion} [{part}]: {'PASS' if passed else 'FAIL'} ({detail})"
    print(line)
    return passed


def acceptance_lines():
    out = []
    for k in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[k]
        ok = all(p for _, p, _ in parts)
        details = "; ".join(f"{name}: {'ok' if p else 'FAIL'} {d}" for name, p, d in parts)
        out.append(f"ACCEPTANCE {k:2d}: {'PASS' if ok else 'FAIL'}  {details}")
    return out

"""Exception hierarchy.

Every domain error carries a stable machine-readable ``code`` so that the
command line front-end can report it without parsing messages.
"""


class BCSOPError(Exception):
    """Base class for all domain errors raised by :mod:`bcsop`."""

    code = "BCSOP_ERROR"


class DegenerateParameters(BCSOPError, ValueError):
    code = "DEGENERATE_PARAMETERS"

    def __init__(self, pair, vector=None):
        self.pair = pair
        self.vector = vector
        super().__init__(f"parameters {pair} vanish together in {vector}")


class ZeroDenominator(BCSOPError, ZeroDivisionError):
    """A linear form in (q, s) of the explicit sum vanishes."""

    code = "ZERO_DENOMINATOR"

    def __init__(self, index, n):
        self.index = index
        self.n = n
        super().__init__(f"denominator factor i={index} vanishes for degree {n}")


class ZeroLeadingFactor(BCSOPError, ZeroDivisionError):
    """A linear form in (p, r) vanishes, so the monic form is undefined."""

    code = "ZERO_LEADING_FACTOR"

    def __init__(self, index, n):
        self.index = index
        self.n = n
        super().__init__(f"leading factor i={index} vanishes for degree {n}")


class ZeroRecurrenceDenominator(BCSOPError, ZeroDivisionError):
    code = "ZERO_RECURRENCE_DENOMINATOR"

    def __init__(self, n):
        self.n = n
        super().__init__(f"recurrence coefficient C_{n} has a vanishing denominator")


class HypergeometricDomain(BCSOPError, ValueError):
    code = "HYPERGEOMETRIC_DOMAIN"


class BoundaryUndefined(BCSOPError, ValueError):
    code = "BOUNDARY_UNDEFINED"


class GammaPole(BCSOPError, ZeroDivisionError):
    code = "GAMMA_POLE"


class OutsideSupport(BCSOPError, ValueError):
    code = "OUTSIDE_SUPPORT"


class ConstraintViolated(BCSOPError, ValueError):
    code = "CONSTRAINT_VIOLATED"

    def __init__(self, constraint, **values):
        self.constraint = constraint
        self.values = values
        detail = ", ".join(f"{k}={v!r}" for k, v in values.items())
        super().__init__(f"constraint {constraint} violated ({detail})")


class DivergentMass(BCSOPError, ArithmeticError):
    code = "DIVERGENT_MASS"


class NonPositiveNorm(BCSOPError, ArithmeticError):
    code = "NON_POSITIVE_NORM"

    def __init__(self, n, index, value):
        self.n = n
        self.index = index
        self.value = value
        super().__init__(
            f"norm of degree {n} is not positive: -C_{index} = {value!r} <= 0"
        )


class IntegrationFailure(BCSOPError, ArithmeticError):
    code = "INTEGRATION_FAILURE"

    def __init__(self, pair, error_estimate):
        self.pair = pair
        self.error_estimate = error_estimate
        super().__init__(
            f"integration of pair {pair} failed (error estimate {error_estimate!r})"
        )


class TrigPole(BCSOPError, ZeroDivisionError):
    code = "TRIG_POLE"


class OddDegreeUnsupported(BCSOPError, ValueError):
    code = "ODD_DEGREE_UNSUPPORTED"


class PatternMismatch(BCSOPError, ValueError):
    code = "PATTERN_MISMATCH"


class NoSolution(BCSOPError, ValueError):
    code = "NO_SOLUTION"


class AmbiguousSolution(BCSOPError, ValueError):
    code = "AMBIGUOUS_SOLUTION"

    def __init__(self, message, family=None):
        self.family = family
        super().__init__(message)


class VerificationFailed(BCSOPError, ValueError):
    code = "VERIFICATION_FAILED"

    def __init__(self, n, expected, got):
        self.n = n
        self.expected = expected
        self.got = got
        super().__init__(
            f"candidate disagrees with the given recurrence at n={n}: "
            f"expected C_n={expected!r}, candidate gives {got!r}"
        )


class PositivityViolated(BCSOPError, ValueError):
    code = "POSITIVITY_VIOLATED"

    def __init__(self, k, value=None):
        self.k = k
        self.value = value
        super().__init__(f"-C_{k} = {value!r} is not positive")


class EigenFailure(BCSOPError, ArithmeticError):
    code = "EIGEN_FAILURE"

"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation (NaN, wrong sign, ...)."""


class RangeError(ValueError):
    """Input outside the supported evaluation range (|t| too large, n too large, ...)."""


class ParameterError(ValueError):
    """Degenerate or inconsistent parameters (zero Pochhammer denominator, c1=c2=0, ...)."""


class ParityError(ValueError):
    """Operation requested for a parity the quantity vanishes on (k+n odd)."""


class CausticError(ValueError):
    """The classical solution mu(t) vanishes: the quadratic-phase kernel is singular.

    `bracket`, when available, is an interval (lo, hi) containing the
    offending zero of mu.
    """

    def __init__(self, message, t=None, bracket=None):
        super().__init__(message)
        self.t = t
        self.bracket = bracket


class SingularOriginError(ValueError):
    """Evaluation at t <= 0 of an equation with a singular coefficient at the origin."""


class TruncationDomainError(ValueError):
    """Wave-function mass touches the grid boundary; the truncated domain is too small."""


class GridMismatchError(ValueError):
    """Two grid wave functions do not share the same spatial grid."""


class SingularIntegrandError(ValueError):
    """A quadrature integrand has a non-integrable singularity in range."""


class StiffnessError(RuntimeError):
    """Step-size underflow in an ODE integration."""


class ConfigError(ValueError):
    """Invalid or incomplete scenario configuration."""

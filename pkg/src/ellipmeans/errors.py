"""Semantic exceptions and warnings shared by all modules."""


class EllipMeansError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(EllipMeansError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DivergentIntegralError(DomainError):
    """The requested integral diverges (first-kind integral at modulus 1)."""


class DegenerateInputError(EllipMeansError, ValueError):
    """The operation requires a non-degenerate pair (a != b)."""


class ConfigError(EllipMeansError, ValueError):
    """Invalid harness configuration (grid, suite name, arguments)."""


class NearSingularWarning(UserWarning):
    """Result requested extremely close to a logarithmic singularity.

    Emitted by the first-kind integral for modulus r > 1 - 1e-12; the value
    is still returned but loses relative accuracy as r -> 1.
    """

"""Bivariate means on positive pairs: classical, p-th power, and Toader.

Every mean is symmetric (operands are canonicalized to (hi, lo) before
evaluation, so swapping arguments gives bit-identical results) and
positively homogeneous of degree 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import _backend
from .errors import DomainError

__all__ = [
    "PositivePair",
    "MeanKind",
    "TOADER_POWER_LOWER_EXP",
    "TOADER_POWER_UPPER_EXP",
    "classical_mean",
    "power_mean",
    "toader",
]

# Sharp power-mean sandwich exponents for the Toader mean:
# M_{3/2} < T < M_{ln 2 / ln(pi/2)} on distinct positive pairs.
TOADER_POWER_LOWER_EXP = 1.5
TOADER_POWER_UPPER_EXP = math.log(2.0) / math.log(0.5 * math.pi)


@dataclass(frozen=True)
class PositivePair:
    """Two positive finite reals; the argument of every mean."""

    a: float
    b: float

    def __post_init__(self) -> None:
        a = float(self.a)
        b = float(self.b)
        if not (a > 0.0 and math.isfinite(a)) or not (b > 0.0 and math.isfinite(b)):
            raise DomainError(f"pair must be positive finite reals, got ({self.a!r}, {self.b!r})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


class MeanKind(enum.Enum):
    ARITHMETIC = "arithmetic"
    CENTROIDAL = "centroidal"
    QUADRATIC = "quadratic"
    GEOMETRIC = "geometric"


def _ordered(p: PositivePair) -> tuple[float, float]:
    return (p.a, p.b) if p.a >= p.b else (p.b, p.a)


def classical_mean(kind: MeanKind, p: PositivePair) -> float:
    """Closed-form classical mean of the pair."""
    hi, lo = _ordered(p)
    if kind is MeanKind.ARITHMETIC:
        return 0.5 * (hi + lo)
    if kind is MeanKind.CENTROIDAL:
        return 2.0 * (hi * hi + hi * lo + lo * lo) / (3.0 * (hi + lo))
    if kind is MeanKind.QUADRATIC:
        return math.sqrt(0.5 * (hi * hi + lo * lo))
    if kind is MeanKind.GEOMETRIC:
        return math.sqrt(hi * lo)
    raise DomainError(f"unknown mean kind {kind!r}")


def power_mean(exponent: float, p: PositivePair) -> float:
    """p-th power mean ((a^q + b^q)/2)^(1/q), geometric mean at q = 0."""
    q = float(exponent)
    hi, lo = _ordered(p)
    if q == 0.0:
        return math.sqrt(hi * lo)
    return (0.5 * (hi**q + lo**q)) ** (1.0 / q)


def toader(p: PositivePair) -> float:
    """Toader mean: the mean arc-length integral of an ellipse.

    Reduces to (2 max / pi) * E(ecc) with ecc the eccentricity of the
    (max, min) ellipse; returns ``a`` exactly on the diagonal.
    """
    hi, lo = _ordered(p)
    if hi == lo:
        return hi
    t = lo / hi
    ecc = math.sqrt((1.0 - t) * (1.0 + t))
    if ecc >= 1.0:  # t^2 below ulp: E(1) = 1 exactly
        e = 1.0
    else:
        e = _backend.ellip_ke(ecc)[1]
    return (2.0 / math.pi) * hi * e


def _power_excess(q: float, r: float) -> float:
    """M_q(1+r, 1-r) - 1 for r in [0, 1), accurate near r = 0.

    Cancellation-free route: h = ((1+r)^q + (1-r)^q)/2 - 1 via expm1/log1p,
    then (1+h)^(1/q) - 1 the same way.  Used by the verification suites.
    """
    h = 0.5 * (math.expm1(q * math.log1p(r)) + math.expm1(q * math.log1p(-r)))
    return math.expm1(math.log1p(h) / q)

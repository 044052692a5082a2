"""Legendre's complete elliptic integrals of the first and second kind.

The fast path is the AGM iteration (compiled kernel when available); the
independent cross-check is composite Gauss-Legendre quadrature of the
defining integrals over [0, pi/2].  All functions are pure and thread-safe.
"""

from __future__ import annotations

import enum
import functools
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .errors import DivergentIntegralError, DomainError, NearSingularWarning

__all__ = [
    "Modulus",
    "EllipticValues",
    "IntegralKind",
    "as_modulus",
    "ellip_k",
    "ellip_e",
    "ellip_ke",
    "elliptic_oracle",
    "elliptic_derivatives",
    "landen_check",
]

HALF_PI = 0.5 * math.pi

# r above this is flagged NearSingular for the first-kind integral.
_NEAR_SINGULAR = 1.0 - 1e-12


@dataclass(frozen=True)
class Modulus:
    """A validated elliptic modulus r in [0, 1] with cached complement.

    ``r_prime`` is sqrt(1 - r^2), computed as sqrt((1-r)(1+r)) to keep
    accuracy for r near 1.
    """

    r: float
    r_prime: float = field(init=False)

    def __post_init__(self) -> None:
        r = float(self.r)
        if not (0.0 <= r <= 1.0):  # also rejects NaN
            raise DomainError(f"modulus must lie in [0, 1], got {self.r!r}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "r_prime", math.sqrt((1.0 - r) * (1.0 + r)))

    def complement(self) -> "Modulus":
        """Modulus r' at which the complementary integrals are evaluated."""
        return Modulus(self.r_prime)


def as_modulus(m: "Modulus | float") -> Modulus:
    return m if isinstance(m, Modulus) else Modulus(m)


@dataclass(frozen=True)
class EllipticValues:
    """Pair of values (K(r), E(r)) at one modulus."""

    k: float
    e: float


class IntegralKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


def ellip_k(m: "Modulus | float") -> float:
    """Complete elliptic integral of the first kind, K(r).

    AGM route: K = pi / (2 * AGM(1, r')), relative error ~1e-15.
    Raises DivergentIntegralError at r = 1; warns NearSingularWarning for
    r > 1 - 1e-12.
    """
    m = as_modulus(m)
    if m.r == 1.0:
        raise DivergentIntegralError("K(r) diverges at r = 1")
    if m.r > _NEAR_SINGULAR:
        warnings.warn(
            f"K(r) at r = {m.r!r} is within 1e-12 of the singularity",
            NearSingularWarning,
            stacklevel=2,
        )
    if m.r == 0.0:
        return HALF_PI
    return _backend.ellip_ke(m.r)[0]


def ellip_e(m: "Modulus | float") -> float:
    """Complete elliptic integral of the second kind, E(r).

    Endpoints are returned exactly (E(0) = pi/2, E(1) = 1) without
    touching the iteration; elsewhere the AGM kernel is used.
    """
    m = as_modulus(m)
    if m.r == 0.0:
        return HALF_PI
    if m.r == 1.0:
        return 1.0
    return _backend.ellip_ke(m.r)[1]


def ellip_ke(m: "Modulus | float") -> EllipticValues:
    """Both integrals from a single AGM pass; requires r < 1."""
    m = as_modulus(m)
    if m.r == 1.0:
        raise DivergentIntegralError("K(r) diverges at r = 1")
    if m.r == 0.0:
        return EllipticValues(HALF_PI, HALF_PI)
    k, e = _backend.ellip_ke(m.r)
    return EllipticValues(k, e)


# ---------------------------------------------------------------------------
# Quadrature oracle
# ---------------------------------------------------------------------------

_GL_ORDER = 8  # nodes per panel


@functools.lru_cache(maxsize=4)
def _gl_grid(panels: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre grid on [0, pi/2]: (sin^2 theta, weights)."""
    x, w = np.polynomial.legendre.leggauss(_GL_ORDER)
    h = HALF_PI / panels
    left = h * np.arange(panels)
    theta = (left[:, None] + 0.5 * h * (x[None, :] + 1.0)).ravel()
    sin2 = np.sin(theta) ** 2
    weights = 0.5 * h * w
    sin2.flags.writeable = False
    weights.flags.writeable = False
    return sin2, weights


def elliptic_oracle(kind: IntegralKind, m: "Modulus | float", panels: int) -> float:
    """Direct quadrature of the defining integral; cross-check only.

    Composite Gauss-Legendre with 8 nodes per panel.  Never used on the
    fast path.  ``panels`` >= 8; the first kind requires r < 1.
    """
    m = as_modulus(m)
    if panels < 8:
        raise DomainError(f"oracle needs at least 8 panels, got {panels}")
    if kind is IntegralKind.FIRST and m.r == 1.0:
        raise DivergentIntegralError("first-kind integral diverges at r = 1")
    sin2, w = _gl_grid(int(panels))
    vals = 1.0 - (m.r * m.r) * sin2
    if kind is IntegralKind.FIRST:
        f = 1.0 / np.sqrt(vals)
    elif kind is IntegralKind.SECOND:
        f = np.sqrt(vals)
    else:
        raise DomainError(f"unknown integral kind {kind!r}")
    # Per-panel partial sums, then a pairwise reduction: keeps the rounding
    # error of the 8n-term sum near 1e-15 even for n = 1e6.
    panel_sums = f.reshape(-1, _GL_ORDER) @ w
    return float(np.sum(panel_sums))


# ---------------------------------------------------------------------------
# Derivatives and the quadratic-modulus identity
# ---------------------------------------------------------------------------


def elliptic_derivatives(m: "Modulus | float") -> tuple[float, float]:
    """(dK/dr, dE/dr) from the closed forms, valid on 0 < r < 1.

    dK/dr = (E - r'^2 K) / (r r'^2),  dE/dr = (E - K) / r.
    """
    m = as_modulus(m)
    if not 0.0 < m.r < 1.0:
        raise DomainError("derivative formulas are singular at r in {0, 1}")
    k, e = _backend.ellip_ke(m.r)
    rp2 = m.r_prime * m.r_prime
    dk = (e - rp2 * k) / (m.r * rp2)
    de = (e - k) / m.r
    return dk, de


def landen_check(m: "Modulus | float") -> tuple[float, float]:
    """Both sides of E(2 sqrt(r)/(1+r)) = (2 E(r) - r'^2 K(r)) / (1+r).

    Returns (lhs, rhs); callers assert the residual is small.  Valid for
    r in [0, 1); both sides equal pi/2 at r = 0.
    """
    m = as_modulus(m)
    if m.r == 1.0:
        raise DomainError("identity needs K(r), which diverges at r = 1")
    up = 2.0 * math.sqrt(m.r) / (1.0 + m.r)
    lhs = ellip_e(min(up, 1.0))
    if m.r == 0.0:
        return lhs, HALF_PI
    k, e = _backend.ellip_ke(m.r)
    rhs = (2.0 * e - (m.r_prime * m.r_prime) * k) / (1.0 + m.r)
    return lhs, rhs

"""Sharp constants, mean envelopes, and elementary bounds for E(r).

Houses the two sharp convex-combination envelopes of the Toader mean in
terms of the centroidal and arithmetic means, the monotone quotient
functions whose endpoint limits realize the sharp constants, and the
eight closed-form elementary bounds on the second-kind integral together
with their comparison machinery.

Numerical policy: every quantity that degenerates like a power of r near
the diagonal (the quotients, the lemma ratio, the bound gaps) has a
series branch below ``_RSMALL`` so that signs and margins stay exact
where direct binary64 evaluation would be pure cancellation noise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _backend
from ._series import (
    F32_GAP_NUM,
    G_TAIL,
    G_TAIL2,
    LEMMA21_TAIL,
    horner,
)
from .elliptic import Modulus, as_modulus, ellip_e
from .errors import DegenerateInputError, DomainError
from .means import PositivePair, classical_mean, MeanKind

__all__ = [
    "SharpConstants",
    "SHARP_CONSTANTS",
    "BoundFamily",
    "TightnessRow",
    "to_modulus",
    "toader_envelope_31",
    "toader_envelope_32",
    "quotient_f31",
    "quotient_f32",
    "lemma21_ratio",
    "lemma23_value",
    "e_bound",
    "comparison_row",
    "gap_lower41_vs_lower42",
    "gap_lower41_vs_lowerL",
    "gap42_identity",
    "gapL_identity",
]

ALPHA1 = 0.75
BETA1 = 12.0 / math.pi - 3.0
ALPHA2 = math.pi - 3.0
BETA2 = 0.25

# Below this modulus the O(r^2)-degenerate combinations switch to series.
_RSMALL = 0.01

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class SharpConstants:
    """The four best-possible convex-combination coefficients."""

    alpha1: float = ALPHA1
    beta1: float = BETA1
    alpha2: float = ALPHA2
    beta2: float = BETA2

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha1 < self.beta1 < 1.0):
            raise DomainError("need 0 < alpha1 < beta1 < 1")
        if not (0.0 < self.alpha2 < self.beta2 < 1.0):
            raise DomainError("need 0 < alpha2 < beta2 < 1")


SHARP_CONSTANTS = SharpConstants()


class BoundFamily(enum.Enum):
    """The eight elementary bound functions for E(r) on (0, 1)."""

    LOWER_41 = "lower41"
    UPPER_41_J = "J"
    LOWER_42 = "lower42"
    UPPER_42_D = "D"
    LOWER_43 = "lower43"
    UPPER_43_Q = "Q"
    LOWER_L = "lowerL"
    UPPER_L_Y = "Y"

    @property
    def is_lower(self) -> bool:
        return self.name.startswith("LOWER")

    @property
    def label(self) -> str:
        """Column label used in CSV output."""
        return self.value


LOWER_FAMILIES = tuple(f for f in BoundFamily if f.is_lower)
UPPER_FAMILIES = tuple(f for f in BoundFamily if not f.is_lower)


@dataclass(frozen=True)
class TightnessRow:
    """All eight bound values against the true E at one modulus."""

    r: float
    e_true: float
    values: dict[BoundFamily, float]
    lower_ok: dict[BoundFamily, bool]
    upper_ok: dict[BoundFamily, bool]


# ---------------------------------------------------------------------------
# Pair -> modulus reduction and the two sharp envelopes
# ---------------------------------------------------------------------------


def to_modulus(p: PositivePair) -> Modulus:
    """Modulus r = (1 - t)/(1 + t) with t = min/max in (0, 1).

    Raises DegenerateInputError on the diagonal (r would be 0).
    """
    if p.a == p.b:
        raise DegenerateInputError("a == b maps to r = 0; handle the diagonal separately")
    hi, lo = (p.a, p.b) if p.a > p.b else (p.b, p.a)
    t = lo / hi
    return Modulus((1.0 - t) / (1.0 + t))


def toader_envelope_31(p: PositivePair) -> tuple[float, float]:
    """Sharp convex-combination envelope of T between C-bar and A.

    lower = (3/4) Cbar + (1/4) A,  upper = (12/pi - 3) Cbar + (4 - 12/pi) A;
    lower < T(a, b) < upper strictly for a != b.
    """
    if p.a == p.b:
        raise DegenerateInputError("envelope requires a != b")
    cbar = classical_mean(MeanKind.CENTROIDAL, p)
    am = classical_mean(MeanKind.ARITHMETIC, p)
    lower = ALPHA1 * cbar + (1.0 - ALPHA1) * am
    upper = BETA1 * cbar + (1.0 - BETA1) * am
    return lower, upper


def toader_envelope_32(p: PositivePair) -> tuple[float, float]:
    """Sharp reciprocal-combination envelope of T, restated in T-space.

    From (pi-3)/A + (4-pi)/Cbar < 1/T < (1/4)/A + (3/4)/Cbar:
    lower = 1 / ((1/4)/A + (3/4)/Cbar), upper = 1 / ((pi-3)/A + (4-pi)/Cbar).
    """
    if p.a == p.b:
        raise DegenerateInputError("envelope requires a != b")
    cbar = classical_mean(MeanKind.CENTROIDAL, p)
    am = classical_mean(MeanKind.ARITHMETIC, p)
    lower = 1.0 / (BETA2 / am + (1.0 - BETA2) / cbar)
    upper = 1.0 / (ALPHA2 / am + (1.0 - ALPHA2) / cbar)
    return lower, upper


# ---------------------------------------------------------------------------
# Monotone quotients and lemma functions
# ---------------------------------------------------------------------------


def _require_open_unit(r: float) -> None:
    if not 0.0 < r < 1.0:
        raise DomainError(f"defined on the open interval (0, 1), got r = {r!r}")


def _toader_excess(r: float) -> float:
    """G(r) - 1 where G = (2/pi)(2 E - r'^2 K); the T/A - 1 of (1+r, 1-r)."""
    u = r * r
    if r < _RSMALL:
        return u * horner(G_TAIL, u)
    k, e = _backend.ellip_ke(r)
    return (2.0 / math.pi) * (2.0 * e - (1.0 - u) * k) - 1.0


def quotient_f31(m: "Modulus | float") -> float:
    """Monotone quotient 3 ((2/pi)(2E - r'^2 K) - 1) / r^2 on (0, 1).

    Strictly increasing with range (3/4, 12/pi - 3); its endpoint limits
    are the sharp coefficients of the direct envelope.
    """
    m = as_modulus(m)
    _require_open_unit(m.r)
    u = m.r * m.r
    if m.r < _RSMALL:
        return 3.0 * horner(G_TAIL, u)
    return 3.0 * _toader_excess(m.r) / u


def _f31_gaps(r: float) -> tuple[float, float]:
    """(f31 - 3/4, (12/pi - 3) - f31), each strictly positive on (0, 1)."""
    u = r * r
    if r < _RSMALL:
        lo = 3.0 * u * horner(G_TAIL2, u)
        return lo, (BETA1 - ALPHA1) - lo
    f = 3.0 * _toader_excess(r) / u
    return f - ALPHA1, BETA1 - f


def quotient_f32(m: "Modulus | float") -> float:
    """Monotone quotient (3 + r^2 - (6/pi)(2E - r'^2 K)) / ((2/pi) r^2 (2E - r'^2 K)).

    Strictly decreasing with range (pi - 3, 1/4); its endpoint limits are
    the sharp coefficients of the reciprocal envelope.
    """
    m = as_modulus(m)
    _require_open_unit(m.r)
    u = m.r * m.r
    if m.r < _RSMALL:
        g = 1.0 + u * horner(G_TAIL, u)
        return BETA2 - u * horner(F32_GAP_NUM, u) / g
    k, e = _backend.ellip_ke(m.r)
    combo = 2.0 * e - (1.0 - u) * k
    return (3.0 + u - (6.0 / math.pi) * combo) / ((2.0 / math.pi) * u * combo)


def _f32_gaps(r: float) -> tuple[float, float]:
    """(f32 - (pi - 3), 1/4 - f32), each strictly positive on (0, 1)."""
    u = r * r
    if r < _RSMALL:
        g = 1.0 + u * horner(G_TAIL, u)
        up = u * horner(F32_GAP_NUM, u) / g
        return (BETA2 - ALPHA2) - up, up
    f = quotient_f32(Modulus(r))
    return f - ALPHA2, BETA2 - f


def lemma21_ratio(m: "Modulus | float") -> float:
    """(E - r'^2 K) / r^2: strictly increasing from (0, 1) onto (pi/4, 1)."""
    m = as_modulus(m)
    _require_open_unit(m.r)
    u = m.r * m.r
    if m.r < _RSMALL:
        return HALF_PI * horner(LEMMA21_TAIL, u)
    k, e = _backend.ellip_ke(m.r)
    return (e - (1.0 - u) * k) / u


def lemma23_value(m: "Modulus | float") -> float:
    """5 E(r) - 3 r'^2 K(r): positive, strictly increasing on [0, 1].

    Equals pi at r = 0 and 5 at r = 1 (where r'^2 K -> 0).
    """
    m = as_modulus(m)
    if m.r == 1.0:
        return 5.0
    if m.r == 0.0:
        return 5.0 * HALF_PI - 3.0 * HALF_PI
    k, e = _backend.ellip_ke(m.r)
    return 5.0 * e - 3.0 * (m.r_prime * m.r_prime) * k


# ---------------------------------------------------------------------------
# Elementary bounds for E(r)
# ---------------------------------------------------------------------------

_D_SQ_COEF = (4.0 - math.pi) / ((math.sqrt(2.0) - 1.0) * math.pi)
_D_LIN_COEF = (math.sqrt(2.0) * math.pi - 4.0) / (2.0 * (math.sqrt(2.0) - 1.0) * math.pi)
_INV_2SQRT2 = 1.0 / (2.0 * math.sqrt(2.0))


def _bound_lower41(r: float, x: float) -> float:
    return HALF_PI * ((1.0 + x + x * x) / (2.0 * (1.0 + x)) + (1.0 + x) / 8.0)


def _bound_upper41_j(r: float, x: float) -> float:
    return HALF_PI * (
        (8.0 / math.pi - 2.0) * (1.0 + x + x * x) / (1.0 + x)
        + (2.0 - 6.0 / math.pi) * (1.0 + x)
    )


def _bound_lower42(r: float, x: float) -> float:
    return HALF_PI * (0.5 * math.sqrt(0.5 * (1.0 + x * x)) + 0.25 * (1.0 + x))


def _bound_upper42_d(r: float, x: float) -> float:
    return HALF_PI * (
        _D_SQ_COEF * math.sqrt(0.5 * (1.0 + x * x)) + _D_LIN_COEF * (1.0 + x)
    )


def _bound_lower43(r: float, x: float) -> float:
    # log1p form of ln((1+r)^(1-r) / (1-r)^(1+r)): stable below r ~ 1e-4
    ln_term = (1.0 - r) * math.log1p(r) - (1.0 + r) * math.log1p(-r)
    return HALF_PI - 0.5 * ln_term


def _bound_upper43_q(r: float, x: float) -> float:
    # ((1 - r^2)/(4r)) ln((1+r)/(1-r)) = ((1 - r^2)/(2r)) atanh(r)
    return 0.5 * (math.pi - 1.0) + (1.0 - r * r) / (2.0 * r) * math.atanh(r)


def _bound_lower_l(r: float, x: float) -> float:
    return HALF_PI * math.sqrt(6.0 + 2.0 * x - 3.0 * r * r) * _INV_2SQRT2


def _bound_upper_l_y(r: float, x: float) -> float:
    return HALF_PI * math.sqrt(10.0 - 2.0 * x - 5.0 * r * r) * _INV_2SQRT2


_BOUND_FUNCS = {
    BoundFamily.LOWER_41: _bound_lower41,
    BoundFamily.UPPER_41_J: _bound_upper41_j,
    BoundFamily.LOWER_42: _bound_lower42,
    BoundFamily.UPPER_42_D: _bound_upper42_d,
    BoundFamily.LOWER_43: _bound_lower43,
    BoundFamily.UPPER_43_Q: _bound_upper43_q,
    BoundFamily.LOWER_L: _bound_lower_l,
    BoundFamily.UPPER_L_Y: _bound_upper_l_y,
}


def e_bound(family: BoundFamily, m: "Modulus | float") -> float:
    """Evaluate one elementary bound function for E(r) on (0, 1)."""
    m = as_modulus(m)
    _require_open_unit(m.r)
    return _BOUND_FUNCS[family](m.r, m.r_prime)


def comparison_row(m: "Modulus | float") -> TightnessRow:
    """Evaluate E(r) and all eight bounds; flag each side by comparison."""
    m = as_modulus(m)
    _require_open_unit(m.r)
    e_true = ellip_e(m)
    values = {fam: _BOUND_FUNCS[fam](m.r, m.r_prime) for fam in BoundFamily}
    lower_ok = {fam: values[fam] <= e_true for fam in LOWER_FAMILIES}
    upper_ok = {fam: values[fam] >= e_true for fam in UPPER_FAMILIES}
    return TightnessRow(m.r, e_true, values, lower_ok, upper_ok)


# ---------------------------------------------------------------------------
# Dominance gaps between the lower bounds, and their polynomial identities
# ---------------------------------------------------------------------------


def _require_closed_unit(x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"gap functions take x in [0, 1], got {x!r}")


def gap_lower41_vs_lower42(x: float) -> float:
    """Bracket-space gap (3x^2 + 2x + 3 - 2(1+x) sqrt(2(1+x^2))) / (8(1+x)).

    Rationalized to (1-x)^4 / (8(1+x)(3x^2 + 2x + 3 + 2(1+x) sqrt(2(1+x^2)))),
    which keeps the value exact-signed as x -> 1 where the direct form is
    a catastrophic cancellation.  Positive on [0, 1), zero at x = 1.
    """
    x = float(x)
    _require_closed_unit(x)
    q = 1.0 - x
    num = q * q * q * q
    poly = 3.0 * x * x + 2.0 * x + 3.0
    root = 2.0 * (1.0 + x) * math.sqrt(2.0 * (1.0 + x * x))
    return num / (8.0 * (1.0 + x) * (poly + root))


def gap_lower41_vs_lowerL(x: float) -> float:
    """(5x^2 + 6x + 5)^2 - 8(x+1)^2 (3x^2 + 2x + 3), identically (x-1)^4.

    Evaluated in exact rational arithmetic (the float subtraction is pure
    noise near x = 1) and rounded once at the end.
    """
    x = float(x)
    _require_closed_unit(x)
    xf = Fraction(x)
    lhs = (5 * xf * xf + 6 * xf + 5) ** 2 - 8 * (xf + 1) ** 2 * (3 * xf * xf + 2 * xf + 3)
    return float(lhs)


def gap42_identity(x: float) -> tuple[float, float]:
    """Exact values of (3x^2+2x+3)^2 - 8(1+x)^2(1+x^2) and (1-x)^4 at x."""
    xf = Fraction(float(x))
    lhs = (3 * xf * xf + 2 * xf + 3) ** 2 - 8 * (1 + xf) ** 2 * (1 + xf * xf)
    rhs = (1 - xf) ** 4
    return float(lhs), float(rhs)


def gapL_identity(x: float) -> tuple[float, float]:
    """Exact values of (5x^2+6x+5)^2 - 8(x+1)^2(3x^2+2x+3) and (x-1)^4 at x."""
    xf = Fraction(float(x))
    lhs = (5 * xf * xf + 6 * xf + 5) ** 2 - 8 * (xf + 1) ** 2 * (3 * xf * xf + 2 * xf + 3)
    rhs = (xf - 1) ** 4
    return float(lhs), float(rhs)

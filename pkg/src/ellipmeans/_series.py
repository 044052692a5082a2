"""Small-modulus power series used by the stable evaluation branches.

Everything here is expressed in u = r^2.  Let

    G(r) = (2/pi) * (2 E(r) - r'^2 K(r))

be the Toader-over-arithmetic ratio of the pair (1+r, 1-r).  From the
hypergeometric series of K and E one gets closed-form coefficients

    G(r) - 1                 = sum_{n>=1} (c_{n-1} / 2n)^2   r^(2n)
    (E(r) - r'^2 K(r)) / r^2 = (pi/2) sum_{n>=1} (c_{n-1}^2 / 2n) r^(2n-2)

with c_0 = 1, c_n = c_{n-1} (2n-1)/(2n).  Direct AGM evaluation of these
combinations loses all accuracy below r ~ 1e-3 (they are O(r^2)
differences of O(1) quantities), so callers switch to the series there.

Power-mean tails come from composing ((1+r)^q + (1-r)^q)/2 with the
binomial series of x^(1/q); the q = 3/2 difference tail is assembled in
exact rational arithmetic because its r^2 term vanishes identically.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .means import TOADER_POWER_UPPER_EXP

N_TERMS = 10


def horner(coeffs: tuple[float, ...], x: float) -> float:
    """Evaluate sum coeffs[i] * x^i (coefficients low to high)."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _binom_coeffs(q, count: int) -> list:
    """binom(q, j) for j = 0..count; exact when q is a Fraction."""
    one = q / q
    out = [one]
    for j in range(1, count + 1):
        out.append(out[-1] * (q - (j - 1)) / j)
    return out


def power_mean_excess_coeffs(q, n: int = N_TERMS) -> list:
    """Coefficients mu_1..mu_n of M_q(1+r, 1-r) - 1 in powers of r^2."""
    zero = q * 0
    big = _binom_coeffs(q, 2 * n)
    x_poly = [zero] + [big[2 * k] for k in range(1, n + 1)]
    inv_q = (Fraction(1) if isinstance(q, Fraction) else 1.0) / q
    outer = _binom_coeffs(inv_q, n)
    result = [zero] * (n + 1)
    xpow = [zero] * (n + 1)
    xpow[0] = q / q
    for j in range(n + 1):
        cj = outer[j]
        for d in range(n + 1):
            result[d] = result[d] + cj * xpow[d]
        # truncated multiply by x_poly for the next power
        nxt = [zero] * (n + 1)
        for i in range(n + 1):
            if xpow[i] == 0:
                continue
            for k in range(1, n + 1 - i):
                nxt[i + k] = nxt[i + k] + xpow[i] * x_poly[k]
        xpow = nxt
    return result[1 : n + 1]


def _k_series_ratios(n: int) -> list[Fraction]:
    """c_0..c_n with c_k = c_{k-1} (2k-1)/(2k)."""
    c = [Fraction(1)]
    for k in range(1, n + 1):
        c.append(c[-1] * Fraction(2 * k - 1, 2 * k))
    return c


_C = _k_series_ratios(N_TERMS)

_G_FRAC = [(_C[n - 1] / (2 * n)) ** 2 for n in range(1, N_TERMS + 1)]
_LEM21_FRAC = [_C[n - 1] ** 2 / (2 * n) for n in range(1, N_TERMS + 1)]
_MU_32 = power_mean_excess_coeffs(Fraction(3, 2))
_MU_UP = power_mean_excess_coeffs(float(TOADER_POWER_UPPER_EXP))

# G(r) - 1 = r^2 * horner(G_TAIL, r^2)
G_TAIL: tuple[float, ...] = tuple(float(g) for g in _G_FRAC)

# f31 - 3/4 = 3 r^2 * horner(G_TAIL2, r^2) where f31 = 3 (G - 1) / r^2
G_TAIL2: tuple[float, ...] = G_TAIL[1:]

# (E - r'^2 K) / r^2 = (pi/2) * horner(LEMMA21_TAIL, r^2)
LEMMA21_TAIL: tuple[float, ...] = tuple(float(v) for v in _LEM21_FRAC)

# (1/4 - f32) * G = r^2 * horner(F32_GAP_NUM, r^2)
F32_GAP_NUM: tuple[float, ...] = tuple(
    float(3 * _G_FRAC[n] + _G_FRAC[n - 1] / 4) for n in range(1, N_TERMS)
)

# G - (M_{3/2} over A) = r^4 * horner(EQ14_LOWER_TAIL, r^2); the r^2 terms
# cancel exactly, which is why this tail is built from rational arithmetic.
_E14 = [_G_FRAC[n] - _MU_32[n] for n in range(N_TERMS)]
assert _E14[0] == 0
EQ14_LOWER_TAIL: tuple[float, ...] = tuple(float(v) for v in _E14[1:])

# (M_q over A) - G for the sharp upper exponent = r^2 * horner(..., r^2)
EQ15_UPPER_TAIL: tuple[float, ...] = tuple(
    float(_MU_UP[n] - float(_G_FRAC[n])) for n in range(N_TERMS)
)

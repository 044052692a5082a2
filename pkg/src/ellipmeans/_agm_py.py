"""Pure-Python AGM kernel; drop-in fallback for the compiled extension.

Keep this file in lockstep with ``_agm_cy.pyx`` — the two backends must
produce identical iteration sequences so results agree to the last ulp
apart from libm differences.
"""

import math

# Relative agreement of the AGM legs that terminates the iteration.
# Quadratic convergence reaches it in <= ~8 steps for r <= 0.999999.
_AGM_TOL = 1e-16
_MAX_ITER = 64


def ellip_ke(r: float) -> tuple[float, float]:
    """Complete elliptic integrals (K, E) at modulus ``r`` in [0, 1).

    One AGM pass yields both: K = pi / (2 * AGM(1, r')) and
    E = K * (1 - sum 2^(n-1) c_n^2) with c_0 = r, c_n the half-gap of the
    n-th AGM legs.  The caller guarantees 0 <= r < 1.
    """
    rp = math.sqrt((1.0 - r) * (1.0 + r))
    a = 1.0
    b = rp
    csum = 0.5 * r * r
    pw = 0.5
    gap_prev = math.inf
    for _ in range(_MAX_ITER):
        gap = a - b
        # Stop at the requested agreement, or when rounding stalls the
        # contraction (the gap can floor at 1-2 ulp): past that point the
        # 2^n c^2 terms are pure noise with exponentially growing weights.
        if gap <= _AGM_TOL * a or gap >= gap_prev:
            break
        gap_prev = gap
        c = 0.5 * gap
        gm = math.sqrt(a * b)
        a, b = 0.5 * (a + b), gm
        pw *= 2.0
        csum += pw * c * c
    k = math.pi / (a + b)
    return k, k * (1.0 - csum)

# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled AGM kernel for the complete elliptic integrals.

Mirror of ``_agm_py.py``; keep the iteration identical so the backends
agree to the last ulp apart from libm differences.
"""

from libc.math cimport fabs, sqrt, M_PI, INFINITY

DEF AGM_TOL = 1e-16
DEF MAX_ITER = 64


def ellip_ke(double r):
    """Complete elliptic integrals (K, E) at modulus ``r`` in [0, 1)."""
    cdef double rp = sqrt((1.0 - r) * (1.0 + r))
    cdef double a = 1.0
    cdef double b = rp
    cdef double csum = 0.5 * r * r
    cdef double pw = 0.5
    cdef double gap_prev = INFINITY
    cdef double gap, c, gm, k
    cdef int i
    for i in range(MAX_ITER):
        gap = a - b
        # Stop at the requested agreement, or when rounding stalls the
        # contraction (the gap can floor at 1-2 ulp): past that point the
        # 2^n c^2 terms are pure noise with exponentially growing weights.
        if gap <= AGM_TOL * a or gap >= gap_prev:
            break
        gap_prev = gap
        c = 0.5 * gap
        gm = sqrt(a * b)
        a = 0.5 * (a + b)
        b = gm
        pw *= 2.0
        csum += pw * c * c
    k = M_PI / (a + b)
    return k, k * (1.0 - csum)

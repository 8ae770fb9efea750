# cython: language_level=3, cdivision=True, boundscheck=False
"""Compiled scalar kernels; signature-compatible twin of ``_kernels_py``."""

from libc.math cimport asin, atan, cos, sin, sqrt, tan, M_PI

PI = M_PI
HALF_PI = M_PI / 2.0


cdef inline double _asin_sqrt_frac(double num, double comp, double denom):
    # asin(sqrt(num/denom)); comp carries denom - num without cancellation,
    # and the complementary branch keeps the arcsine away from 1
    cdef double x
    if num <= comp:
        x = num / denom
        if x > 1.0:
            x = 1.0
        return asin(sqrt(x))
    x = comp / denom
    if x > 1.0:
        x = 1.0
    return 0.5 * M_PI - asin(sqrt(x))


cpdef double ft_forward(double p, double n):
    cdef double inv_n = 1.0 / n
    cdef double denom = 1.0 + inv_n
    cdef double q = 1.0 - p
    cdef double t1 = _asin_sqrt_frac(p, q + inv_n, denom)
    cdef double t2 = _asin_sqrt_frac(p + inv_n, q, denom)
    return 0.5 * (t1 + t2)


cpdef double asin_sqrt(double p):
    if p > 1.0:
        p = 1.0
    return asin(sqrt(p))


cpdef double sin_sq(double theta):
    cdef double s = sin(theta)
    return s * s


cpdef tuple inverse_raw(double theta, double n):
    cdef double s = sin(2.0 * theta)
    cdef double g = s + (s - 1.0 / s) / n
    cdef double radicand = 1.0 - g * g
    cdef double c = cos(2.0 * theta)
    cdef double sgn = (c > 0.0) - (c < 0.0)
    cdef double r = radicand if radicand > 0.0 else 0.0
    cdef double p = 0.5 * (1.0 - sgn * sqrt(r))
    return p, radicand


cpdef double mpe_at_one(double n):
    return 0.5 - atan(sqrt(n)) / M_PI


cpdef double sample_size_real(double eps):
    cdef double t = tan(M_PI * (0.5 - eps))
    return t * t

"""Pure-Python scalar kernels.

Reference implementation of the hot math; `ftprop._kernels` is the compiled
twin with the identical signatures. Input validation and error semantics live
in `ftprop.transform` -- these functions assume arguments are already checked
and only do IEEE-754 double arithmetic.
"""

import math

PI = math.pi
HALF_PI = math.pi / 2.0


def _asin_sqrt_frac(num, comp, denom):
    """asin(sqrt(num/denom)) where comp holds denom - num in cancellation-free
    form; switches to the complementary branch when the ratio exceeds 1/2 so
    the arcsine is never evaluated near 1 where it loses digits."""
    if num <= comp:
        return math.asin(math.sqrt(min(num / denom, 1.0)))
    return HALF_PI - math.asin(math.sqrt(min(comp / denom, 1.0)))


def ft_forward(p, n):
    """Double arcsine of a proportion p at sample size n (n may be real).

    The two arcsine arguments of the defining formula are complementary in
    pairs across p <-> 1-p, which the branch choice in _asin_sqrt_frac
    exploits; theta(p) + theta(1-p) = pi/2 then holds to a few ulps even at
    extreme p and tiny n.
    """
    inv_n = 1.0 / n
    denom = 1.0 + inv_n
    q = 1.0 - p
    t1 = _asin_sqrt_frac(p, q + inv_n, denom)
    t2 = _asin_sqrt_frac(p + inv_n, q, denom)
    return 0.5 * (t1 + t2)


def asin_sqrt(p):
    """Limiting (simple arcsine) transform asin(sqrt(p))."""
    return math.asin(math.sqrt(min(p, 1.0)))


def sin_sq(theta):
    """Limiting inverse sin^2(theta)."""
    s = math.sin(theta)
    return s * s


def inverse_raw(theta, n):
    """Closed-form inverse of the double arcsine.

    Returns (p, radicand). The caller decides what a negative radicand means;
    here it is clamped to 0 for the value computation only. Assumes
    sin(2*theta) != 0.
    """
    s = math.sin(2.0 * theta)
    g = s + (s - 1.0 / s) / n
    radicand = 1.0 - g * g
    c = math.cos(2.0 * theta)
    sgn = (c > 0.0) - (c < 0.0)
    p = 0.5 * (1.0 - sgn * math.sqrt(max(radicand, 0.0)))
    return p, radicand


def mpe_at_one(n):
    """Maximum percent error of the large-sample approximation, taken at p=1.

    Uses asin(sqrt(n/(n+1))) == atan(sqrt(n)), which stays accurate for
    large n where the asin form loses digits near 1.
    """
    return 0.5 - math.atan(math.sqrt(n)) / PI


def sample_size_real(eps):
    """Real-valued sample size tan^2(pi*(1/2 - eps)) achieving accuracy eps."""
    t = math.tan(PI * (0.5 - eps))
    return t * t

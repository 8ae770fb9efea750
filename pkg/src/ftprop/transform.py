"""Freeman-Tukey double arcsine transform, its inverse, and accuracy measures.

Conventions used throughout:

* proportions ``p`` live in [0, 1]
* transformed values ``theta`` are radians in [0, pi/2]
* sample sizes ``n`` are positive reals, so the harmonic-mean effective size
  of a heterogeneous study set can be substituted everywhere an ``n`` appears
"""

import math
from dataclasses import dataclass

from . import kernels
from .errors import DomainError, SingularityError, UndefinedInverseError

HALF_PI = kernels.HALF_PI

# radicands in [-RADICAND_TOL, 0) are treated as floating-point noise and
# clamped to 0; anything more negative means the formula has left the reals
RADICAND_TOL = 1e-12


@dataclass(frozen=True)
class StudyRecord:
    """One study: event count and sample size."""

    study_id: str
    events: int
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise DomainError(f"study {self.study_id!r}: size must be >= 1, got {self.size}")
        if not 0 <= self.events <= self.size:
            raise DomainError(
                f"study {self.study_id!r}: events must be in [0, size], "
                f"got events={self.events}, size={self.size}"
            )

    @property
    def proportion(self):
        return self.events / self.size


@dataclass(frozen=True)
class DomainInterval:
    """Interval of theta values actually attained by the transform at a given n."""

    lower: float
    upper: float

    def contains(self, theta):
        return self.lower <= theta <= self.upper


def _check_finite(name, value):
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value}")


def _check_n(n):
    _check_finite("n", n)
    if n <= 0:
        raise DomainError(f"n must be positive, got {n}")


def ft_transform(p, n):
    """Double arcsine transform of proportion p at sample size n.

    Monotone increasing in p with theta(0.5) = pi/4 for every n; the value
    always lies inside ``theta_domain(n)``.
    """
    _check_finite("p", p)
    _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must be in [0, 1], got {p}")
    return kernels.ft_forward(p, n)


def ft_transform_counts(record):
    """Transform a study's observed proportion events/size."""
    return ft_transform(record.events / record.size, record.size)


def asin_sqrt_limit(p):
    """Simple arcsine transform asin(sqrt(p)), the large-n limit of ft_transform."""
    _check_finite("p", p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must be in [0, 1], got {p}")
    return kernels.asin_sqrt(p)


def theta_domain(n):
    """Attainable interval [theta(0), theta(1)] of the transform at size n.

    Endpoints are computed through ft_transform itself so they are bit-exact
    with the forward map.
    """
    _check_n(n)
    return DomainInterval(lower=ft_transform(0.0, n), upper=ft_transform(1.0, n))


def harmonic_n(sizes):
    """Harmonic-mean effective sample size k / sum(1/n_i) of k study sizes."""
    sizes = list(sizes)
    if not sizes:
        raise DomainError("sizes must be a nonempty list")
    for n in sizes:
        _check_n(n)
    return len(sizes) / sum(1.0 / n for n in sizes)


def ft_inverse_raw(theta, n_eff):
    """Closed-form inverse of the double arcsine at effective size n_eff.

    Evaluated wherever the formula stays real, including outside
    ``theta_domain(n_eff)`` where it behaves erratically; use
    ``ft_inverse_clamped`` for a result guaranteed in [0, 1].
    """
    _check_finite("theta", theta)
    _check_n(n_eff)
    # sin(pi) is not an exact fp zero, so the endpoints need their own check
    if theta == 0.0 or theta == HALF_PI or math.sin(2.0 * theta) == 0.0:
        raise SingularityError(f"sin(2*theta) = 0 at theta={theta}; inverse undefined")
    p, radicand = kernels.inverse_raw(theta, n_eff)
    if radicand < -RADICAND_TOL:
        raise UndefinedInverseError(
            f"negative radicand {radicand} at theta={theta}, n={n_eff}: "
            "the inversion formula has no real value here"
        )
    return p


def ft_inverse_clamped(theta, n_eff):
    """Inverse transform with the small-sample remedy applied.

    Returns 0 at or below the lower domain limit and 1 at or above the upper
    one; in between it equals the raw inverse. Always in [0, 1] and
    nondecreasing in theta.
    """
    _check_finite("theta", theta)
    _check_n(n_eff)
    if not 0.0 <= theta <= HALF_PI:
        raise DomainError(f"theta must be in [0, pi/2], got {theta}")
    dom = theta_domain(n_eff)
    if theta <= dom.lower:
        return 0.0
    if theta >= dom.upper:
        return 1.0
    return ft_inverse_raw(theta, n_eff)


def limit_inverse(theta):
    """Large-sample inverse sin^2(theta), the exact inverse of asin_sqrt_limit."""
    _check_finite("theta", theta)
    if not 0.0 <= theta <= HALF_PI:
        raise DomainError(f"theta must be in [0, pi/2], got {theta}")
    return kernels.sin_sq(theta)


def mpe(n):
    """Maximum percent error of the large-sample approximation at size n.

    Canonical value taken at p=1: 1/2 - asin(sqrt(n/(n+1)))/pi. Strictly
    decreasing in n, tending to 0.
    """
    _check_n(n)
    return kernels.mpe_at_one(n)


def mpe_pointwise(p, n):
    """Relative error |asin(sqrt(p)) - theta(p)| / asin(sqrt(p)) at one point.

    p=0 is excluded: the denominator vanishes there while the numerator does
    not, so the ratio diverges.
    """
    _check_finite("p", p)
    _check_n(n)
    if not 0.0 < p <= 1.0:
        raise DomainError(f"p must be in (0, 1], got {p}")
    limit = kernels.asin_sqrt(p)
    return abs(limit - kernels.ft_forward(p, n)) / limit


def sample_size_real(eps):
    """Real-valued sample size tan^2(pi*(1/2 - eps)) before rounding."""
    _check_finite("eps", eps)
    if not 0.0 < eps < 0.5:
        raise DomainError(f"eps must be in (0, 1/2), got {eps}")
    return kernels.sample_size_real(eps)


def sample_size_for_mpe(eps):
    """Smallest integer sample size whose MPE does not exceed eps.

    Ceiling of the real-valued formula; the 1e-9 slack keeps exact-integer
    solutions (e.g. eps=0.25 -> n=1) from rounding up on fp noise.
    """
    return math.ceil(sample_size_real(eps) - 1e-9)

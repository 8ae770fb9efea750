"""Brute-force numerical checks for the closed-form inverse and the MPE.

Everything here deliberately avoids the closed-form inversion formula so it
can serve as an independent witness for it.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .transform import ft_transform, mpe_pointwise, theta_domain

_MAX_BISECT_ITER = 60
_RESIDUAL_TOL = 1e-13


@dataclass(frozen=True)
class GridScanResult:
    """Pointwise error values on a p-grid plus their maximizer."""

    grid_points: list  # (p, value) pairs in grid order
    argmax_p: float
    max_value: float


def bisect_inverse(theta, n):
    """Invert the forward transform by bisection on [0, 1].

    Relies only on strict monotonicity of the forward map; 60 halvings shrink
    the bracket below double-precision resolution, and the residual check is
    the authoritative stop.
    """
    dom = theta_domain(n)
    if not dom.contains(theta):
        raise DomainError(
            f"theta={theta} outside attainable interval "
            f"[{dom.lower}, {dom.upper}] for n={n}"
        )
    lo, hi = 0.0, 1.0
    mid = 0.5
    for _ in range(_MAX_BISECT_ITER):
        mid = 0.5 * (lo + hi)
        resid = ft_transform(mid, n) - theta
        if abs(resid) <= _RESIDUAL_TOL:
            return mid
        if resid < 0.0:
            lo = mid
        else:
            hi = mid
    return mid


def mpe_grid_scan(n, p_min, points):
    """Evaluate the pointwise MPE on a uniform grid from p_min to 1 inclusive.

    Ties for the maximum break toward smaller p. The grid always contains
    p=1 exactly, so the scan maximum dominates the canonical p=1 value.
    """
    if not 0.0 < p_min < 1.0:
        raise DomainError(f"p_min must be in (0, 1), got {p_min}")
    if points < 2:
        raise DomainError(f"points must be >= 2, got {points}")
    step = (1.0 - p_min) / (points - 1)
    grid = []
    argmax_p = p_min
    max_value = -math.inf
    for i in range(points):
        p = 1.0 if i == points - 1 else p_min + i * step
        value = mpe_pointwise(p, n)
        grid.append((p, value))
        if value > max_value:
            max_value = value
            argmax_p = p
    return GridScanResult(grid_points=grid, argmax_p=argmax_p, max_value=max_value)

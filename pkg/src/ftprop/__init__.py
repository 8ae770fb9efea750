"""Freeman-Tukey double arcsine toolkit for meta-analysis of proportions."""

from .errors import (
    DomainError,
    FtpropError,
    ParseError,
    SingularityError,
    UndefinedInverseError,
    ValidationError,
)
from .kernels import BACKEND
from .oracle import GridScanResult, bisect_inverse, mpe_grid_scan
from .pooling import PooledResult, StudySet, back_transform, parse_studies, pool
from .transform import (
    DomainInterval,
    StudyRecord,
    asin_sqrt_limit,
    ft_inverse_clamped,
    ft_inverse_raw,
    ft_transform,
    ft_transform_counts,
    harmonic_n,
    limit_inverse,
    mpe,
    mpe_pointwise,
    sample_size_for_mpe,
    sample_size_real,
    theta_domain,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DomainError",
    "DomainInterval",
    "FtpropError",
    "GridScanResult",
    "ParseError",
    "PooledResult",
    "SingularityError",
    "StudyRecord",
    "StudySet",
    "UndefinedInverseError",
    "ValidationError",
    "asin_sqrt_limit",
    "back_transform",
    "bisect_inverse",
    "ft_inverse_clamped",
    "ft_inverse_raw",
    "ft_transform",
    "ft_transform_counts",
    "harmonic_n",
    "limit_inverse",
    "mpe",
    "mpe_grid_scan",
    "mpe_pointwise",
    "parse_studies",
    "pool",
    "sample_size_for_mpe",
    "sample_size_real",
    "theta_domain",
]

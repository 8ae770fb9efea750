"""Meta-analysis pipeline: parse study records, pool on the transformed scale,
back-transform with the harmonic-mean effective sample size.

The underlying transform theory prescribes no pooling model; both weighting
schemes here are documented choices. ``fixed_effect`` uses w_i = n_i + 1/2,
the inverse of the conventional large-sample variance approximation
1/(n + 1/2) for a Freeman-Tukey transformed proportion.
"""

import csv
import io
import math
from dataclasses import dataclass

from .errors import DomainError, ParseError, ValidationError
from .transform import StudyRecord, ft_inverse_clamped, ft_transform_counts, harmonic_n

METHODS = ("fixed_effect", "unweighted")

_HEADER = ("id", "events", "size")


@dataclass(frozen=True)
class StudySet:
    """Nonempty collection of studies with unique ids."""

    studies: tuple

    def __post_init__(self):
        if not self.studies:
            raise ValidationError("study set must be nonempty")
        seen = set()
        for s in self.studies:
            if s.study_id in seen:
                raise ValidationError(f"duplicate study_id {s.study_id!r}")
            seen.add(s.study_id)

    @property
    def sizes(self):
        return [s.size for s in self.studies]


@dataclass(frozen=True)
class PooledResult:
    pooled_theta: float
    effective_n: float
    pooled_proportion: float
    method: str
    per_study: list  # (study_id, theta, normalized weight)


def parse_studies(source):
    """Read a study set from CSV text or a text stream.

    Format: header ``id,events,size`` (case-insensitive), one study per row;
    blank lines and lines starting with ``#`` are ignored.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    numbered = [
        (lineno, line)
        for lineno, line in enumerate(source, start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not numbered:
        raise ValidationError("empty study set")
    rows = list(csv.reader(line for _, line in numbered))
    header_row = tuple(cell.strip().lower() for cell in rows[0])
    if header_row != _HEADER:
        raise ParseError(
            f"expected header 'id,events,size', got {','.join(header_row)!r}",
            row=numbered[0][0],
        )
    studies = []
    for (lineno, _), row in zip(numbered[1:], rows[1:]):
        if len(row) != 3:
            raise ParseError(f"expected 3 fields, got {len(row)}", row=lineno)
        study_id = row[0].strip()
        try:
            events = int(row[1])
            size = int(row[2])
        except ValueError as exc:
            raise ParseError(str(exc), row=lineno) from None
        if size < 1:
            raise ValidationError(f"row {lineno}: size must be >= 1, got {size}")
        if not 0 <= events <= size:
            raise ValidationError(
                f"row {lineno}: events must be in [0, size], got {events}/{size}"
            )
        studies.append(StudyRecord(study_id=study_id, events=events, size=size))
    if not studies:
        raise ValidationError("empty study set")
    return StudySet(studies=tuple(studies))


def pool(study_set, method="fixed_effect"):
    """Pool a study set on the transformed scale and back-transform.

    The pooled value is a convex combination of per-study transforms; the
    inverse always goes through the clamped formula because a pooled value
    can legitimately fall outside the attainable interval at the effective
    sample size.
    """
    if method not in METHODS:
        raise DomainError(f"method must be one of {METHODS}, got {method!r}")
    thetas = [ft_transform_counts(s) for s in study_set.studies]
    if method == "fixed_effect":
        weights = [s.size + 0.5 for s in study_set.studies]
    else:
        weights = [1.0] * len(study_set.studies)
    total = math.fsum(weights)
    norm_weights = [w / total for w in weights]
    pooled_theta = math.fsum(w * t for w, t in zip(norm_weights, thetas))
    effective_n = harmonic_n(study_set.sizes)
    return PooledResult(
        pooled_theta=pooled_theta,
        effective_n=effective_n,
        pooled_proportion=ft_inverse_clamped(pooled_theta, effective_n),
        method=method,
        per_study=[
            (s.study_id, t, w)
            for s, t, w in zip(study_set.studies, thetas, norm_weights)
        ],
    )


def back_transform(theta, study_set):
    """Clamped inverse at the study set's harmonic-mean effective size."""
    return ft_inverse_clamped(theta, harmonic_n(study_set.sizes))

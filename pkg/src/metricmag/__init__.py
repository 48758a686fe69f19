"""Magnitude of finite metric spaces and of their compact limits.

Finite spaces are handled by :mod:`metricmag.solver`; the limit spaces
(segments, ternary Cantor sets, circles under the kappa-metrics) live in
:mod:`metricmag.linear`, :mod:`metricmag.cantor` and :mod:`metricmag.circle`.
"""

from .errors import (
    DimensionMismatch,
    DuplicatePoint,
    InvalidMetric,
    MagnitudeUndefined,
    NoConvergence,
    NonpositiveScale,
    NotHomogeneous,
    OutOfRange,
    SingularMatrix,
)
from .metric import FiniteMetricSpace, ValidationReport, from_distances, from_points, scale, validate
from .solver import (
    MagnitudeResult,
    Weighting,
    exponentiated_matrix,
    is_sufficiently_separated,
    magnitude,
    magnitude_function,
    magnitude_homogeneous,
    weighting,
)

__version__ = "0.1.0"

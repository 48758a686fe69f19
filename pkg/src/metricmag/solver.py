"""Weightings and magnitudes of finite metric spaces."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import MagnitudeUndefined, NotHomogeneous, SingularMatrix
from .metric import FiniteMetricSpace, scale
from .numerics import SolveDiagnostics, solve_symmetric

HOMOGENEITY_TOL = 1e-12


@dataclass(frozen=True)
class Weighting:
    labels: tuple[str, ...]
    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float, copy=True)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, map(float, self.weights)))


@dataclass(frozen=True)
class MagnitudeResult:
    value: float
    weighting: Weighting
    diagnostics: SolveDiagnostics

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "labels": list(self.weighting.labels),
            "weights": [float(w) for w in self.weighting.weights],
            "diagnostics": self.diagnostics.to_dict(),
        }


def exponentiated_matrix(space: FiniteMetricSpace) -> np.ndarray:
    """The similarity matrix ``Z[i, j] = exp(-d(i, j))``."""
    return np.exp(-space.dist)


def _solve_weights(space: FiniteMetricSpace):
    Z = exponentiated_matrix(space)
    try:
        return solve_symmetric(Z, np.ones(space.n))
    except SingularMatrix as exc:
        raise MagnitudeUndefined(
            f"similarity matrix is numerically singular (rcond ~ {exc.rcond:.3g})"
        ) from exc


def weighting(space: FiniteMetricSpace) -> Weighting:
    """The unique weighting ``w`` with ``Z w = 1``.

    Raises
    ------
    MagnitudeUndefined
        If ``Z`` is numerically singular.
    """
    w, _ = _solve_weights(space)
    return Weighting(space.labels, w)


def magnitude(space: FiniteMetricSpace) -> MagnitudeResult:
    """Magnitude of ``space`` as the sum of its weighting."""
    w, diag = _solve_weights(space)
    return MagnitudeResult(math.fsum(w), Weighting(space.labels, w), diag)


def is_homogeneous(space: FiniteMetricSpace, tol: float = HOMOGENEITY_TOL) -> bool:
    """True if every row of the distance matrix has the same sorted values."""
    if space.n <= 1:
        return True
    rows = np.sort(space.dist, axis=1)
    return bool(np.all(np.abs(rows - rows[0]) <= tol * max(1.0, float(rows[0, -1]))))


def magnitude_homogeneous(space: FiniteMetricSpace) -> float:
    """Magnitude of a homogeneous space from a single row.

    Every point carries weight ``1 / sum_j exp(-d(x0, j))``, so the
    magnitude is ``n`` times that.  Homogeneity is checked by comparing the
    sorted rows of the distance matrix.
    """
    if not is_homogeneous(space):
        raise NotHomogeneous("rows of the distance matrix are not permutations of each other")
    if space.n == 0:
        return 0.0
    return space.n / math.fsum(np.exp(-space.dist[0]))


def is_sufficiently_separated(space: FiniteMetricSpace) -> bool:
    """True if all distinct points are further apart than ``ln(n - 1)``."""
    if space.n <= 1:
        return True
    return space.min_distance() > math.log(space.n - 1)


@dataclass(frozen=True)
class SweepPoint:
    t: float
    value: float | None  # None marks an undefined magnitude

    @property
    def defined(self) -> bool:
        return self.value is not None


def magnitude_function(
    space: FiniteMetricSpace, t_grid: Sequence[float], *, workers: int = 1
) -> list[SweepPoint]:
    """Evaluate ``t -> |tX|`` on a strictly increasing positive grid.

    Grid points where the magnitude is undefined yield ``value=None``
    instead of aborting the sweep.
    """
    ts = [float(t) for t in t_grid]
    if any(t <= 0 for t in ts):
        raise ValueError("t values must be positive")
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise ValueError("t grid must be strictly increasing")

    def one(t):
        try:
            return SweepPoint(t, magnitude(scale(space, t)).value)
        except MagnitudeUndefined:
            return SweepPoint(t, None)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(one, ts))
    return [one(t) for t in ts]

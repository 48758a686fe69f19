"""Finite metric spaces: construction, validation and scaling."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, DuplicatePoint, InvalidMetric, NonpositiveScale

# Relative slack for the triangle inequality, in units of the largest distance.
TRIANGLE_RTOL = 1e-9


@dataclass(frozen=True)
class FiniteMetricSpace:
    """A finite set of labelled points with a dense distance matrix.

    The matrix is copied and frozen on construction, so a space can be shared
    freely.  Construction checks shape and finiteness only; the metric axioms
    are checked by :func:`validate` (or :func:`from_distances`).
    """

    labels: tuple[str, ...]
    dist: np.ndarray = field(repr=False)

    def __post_init__(self):
        d = np.array(self.dist, dtype=float, copy=True)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise DimensionMismatch(f"distance matrix must be square, got shape {d.shape}")
        if d.shape[0] != len(self.labels):
            raise DimensionMismatch(
                f"{len(self.labels)} labels for a {d.shape[0]}-point distance matrix"
            )
        if not np.all(np.isfinite(d)):
            raise ValueError("distances must be finite")
        d.setflags(write=False)
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "dist", d)

    def __eq__(self, other):
        if not isinstance(other, FiniteMetricSpace):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.dist, other.dist)

    def __hash__(self):
        return hash((self.labels, self.dist.tobytes()))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.n

    def min_distance(self) -> float:
        """Smallest off-diagonal distance (``inf`` for fewer than two points)."""
        if self.n < 2:
            return float("inf")
        off = self.dist[~np.eye(self.n, dtype=bool)]
        return float(off.min())

    def permuted(self, order: Sequence[int]) -> "FiniteMetricSpace":
        order = np.asarray(order)
        return FiniteMetricSpace(
            tuple(self.labels[i] for i in order), self.dist[np.ix_(order, order)]
        )


@dataclass(frozen=True)
class Violation:
    kind: str  # asymmetry | nonzero-diagonal | zero-offdiagonal | triangle
    indices: tuple[int, ...]
    amount: float


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"kind": v.kind, "indices": list(v.indices), "amount": v.amount}
                for v in self.violations
            ],
        }


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def from_points(coords, labels: Sequence[str] | None = None) -> FiniteMetricSpace:
    """Euclidean subspace metric on a point cloud.

    Parameters
    ----------
    coords : array_like, shape (n, m)
        One row per point.  A 1-d array is read as ``n`` points on a line.
    labels : sequence of str, optional
        Defaults to ``"0", "1", ...``.

    Raises
    ------
    DimensionMismatch
        If the rows have different lengths or ``m == 0``.
    DuplicatePoint
        If two points coincide.
    """
    try:
        pts = np.array(coords, dtype=float)
    except ValueError as exc:  # ragged input
        raise DimensionMismatch("all points must have the same dimension") from exc
    if pts.ndim == 1:
        pts = pts[:, None]
    if pts.ndim != 2 or (pts.shape[0] > 0 and pts.shape[1] == 0):
        raise DimensionMismatch(f"expected an (n, m) array of coordinates, got shape {pts.shape}")
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    n = pts.shape[0]
    if n > 1:
        off = dist + np.eye(n)
        i, j = np.nonzero(np.triu(off == 0.0, k=1))
        if len(i):
            raise DuplicatePoint(f"points {i[0]} and {j[0]} coincide")
    return FiniteMetricSpace(tuple(labels) if labels is not None else default_labels(n), dist)


def from_distances(dist, labels: Sequence[str] | None = None) -> FiniteMetricSpace:
    """Build a space from a distance matrix, raising :class:`InvalidMetric` on bad input."""
    d = np.asarray(dist, dtype=float)
    n = d.shape[0] if d.ndim else 0
    space = FiniteMetricSpace(tuple(labels) if labels is not None else default_labels(n), d)
    report = validate(space)
    if not report.ok:
        raise InvalidMetric(report)
    return space


def validate(space: FiniteMetricSpace) -> ValidationReport:
    """Check the metric axioms and report every violation found.

    Triangle violations are reported once per unordered pair ``(i, k)`` with
    ``i < k``, using the intermediate point ``j`` of largest excess, as the
    triple ``(i, j, k)``.
    """
    d = space.dist
    n = space.n
    out: list[Violation] = []

    iu, ju = np.triu_indices(n, k=1)
    asym = d[iu, ju] != d[ju, iu]
    for i, j in zip(iu[asym], ju[asym]):
        out.append(Violation("asymmetry", (int(i), int(j)), float(abs(d[i, j] - d[j, i]))))

    for i in np.flatnonzero(np.diag(d) != 0.0):
        out.append(Violation("nonzero-diagonal", (int(i),), float(abs(d[i, i]))))

    offd = ~np.eye(n, dtype=bool)
    for i, j in zip(*np.nonzero(offd & (d <= 0.0))):
        if i < j or d[j, i] > 0.0:
            out.append(Violation("zero-offdiagonal", (int(i), int(j)), float(-d[i, j])))

    if n >= 3:
        tol = TRIANGLE_RTOL * float(np.abs(d).max())
        worst = np.full((n, n), -np.inf)
        arg = np.zeros((n, n), dtype=int)
        for j in range(n):
            excess = d - (d[:, j][:, None] + d[j, :][None, :])
            better = excess > worst
            worst[better] = excess[better]
            arg[better] = j
        bad = np.triu(worst > tol, k=1)
        for i, k in zip(*np.nonzero(bad)):
            out.append(Violation("triangle", (int(i), int(arg[i, k]), int(k)), float(worst[i, k])))

    return ValidationReport(tuple(out))


def scale(space: FiniteMetricSpace, t: float) -> FiniteMetricSpace:
    """The space ``tX``: every distance multiplied by ``t``."""
    if not t > 0:
        raise NonpositiveScale(f"scale factor must be positive, got {t!r}")
    return FiniteMetricSpace(space.labels, space.dist * t)


def from_json(obj: dict) -> FiniteMetricSpace:
    """Parse the CLI input schema.

    Accepts either ``{"points": [[x, ...], ...]}`` or
    ``{"distances": [[...], ...], "labels": [...]}`` (labels optional).
    Raises :class:`InvalidMetric` when a distance matrix fails validation.
    """
    labels = obj.get("labels")
    if "points" in obj:
        space = from_points(obj["points"], labels)
    elif "distances" in obj:
        space = from_distances(obj["distances"], labels)
    else:
        raise ValueError("input must contain a 'points' or 'distances' key")
    return space

"""Points on a line: closed-form weights and magnitudes, and the segment limit."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .metric import FiniteMetricSpace, default_labels
from .solver import Weighting

SCHEMES = ("uniform", "random", "geometric")
GEOMETRIC_RATIO = 0.9


@dataclass(frozen=True)
class GapTuple:
    """Consecutive gaps ``(d_1, ..., d_{n-1})`` of ``n`` collinear points."""

    gaps: tuple[float, ...]

    def __post_init__(self):
        g = tuple(float(x) for x in self.gaps)
        if not all(x > 0 and math.isfinite(x) for x in g):
            raise ValueError("gaps must be finite and strictly positive")
        object.__setattr__(self, "gaps", g)

    @property
    def n(self) -> int:
        return len(self.gaps) + 1

    @property
    def length(self) -> float:
        return math.fsum(self.gaps)


def as_space(g: GapTuple) -> FiniteMetricSpace:
    pos = np.concatenate([[0.0], np.cumsum(g.gaps)])
    return FiniteMetricSpace(default_labels(g.n), np.abs(pos[:, None] - pos[None, :]))


def _half_tanh(g: GapTuple) -> np.ndarray:
    # tanh(d/2) with the two fictitious outer gaps at infinity (tanh -> 1).
    return np.concatenate([[1.0], np.tanh(np.asarray(g.gaps) / 2.0), [1.0]])


def linear_weights(g: GapTuple) -> Weighting:
    """Weight of point ``i`` is the mean of ``tanh(d/2)`` over its two gaps."""
    th = _half_tanh(g)
    return Weighting(default_labels(g.n), 0.5 * (th[:-1] + th[1:]))


def linear_magnitude(g: GapTuple) -> float:
    """``1 + sum_i tanh(d_i / 2)``."""
    return 1.0 + math.fsum(math.tanh(d / 2.0) for d in g.gaps)


def segment_magnitude(length: float) -> float:
    """Magnitude of a closed segment: half the length plus one."""
    if not length >= 0:
        raise ValueError("length must be nonnegative")
    return length / 2.0 + 1.0


@dataclass(frozen=True)
class SegmentApproximation:
    """An ``n``-point subset of a segment of the given length, containing both ends."""

    length: float
    scheme: str = "uniform"
    n: int = 2

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}; choose from {SCHEMES}")
        if not self.length > 0:
            raise ValueError("length must be positive")
        if self.n < 2:
            raise ValueError("need at least two points")

    def gaps(self, rng: np.random.Generator | None = None) -> GapTuple:
        k = self.n - 1
        if self.scheme == "uniform":
            raw = np.ones(k)
        elif self.scheme == "random":
            rng = rng if rng is not None else np.random.default_rng(42)
            raw = rng.dirichlet(np.ones(k))
        else:
            # Ratio between first and last gap is GEOMETRIC_RATIO, so max gap -> 0.
            raw = GEOMETRIC_RATIO ** (np.arange(k) / max(k - 1, 1))
        return GapTuple(tuple(self.length * raw / raw.sum()))


@dataclass(frozen=True)
class SegmentRow:
    n: int
    value: float
    reference: float
    error: float
    max_gap: float


def segment_convergence(
    length: float,
    n_list: Iterable[int],
    scheme: str = "uniform",
    seed: int = 42,
) -> list[SegmentRow]:
    """Magnitudes of finer and finer approximations against ``length/2 + 1``."""
    rng = np.random.default_rng(seed)
    ref = segment_magnitude(length)
    rows = []
    for n in n_list:
        g = SegmentApproximation(length, scheme, int(n)).gaps(rng)
        value = linear_magnitude(g)
        rows.append(SegmentRow(int(n), value, ref, abs(value - ref), max(g.gaps)))
    return rows


def gaps_from_positions(xs: Sequence[float]) -> GapTuple:
    """Gap tuple of a set of real numbers (sorted, duplicates rejected by GapTuple)."""
    xs = sorted(float(x) for x in xs)
    return GapTuple(tuple(b - a for a, b in zip(xs, xs[1:])))

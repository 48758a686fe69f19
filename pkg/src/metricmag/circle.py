"""Circles under the one-parameter family of round metrics.

A circle of circumference ``l`` embedded roundly in a surface of relative
curvature ``kappa`` (``kappa = 1``: arc length; ``kappa = 0``: Euclidean
chord; ``kappa < 0``: hyperbolic plane) has distance profile
``D_{l,kappa}(x) = l * D_kappa(x / l)`` for points ``x`` apart along the
circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import OutOfRange
from .metric import FiniteMetricSpace, default_labels
from .numerics import Quadrature, integrate

KAPPA_SERIES_CUTOFF = 1e-8


@dataclass(frozen=True)
class CircleParams:
    length: float
    kappa: float = 0.0

    def __post_init__(self):
        if not self.length > 0:
            raise OutOfRange("circumference must be positive")
        if not self.kappa <= 1:
            raise OutOfRange(f"relative curvature must be at most 1, got {self.kappa!r}")


def kappa_profile(s, kappa: float) -> np.ndarray:
    """Unit-circumference distance profile ``D_kappa(s)`` for ``s`` in ``[0, 1]``.

    Vectorised and unchecked.  Uses ``min(s, 1 - s)`` so the profile is
    exactly symmetric and ``D(1) = 0``; for arguments slightly outside
    ``[0, 1]`` it continues as an odd function about each endpoint.
    """
    s = np.asarray(s, dtype=float)
    r = np.minimum(s, 1.0 - s)
    if kappa == 1.0:
        return r
    u = np.sin(np.pi * r)
    if abs(kappa) < KAPPA_SERIES_CUTOFF:
        return (u + kappa * u**3 / 6.0) / np.pi
    if kappa > 0:
        rk = math.sqrt(kappa)
        # asin(y) = atan2(y, sqrt(1 - y^2)) with 1 - kappa u^2 = cos^2 + (1 - kappa) u^2,
        # which stays accurate where kappa u^2 is close to 1.
        c = np.cos(np.pi * r)
        return np.arctan2(rk * u, np.sqrt(c * c + (1.0 - kappa) * u * u)) / (rk * np.pi)
    rk = math.sqrt(-kappa)
    return np.arcsinh(rk * u) / (rk * np.pi)


def kappa_distance(params: CircleParams, x):
    """Distance between two points ``x`` apart along the circle.

    Raises
    ------
    OutOfRange
        If ``x`` lies outside ``[0, length]``.
    """
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0) or np.any(xa > params.length) or not np.all(np.isfinite(xa)):
        raise OutOfRange(f"x must lie in [0, {params.length}]")
    d = params.length * kappa_profile(xa / params.length, params.kappa)
    return float(d) if d.ndim == 0 else d


def circle_points_space(params: CircleParams, n: int) -> FiniteMetricSpace:
    """``n`` evenly spaced points on the circle with the kappa-metric."""
    if n < 2:
        raise ValueError("need at least two points")
    idx = np.arange(n)
    steps = np.abs(idx[:, None] - idx[None, :])
    steps = np.minimum(steps, n - steps)
    if params.kappa == 1.0:
        d = (params.length / n) * steps
    else:
        d = params.length * kappa_profile(steps / n, params.kappa)
    return FiniteMetricSpace(default_labels(n), d)


def circle_points_magnitude(params: CircleParams, n: int) -> float:
    """Magnitude of ``n`` evenly spaced points, by the homogeneous-space formula.

    The sum runs over ``j = 1..n``; the ``j = n`` term is the point itself.
    """
    if n < 2:
        raise ValueError("need at least two points")
    j = np.arange(1, n + 1)
    terms = np.exp(-params.length * kappa_profile(j / n, params.kappa))
    return n / math.fsum(terms)


def _breakpoints(length: float) -> list[float]:
    # Geometric seeding towards s = 0, where exp(-l D(s)) ~ exp(-l s) is concentrated.
    pts = []
    c = 1.0 / length
    while c < 0.5:
        pts.append(c)
        c *= 4.0
    return pts


def circle_integral(params: CircleParams, q: Quadrature = Quadrature()) -> float:
    """``int_0^1 exp(-l D_kappa(s)) ds``, using the symmetry ``D(s) = D(1 - s)``."""
    ell, kappa = params.length, params.kappa
    half = integrate(
        lambda s: np.exp(-ell * kappa_profile(s, kappa)),
        0.0,
        0.5,
        q,
        points=_breakpoints(ell) if ell > 8 else None,
    )
    return 2.0 * half


def circle_magnitude(params: CircleParams, q: Quadrature = Quadrature()) -> float:
    """Magnitude of the circle: the reciprocal of :func:`circle_integral`."""
    return 1.0 / circle_integral(params, q)


def intrinsic_circle_magnitude(length: float) -> float:
    """Closed form ``(l/2) / (1 - exp(-l/2))`` for the arc-length metric."""
    if not length > 0:
        raise ValueError("length must be positive")
    h = 0.5 * length
    return h / -math.expm1(-h)


def circle_asymptotic(params: CircleParams) -> float:
    """Two-term large-``l`` expansion ``l/2 + pi^2 (kappa - 1) / (2 l)``."""
    return params.length / 2.0 + math.pi**2 * (params.kappa - 1.0) / (2.0 * params.length)


@dataclass(frozen=True)
class ConvergenceEntry:
    n: int
    value: float
    error: float


@dataclass(frozen=True)
class ConvergenceReport:
    limit: float
    entries: tuple[ConvergenceEntry, ...]

    def __post_init__(self):
        ns = [e.n for e in self.entries]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("n must be strictly increasing")


def circle_convergence(
    params: CircleParams, n_list: Iterable[int], q: Quadrature = Quadrature()
) -> ConvergenceReport:
    """Evenly spaced approximations against the integral limit."""
    limit = circle_magnitude(params, q)
    entries = []
    for n in n_list:
        v = circle_points_magnitude(params, int(n))
        entries.append(ConvergenceEntry(int(n), v, abs(v - limit)))
    return ConvergenceReport(limit, tuple(entries))


def slope_at_zero(kappa: float = 0.0, h: float = 1e-6, q: Quadrature = Quadrature()) -> float:
    """One-sided finite-difference slope of ``l -> |C_{l,kappa}|`` at ``l = 0``.

    The magnitude tends to 1 as ``l -> 0``, so this is ``(|C_h| - 1) / h``.
    """
    if not h > 0:
        raise ValueError("h must be positive")
    return (circle_magnitude(CircleParams(h, kappa), q) - 1.0) / h

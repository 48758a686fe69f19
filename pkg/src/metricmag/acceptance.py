"""Machine-checkable acceptance criteria, shared by ``metricmag verify`` and the test suite.

Each ``criterion_*`` function returns a :class:`Check`; none of them raise on
failure.  Tolerances are fixed here and nowhere else.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import cantor, circle, linear, metric, solver
from .errors import MagnitudeUndefined


@dataclass(frozen=True)
class Check:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.2f}s)"


def strictly_decreasing(xs) -> bool:
    return all(b < a for a, b in zip(xs, xs[1:]))


def decreasing_errors(xs) -> bool:
    """Strictly decreasing while positive; an exact zero may repeat."""
    return all(b < a or a == b == 0.0 for a, b in zip(xs, xs[1:]))


def random_gap_tuple(rng: np.random.Generator, max_points: int = 50, max_gap: float = 5.0):
    n = int(rng.integers(1, max_points + 1))
    # Uniform on (0, max_gap]: 1 - U maps [0, 1) onto (0, 1].
    return linear.GapTuple(tuple(max_gap * (1.0 - rng.random(n - 1))))


def random_separated_cloud(
    rng: np.random.Generator, n: int, m: int, min_sep: float = 0.2
) -> metric.FiniteMetricSpace:
    """Uniform points in a box, thinned by dart throwing to a minimum separation.

    The box side grows like ``n**(1/m)`` so the rejection loop always finishes.
    """
    side = 1.0 + 2.0 * min_sep * n ** (1.0 / m)
    pts: list[np.ndarray] = []
    while len(pts) < n:
        cand = side * rng.random(m)
        if all(np.linalg.norm(cand - p) >= min_sep for p in pts):
            pts.append(cand)
    return metric.from_points(np.array(pts))


def random_separated_space(rng: np.random.Generator, n: int, margin: float = 0.01):
    """Random metric with every distance in ``(c, 2c]`` for ``c = ln(n-1) + margin``.

    Any symmetric matrix with off-diagonal entries in ``[c, 2c]`` satisfies the
    triangle inequality.
    """
    c = math.log(max(n - 1, 1)) + margin
    d = c * (1.0 + (1.0 - rng.random((n, n))))
    d = np.triu(d, 1)
    d = d + d.T
    return metric.from_distances(d)


# ---------------------------------------------------------------- criteria


def criterion_1(seed: int = 1) -> Check:
    rng = np.random.default_rng(seed)
    worst_mag = worst_w = 0.0
    for _ in range(200):
        g = random_gap_tuple(rng)
        res = solver.magnitude(linear.as_space(g))
        closed = linear.linear_magnitude(g)
        worst_mag = max(worst_mag, abs(closed - res.value) / abs(res.value))
        w = linear.linear_weights(g).weights
        worst_w = max(worst_w, float(np.max(np.abs(w - res.weighting.weights))))
    ok = worst_mag <= 1e-9 and worst_w <= 1e-9
    return Check(1, "linear closed form vs matrix solver", ok,
                 f"max rel mag err {worst_mag:.2e}, max weight err {worst_w:.2e} (tol 1e-9)")


def criterion_2(lengths=(1.0, 5.0, 25.0)) -> Check:
    worst = 0.0
    for kappa in (0.0, 1.0):
        for ell in lengths:
            for n in range(3, 65):
                space = circle.circle_points_space(circle.CircleParams(ell, kappa), n)
                fast = solver.magnitude_homogeneous(space)
                full = solver.magnitude(space).value
                worst = max(worst, abs(fast - full) / abs(full))
    return Check(2, "homogeneous formula vs general solver", worst <= 1e-10,
                 f"max rel err {worst:.2e} over kappa in {{0,1}}, n=3..64 (tol 1e-10)")


def criterion_3(length: float = 7.0, n_list=(10, 100, 1000)) -> Check:
    rows = linear.segment_convergence(length, n_list, "uniform")
    errs = [r.error for r in rows]
    bounds = [length**2 / (4 * (r.n - 1)) for r in rows]
    ok = strictly_decreasing(errs) and all(e < b for e, b in zip(errs, bounds))
    return Check(3, "segment limit l/2+1", ok,
                 "errors " + ", ".join(f"{e:.2e}<{b:.2e}" for e, b in zip(errs, bounds)))


def criterion_4(seed: int = 4, count: int = 100) -> Check:
    rng = np.random.default_rng(seed)
    failures = 0
    for i in range(count):
        n = int(rng.integers(2, 61))
        if i % 2:
            space = random_separated_space(rng, n)
        else:
            cloud = metric.from_points(rng.standard_normal((n, int(rng.integers(1, 6)))))
            target = 1.01 * math.log(n - 1) if n > 2 else 0.01
            space = metric.scale(cloud, target / cloud.min_distance())
        if not solver.is_sufficiently_separated(space):
            failures += 1
            continue
        try:
            if not solver.magnitude(space).diagnostics.positive_definite:
                failures += 1
        except MagnitudeUndefined:
            failures += 1
    return Check(4, "sufficient separation implies positive definite", failures == 0,
                 f"{count - failures}/{count} spaces positive definite with defined magnitude")


def criterion_5(seed: int = 5, count: int = 20, ts=(8.0, 16.0, 32.0, 64.0)) -> Check:
    rng = np.random.default_rng(seed)
    bad = 0
    worst = 0.0
    for _ in range(count):
        n = int(rng.integers(2, 21))
        space = random_separated_cloud(rng, n, int(rng.integers(1, 6)))
        errs = [abs(p.value - n) for p in solver.magnitude_function(space, ts)]
        worst = max(worst, errs[-1])
        if not (decreasing_errors(errs) and errs[-1] < 1e-3):
            bad += 1
    return Check(5, "|tX| -> n", bad == 0,
                 f"{count - bad}/{count} clouds monotone with max |64X|-n = {worst:.2e} (tol 1e-3)")


def criterion_6(lengths=(0.3, 1.0, 3.0, 9.0)) -> Check:
    dec = fe = 0.0
    for ell in lengths:
        P = cantor.CantorParams(ell)
        dec = max(dec, abs(cantor.cantor_p(P) + cantor.cantor_q2(P) - cantor.cantor_magnitude(P)))
        fe = max(fe, abs(cantor.cantor_p(cantor.CantorParams(3 * ell)) - 2 * cantor.cantor_p(P)))
    q50 = abs(cantor.cantor_q2(cantor.CantorParams(50.0)))
    ok = dec <= 1e-10 and fe <= 1e-10 and q50 < 1e-9
    return Check(6, "Cantor decomposition p + q2", ok,
                 f"|p+q2-|T|| {dec:.1e}, |p(3l)-2p(l)| {fe:.1e} (tol 1e-10), |q2(50)| {q50:.1e} (tol 1e-9)")


def criterion_7(count: int = 64) -> Check:
    grid = np.logspace(0.0, 1.0, count, base=3.0, endpoint=False)
    vals = np.array([cantor.cantor_f(float(ell)) for ell in grid])
    ok = bool(np.all((vals > 1.205) & (vals < 1.206)))
    return Check(7, "Cantor bounds 1.205 < f < 1.206", ok,
                 f"f in [{vals.min():.6f}, {vals.max():.6f}] on {count} log-spaced l in [1,3)")


def criterion_8() -> Check:
    rep = cantor.cantor_fourier(1024, 4)
    a1, a2 = rep.amplitude(1), rep.amplitude(2)
    ok = (abs(rep.mean - 1.2054) <= 5e-4
          and abs(a1 - 2.48e-4) <= 0.10 * 2.48e-4
          and abs(a2 - 3.36e-8) <= 0.20 * 3.36e-8)
    return Check(8, "Cantor Fourier coefficients", ok,
                 f"mean {rep.mean:.6f}, amp1 {a1:.4e}, amp2 {a2:.4e}")


def criterion_9(lengths=(0.5, 5.0, 50.0)) -> Check:
    worst = 0.0
    for ell in lengths:
        num = circle.circle_magnitude(circle.CircleParams(ell, 1.0))
        closed = circle.intrinsic_circle_magnitude(ell)
        worst = max(worst, abs(num - closed) / closed)
    return Check(9, "intrinsic circle integral vs closed form", worst <= 1e-10,
                 f"max rel err {worst:.2e} (tol 1e-10)")


def criterion_10(kappas=(1.0, 0.0, -1.0, -10.0), lengths=(20.0, 40.0, 80.0)) -> Check:
    ok = True
    parts = []
    for kappa in kappas:
        scaled = []
        for ell in lengths:
            p = circle.CircleParams(ell, kappa)
            scaled.append(ell * abs(circle.circle_magnitude(p) - circle.circle_asymptotic(p)))
        good = strictly_decreasing(scaled) and scaled[-1] < 0.05
        ok = ok and good
        parts.append(f"k={kappa:g}:{'ok' if good else 'FAIL'} " + "/".join(f"{s:.3g}" for s in scaled))
    return Check(10, "circle asymptotics l*|resid| decreasing, < 0.05 at l=80", ok, "; ".join(parts))


def criterion_11(length: float = 5.0, n: int = 4096) -> Check:
    worst = 0.0
    for kappa in (0.0, 1.0):
        p = circle.CircleParams(length, kappa)
        worst = max(worst, abs(circle.circle_points_magnitude(p, n) - circle.circle_magnitude(p)))
    return Check(11, "Riemann-sum approximations converge", worst < 1e-6,
                 f"max |K^{n} - integral| = {worst:.2e} (tol 1e-6)")


CRITERIA: tuple[Callable[[], Check], ...] = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
)


def timed(fn: Callable[[], Check]) -> Check:
    t0 = time.perf_counter()
    chk = fn()
    return Check(chk.number, chk.name, chk.passed, chk.detail, time.perf_counter() - t0)


def run_all() -> list[Check]:
    return [timed(fn) for fn in CRITERIA]

"""Magnitude of the ternary Cantor set and its finite approximations.

The limit magnitude splits as ``p + q2`` where ``p(3l) = 2 p(l)`` and
``q2(l) -> 0``; ``p(l) = f(l) * l**log3(2)`` with ``f`` multiplicatively
periodic and very nearly constant.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .linear import GapTuple
from .numerics import sum_series

LOG3_2 = math.log(2) / math.log(3)
MAX_LEVEL = 62
MAX_GAP_LEVEL = 24  # 2**25 - 1 gaps; beyond this enumeration is impractical


@dataclass(frozen=True)
class CantorParams:
    length: float
    eps: float = 1e-12

    def __post_init__(self):
        if not self.length > 0:
            raise ValueError("length must be positive")
        if not self.eps > 0:
            raise ValueError("eps must be positive")


def _check_level(k: int, cap: int = MAX_LEVEL) -> int:
    if k < 0 or int(k) != k:
        raise ValueError("level k must be a nonnegative integer")
    if k > cap:
        raise ValueError(f"level k={k} exceeds the cap {cap}")
    return int(k)


def cantor_approx_gaps(length: float, k: int) -> GapTuple:
    """Left-to-right gaps of the ``k``-th approximation (``2**(k+1)`` points).

    Level ``k+1`` is two copies of level ``k`` at a third of the length,
    separated by a third of the length.
    """
    k = _check_level(k, MAX_GAP_LEVEL)
    # Innermost copies first: level j is two level j-1 blocks around a gap l/3**(k-j+1).
    gaps = [length / 3.0**k]
    for j in range(1, k + 1):
        gaps = gaps + [length / 3.0 ** (k - j + 1)] + gaps
    return GapTuple(tuple(gaps))


def cantor_approx_magnitude(length: float, k: int) -> float:
    """Magnitude of the ``k``-th approximation, in closed form."""
    k = _check_level(k)
    head = 2.0**k * math.tanh(length / (2.0 * 3.0**k))
    tail = math.fsum(2.0**i * math.tanh(length / (2.0 * 3.0**i)) for i in range(1, k + 1))
    return 1.0 + head + 0.5 * tail


def _upper_sum(length: float, eps: float, start: int) -> float:
    # sum_{i >= start} 2^i tanh(l / (2 * 3^i)); tanh c <= c bounds the tail.
    return sum_series(
        lambda i: 2.0**i * math.tanh(length / (2.0 * 3.0**i)),
        lambda N: 1.5 * length * (2.0 / 3.0) ** N,
        eps,
        start=start,
    )


def _lower_sum(length: float, eps: float) -> float:
    # sum_{j >= 1} 2^-j tanh(3^j l / 2); tanh <= 1 bounds the tail.
    return sum_series(
        lambda j: 2.0**-j * math.tanh(3.0**j * length / 2.0),
        lambda N: 2.0 ** (1 - N),
        eps,
        start=1,
    )


def cantor_magnitude(p: CantorParams) -> float:
    """Limit of the approximation magnitudes as ``k -> infinity``."""
    return 1.0 + 0.5 * _upper_sum(p.length, p.eps, start=1)


def cantor_p(p: CantorParams) -> float:
    """The part of the magnitude satisfying ``p(3l) = 2 p(l)``."""
    return 0.5 * (_upper_sum(p.length, p.eps, start=0) + _lower_sum(p.length, p.eps))


def _one_minus_tanh(x: float) -> float:
    e = math.exp(-2.0 * x)
    return 2.0 * e / (1.0 + e)


def cantor_q2(p: CantorParams) -> float:
    """The asymptotically vanishing part ``|T_l| - p(l)``.

    Summed as ``(1/2) sum_i 2^-i (1 - tanh(3^i l / 2))``, which equals the
    defining series because ``(1/2) sum_i 2^-i = 1``; this avoids cancelling
    two numbers close to 1 when ``l`` is large.
    """
    return 0.5 * sum_series(
        lambda i: 2.0**-i * _one_minus_tanh(3.0**i * p.length / 2.0),
        lambda N: 2.0 ** (1 - N),
        p.eps,
        start=0,
    )


def cantor_f(length: float, eps: float = 1e-12) -> float:
    """``p(l) * l**(-log3 2)``; satisfies ``f(3l) = f(l)``."""
    return cantor_p(CantorParams(length, eps)) * length ** (-LOG3_2)


@dataclass(frozen=True)
class Harmonic:
    frequency: int
    amplitude: float
    phase: float


@dataclass(frozen=True)
class FourierReport:
    """``f(3**x) ~ mean + sum_k amplitude_k * sin(2 pi k x + phase_k)``."""

    mean: float
    harmonics: tuple[Harmonic, ...] = field(default=())

    def amplitude(self, k: int) -> float:
        return self.harmonics[k - 1].amplitude

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "harmonics": [
                {"frequency": h.frequency, "amplitude": h.amplitude, "phase": h.phase}
                for h in self.harmonics
            ],
        }


def sample_log_period(samples: int, eps: float = 1e-12, workers: int = 1) -> np.ndarray:
    """``f(3**x)`` at ``x = j / samples`` for ``j = 0 .. samples-1``."""
    xs = [j / samples for j in range(samples)]
    fn = lambda x: cantor_f(3.0**x, eps)  # noqa: E731
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return np.array(list(pool.map(fn, xs)))
    return np.array([fn(x) for x in xs])


def cantor_fourier(samples: int = 1024, harmonics: int = 4, eps: float = 1e-12) -> FourierReport:
    """Fourier analysis of ``x -> f(3**x)`` over one period.

    ``f(3**x)`` is analytic and 1-periodic in ``x``, so the discrete
    transform of equispaced samples converges spectrally.
    """
    if samples < 256 or samples & (samples - 1):
        raise ValueError("samples must be a power of two, at least 256")
    if not 0 < harmonics < samples // 2:
        raise ValueError("need 0 < harmonics < samples / 2")
    coeffs = np.fft.rfft(sample_log_period(samples, eps)) / samples
    out = []
    for k in range(1, harmonics + 1):
        c = complex(coeffs[k])
        # 2 Re(c e^{2 pi i k x}) = 2|c| sin(2 pi k x + arg c + pi/2)
        phase = math.remainder(cmath.phase(c) + math.pi / 2, 2 * math.pi)
        out.append(Harmonic(k, 2.0 * abs(c), phase))
    return FourierReport(float(coeffs[0].real), tuple(out))

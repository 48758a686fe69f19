import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from metricmag import cantor, linear
from metricmag.cantor import CantorParams, LOG3_2


def cantor_endpoints(k):
    """Exact endpoints of the k-th middle-thirds approximation of [0, 1]."""
    intervals = [(Fraction(0), Fraction(1))]
    for _ in range(k):
        nxt = []
        for a, b in intervals:
            t = (b - a) / 3
            nxt += [(a, a + t), (b - t, b)]
        intervals = nxt
    return sorted({x for iv in intervals for x in iv})


@pytest.mark.parametrize("k", [0, 1, 2, 3, 5])
def test_gaps_against_exact_enumeration(k):
    ell = 3.0**k
    g = cantor.cantor_approx_gaps(ell, k)
    expected = linear.gaps_from_positions([float(x * int(ell)) for x in cantor_endpoints(k)])
    assert g.n == 2 ** (k + 1)
    assert g.gaps == expected.gaps


def test_gap_examples():
    assert cantor.cantor_approx_gaps(2.0, 0).gaps == (2.0,)
    assert cantor.cantor_approx_gaps(3.0, 1).gaps == (1.0, 1.0, 1.0)
    assert cantor.cantor_approx_gaps(9.0, 2).gaps == (1, 1, 1, 3, 1, 1, 1)


def test_level_caps():
    with pytest.raises(ValueError):
        cantor.cantor_approx_gaps(1.0, cantor.MAX_GAP_LEVEL + 1)
    with pytest.raises(ValueError):
        cantor.cantor_approx_magnitude(1.0, cantor.MAX_LEVEL + 1)
    with pytest.raises(ValueError):
        cantor.cantor_approx_magnitude(1.0, -1)


@pytest.mark.parametrize("ell", [0.1, 1.0, 4.0])
def test_level_zero_is_two_points(ell):
    assert cantor.cantor_approx_magnitude(ell, 0) == pytest.approx(1 + math.tanh(ell / 2), rel=1e-15)


@pytest.mark.parametrize("ell", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("k", range(11))
def test_rescaled_recursion(ell, k):
    lhs = cantor.cantor_approx_magnitude(3 * ell, k + 1)
    rhs = 1 + 2 * (cantor.cantor_approx_magnitude(ell, k) - 1) + math.tanh(ell / 2)
    assert abs(lhs - rhs) <= 1e-12


@pytest.mark.parametrize("ell", [0.3, 1.0, 10.0])
@pytest.mark.parametrize("k", range(9))
def test_closed_form_matches_linear(ell, k):
    g = cantor.cantor_approx_gaps(ell, k)
    assert abs(cantor.cantor_approx_magnitude(ell, k) - linear.linear_magnitude(g)) <= 1e-10


@pytest.mark.parametrize("ell", [0.2, 1.0, 7.0, 40.0])
def test_monotone_convergence(ell):
    # Increments shrink like (2/3)^k and reach rounding level near k = 12.
    vals = [cantor.cantor_approx_magnitude(ell, k) for k in range(40)]
    assert all(b > a for a, b in zip(vals[:10], vals[1:11]))
    limit = cantor.cantor_magnitude(CantorParams(ell))
    assert all(v <= limit + 1e-10 for v in vals)
    assert abs(cantor.cantor_approx_magnitude(ell, 60) - limit) <= 1e-10


def test_magnitude_not_self_similar():
    P, P3 = CantorParams(1.0), CantorParams(3.0)
    assert abs(cantor.cantor_magnitude(P3) - 2 * cantor.cantor_magnitude(P)) > 0.1


@pytest.mark.parametrize("ell", [0.5, 1.0, 2.0, 7.0])
def test_p_functional_equation(ell):
    assert abs(cantor.cantor_p(CantorParams(3 * ell)) - 2 * cantor.cantor_p(CantorParams(ell))) <= 1e-10


@pytest.mark.parametrize("ell", np.geomspace(1e-3, 1e3, 25))
def test_decomposition_and_bounds(ell):
    P = CantorParams(float(ell))
    p, q2, T = cantor.cantor_p(P), cantor.cantor_q2(P), cantor.cantor_magnitude(P)
    assert abs(p + q2 - T) <= 1e-10
    assert 0 <= q2 <= 1
    assert p > 0


def test_q2_small_length_oracle():
    ell = 1e-6
    direct = 1 - 0.5 * math.fsum(2.0**-i * math.tanh(3.0**i * ell / 2) for i in range(200))
    assert cantor.cantor_q2(CantorParams(ell)) == pytest.approx(direct, abs=1e-12)


def test_q2_vanishes():
    assert cantor.cantor_q2(CantorParams(50.0)) < 1e-9
    vals = [cantor.cantor_q2(CantorParams(x)) for x in (1, 3, 9, 27)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("ell", [0.3, 1.0, 5.0])
def test_f_periodic(ell):
    assert cantor.cantor_f(3 * ell) / cantor.cantor_f(ell) == pytest.approx(1.0, abs=1e-10)


def test_f_at_one():
    assert abs(cantor.cantor_f(1.0) - 1.2054) <= 1e-3


@given(st.floats(1e-3, 1e3))
def test_growth_exponent(ell):
    ratio = cantor.cantor_p(CantorParams(3 * ell)) / cantor.cantor_p(CantorParams(ell))
    assert abs(math.log(ratio) / math.log(3) - LOG3_2) <= 1e-10


def test_fourier_against_explicit_dft():
    N = 256
    rep = cantor.cantor_fourier(N, 3)
    f = cantor.sample_log_period(N)
    x = np.arange(N) / N
    assert rep.mean == pytest.approx(f.mean(), abs=1e-15)
    for k in (1, 2, 3):
        # Projection onto sin and cos modes.
        a = 2 * np.mean(f * np.sin(2 * np.pi * k * x))
        b = 2 * np.mean(f * np.cos(2 * np.pi * k * x))
        h = rep.harmonics[k - 1]
        assert h.frequency == k
        assert h.amplitude == pytest.approx(math.hypot(a, b), abs=1e-14)
        # amp sin(2 pi k x + th) = amp cos th sin(.) + amp sin th cos(.)
        assert h.amplitude * math.cos(h.phase) == pytest.approx(a, abs=1e-13)
        assert h.amplitude * math.sin(h.phase) == pytest.approx(b, abs=1e-13)


def test_fourier_reconstructs_samples():
    rep = cantor.cantor_fourier(512, 4)
    f = cantor.sample_log_period(512)
    x = np.arange(512) / 512
    recon = rep.mean + sum(h.amplitude * np.sin(2 * np.pi * h.frequency * x + h.phase) for h in rep.harmonics)
    assert np.abs(recon - f).max() < 1e-11


def test_fourier_values():
    rep = cantor.cantor_fourier()
    assert abs(rep.mean - 1.2054) <= 5e-4
    assert abs(rep.amplitude(1) - 2.48e-4) <= 0.1 * 2.48e-4
    assert abs(rep.amplitude(2) - 3.36e-8) <= 0.2 * 3.36e-8
    assert rep.amplitude(3) < rep.amplitude(2)


@pytest.mark.parametrize("samples, harmonics", [(100, 4), (128, 4), (256, 128), (256, 0)])
def test_fourier_argument_checks(samples, harmonics):
    with pytest.raises(ValueError):
        cantor.cantor_fourier(samples, harmonics)


def test_params_validation():
    with pytest.raises(ValueError):
        CantorParams(0.0)
    with pytest.raises(ValueError):
        CantorParams(1.0, eps=0.0)

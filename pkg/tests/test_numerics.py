import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from metricmag.errors import NoConvergence, SingularMatrix
from metricmag.numerics import Quadrature, integrate, solve_symmetric, sum_series


def test_identity_solve():
    b = np.array([1.0, -2.0, 3.0])
    x, diag = solve_symmetric(np.eye(3), b)
    np.testing.assert_array_equal(x, b)
    assert diag.method == "cholesky" and diag.positive_definite


@pytest.mark.parametrize("d", [0.1, 1.0, 5.0])
def test_two_by_two(d):
    a = math.exp(-d)
    x, diag = solve_symmetric(np.array([[1, a], [a, 1]]), np.ones(2))
    np.testing.assert_allclose(x, [1 / (1 + a)] * 2, rtol=1e-14)
    assert diag.positive_definite


def test_all_ones_is_singular():
    with pytest.raises(SingularMatrix):
        solve_symmetric(np.ones((3, 3)), np.array([1.0, 0.0, 0.0]))


def test_indefinite_matrix_uses_lu():
    A = np.array([[1.0, 2.0], [2.0, 1.0]])
    b = np.array([1.0, 1.0])
    x, diag = solve_symmetric(A, b)
    assert diag.method == "lu" and not diag.positive_definite
    np.testing.assert_allclose(A @ x, b, atol=1e-14)


@given(st.integers(1, 30), st.integers(0, 2**32 - 1))
def test_residual_bound(n, seed):
    rng = np.random.default_rng(seed)
    M = rng.standard_normal((n, n))
    A = M + M.T + (0 if seed % 2 else 2 * n) * np.eye(n)
    b = rng.standard_normal(n)
    try:
        x, diag = solve_symmetric(A, b)
    except SingularMatrix:
        return
    assert np.abs(A @ x - b).max() <= 1e-10 * np.abs(b).max()
    if diag.positive_definite:
        assert diag.method == "cholesky"


def test_integrate_examples():
    q = Quadrature()
    assert integrate(lambda s: 1.0, 0, 1, q) == pytest.approx(1.0, abs=1e-14)
    assert integrate(lambda s: np.sin(np.pi * s), 0, 1, q) == pytest.approx(2 / math.pi, abs=1e-12)
    assert integrate(lambda s: np.exp(-0.0 * np.sin(np.pi * s) / np.pi), 0, 1) == pytest.approx(1.0)


def test_integrate_scalar_callable():
    assert integrate(math.exp, 0, 1) == pytest.approx(math.e - 1, abs=1e-12)


def test_integrate_reversed_limits():
    assert integrate(lambda s: s, 1, 0) == pytest.approx(-0.5, abs=1e-14)


def test_integrate_no_convergence():
    # A jump that never lands on a panel boundary keeps the estimates apart.
    with pytest.raises(NoConvergence):
        integrate(lambda s: (s > 1 / 3).astype(float), 0, 1, Quadrature(tol=1e-15, max_refinements=4))


def test_quadrature_validation():
    with pytest.raises(ValueError):
        Quadrature(tol=0)
    with pytest.raises(ValueError):
        Quadrature(max_refinements=0)


@given(st.lists(st.floats(-10, 10), min_size=1, max_size=16), st.floats(-3, 3), st.floats(0.1, 4))
def test_integrate_exact_on_polynomials(coeffs, a, width):
    # 8-point Gauss-Legendre is exact through degree 15.
    p = np.polynomial.Polynomial(coeffs)
    b = a + width
    exact = p.integ()(b) - p.integ()(a)
    scale = max(1.0, float(np.abs(coeffs).sum()) * max(abs(a), abs(b), 1) ** len(coeffs))
    assert abs(integrate(p, a, b, Quadrature(tol=1e-12)) - exact) <= 1e-12 * scale


def test_sum_series_geometric():
    s = sum_series(lambda i: 2.0**-i, lambda N: 2.0 ** (1 - N), 1e-12)
    assert abs(s - 1.0) <= 1e-12


def test_sum_series_zero():
    assert sum_series(lambda i: 0.0, lambda N: 0.0, 1e-12) == 0.0


@pytest.mark.parametrize("ell", [0.1, 1.0, 7.0, 100.0])
def test_sum_series_cantor_tail(ell):
    term = lambda i: 2.0**i * math.tanh(ell / (2 * 3.0**i))  # noqa: E731
    oracle = math.fsum(term(i) for i in range(1, 201))
    s = sum_series(term, lambda N: 1.5 * ell * (2 / 3) ** N, 1e-12)
    assert abs(s - oracle) <= 1e-12


def test_sum_series_no_convergence():
    with pytest.raises(NoConvergence):
        sum_series(lambda i: 1.0, lambda N: 1.0, 1e-3, max_terms=100)


@given(st.floats(1e-14, 1e-4), st.floats(1e-14, 1e-4))
def test_sum_series_eps_independence(e1, e2):
    term = lambda i: 2.0**i * math.tanh(3.0 / (2 * 3.0**i))  # noqa: E731
    bound = lambda N: 4.5 * (2 / 3) ** N  # noqa: E731
    assert abs(sum_series(term, bound, e1) - sum_series(term, bound, e2)) <= e1 + e2

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate

from frwtk.errors import QuadNoConverge
from frwtk.quad import G10_WEIGHTS, GK21_NODES, GK21_WEIGHTS, integrate_1d, integrate_2d


@pytest.mark.parametrize("deg", range(0, 32))
def test_kronrod_exact_to_degree_31(deg):
    exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
    assert abs(GK21_WEIGHTS @ GK21_NODES ** deg - exact) < 1e-14


@pytest.mark.parametrize("deg", range(0, 20))
def test_embedded_gauss_exact_to_degree_19(deg):
    exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
    assert abs(G10_WEIGHTS @ GK21_NODES ** deg - exact) < 1e-14


@pytest.mark.parametrize("f, dom, exact", [
    (lambda t: np.exp(-t * t), (-math.inf, math.inf), math.sqrt(math.pi)),
    (lambda t: 1.0 / (1.0 + t * t), (-math.inf, math.inf), math.pi),
    (lambda t: np.exp(-t), (0.0, math.inf), 1.0),
    (lambda t: np.exp(t), (-math.inf, 0.0), 1.0),
    (lambda t: np.sqrt(t), (0.0, 1.0), 2.0 / 3.0),
    (lambda t: np.cos(20 * t), (0.0, math.pi / 2), math.sin(10 * math.pi) / 20),
])
def test_known_integrals(f, dom, exact):
    res = integrate_1d(f, dom, 1e-11)
    assert abs(res.value - exact) < 1e-9
    assert res.est_error <= 1e-11 * max(1.0, abs(res.value))


def test_matches_scipy_on_damped_oscillation():
    def f(t):
        return np.cos(3 * t) * np.exp(-0.1 * t * t) / (1 + t * t)

    ref = integrate.quad(lambda t: float(f(np.array(t))), -np.inf, np.inf, limit=500)[0]
    assert abs(integrate_1d(f, (-math.inf, math.inf), 1e-10).value - ref) < 1e-8


def test_vector_valued_shares_mesh():
    k = np.arange(1, 4)
    res = integrate_1d(lambda t: np.exp(-np.outer(t * t, k)), (-math.inf, math.inf), 1e-10)
    assert np.allclose(res.value, np.sqrt(np.pi / k), atol=1e-9)


def test_reversed_domain_flips_sign():
    a = integrate_1d(np.exp, (0.0, 1.0), 1e-12).value
    b = integrate_1d(np.exp, (1.0, 0.0), 1e-12).value
    assert b == pytest.approx(-a)


def test_breakpoints_help_kinks():
    res = integrate_1d(lambda t: np.abs(t - 0.3), (-1.0, 1.0), 1e-12, points=[0.3])
    assert res.value == pytest.approx(0.5 * 1.3 ** 2 + 0.5 * 0.7 ** 2, abs=1e-12)


def test_no_converge_carries_estimate():
    with pytest.raises(QuadNoConverge) as info:
        integrate_1d(lambda t: np.sin(1 / t), (1e-4, 1.0), 1e-12, limit=8)
    assert info.value.value is not None
    assert info.value.est_error > 0


def test_two_dimensional_gaussian():
    res = integrate_2d(lambda x, y: np.exp(-x * x - 2 * y * y),
                       (-math.inf, math.inf), (-math.inf, math.inf), 1e-10)
    assert res.value == pytest.approx(math.pi / math.sqrt(2), abs=1e-9)


def test_two_dimensional_vector_valued():
    k = np.array([1.0, 2.0])
    res = integrate_2d(lambda x, y: np.exp(-(x * x + y * y)[..., None] * k),
                       (0.0, math.inf), (-math.inf, math.inf), 1e-10)
    assert np.allclose(res.value, math.pi / (2 * k), atol=1e-9)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.1, 2))
def test_linearity(c1, c2, s):
    def f(t):
        return np.exp(-s * t * t)

    def g(t):
        return 1 / (1 + t ** 4)

    dom = (-math.inf, math.inf)
    lhs = integrate_1d(lambda t: c1 * f(t) + c2 * g(t), dom, 1e-11).value
    rhs = c1 * integrate_1d(f, dom, 1e-12).value + c2 * integrate_1d(g, dom, 1e-12).value
    assert abs(lhs - rhs) < 1e-9 * max(1, abs(c1) + abs(c2))

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from frwtk import SampledSignal, default_output_grid, frft, frft_kernel, inverse_frft
from frwtk.errors import SingularAngle


@pytest.fixture
def h():
    return SampledSignal.from_function(
        lambda t: np.exp(-0.5 * (t - 0.7) ** 2 + 0.4j * t), -12, 24 / 511, 512)


def test_quarter_turn_is_fourier():
    u = np.linspace(-3, 3, 7)[:, None]
    t = np.linspace(-2, 2, 5)[None, :]
    k = frft_kernel(math.pi / 2, u, t)
    assert np.allclose(k, np.exp(-1j * u * t) / math.sqrt(2 * math.pi), atol=1e-15)


@pytest.mark.parametrize("theta", [0.3, math.pi / 2, 2.0, -1.1])
def test_gaussian_is_eigenfunction(theta):
    g = SampledSignal.from_function(lambda t: np.exp(-t * t / 2), -12, 24 / 600, 601)
    u = np.linspace(-4, 4, 41)
    spec = frft(g, theta, u)
    assert np.max(np.abs(spec.values - np.exp(-u * u / 2))) < 1e-12


@pytest.mark.parametrize("theta", [0.4, 1.2, 2.5])
def test_chirpz_matches_direct(h, theta):
    u = default_output_grid(h, theta)
    a = frft(h, theta, u, method="direct").values
    b = frft(h, theta, u, method="chirpz").values
    assert np.max(np.abs(a - b)) < 1e-10


def test_chirpz_rejects_nonuniform(h):
    with pytest.raises(ValueError):
        frft(h, 1.0, np.array([0.0, 0.1, 0.3]), method="chirpz")


def test_singular_angle(h):
    with pytest.raises(SingularAngle):
        frft(h, math.pi)


def test_additivity(h):
    a, b = 0.5, 0.7
    step = SampledSignal.from_function(lambda t: 0 * t, -12, 24 / 511, 512)
    mid = frft(h, a, step.times).as_signal()
    two = frft(mid, b, np.linspace(-3, 3, 31)).values
    one = frft(h, a + b, np.linspace(-3, 3, 31)).values
    assert np.max(np.abs(two - one)) < 1e-9


def test_inverse_and_unitarity(h):
    theta = 0.9
    u = np.linspace(-12, 12, 512)
    spec = frft(h, theta, u)
    back = inverse_frft(spec, theta, h.times)
    assert np.max(np.abs(back - h.samples)) < 1e-9
    e_t = np.sum(h.weights * np.abs(h.samples) ** 2)
    e_u = np.sum(spec.as_signal().weights * np.abs(spec.values) ** 2)
    assert e_u == pytest.approx(e_t, rel=1e-9)


@given(st.complex_numbers(max_magnitude=3), st.floats(0.2, 2.9))
def test_linearity(c, theta):
    f = SampledSignal.from_function(lambda t: np.exp(-t * t), -5, 0.1, 101)
    u = np.linspace(-2, 2, 9)
    a = frft(f.with_samples(c * f.samples), theta, u).values
    assert np.allclose(a, c * frft(f, theta, u).values, atol=1e-12)

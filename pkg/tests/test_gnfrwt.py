import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from frwtk import (MexicanHat, Morlet, SampledSignal, ScaleShiftGrid, Tabulated,
                   TransformParams, admissibility_constant, cwt, daughter_wavelet, forward,
                   forward_via_frft, inverse, parseval_residual, reconstruction_constant)
from frwtk.errors import NotAdmissible
from frwtk.signals import chirp

GRID = ScaleShiftGrid.logspace(0.05, 10, 48, -10, 10, 161)


class Gaussian:
    support = 12.0

    def __call__(self, t):
        return np.exp(-np.asarray(t) ** 2 / 2) + 0j

    def hat(self, w):
        return np.exp(-np.asarray(w) ** 2 / 2) + 0j


def test_mexican_admissibility_is_one():
    assert admissibility_constant(MexicanHat(), 1e-12) == pytest.approx(1.0, abs=1e-10)


def test_reconstruction_constants():
    assert reconstruction_constant(MexicanHat()) == pytest.approx(math.pi, rel=1e-9)
    assert reconstruction_constant(MexicanHat(), two_sided=True) == pytest.approx(
        2 * math.pi, rel=1e-9)
    # Morlet's spectrum sits on the positive side
    m = Morlet(5.0)
    assert reconstruction_constant(m) == pytest.approx(2 * math.pi * admissibility_constant(m),
                                                       rel=1e-6)


def test_gaussian_not_admissible():
    with pytest.raises(NotAdmissible):
        admissibility_constant(Gaussian())


def test_tabulated_admissibility_close_to_analytic():
    tab = Tabulated(SampledSignal.from_function(MexicanHat(), -12, 0.02, 1201))
    assert admissibility_constant(tab, 1e-8) == pytest.approx(1.0, rel=1e-6)


def test_daughter_modulus_and_chirp():
    p = TransformParams(0.5, rho=0.5)
    t = np.linspace(-3, 3, 13)
    d = daughter_wavelet(Morlet(), p, 2.0, 0.5, t)
    assert np.allclose(np.abs(d), 2 ** -0.5 * np.abs(Morlet()((t - 0.5) / 2)))
    with pytest.raises(ValueError):
        daughter_wavelet(Morlet(), p, -1.0, 0.0, t)


def test_alpha_one_is_classical(gauss_chirp):
    grid = ScaleShiftGrid.logspace(0.1, 4, 16, -6, 6, 64)
    p = TransformParams(1.0, rho=0.5)
    a = forward(gauss_chirp, MexicanHat(), p, grid).values
    b = cwt(gauss_chirp, MexicanHat(), 0.5, grid).values
    assert np.max(np.abs(a - b)) < 1e-12


@pytest.mark.parametrize("alpha", [0.3, 0.5, 1.4])
def test_direct_and_factored_routes(gauss_chirp, alpha):
    p = TransformParams(alpha, rho=0.7)
    grid = ScaleShiftGrid.logspace(0.1, 4, 8, -4, 4, 17)
    a = forward(gauss_chirp, Morlet(), p, grid, method="direct").values
    b = forward(gauss_chirp, Morlet(), p, grid).values
    assert np.max(np.abs(a - b)) < 1e-10


def test_frft_route():
    h = chirp()
    p = TransformParams(0.5, rho=0.5)
    a = forward(h, MexicanHat(), p, GRID).values
    b = forward_via_frft(h, MexicanHat(), p, GRID).values
    assert np.linalg.norm(a - b) / np.linalg.norm(a) < 1e-4


def test_zero_input_gives_zero_plane():
    z = SampledSignal(-1, 0.1, np.zeros(21))
    assert not np.any(forward(z, Morlet(), TransformParams(0.5), GRID).values)


@pytest.mark.parametrize("alpha", [0.5, 1.0])
def test_parseval_and_inversion(alpha):
    h = chirp()
    g = chirp(center=0.5, carrier=3.5, rate=-0.05)
    p = TransformParams(alpha, rho=0.5)
    assert parseval_residual(h, h, MexicanHat(), p, GRID).rel_err < 0.02
    assert parseval_residual(h, g, MexicanHat(), p, GRID).rel_err < 0.02
    back = inverse(forward(h, MexicanHat(), p, GRID), MexicanHat(), p,
                   t0=h.t0, dt=h.dt, n=len(h))
    assert np.linalg.norm(back.samples - h.samples) / np.linalg.norm(h.samples) < 0.05


def test_parseval_zero_rhs_reports_absolute():
    z = SampledSignal(-8, 16 / 255, np.zeros(256))
    res = parseval_residual(chirp(), z, MexicanHat(), TransformParams(0.5), GRID)
    assert res.rhs == 0 and res.rel_err == 0


@given(st.complex_numbers(max_magnitude=5), st.floats(0.2, 1.8))
def test_transform_is_linear(c, alpha):
    h = chirp(64, -4, 4)
    g = chirp(64, -4, 4, carrier=2.0)
    grid = ScaleShiftGrid.logspace(0.2, 2, 4, -2, 2, 5)
    p = TransformParams(alpha)
    lhs = forward(h.with_samples(h.samples + c * g.samples), Morlet(), p, grid).values
    rhs = forward(h, Morlet(), p, grid).values + c * forward(g, Morlet(), p, grid).values
    assert np.max(np.abs(lhs - rhs)) < 1e-12 * (1 + abs(c)) * max(1, np.max(np.abs(rhs)))

"""Fractional Fourier transform with the Namias kernel.

    K(theta; u, t) = sqrt((1 - i cot theta) / (2 pi))
                     * exp(i (u^2 + t^2)/2 * cot theta - i u t csc theta)

At theta = pi/2 this is the unitary Fourier kernel exp(-i u t)/sqrt(2 pi).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import SINGULAR_ANGLE_EPS, SampledSignal
from .errors import SingularAngle

__all__ = ["FrftSpectrum", "frft_kernel", "frft", "default_output_grid",
           "inverse_frft"]


@dataclass(frozen=True, eq=False)
class FrftSpectrum:
    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float).reshape(-1)
        v = np.asarray(self.values, dtype=complex).reshape(-1)
        if g.shape != v.shape:
            raise ValueError("grid and values lengths differ")
        if not np.all(np.isfinite(v)):
            raise ValueError("spectrum values must be finite")
        object.__setattr__(self, "grid", g)
        object.__setattr__(self, "values", v)

    def as_signal(self):
        """The spectrum as a signal on its (uniform) grid."""
        g = self.grid
        return SampledSignal(g[0], g[1] - g[0], self.values)


def _cot_csc(theta):
    if abs(math.remainder(theta, math.pi)) < SINGULAR_ANGLE_EPS:
        raise SingularAngle(f"theta={theta} is a multiple of pi")
    s, c = math.sin(theta), math.cos(theta)
    return c / s, 1.0 / s


def _amplitude(cot):
    return np.sqrt((1.0 - 1j * cot) / (2.0 * math.pi))


def frft_kernel(theta, u, t):
    cot, csc = _cot_csc(theta)
    u = np.asarray(u, dtype=float)
    t = np.asarray(t, dtype=float)
    phase = 0.5 * (u * u + t * t) * cot - u * t * csc
    return _amplitude(cot) * np.exp(1j * phase)


def default_output_grid(h, theta, n=None):
    """Uniform output grid covering one period of the sampled transform.

    The trapezoid sum over ``h``'s grid is periodic in ``u`` with period
    ``2 pi / (dt |csc theta|)``; the grid spans that period centred at 0.
    """
    _, csc = _cot_csc(theta)
    n = 4 * len(h) if n is None else int(n)
    half = math.pi / (h.dt * abs(csc))
    return -half + (2 * half / n) * np.arange(n)


def _direct(h, theta, grid):
    t = h.times
    ws = h.weights * h.samples
    out = np.empty(grid.size, dtype=complex)
    for i in range(0, grid.size, 1024):
        u = grid[i:i + 1024]
        out[i:i + 1024] = frft_kernel(theta, u[:, None], t[None, :]) @ ws
    return out


def _chirpz(h, theta, grid):
    # sum_n c_n exp(-i csc (u0 + m du)(t0 + n dt)) via Bluestein's identity
    cot, csc = _cot_csc(theta)
    t = h.times
    n_t, n_u = t.size, grid.size
    u0 = grid[0]
    du = grid[1] - grid[0] if n_u > 1 else 1.0
    beta = csc * du * h.dt
    n = np.arange(n_t)
    m = np.arange(n_u)
    c = h.weights * h.samples * np.exp(0.5j * t * t * cot - 1j * csc * u0 * t)
    x = c * np.exp(-0.5j * beta * n * n)
    k = np.arange(-(n_t - 1), n_u)
    chirp = np.exp(0.5j * beta * k * k)
    size = 1 << int(math.ceil(math.log2(n_t + n_u - 1)))
    conv = np.fft.ifft(np.fft.fft(x, size) * np.fft.fft(chirp, size))
    core = conv[n_t - 1:n_t - 1 + n_u] * np.exp(-0.5j * beta * m * m)
    uu = grid
    return (_amplitude(cot) * np.exp(0.5j * uu * uu * cot)
            * np.exp(-1j * csc * h.t0 * (uu - u0)) * core)


def frft(h, theta, out_grid=None, method="direct"):
    """Fractional Fourier transform of ``h`` sampled on ``out_grid``.

    ``method="direct"`` evaluates the kernel sum over the signal grid;
    ``method="chirpz"`` computes the same sum with FFT convolutions and
    needs a uniform ``out_grid``.
    """
    _cot_csc(theta)
    grid = default_output_grid(h, theta) if out_grid is None else np.asarray(
        out_grid, dtype=float).reshape(-1)
    if method == "direct":
        vals = _direct(h, theta, grid)
    elif method == "chirpz":
        if grid.size > 2 and np.ptp(np.diff(grid)) > 1e-9 * abs(grid[1] - grid[0]):
            raise ValueError("chirpz needs a uniform output grid")
        vals = _chirpz(h, theta, grid)
    else:
        raise ValueError(f"unknown method {method!r}")
    return FrftSpectrum(grid, vals)


def inverse_frft(spec, theta, t_grid):
    """Transform back by the angle ``-theta`` onto ``t_grid``."""
    return frft(spec.as_signal(), -theta, t_grid).values

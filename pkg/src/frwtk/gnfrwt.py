"""The fractional wavelet transform: daughters, analysis, synthesis.

The daughter of a mother wavelet ``phi`` at scale ``a > 0`` and shift ``b``
is::

    phi_ab(t) = exp(-i/2 (t^2 - b^2) cot theta) a^(-rho) phi((t - b)/a)

and the transform of ``h`` is ``W(a, b) = integral h(t) conj(phi_ab(t)) dt``.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .core import (CoefficientPlane, SampledSignal, ScaleShiftGrid,
                   inner_product, DEFAULT_TOL)
from .errors import NotAdmissible, QuadNoConverge
from .frft import default_output_grid, frft, frft_kernel
from .quad import integrate_1d

__all__ = [
    "daughter_wavelet", "forward", "cwt", "forward_via_frft",
    "admissibility_constant", "reconstruction_constant", "inverse",
    "parseval_residual", "ParsevalResult",
]

_SCALE_CHUNK = 8


def daughter_wavelet(phi, params, a, b, t):
    a = np.asarray(a, dtype=float)
    if np.any(a <= 0):
        raise ValueError("scale a must be positive")
    b = np.asarray(b, dtype=float)
    t = np.asarray(t, dtype=float)
    chirp = np.exp(-0.5j * (t * t - b * b) * params.cot)
    return chirp * a ** (-params.rho) * phi((t - b) / a)


def _correlate(samples, h, phi, rho, grid):
    """sum_n w_n f(t_n) a^-rho conj(phi((t_n - b)/a)) for every (a, b)."""
    t = h.times
    ws = h.weights * samples
    a_all, b = grid.scales, grid.shifts
    out = np.empty(grid.shape, dtype=complex)
    for j0 in range(0, a_all.size, _SCALE_CHUNK):
        a = a_all[j0:j0 + _SCALE_CHUNK]
        x = (t[None, None, :] - b[None, :, None]) / a[:, None, None]
        kern = np.conj(phi(x))
        out[j0:j0 + a.size] = (kern @ ws) * (a ** (-rho))[:, None]
    return out


def cwt(h, phi, rho, grid):
    """Classical (chirp-free) wavelet transform with ``a^-rho`` daughters."""
    return CoefficientPlane(grid, _correlate(h.samples, h, phi, rho, grid), rho)


def forward(h, phi, params, grid, method="factored"):
    """Transform ``h`` on ``grid`` by trapezoidal quadrature over its samples.

    ``method="direct"`` correlates against the chirped daughters;
    ``method="factored"`` pre-multiplies ``h`` by ``exp(i t^2 cot/2)``, runs
    the classical transform and post-multiplies by ``exp(-i b^2 cot/2)``.
    """
    c = params.cot
    if method == "factored":
        t = h.times
        pre = h.samples * np.exp(0.5j * t * t * c)
        vals = _correlate(pre, h, phi, params.rho, grid)
        vals *= np.exp(-0.5j * grid.shifts ** 2 * c)[None, :]
    elif method == "direct":
        t = h.times
        ws = h.weights * h.samples
        vals = np.empty(grid.shape, dtype=complex)
        b = grid.shifts
        for j, a in enumerate(grid.scales):
            d = daughter_wavelet(phi, params, a, b[:, None], t[None, :])
            vals[j] = np.conj(d) @ ws
    else:
        raise ValueError(f"unknown method {method!r}")
    return CoefficientPlane(grid, vals, params.rho)


def forward_via_frft(h, phi, params, grid, out_grid=None):
    """Transform through the fractional Fourier domain.

    ``W(a,b) = integral sqrt(2 pi) a^(1-rho) H(v) conj(phi_hat(a v csc))
    conj(K(v, b)) dv`` with ``H`` the fractional transform of ``h`` at the
    same angle, integrated by the trapezoidal rule on ``out_grid``.
    """
    theta = params.theta
    v = default_output_grid(h, theta, 8 * len(h)) if out_grid is None else np.asarray(
        out_grid, dtype=float)
    spec = frft(h, theta, v, method="chirpz" if out_grid is None else "direct")
    wv = _trapz(v)
    kb = np.conj(frft_kernel(theta, v[:, None], grid.shifts[None, :]))
    a = grid.scales
    m = (math.sqrt(2.0 * math.pi) * a[:, None] ** (1.0 - params.rho)
         * (spec.values * wv)[None, :]
         * np.conj(phi.hat(a[:, None] * v[None, :] * params.csc)))
    return CoefficientPlane(grid, m @ kb, params.rho)


def _trapz(x):
    w = np.zeros(x.size)
    d = np.diff(x)
    w[:-1] += 0.5 * d
    w[1:] += 0.5 * d
    return w


def _hat_energy_at_origin(phi):
    probe = np.linspace(-40.0, 40.0, 8001)
    peak = float(np.max(np.abs(phi.hat(probe)) ** 2))
    return float(np.abs(phi.hat(np.array([0.0]))[0]) ** 2), peak


def _half_line_hat_integral(phi, tol, sign):
    def f(w):
        return np.abs(phi.hat(sign * w)) ** 2 / w
    try:
        res = integrate_1d(f, (0.0, math.inf), tol, scale=2.0, n_init=8)
    except QuadNoConverge as exc:
        raise NotAdmissible(f"admissibility integral did not converge: {exc}") from exc
    return float(np.real(res.value))


def admissibility_constant(phi, tol=DEFAULT_TOL):
    """``C = integral |phi_hat(w)|^2 / |w| dw`` (unitary Fourier convention).

    A nonzero mean makes the integral diverge logarithmically at the
    origin; this is detected by comparing ``|phi_hat(0)|^2`` with the
    spectral peak at relative level ``tol``.
    """
    at0, peak = _hat_energy_at_origin(phi)
    if peak == 0.0:
        raise NotAdmissible("wavelet is identically zero")
    if at0 > tol * peak:
        raise NotAdmissible(
            f"|phi_hat(0)|^2 = {at0:.3e} is not negligible (peak {peak:.3e})")
    c = (_half_line_hat_integral(phi, tol, 1.0)
         + _half_line_hat_integral(phi, tol, -1.0))
    if not (c > 0 and math.isfinite(c)):
        raise NotAdmissible(f"admissibility integral gave {c}")
    return c


def reconstruction_constant(phi, tol=DEFAULT_TOL, two_sided=False):
    """Normalisation that makes synthesis invert analysis over ``a > 0``.

    With unitary Fourier transforms, integrating ``|W|^2 a^(2rho-3)`` over
    ``a > 0`` and all ``b`` gives ``2 pi * integral_0^inf |phi_hat(w)|^2/w dw``
    times the signal energy at positive frequencies.  For wavelets with an
    even spectral modulus this is ``pi * admissibility_constant(phi)``.
    ``two_sided=True`` gives the constant for scales over the whole real
    line, ``2 pi * admissibility_constant(phi)``.
    """
    if two_sided:
        return 2.0 * math.pi * admissibility_constant(phi, tol)
    admissibility_constant(phi, tol)
    return 2.0 * math.pi * _half_line_hat_integral(phi, tol, 1.0)


def inverse(plane, phi, params, *, t0, dt, n, constant=None):
    """Synthesis ``h(t) = C^-1 sum W(a,b) phi_ab(t) a^(2rho-3) db da``.

    Trapezoid weights in ``b`` and in ``log a``.  ``constant`` defaults to
    :func:`reconstruction_constant`.
    """
    c = reconstruction_constant(phi, params.quad_tol) if constant is None else constant
    grid = plane.grid
    w = grid.measure_weights(plane.rho) * plane.values
    t = t0 + dt * np.arange(n)
    out = np.zeros(n, dtype=complex)
    b = grid.shifts
    for j, a in enumerate(grid.scales):
        d = daughter_wavelet(phi, params, a, b[:, None], t[None, :])
        out += w[j] @ d
    return SampledSignal(t0, dt, out / c)


class ParsevalResult(NamedTuple):
    lhs: complex
    rhs: complex
    rel_err: float


def parseval_residual(h, g, phi, params, grid, constant=None):
    """Compare the plane inner product of two transforms with ``C <h, g>``.

    ``rel_err`` is ``|lhs - rhs| / |rhs|``; when ``rhs`` is zero it holds
    the absolute error ``|lhs|`` instead.
    """
    c = reconstruction_constant(phi, params.quad_tol) if constant is None else constant
    wh = forward(h, phi, params, grid)
    wg = wh if g is h else forward(g, phi, params, grid)
    lhs = wh.integrate(wg)
    rhs = c * inner_product(h, g)
    if rhs == 0:
        return ParsevalResult(lhs, rhs, abs(lhs))
    return ParsevalResult(lhs, rhs, abs(lhs - rhs) / abs(rhs))

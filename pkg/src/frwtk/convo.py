"""Basic function D(u, v, w), translation and the associated convolution.

``D`` is obtained by running the synthesis formula on the product of two
conjugated daughters::

    D(u,v,w) = C^-1 integral conj(psi_ab(w)) conj(chi_ab(v)) phi_ab(u)
                        a^(2 rho - 3) da db

over ``a > 0`` and real ``b`` (``two_sided=True`` integrates ``a`` over the
whole real line with ``|a|`` in place of ``a``).  ``C`` is the
reconstruction constant of ``phi`` for the chosen scale range.

For the 2-d quadrature every triple is mapped to its own natural
coordinates ``a = s z``, ``b = m + a y`` where ``m`` is the mean of
``(u, v, w)`` and ``s`` their spread, so triples share one adaptive mesh.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import MexicanHat, Morlet, SampledSignal, WaveletTriple, DEFAULT_TOL
from .errors import CostGuardError, DomainError, QuadNoConverge
from .gnfrwt import daughter_wavelet, forward, reconstruction_constant
from .quad import integrate_2d, integrate_1d
from .specfun import gamma, hyp1f1
from ._parallel import pmap

__all__ = [
    "BasicFunctionSample", "BasicFunctionCache", "basic_function",
    "basic_function_values", "defining_property_residual",
    "morlet_basic_reduced", "mexican_basic_reduced", "MexicanAux",
    "translate", "convolve_direct", "convolution_theorem_residual",
    "DEFAULT_SAMPLE_CAP",
]

#: cost guard for convolve_direct (number of D samples)
DEFAULT_SAMPLE_CAP = 20_000
#: points this close (relative) to u = v = w count as on the diagonal
DIAGONAL_EPS = 1e-10

_CHUNK = 8
_CHUNK_1D = 32


@dataclass(frozen=True)
class BasicFunctionSample:
    u: float
    v: float
    w: float
    value: complex
    est_error: float


class BasicFunctionCache:
    """Thread-safe store of D samples keyed by quantised coordinates."""

    def __init__(self, quantum=1e-12):
        self.quantum = quantum
        self._data = {}
        self._lock = threading.Lock()

    def key(self, u, v, w):
        q = self.quantum
        return (round(u / q), round(v / q), round(w / q))

    def get(self, u, v, w):
        with self._lock:
            return self._data.get(self.key(u, v, w))

    def put(self, u, v, w, value):
        with self._lock:
            self._data[self.key(u, v, w)] = value

    def __len__(self):
        with self._lock:
            return len(self._data)


def _constant(triple, params, two_sided):
    return reconstruction_constant(triple.phi, params.quad_tol, two_sided=two_sided)


def _integrand(triple, params, u, v, w, m, s, factored, negative):
    """Integrand in (z, y) coordinates for triples broadcast on the last axis.

    The factored form leaves out the constant chirp
    ``exp(i/2 (w^2 + v^2 - u^2) cot)``; see :func:`_outer_chirp`.
    """
    c = params.cot
    rho = params.rho

    def f(z, y):
        z = z[..., None]
        y = y[..., None]
        a = s * z
        b = m + a * y
        sa = -a if negative else a
        jac = s * a ** (-rho - 2.0)
        if factored:
            val = triple.kernel((w - b) / sa, (v - b) / sa, (u - b) / sa)
            if c != 0.0:
                val = val * np.exp(-0.5j * c * b * b)
        else:
            # chirped daughters, |a|^-rho folded into jac
            def d(wav, t):
                return np.exp(-0.5j * (t * t - b * b) * c) * wav((t - b) / sa)
            val = np.conj(d(triple.psi, w)) * np.conj(d(triple.chi, v)) * d(triple.phi, u)
        return val * jac
    return f


def _outer_chirp(params, u, v, w):
    return np.exp(0.5j * (w * w + v * v - u * u) * params.cot)


def _raw_integral(triple, params, u, v, w, tol, factored, negative):
    pts = np.stack([u, v, w])
    m = pts.mean(axis=0)
    s = np.sqrt(((pts - m) ** 2).sum(axis=0))
    s = np.where(s > 0, s, 1.0)
    f = _integrand(triple, params, u, v, w, m, s, factored, negative)
    res = integrate_2d(
        f, (0.0, math.inf), (-math.inf, math.inf), tol,
        outer_kw=dict(n_init=8, max_batch=8, limit=2000),
        inner_kw=dict(n_init=8, max_batch=32, limit=4000))
    val = np.asarray(res.value)
    if factored:
        val = val * _outer_chirp(params, u, v, w)
    return val, res.est_error


def _gaussian_b(triple, c, u, v, w, t):
    """Closed-form b-integral of the factored integrand at ``t = 1/a``.

    For uniform Morlet and Mexican-hat triples the integrand is a
    polynomial in ``b`` times ``exp(-A b^2 + B b + C0)``.  ``t`` has shape
    ``(n, 1)``; triples lie along the last axis.  Negative ``t`` stands for
    negative scales.
    """
    wav = triple.phi
    t2 = t * t
    s1 = u + v + w
    q = u * u + v * v + w * w
    big_a = 1.5 * t2 + 0.5j * c
    om = wav.omega0 if isinstance(wav, Morlet) else 0.0
    big_b = t2 * s1 + 1j * om * t
    c0 = -0.5 * t2 * q + 1j * om * t * (u - v - w)
    mu = big_b / (2.0 * big_a)
    m0 = np.sqrt(np.pi / big_a) * np.exp(big_b * mu / 2.0 + c0)
    if isinstance(wav, Morlet):
        return m0
    # prod_k (1 - t^2 (d_k - z)^2) with b = mu + z, d_k = k - mu
    var = 1.0 / (2.0 * big_a)
    poly = np.ones((1,) + np.broadcast(t, mu).shape, dtype=complex)
    for k in (u, v, w):
        d = k - mu
        fac = np.stack([1.0 - t2 * d * d, 2.0 * t2 * d, -t2 * np.ones_like(d)])
        new = np.zeros((poly.shape[0] + 2,) + poly.shape[1:], dtype=complex)
        for i in range(3):
            new[i:i + poly.shape[0]] += fac[i] * poly
        poly = new
    # central moments: E z^(2j) = (2j-1)!! var^j
    acc = poly[0].copy()
    mom = np.ones_like(var)
    for j in range(1, 4):
        mom = mom * (2 * j - 1) * var
        acc += poly[2 * j] * mom
    return m0 * acc


def _analytic_b_ok(triple):
    return (triple.psi == triple.chi == triple.phi
            and isinstance(triple.phi, (Morlet, MexicanHat)))


def _semi_analytic(triple, params, u, v, w, tol, two_sided):
    pts = np.stack([u, v, w])
    m = pts.mean(axis=0)
    s = np.sqrt(((pts - m) ** 2).sum(axis=0))
    rho, c = params.rho, params.cot

    def f(z):
        # t = z / s; the a-measure becomes t^(rho+1) dt
        t = z[:, None] / s
        with np.errstate(invalid="ignore", divide="ignore"):
            val = _gaussian_b(triple, c, u, v, w, t)
            if two_sided:
                val = val + _gaussian_b(triple, c, u, v, w, -t)
        # the measure vanishes at t = 0 even where the b-integral does not
        return np.where(t == 0.0, 0.0, val * t ** (rho + 1.0) / s)

    res = integrate_1d(f, (0.0, math.inf), tol, n_init=16, limit=4000)
    return np.asarray(res.value) * _outer_chirp(params, u, v, w), res.est_error


def basic_function_values(triple, params, u, v, w, *, tol=None, two_sided=False,
                          method="auto", constant=None, cache=None):
    """Vectorised ``D(u, v, w)``; returns ``(values, est_errors)`` arrays.

    ``method`` selects the quadrature: ``"2d"`` integrates the factored
    integrand over ``(a, b)``, ``"2d-direct"`` the chirped daughters
    themselves, and ``"analytic-b"`` (uniform Morlet or Mexican-hat triples
    only) does the ``b`` integral in closed form and ``a`` numerically.
    ``"auto"`` picks ``"analytic-b"`` when available.

    ``D`` diverges when ``u = v = w``; such points raise
    :class:`~frwtk.errors.DomainError`.
    """
    if method == "auto":
        method = "analytic-b" if _analytic_b_ok(triple) else "2d"
    if method not in ("2d", "2d-direct", "analytic-b"):
        raise ValueError(f"unknown method {method!r}")
    if method == "analytic-b" and not _analytic_b_ok(triple):
        raise ValueError("analytic-b needs a uniform Morlet or Mexican-hat triple")
    tol = params.quad_tol if tol is None else tol
    u, v, w = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (u, v, w)))
    shape = u.shape
    u, v, w = u.ravel(), v.ravel(), w.ravel()
    values = np.empty(u.size, dtype=complex)
    errors = np.zeros(u.size)
    todo = []
    for i in range(u.size):
        hit = None if cache is None else cache.get(u[i], v[i], w[i])
        if hit is None:
            todo.append(i)
        else:
            values[i], errors[i] = hit
    if todo:
        idx = np.array(todo)
        span = np.max(np.abs([u[idx] - v[idx], v[idx] - w[idx], u[idx] - w[idx]]), axis=0)
        scale = 1.0 + np.max(np.abs([u[idx], v[idx], w[idx]]), axis=0)
        if np.any(span <= DIAGONAL_EPS * scale):
            raise DomainError("the basic function diverges at u = v = w "
                              f"(points within {DIAGONAL_EPS:g} relative are rejected)")
        c = _constant(triple, params, two_sided) if constant is None else constant
        # homogeneous chunks share adaptive meshes efficiently
        pts = np.stack([u[idx], v[idx], w[idx]])
        spread = np.sqrt(((pts - pts.mean(axis=0)) ** 2).sum(axis=0))
        idx = idx[np.lexsort((np.abs(pts.mean(axis=0)), spread))]
        size = _CHUNK_1D if method == "analytic-b" else _CHUNK
        chunks = [idx[i:i + size] for i in range(0, idx.size, size)]
        factored = method == "2d"

        def run(chunk):
            uu, vv, ww = u[chunk], v[chunk], w[chunk]
            try:
                if method == "analytic-b":
                    return (chunk,) + tuple(
                        x / c for x in _semi_analytic(triple, params, uu, vv, ww, tol, two_sided))
                val, err = _raw_integral(triple, params, uu, vv, ww, tol, factored, False)
                if two_sided:
                    val2, err2 = _raw_integral(triple, params, uu, vv, ww, tol, factored, True)
                    val = val + val2
                    err = err + err2
            except QuadNoConverge as exc:
                exc.location = list(zip(uu.tolist(), vv.tolist(), ww.tolist()))
                raise
            return chunk, val / c, err / c

        for chunk, val, err in pmap(run, chunks):
            values[chunk] = val
            errors[chunk] = err
            if cache is not None:
                for i in chunk:
                    cache.put(u[i], v[i], w[i], (values[i], errors[i]))
    return values.reshape(shape), errors.reshape(shape)


def basic_function(triple, params, u, v, w, **kw):
    """``D(u, v, w)`` at a single point as a :class:`BasicFunctionSample`."""
    val, err = basic_function_values(triple, params, u, v, w, **kw)
    return BasicFunctionSample(float(u), float(v), float(w), complex(val), float(err))


def _product_of_daughters(triple, params, grid, v, w):
    a = grid.scales[:, None]
    b = grid.shifts[None, :]
    return (np.conj(daughter_wavelet(triple.psi, params, a, b, w))
            * np.conj(daughter_wavelet(triple.chi, params, a, b, v)))


def _sup_relative(lhs, rhs):
    num = float(np.max(np.abs(lhs - rhs)))
    den = float(np.max(np.abs(rhs)))
    if den == 0.0:
        return num
    return num / den


def defining_property_residual(triple, params, u_grid, v, w, plane_grid, **kw):
    """Transform ``u -> D(u, v, w)`` and compare with the daughter product.

    ``u_grid`` is a :class:`SampledSignal` whose grid carries the ``u``
    samples (its values are ignored).  Returns
    ``max |W[D] - conj(psi_ab(w)) conj(chi_ab(v))| / max |product|``.
    """
    u = u_grid.times
    vals, _ = basic_function_values(triple, params, u, v, w, **kw)
    d_sig = u_grid.with_samples(vals)
    lhs = forward(d_sig, triple.phi, params, plane_grid).values
    rhs = _product_of_daughters(triple, params, plane_grid, v, w)
    return _sup_relative(lhs, rhs)


@dataclass(frozen=True)
class MexicanAux:
    """Auxiliary sums of the Mexican-hat reduction at shift ``b``."""

    L: float
    M: float
    N: float
    P: float

    @classmethod
    def at(cls, u, v, w, b):
        du, dv, dw = (u - b) ** 2, (v - b) ** 2, (w - b) ** 2
        big_l = du + dv + dw
        big_m = du * dv + du * dw + dv * dw
        big_p = du * dv * dw
        # N exactly as the closed form prints it
        return cls(big_l, big_m, big_l + big_p, big_p)


def _b_integral(func, u, v, w, tol, cot):
    """Integral of ``func(b)`` over the real line.

    The reduced integrands decay like ``|b|^-(rho+2)`` under the chirp
    ``exp(-i b^2 cot / 2)``.  Beyond ``|b| = B`` each tail is moved onto
    the ray ``+-(B + r e^(i phi))``, ``phi = -sign(cot) pi/4``, where the
    chirp turns into Gaussian decay.  ``B`` lies to the right of every
    complex zero of ``L(b)``, so the rotation crosses no singularity.
    """
    m = (u + v + w) / 3.0
    spread = math.sqrt((u - m) ** 2 + (v - m) ** 2 + (w - m) ** 2)
    big_b = abs(m) + 2.0 * spread + 2.0
    kw = dict(n_init=16, limit=20000)
    core = integrate_1d(func, (-big_b, big_b), tol, points=[m], **kw).value
    if cot == 0.0:
        left = integrate_1d(func, (-math.inf, -big_b), tol, **kw).value
        right = integrate_1d(func, (big_b, math.inf), tol, **kw).value
        return core + left + right
    ray = np.exp(-0.25j * math.pi * math.copysign(1.0, cot))

    def tails(r):
        return (func(big_b + r * ray) + func(-big_b - r * ray)) * ray

    scale = max(1.0, 1.0 / math.sqrt(abs(cot)))
    return core + integrate_1d(tails, (0.0, math.inf), tol, scale=scale, **kw).value


def morlet_basic_reduced(omega0, params, u, v, w, variant="printed", constant=None):
    """Morlet ``D`` from its one-dimensional reduction in ``b``.

    ``variant="printed"`` is the closed form with the single
    ``Gamma(1 + rho/2) 2^(1+rho/2) L^(-1-rho/2) 1F1(1+rho/2; 1/2; x)``
    term; it corresponds to scales over the whole real line.
    ``variant="one_sided"`` adds the odd part that appears when only
    ``a > 0`` is integrated::

        (1/2) Gamma(1+rho/2) (L/2)^(-1-rho/2) 1F1(1+rho/2; 1/2; x)
        + i (beta/2) Gamma((rho+3)/2) (L/2)^(-(rho+3)/2) 1F1((rho+3)/2; 3/2; x)

    with ``beta = omega0 (b + u - w - v)`` and ``x = -beta^2 / (2L)``.
    """
    if not params.rho > 0:
        raise ValueError("the Morlet reduction needs rho > 0")
    rho, c = params.rho, params.cot
    if constant is None:
        constant = reconstruction_constant(
            Morlet(omega0), params.quad_tol, two_sided=(variant == "printed"))
    g1 = gamma(1.0 + rho / 2.0)
    g3 = gamma((rho + 3.0) / 2.0)

    def hyp(a, b, x):
        return np.array([hyp1f1(a, b, xi) for xi in np.ravel(x)]).reshape(np.shape(x))

    def f(b):
        big_l = (w - b) ** 2 + (v - b) ** 2 + (u - b) ** 2
        beta = omega0 * (b + u - w - v)
        x = -beta * beta / (2.0 * big_l)
        chirp = np.exp(-0.5j * b * b * c)
        if variant == "printed":
            core = g1 * 2.0 ** (1.0 + rho / 2.0) * big_l ** (-1.0 - rho / 2.0) * hyp(
                1.0 + rho / 2.0, 0.5, x)
        elif variant == "one_sided":
            half_l = 0.5 * big_l
            core = (0.5 * g1 * half_l ** (-1.0 - rho / 2.0) * hyp(1.0 + rho / 2.0, 0.5, x)
                    + 0.5j * beta * g3 * half_l ** (-(rho + 3.0) / 2.0)
                    * hyp((rho + 3.0) / 2.0, 1.5, x))
        else:
            raise ValueError(f"unknown variant {variant!r}")
        return chirp * core

    integral = _b_integral(f, u, v, w, params.quad_tol, c)
    return np.exp(0.5j * (w * w + v * v - u * u) * c) * integral / constant


def mexican_basic_reduced(params, u, v, w, variant="printed", constant=None):
    """Mexican-hat ``D`` from its one-dimensional reduction in ``b``.

    ``variant="printed"`` reproduces the closed form term by term, including
    the ``(-1/2)(-1)^(rho+1)`` prefactor (complex for non-integer rho) and
    ``N = L + (u-b)^2 (v-b)^2 (w-b)^2``.  ``variant="corrected"`` is the
    reduction obtained by expanding the product of the three hats,
    ``1 - L t^2 + M t^4 - P t^6``, and integrating each power of ``t`` over
    ``t = 1/a > 0``.
    """
    if not params.rho > 0:
        raise ValueError("the Mexican-hat reduction needs rho > 0")
    rho, c = params.rho, params.cot
    if constant is None:
        constant = reconstruction_constant(MexicanHat(), params.quad_tol)
    g = {k: gamma((rho + k) / 2.0) for k in (2, 4, 6, 8)}
    sign = -0.5 * np.exp(1j * math.pi * (rho + 1.0))

    def f(b):
        aux = MexicanAux.at(u, v, w, b)
        hl = 0.5 * aux.L
        if variant == "printed":
            core = sign * (g[6] * hl ** (-(rho + 6) / 2)
                           - g[4] * aux.N * hl ** (-(rho + 4) / 2)
                           + g[2] * aux.M * hl ** (-(rho + 2) / 2))
        elif variant == "corrected":
            core = 0.5 * (g[2] * hl ** (-(rho + 2) / 2)
                          - g[4] * aux.L * hl ** (-(rho + 4) / 2)
                          + g[6] * aux.M * hl ** (-(rho + 6) / 2)
                          - g[8] * aux.P * hl ** (-(rho + 8) / 2))
        else:
            raise ValueError(f"unknown variant {variant!r}")
        return np.exp(-0.5j * b * b * c) * core

    integral = _b_integral(f, u, v, w, params.quad_tol, c)
    return np.exp(0.5j * (w * w + v * v - u * u) * c) * integral / constant


def translate(h, u, triple, params, v_grid, cache=None, **kw):
    """``(tau_u h)(v) = integral D(u, v, w) h(w) dw`` on the samples of ``h``.

    ``v_grid`` is a :class:`SampledSignal` providing the output grid.
    """
    v = v_grid.times
    w = h.times
    d, _ = basic_function_values(triple, params, u, v[:, None], w[None, :],
                                 cache=cache, **kw)
    return v_grid.with_samples(d @ (h.weights * h.samples))


def convolve_direct(h, g, triple, params, u_grid=None, cache=None,
                    sample_cap=DEFAULT_SAMPLE_CAP, **kw):
    """``(h # g)(u) = sum_v sum_w D(u, v, w) h(w) g(v)`` by tensor trapezoid.

    ``u_grid`` (a :class:`SampledSignal`, values ignored) defaults to the
    grid of ``h``.  Raises :class:`CostGuardError` when more than
    ``sample_cap`` samples of ``D`` would be needed.
    """
    u_grid = h if u_grid is None else u_grid
    u, v, w = u_grid.times, g.times, h.times
    need = u.size * v.size * w.size
    if need > sample_cap:
        raise CostGuardError(f"{need} basic-function samples exceed cap {sample_cap}")
    hw = h.weights * h.samples
    gv = g.weights * g.samples
    if not np.any(hw) or not np.any(gv):
        return u_grid.with_samples(np.zeros(u.size))
    d, _ = basic_function_values(triple, params, u[:, None, None], v[None, :, None],
                                 w[None, None, :], cache=cache, **kw)
    return u_grid.with_samples(np.einsum("ijk,j,k->i", d, gv, hw))


class ConvolutionTheoremResult(NamedTuple):
    residual: float
    lhs: np.ndarray
    rhs: np.ndarray


def convolution_theorem_residual(h, g, triple, params, plane_grid, u_grid=None,
                                 cache=None, full=False, **kw):
    """``max |W_phi(h # g) - W_psi(h) W_chi(g)| / (1 + |W_psi(h) W_chi(g)|)``."""
    conv = convolve_direct(h, g, triple, params, u_grid, cache=cache, **kw)
    lhs = forward(conv, triple.phi, params, plane_grid).values
    rhs = (forward(h, triple.psi, params, plane_grid).values
           * forward(g, triple.chi, params, plane_grid).values)
    res = float(np.max(np.abs(lhs - rhs) / (1.0 + np.abs(rhs))))
    if full:
        return ConvolutionTheoremResult(res, lhs, rhs)
    return res

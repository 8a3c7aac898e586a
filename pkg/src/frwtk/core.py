"""Domain types shared by the transform, convolution and bound modules."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DivergentNorm, DomainError, GridMismatch, QuadNoConverge, SingularAngle
from .quad import integrate_1d

__all__ = [
    "INF", "conjugate_exponent", "SampledSignal", "Wavelet", "Morlet",
    "MexicanHat", "Tabulated", "TransformParams", "ScaleShiftGrid",
    "CoefficientPlane", "WaveletTriple", "lp_norm", "weighted_norm",
    "inner_product", "trapezoid_weights",
]

#: sentinel for p = infinity
INF = math.inf

DEFAULT_TOL = 1e-8
# angles closer than this to a multiple of pi are rejected
SINGULAR_ANGLE_EPS = 1e-6


def conjugate_exponent(p):
    """Hoelder conjugate q with 1/p + 1/q = 1."""
    if p == INF:
        return 1.0
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    if p == 1:
        return INF
    return p / (p - 1.0)


def trapezoid_weights(n, dt):
    w = np.full(n, float(dt))
    if n > 1:
        w[0] = w[-1] = 0.5 * dt
    return w


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """Complex samples on the uniform grid ``t0 + k * dt``."""

    t0: float
    dt: float
    samples: np.ndarray

    def __post_init__(self):
        s = np.array(self.samples, dtype=complex).reshape(-1)
        if not self.dt > 0:
            raise DomainError("dt must be positive")
        if s.size < 1:
            raise DomainError("a signal needs at least one sample")
        if not np.all(np.isfinite(s)):
            raise DomainError("signal samples must be finite")
        s.setflags(write=False)
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "dt", float(self.dt))
        object.__setattr__(self, "samples", s)

    @classmethod
    def from_function(cls, func, t0, dt, n):
        t = t0 + dt * np.arange(n)
        return cls(t0, dt, func(t))

    @property
    def times(self):
        return self.t0 + self.dt * np.arange(self.samples.size)

    @property
    def weights(self):
        return trapezoid_weights(self.samples.size, self.dt)

    def __len__(self):
        return self.samples.size

    def same_grid(self, other, rtol=1e-12):
        return (len(self) == len(other)
                and math.isclose(self.t0, other.t0, rel_tol=rtol, abs_tol=rtol)
                and math.isclose(self.dt, other.dt, rel_tol=rtol))

    def with_samples(self, samples):
        return SampledSignal(self.t0, self.dt, samples)

    def __call__(self, t):
        """Linear interpolation, zero outside the grid."""
        t = np.asarray(t, dtype=float)
        x = self.times
        re = np.interp(t, x, self.samples.real, left=0.0, right=0.0)
        im = np.interp(t, x, self.samples.imag, left=0.0, right=0.0)
        return re + 1j * im


class Wavelet:
    """Mother wavelet: callable in time, with a unitary Fourier transform.

    ``hat(w) = (2 pi)^(-1/2) * integral psi(t) exp(-i w t) dt``.
    """

    #: half-width beyond which the wavelet is negligible (for truncation)
    support = 12.0

    def __call__(self, t):
        raise NotImplementedError

    def hat(self, omega):
        raise NotImplementedError

    def peak(self):
        t = np.linspace(-self.support, self.support, 4001)
        return float(np.max(np.abs(self(t))))


@dataclass(frozen=True)
class Morlet(Wavelet):
    """``exp(i w0 t - t^2/2)``."""

    omega0: float = 5.0

    def __post_init__(self):
        if not self.omega0 > 0:
            raise DomainError("Morlet requires omega0 > 0")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return np.exp(1j * self.omega0 * t - 0.5 * t * t)

    def hat(self, omega):
        omega = np.asarray(omega, dtype=float)
        return np.exp(-0.5 * (omega - self.omega0) ** 2) + 0j


@dataclass(frozen=True)
class MexicanHat(Wavelet):
    """``(1 - t^2) exp(-t^2/2)``; its unitary transform is ``w^2 exp(-w^2/2)``."""

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        t2 = t * t
        return (1.0 - t2) * np.exp(-0.5 * t2) + 0j

    def hat(self, omega):
        omega = np.asarray(omega, dtype=float)
        return omega * omega * np.exp(-0.5 * omega * omega) + 0j


@dataclass(frozen=True, eq=False)
class Tabulated(Wavelet):
    """Wavelet given by samples; linear interpolation, zero off-grid."""

    signal: SampledSignal

    def __post_init__(self):
        s = self.signal
        l1 = float(np.sum(s.weights * np.abs(s.samples)))
        l2 = float(np.sum(s.weights * np.abs(s.samples) ** 2))
        if not (math.isfinite(l1) and math.isfinite(l2)):
            raise DomainError("tabulated wavelet needs finite L1 and L2 norms")

    @property
    def support(self):
        t = self.signal.times
        return float(max(abs(t[0]), abs(t[-1])))

    def __call__(self, t):
        return self.signal(t)

    def hat(self, omega):
        # the sampled sum is the infinitely zero-padded DFT (a DTFT)
        omega = np.asarray(omega, dtype=float)
        s = self.signal
        flat = omega.reshape(-1)
        out = np.empty(flat.size, dtype=complex)
        t = s.times
        ws = s.weights * s.samples
        for i in range(0, flat.size, 2048):
            chunk = flat[i:i + 2048]
            out[i:i + 2048] = np.exp(-1j * np.outer(chunk, t)) @ ws
        return (out / math.sqrt(2.0 * math.pi)).reshape(omega.shape)


@dataclass(frozen=True)
class TransformParams:
    """Fractional order ``alpha`` (angle alpha*pi/2), dilation exponent ``rho``."""

    alpha: float
    rho: float = 0.5
    quad_tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.rho >= 0:
            raise DomainError("rho must be >= 0")
        if not self.quad_tol > 0:
            raise DomainError("quad_tol must be positive")
        r = math.remainder(self.theta, math.pi)
        if abs(r) < SINGULAR_ANGLE_EPS:
            raise SingularAngle(
                f"alpha={self.alpha} puts theta on a multiple of pi")

    @property
    def theta(self):
        return self.alpha * math.pi / 2.0

    @property
    def cot(self):
        return math.cos(self.theta) / math.sin(self.theta)

    @property
    def csc(self):
        return 1.0 / math.sin(self.theta)

    def replace(self, **changes):
        kw = dict(alpha=self.alpha, rho=self.rho, quad_tol=self.quad_tol)
        kw.update(changes)
        return TransformParams(**kw)


@dataclass(frozen=True, eq=False)
class ScaleShiftGrid:
    scales: np.ndarray
    shifts: np.ndarray

    def __post_init__(self):
        a = np.array(self.scales, dtype=float).reshape(-1)
        b = np.array(self.shifts, dtype=float).reshape(-1)
        if a.size < 1 or b.size < 1:
            raise DomainError("grid needs at least one scale and one shift")
        if np.any(a <= 0) or not np.all(np.isfinite(a)):
            raise DomainError("scales must be positive and finite")
        if np.any(np.diff(a) <= 0):
            raise DomainError("scales must be strictly increasing")
        if b.size > 2:
            db = np.diff(b)
            if np.any(db <= 0) or np.ptp(db) > 1e-9 * max(1.0, abs(db[0])):
                raise DomainError("shifts must be uniformly increasing")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "scales", a)
        object.__setattr__(self, "shifts", b)

    @classmethod
    def logspace(cls, a_min, a_max, n_a, b_min, b_max, n_b):
        """Log-spaced scales, uniformly spaced shifts."""
        if not 0 < a_min <= a_max:
            raise DomainError("need 0 < a_min <= a_max")
        scales = np.unique(np.geomspace(a_min, a_max, int(n_a)))
        return cls(scales, np.linspace(b_min, b_max, int(n_b)))

    @property
    def shape(self):
        return (self.scales.size, self.shifts.size)

    def measure_weights(self, rho):
        """Quadrature weights for ``|a|^(2 rho - 3) da db`` on this grid.

        Trapezoid in b; in a, trapezoid in s = log a, which turns
        ``da`` into ``a ds``.
        """
        a, b = self.scales, self.shifts
        wb = _trapz_nonuniform(b)
        wa = _trapz_nonuniform(np.log(a)) * a * a ** (2.0 * rho - 3.0)
        return np.outer(wa, wb)


def _trapz_nonuniform(x):
    w = np.zeros(x.size)
    if x.size > 1:
        d = np.diff(x)
        w[:-1] += 0.5 * d
        w[1:] += 0.5 * d
    return w


@dataclass(frozen=True, eq=False)
class CoefficientPlane:
    grid: ScaleShiftGrid
    values: np.ndarray
    rho: float

    def __post_init__(self):
        v = np.array(self.values, dtype=complex)
        if v.shape != self.grid.shape:
            raise GridMismatch(f"values shape {v.shape} != grid {self.grid.shape}")
        if not np.all(np.isfinite(v)):
            raise DomainError("plane values must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def integrate(self, other=None):
        """Plane integral of W * conj(other) against the rho-measure."""
        w = self.grid.measure_weights(self.rho)
        o = self.values if other is None else other.values
        return complex(np.sum(w * self.values * np.conj(o)))


@dataclass(frozen=True)
class WaveletTriple:
    """The three wavelets (psi, chi, phi) of the basic function."""

    psi: Wavelet
    chi: Wavelet
    phi: Wavelet

    @classmethod
    def uniform(cls, wavelet):
        return cls(wavelet, wavelet, wavelet)

    def kernel(self, xw, xv, xu):
        """``conj(psi(xw)) * conj(chi(xv)) * phi(xu)``, fused when possible."""
        if self.psi == self.chi == self.phi:
            if isinstance(self.phi, Morlet):
                q = xw * xw + xv * xv + xu * xu
                return np.exp(1j * self.phi.omega0 * (xu - xv - xw) - 0.5 * q)
            if isinstance(self.phi, MexicanHat):
                q = xw * xw + xv * xv + xu * xu
                return (1.0 - xw * xw) * (1.0 - xv * xv) * (1.0 - xu * xu) * np.exp(-0.5 * q)
        return np.conj(self.psi(xw)) * np.conj(self.chi(xv)) * self.phi(xu)


def _integrand_for(f):
    if isinstance(f, SampledSignal):
        return None
    if callable(f):
        return f
    raise TypeError(f"cannot take a norm of {type(f).__name__}")


def _line_integral(g, support, tol):
    try:
        res = integrate_1d(g, (-math.inf, math.inf), tol, scale=max(1.0, support / 4))
    except QuadNoConverge as exc:
        raise DivergentNorm(f"norm integral did not converge: {exc}") from exc
    val = float(np.real(res.value))
    if not math.isfinite(val):
        raise DivergentNorm("norm integral is not finite")
    return max(val, 0.0)


def lp_norm(f, p=2.0, tol=DEFAULT_TOL):
    """``(integral |f|^p)^(1/p)``; ``p = INF`` gives the sup on a grid.

    ``f`` may be a :class:`SampledSignal` (trapezoid on its grid), a
    :class:`Wavelet` or any vectorised callable (adaptive quadrature on
    the real line).
    """
    if p != INF and p < 1:
        raise DomainError("p must be >= 1")
    func = _integrand_for(f)
    if isinstance(f, Tabulated):
        func = None
        f = f.signal
    if func is None:
        mag = np.abs(f.samples)
        if p == INF:
            return float(mag.max())
        return float(np.sum(f.weights * mag ** p)) ** (1.0 / p)
    support = getattr(f, "support", 12.0)
    if p == INF:
        t = np.linspace(-support, support, 20001)
        return float(np.max(np.abs(func(t))))
    val = _line_integral(lambda t: np.abs(func(t)) ** p, support, tol)
    return val ** (1.0 / p)


def weighted_norm(f, rho, p=1.0, tol=DEFAULT_TOL):
    """``|| (1 + |z|^rho) f(z) ||_p``."""
    if rho < 0:
        raise DomainError("rho must be >= 0")
    if isinstance(f, SampledSignal):
        f = Tabulated(f)
    support = getattr(f, "support", 12.0)

    def g(z):
        return (1.0 + np.abs(z) ** rho) * f(z)

    if isinstance(f, Tabulated):
        s = f.signal
        return lp_norm(s.with_samples(g(s.times)), p)
    g.support = support
    return lp_norm(g, p, tol)


def power_weighted_l1(f, power, tol=DEFAULT_TOL):
    """``|| f(x) |x|^power ||_1`` (the x^(rho-1) weighted norms)."""
    if isinstance(f, (SampledSignal, Tabulated)):
        s = f.signal if isinstance(f, Tabulated) else f
        return float(np.sum(s.weights * np.abs(s.samples) * np.abs(s.times) ** power))
    support = getattr(f, "support", 12.0)
    return _line_integral(lambda t: np.abs(f(t)) * np.abs(t) ** power, support, tol)


def inner_product(h, g):
    """``integral h(t) conj(g(t)) dt`` by the trapezoidal rule."""
    if not h.same_grid(g):
        raise GridMismatch("inner_product needs identical grids")
    return complex(np.sum(h.weights * h.samples * np.conj(g.samples)))

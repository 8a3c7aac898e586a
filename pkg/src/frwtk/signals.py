"""Deterministic test signals on uniform grids."""
import numpy as np

from .core import SampledSignal
from .errors import DomainError

__all__ = ["time_grid", "gaussian", "chirp", "bump", "KINDS"]


def time_grid(n, t_min, t_max):
    n = int(n)
    if n < 2:
        raise DomainError("need at least two samples")
    if not t_max > t_min:
        raise DomainError("need t_max > t_min")
    return t_min, (t_max - t_min) / (n - 1)


def gaussian(n=256, t_min=-8.0, t_max=8.0, *, center=0.0, width=1.0, amplitude=1.0):
    """``amplitude * exp(-(t - center)^2 / (2 width^2))``."""
    t0, dt = time_grid(n, t_min, t_max)
    return SampledSignal.from_function(
        lambda t: amplitude * np.exp(-0.5 * ((t - center) / width) ** 2), t0, dt, n)


def chirp(n=256, t_min=-8.0, t_max=8.0, *, center=0.0, width=1.0, amplitude=1.0,
          carrier=4.0, rate=0.1):
    """Gaussian envelope times ``exp(i (carrier t + rate t^2))``.

    The default carrier keeps the spectrum away from zero frequency, which
    a finite range of scales cannot represent.
    """
    t0, dt = time_grid(n, t_min, t_max)

    def f(t):
        env = amplitude * np.exp(-0.5 * ((t - center) / width) ** 2)
        return env * np.exp(1j * (carrier * t + rate * t * t))
    return SampledSignal.from_function(f, t0, dt, n)


def bump(n=256, t_min=-8.0, t_max=8.0, *, center=0.0, width=1.0, amplitude=1.0):
    """Smooth compactly supported ``exp(-1 / (1 - x^2))``, ``x = (t - center)/width``."""
    t0, dt = time_grid(n, t_min, t_max)

    def f(t):
        x = (t - center) / width
        out = np.zeros_like(x)
        inside = np.abs(x) < 1
        out[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
        return amplitude * out
    return SampledSignal.from_function(f, t0, dt, n)


KINDS = {"gaussian": gaussian, "chirp": chirp, "bump": bump}

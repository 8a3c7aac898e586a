"""CSV and config file formats.

Signals are written as ``t,re,im`` and coefficient planes as ``a,b,re,im``
(scales outer, shifts inner), all with 17 significant digits so that a
read after a write returns the same doubles.  Configs are flat
``key = value`` text files; ``#`` starts a comment.
"""
from __future__ import annotations

import csv
import math

import numpy as np

from .core import CoefficientPlane, MexicanHat, Morlet, SampledSignal, ScaleShiftGrid, Tabulated
from .errors import ConfigError, DomainError, ParseError

__all__ = [
    "format_float", "write_signal", "read_signal", "write_plane", "read_plane",
    "parse_config", "load_config", "parse_floats", "parse_wavelet", "parse_grid",
    "CONFIG_KEYS",
]


def format_float(x):
    return f"{float(x):.17g}"


def _open_out(path):
    if path is None or path == "-":
        import sys
        return sys.stdout, False
    return open(path, "w", newline=""), True


def write_signal(path, sig):
    fh, close = _open_out(path)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t", "re", "im"])
        for t, s in zip(sig.times, sig.samples):
            w.writerow([format_float(t), format_float(s.real), format_float(s.imag)])
    finally:
        if close:
            fh.close()


def _read_rows(path, header):
    rows = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        first = next(reader, None)
        if first is None:
            raise ParseError("empty file", path, 1)
        if [c.strip() for c in first] != header:
            raise ParseError(f"expected header {','.join(header)}", path, 1)
        for row in reader:
            lineno = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise ParseError(f"expected {len(header)} fields, got {len(row)}", path, lineno)
            try:
                vals = [float(c) for c in row]
            except ValueError as exc:
                raise ParseError(f"not a number: {exc}", path, lineno) from None
            if not all(math.isfinite(v) for v in vals):
                raise ParseError("non-finite value", path, lineno)
            rows.append(vals)
    if not rows:
        raise ParseError("no data rows", path, 2)
    return np.array(rows)


def read_signal(path):
    """Read a ``t,re,im`` file; the times must be uniformly spaced."""
    d = _read_rows(path, ["t", "re", "im"])
    t = d[:, 0]
    if t.size == 1:
        return SampledSignal(t[0], 1.0, d[:, 1] + 1j * d[:, 2])
    steps = np.diff(t)
    dt = (t[-1] - t[0]) / (t.size - 1)
    if not dt > 0 or np.max(np.abs(steps - dt)) > 1e-9 * max(abs(dt), 1e-300):
        bad = int(np.argmax(np.abs(steps - dt))) + 3
        raise ParseError("times are not uniformly increasing", path, bad)
    return SampledSignal(t[0], dt, d[:, 1] + 1j * d[:, 2])


def write_plane(path, plane):
    fh, close = _open_out(path)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["a", "b", "re", "im"])
        for j, a in enumerate(plane.grid.scales):
            for k, b in enumerate(plane.grid.shifts):
                z = plane.values[j, k]
                w.writerow([format_float(a), format_float(b),
                            format_float(z.real), format_float(z.imag)])
    finally:
        if close:
            fh.close()


def read_plane(path, rho):
    d = _read_rows(path, ["a", "b", "re", "im"])
    scales = np.unique(d[:, 0])
    shifts = np.unique(d[:, 1])
    if scales.size * shifts.size != d.shape[0]:
        raise ParseError("rows do not form a full (a, b) grid", path)
    order = np.lexsort((d[:, 1], d[:, 0]))
    d = d[order]
    if not (np.array_equal(d[:, 0], np.repeat(scales, shifts.size))
            and np.array_equal(d[:, 1], np.tile(shifts, scales.size))):
        raise ParseError("rows do not form a full (a, b) grid", path)
    vals = (d[:, 2] + 1j * d[:, 3]).reshape(scales.size, shifts.size)
    try:
        grid = ScaleShiftGrid(scales, shifts)
    except DomainError as exc:
        raise ParseError(str(exc), path) from None
    return CoefficientPlane(grid, vals, rho)


#: recognised config keys with their types and defaults
CONFIG_KEYS = {
    "alpha": (float, 0.5),
    "alphas": (str, "0.5,1"),
    "rho": (float, 0.5),
    "wavelet": (str, "mexican"),
    "grid": (str, "0.05,10,48,-10,10,161"),
    "tol": (float, 1e-8),
    "n": (int, 256),
    "t_min": (float, -8.0),
    "t_max": (float, 8.0),
    "seed": (int, 0),
    "parseval_max_rel_err": (float, 0.02),
    "inversion_max_rel_err": (float, 0.05),
    "route_max_abs_err": (float, 1e-10),
    "frft_route_max_rel_err": (float, 1e-4),
    "conv_n": (int, 16),
    "conv_grid": (str, "0.5,2,6,-2,2,12"),
    "conv_alpha": (float, 0.5),
    "conv_rho": (float, 1.0),
    "conv_wavelet": (str, "morlet:5"),
    "conv_tols": (str, "1e-4,1e-5,1e-6"),
    "conv_max_residual": (float, 1e-2),
    "bounds_points": (int, 100),
    "bounds_rho": (float, 0.5),
    "bounds_p": (float, 2.0),
    "bounds_wavelet": (str, "morlet:5"),
    "bounds_separations": (str, "0.5,1,2,4,8"),
    "specfun_max_err": (float, 1e-8),
    "specfun_identity_max_err": (float, 1e-10),
    "gamma_max_err": (float, 1e-12),
}


def parse_config(text, source="<config>"):
    """Parse ``key = value`` lines into a dict filled with defaults."""
    out = {k: d for k, (_, d) in CONFIG_KEYS.items()}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        typ = CONFIG_KEYS[key][0]
        try:
            out[key] = typ(value)
        except ValueError:
            raise ConfigError(f"{source}:{lineno}: bad {typ.__name__} for {key}: {value!r}") from None
    return out


def load_config(path=None):
    if path is None:
        return parse_config("")
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    return parse_config(text, str(path))


def parse_floats(text, what="list"):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"bad {what}: {text!r}") from None


def parse_wavelet(spec):
    """``morlet[:omega0]``, ``mexican`` or ``file:PATH`` (a signal CSV)."""
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "morlet":
        try:
            return Morlet(float(arg)) if arg else Morlet()
        except ValueError:
            raise ConfigError(f"bad Morlet parameter in {spec!r}") from None
    if kind == "mexican":
        if arg:
            raise ConfigError("mexican takes no parameter")
        return MexicanHat()
    if kind == "file":
        if not arg:
            raise ConfigError("file: needs a path")
        return Tabulated(read_signal(arg))
    raise ConfigError(f"unknown wavelet {spec!r}")


def parse_grid(spec):
    """``a_min,a_max,n_a,b_min,b_max,n_b`` as a log-in-a grid."""
    vals = parse_floats(spec, "grid")
    if len(vals) != 6:
        raise ConfigError(f"grid needs 6 comma-separated values, got {spec!r}")
    a0, a1, na, b0, b1, nb = vals
    if na != int(na) or nb != int(nb) or na < 1 or nb < 1:
        raise ConfigError("grid sizes must be positive integers")
    try:
        return ScaleShiftGrid.logspace(a0, a1, int(na), b0, b1, int(nb))
    except DomainError as exc:
        raise ConfigError(f"bad grid {spec!r}: {exc}") from None

"""Self-checks behind ``frwtk verify``.

Each check runs one identity at the scale given by a config dict (see
:data:`frwtk.io.CONFIG_KEYS`) and returns a :class:`VerificationReport`.
"""
from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import bounds, convo, gnfrwt, specfun
from .core import MexicanHat, SampledSignal, TransformParams, WaveletTriple, lp_norm
from .errors import ConfigError
from .io import parse_floats, parse_grid, parse_wavelet
from .signals import chirp, gaussian

__all__ = ["VerificationReport", "CHECKS", "run_check", "check_parseval",
           "check_inversion", "check_frft_route", "check_convolution_theorem",
           "check_bounds", "check_specfun"]


@dataclass
class VerificationReport:
    check: str
    parameters: dict
    metrics: dict
    passed: bool
    wall_time: float = 0.0
    quad_stats: dict = field(default_factory=dict)

    def to_json(self):
        return json.dumps(_plain(asdict(self)), sort_keys=True, indent=2)


def _plain(x):
    # JSON has no complex or numpy scalars
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (complex, np.complexfloating)):
        return {"re": float(x.real), "im": float(x.imag)}
    if isinstance(x, np.generic):
        return x.item()
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def _params(cfg, alpha=None, rho=None, tol=None):
    return TransformParams(cfg["alpha"] if alpha is None else alpha,
                           cfg["rho"] if rho is None else rho,
                           cfg["tol"] if tol is None else tol)


def _alphas(cfg):
    return parse_floats(cfg["alphas"], "alphas")


def _pair(cfg):
    h = chirp(cfg["n"], cfg["t_min"], cfg["t_max"])
    g = chirp(cfg["n"], cfg["t_min"], cfg["t_max"], center=0.5, carrier=3.5, rate=-0.05)
    return h, g


def _denser(spec):
    a0, a1, na, b0, b1, nb = parse_floats(spec, "grid")
    return parse_grid(f"{a0},{a1},{2 * int(na)},{b0},{b1},{2 * int(nb) - 1}")


def check_parseval(cfg):
    """Plane inner products against ``C <h, g>`` for ``h = g`` and two chirps."""
    phi = parse_wavelet(cfg["wavelet"])
    grid = parse_grid(cfg["grid"])
    h, g = _pair(cfg)
    metrics = {}
    worst = 0.0
    for alpha in _alphas(cfg):
        p = _params(cfg, alpha=alpha)
        for name, other in (("h=g", h), ("h,g", g)):
            res = gnfrwt.parseval_residual(h, other, phi, p, grid)
            adm = gnfrwt.admissibility_constant(phi, p.quad_tol)
            metrics[f"alpha={alpha:g} {name}"] = dict(
                rel_err=res.rel_err, lhs=res.lhs, rhs=res.rhs,
                ratio_to_admissibility_form=res.lhs / (adm * gnfrwt.inner_product(h, other)))
            worst = max(worst, res.rel_err)
    metrics["max_rel_err"] = worst
    return VerificationReport("parseval", dict(grid=cfg["grid"], wavelet=cfg["wavelet"],
                                               alphas=cfg["alphas"], rho=cfg["rho"]),
                              metrics, worst <= cfg["parseval_max_rel_err"])


def _round_trip(h, phi, p, grid):
    plane = gnfrwt.forward(h, phi, p, grid)
    back = gnfrwt.inverse(plane, phi, p, t0=h.t0, dt=h.dt, n=len(h))
    return float(np.linalg.norm(back.samples - h.samples) / np.linalg.norm(h.samples))


def check_inversion(cfg):
    """Round trip on the configured grid and on one of doubled density."""
    phi = parse_wavelet(cfg["wavelet"])
    grid, dense = parse_grid(cfg["grid"]), _denser(cfg["grid"])
    h, _ = _pair(cfg)
    metrics = {}
    ok = True
    for alpha in _alphas(cfg):
        p = _params(cfg, alpha=alpha)
        e1 = _round_trip(h, phi, p, grid)
        e2 = _round_trip(h, phi, p, dense)
        metrics[f"alpha={alpha:g}"] = dict(rel_err=e1, rel_err_doubled=e2)
        ok = ok and e1 <= cfg["inversion_max_rel_err"] and e2 < e1
    return VerificationReport("inversion", dict(grid=cfg["grid"], wavelet=cfg["wavelet"],
                                                alphas=cfg["alphas"], rho=cfg["rho"]),
                              metrics, ok)


def check_frft_route(cfg):
    """Direct, factored and fractional-Fourier routes on one instance."""
    phi = parse_wavelet(cfg["wavelet"])
    grid = parse_grid(cfg["grid"])
    h, _ = _pair(cfg)
    p = _params(cfg)
    fac = gnfrwt.forward(h, phi, p, grid).values
    direct = gnfrwt.forward(h, phi, p, grid, method="direct").values
    via = gnfrwt.forward_via_frft(h, phi, p, grid).values
    d_abs = float(np.max(np.abs(direct - fac)))
    f_rel = float(np.linalg.norm(via - fac) / np.linalg.norm(fac))
    ok = d_abs <= cfg["route_max_abs_err"] and f_rel <= cfg["frft_route_max_rel_err"]
    return VerificationReport("frft-route", dict(grid=cfg["grid"], wavelet=cfg["wavelet"],
                                                 alpha=cfg["alpha"], rho=cfg["rho"]),
                              dict(direct_vs_factored_max_abs=d_abs,
                                   frft_vs_factored_rel_l2=f_rel), ok)


def convolution_instance(cfg):
    """Gaussian inputs, ``u`` grid offset by half a step from the ``v, w`` grid.

    The basic function diverges at ``u = v = w``, so the output grid must
    avoid the input samples.
    """
    n = cfg["conv_n"]
    h = gaussian(n, -3.0, 3.0)
    g = gaussian(n, -3.0, 3.0, center=0.5, width=0.8)
    u_grid = SampledSignal(h.t0 + 0.5 * h.dt, h.dt, np.zeros(n - 1))
    return h, g, u_grid


def check_convolution_theorem(cfg):
    """Transform of ``h # g`` against the product of transforms."""
    triple = WaveletTriple.uniform(parse_wavelet(cfg["conv_wavelet"]))
    grid = parse_grid(cfg["conv_grid"])
    h, g, u_grid = convolution_instance(cfg)
    tols = parse_floats(cfg["conv_tols"], "conv_tols")
    if not tols:
        raise ConfigError("conv_tols is empty")
    residuals, relative = [], []
    for tol in tols:
        p = TransformParams(cfg["conv_alpha"], cfg["conv_rho"], tol)
        res = convo.convolution_theorem_residual(h, g, triple, p, grid, u_grid=u_grid, full=True)
        residuals.append(res.residual)
        relative.append(float(np.max(np.abs(res.lhs - res.rhs)) / np.max(np.abs(res.rhs))))
    monotone = all(b < a for a, b in zip(residuals, residuals[1:]))
    ok = residuals[-1] <= cfg["conv_max_residual"] and monotone
    return VerificationReport(
        "convolution-theorem",
        dict(grid=cfg["conv_grid"], wavelet=cfg["conv_wavelet"], alpha=cfg["conv_alpha"],
             rho=cfg["conv_rho"], tols=tols, n=cfg["conv_n"]),
        dict(residuals=residuals, relative_sup=relative, monotone=monotone), ok,
        quad_stats=dict(basic_function_samples=(cfg["conv_n"] - 1) * cfg["conv_n"] ** 2))


def no_monotone_growth(products):
    return not all(b > a for a, b in zip(products, products[1:]))


def check_bounds(cfg):
    """Pointwise bound at random points, integrated scans and the Young ratio."""
    triple = WaveletTriple.uniform(parse_wavelet(cfg["bounds_wavelet"]))
    p = _params(cfg, rho=cfg["bounds_rho"])
    rng = np.random.default_rng(cfg["seed"])
    c = gnfrwt.reconstruction_constant(triple.phi, p.quad_tol)
    reports = [bounds.pointwise_bound(triple, p, cfg["bounds_p"], *rng.uniform(-3, 3, 3),
                                      constant=c) for _ in range(cfg["bounds_points"])]
    violations = sum(not r.satisfied for r in reports)
    worst = max((r.lhs / r.rhs for r in reports if math.isfinite(r.rhs) and r.rhs > 0),
                default=0.0)
    seps = parse_floats(cfg["bounds_separations"], "bounds_separations")
    rho = p.rho
    scans = {}
    scan_ok = True
    if 0 < rho < 1:
        case, ex = "i", dict(p=2.0 / (1.0 + rho), q=2.0 / (1.0 + rho))
    else:
        case, ex = "ii", {}
    for th in bounds.THEOREMS:
        pts = bounds.integrated_bound_scan(th, case, triple, p, seps, constant=c, tol=1e-6, **ex)
        prods = [pt.product for pt in pts]
        finite = all(math.isfinite(x) for x in prods)
        scans[th] = dict(case=case, products=prods, finite=finite,
                         no_monotone_growth=no_monotone_growth(prods))
        scan_ok = scan_ok and finite and no_monotone_growth(prods)
    metrics = dict(pointwise_violations=violations, pointwise_worst_ratio=worst, scans=scans)
    ok = violations == 0 and scan_ok
    if 0 < rho < 1:
        h, g, u_grid = convolution_instance(dict(conv_n=16))
        e = 2.0 / (1.0 + rho)
        r_exp = 2.0 / (2.0 - rho)
        y1 = bounds.young_bound_check(h, g, triple, p, r_exp, r_exp, e, e, u_grid=u_grid,
                                      constant=c)
        y2 = bounds.young_bound_check(h.with_samples(2 * h.samples), g, triple, p, r_exp,
                                      r_exp, e, e, u_grid=u_grid, constant=c)
        drift = abs(y1.extras["ratio"] - y2.extras["ratio"]) / y1.extras["ratio"]
        metrics["young"] = dict(ratio=y1.extras["ratio"], ratio_after_doubling_h=y2.extras["ratio"],
                                relative_drift=drift)
        ok = ok and y1.satisfied and drift <= 1e-10
    return VerificationReport("bounds", dict(wavelet=cfg["bounds_wavelet"], rho=rho,
                                             p=cfg["bounds_p"], alpha=p.alpha,
                                             points=cfg["bounds_points"], seed=cfg["seed"]),
                              metrics, ok)


def specfun_errors():
    xs = np.linspace(-10.0, 10.0, 81)
    pairs = [(0.5, 1.5), (1.0, 0.5), (1.25, 0.5), (1.75, 1.5), (-1.5, 2.5), (2.0, 3.0)]
    series = 0.0
    for a, b in pairs:
        for x in xs:
            ref = specfun.hyp1f1_series(a, b, x)
            series = max(series, abs(specfun.hyp1f1(a, b, x) - ref) / max(1.0, abs(ref)))
    ident = 0.0
    for x in xs:
        ident = max(ident, abs(specfun.hyp1f1(1.0, 1.0, x) - math.exp(x)) / math.exp(x))
        if x != 0:
            ref = math.expm1(x) / x
            ident = max(ident, abs(specfun.hyp1f1(1.0, 2.0, x) - ref) / ref)
    gam = 0.0
    for x in np.linspace(0.01, 9.99, 500):
        gx = specfun.gamma(x)
        gam = max(gam, abs(specfun.gamma(x + 1.0) - x * gx) / abs(x * gx))
    return dict(hyp1f1_vs_series=series, identities=ident, gamma_recurrence=gam)


def check_specfun(cfg):
    m = specfun_errors()
    ok = (m["hyp1f1_vs_series"] <= cfg["specfun_max_err"]
          and m["identities"] <= cfg["specfun_identity_max_err"]
          and m["gamma_recurrence"] <= cfg["gamma_max_err"])
    return VerificationReport("specfun", {}, m, ok)


CHECKS = {
    "parseval": check_parseval,
    "inversion": check_inversion,
    "frft-route": check_frft_route,
    "convolution-theorem": check_convolution_theorem,
    "bounds": check_bounds,
    "specfun": check_specfun,
}


def run_check(name, cfg):
    if name not in CHECKS:
        raise ConfigError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
    t = time.perf_counter()
    rep = CHECKS[name](cfg)
    rep.wall_time = time.perf_counter() - t
    return rep

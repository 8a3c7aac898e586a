"""Numerical checks of the boundedness results for the basic function.

Three kinds of statement are covered:

* a pointwise bound on ``|D(u, v, w)|`` with an explicit right-hand side;
* integrated bounds ``integral |D| dx <= const * sep^-rho * norms``, where
  the case (i) constant is unspecified so only boundedness of
  ``I(sep) * sep^rho`` can be examined, and case (ii) has an explicit
  right-hand side;
* a Young-type bound on ``||h # g||_1`` whose constant is also
  unspecified; its ratio to the norm product is recorded.

Every report uses the same constant ``C`` as the basic function itself.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .convo import _constant, basic_function_values, convolve_direct
from .core import INF, conjugate_exponent, lp_norm, power_weighted_l1, weighted_norm
from .errors import DomainError, HypothesisError
from .quad import integrate_1d

__all__ = [
    "REPORT_EPS", "BoundReport", "ScanPoint", "pointwise_bound",
    "integrated_bound_scan", "integrated_bound_rhs", "integrated_bound_check",
    "young_bound_check", "THEOREMS",
]

#: relative slack when deciding lhs <= rhs
REPORT_EPS = 1e-9

#: integrated-bound identifiers and the axis each one integrates over
THEOREMS = {"3.2w": "w", "3.3u": "u", "3.4v": "v"}


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one inequality check.

    ``rhs`` is ``math.inf`` when the right-hand side blows up (coincident
    arguments); such reports are satisfied and carry ``flag="rhs-infinite"``.
    Points the basic function rejects as on its diagonal get ``lhs = nan``
    and ``flag="near-diagonal"``.
    """

    theorem_id: str
    lhs: float
    rhs: float
    satisfied: bool
    location: dict
    flag: str = ""
    extras: dict = field(default_factory=dict)

    @classmethod
    def build(cls, theorem_id, lhs, rhs, location, flag="", **extras):
        ok = lhs <= rhs * (1.0 + REPORT_EPS)
        return cls(theorem_id, float(lhs), float(rhs), bool(ok), dict(location), flag, extras)


class ScanPoint(NamedTuple):
    separation: float
    integral: float
    product: float


def _check_p(p):
    if not (p == INF or p >= 1):
        raise HypothesisError(f"need p >= 1, got {p}")


def pointwise_bound(triple, params, p, u, v, w, *, constant=None, tol=None):
    """Compare ``|D(u, v, w)|`` with its explicit bound.

    ``rhs = 2^(rho + 1/p) C^-1 |v-w|^(-1/q) |u-w|^(-1/p - rho) ||chi||_q
    ||(1+|z|^rho) phi||_p ||(1+|z|^rho) psi||_1`` with ``1/p + 1/q = 1``.
    """
    _check_p(p)
    rho = params.rho
    q = conjugate_exponent(p)
    loc = dict(u=float(u), v=float(v), w=float(w), p=float(p), rho=rho, alpha=params.alpha)
    if u == w or v == w:
        return BoundReport("3.1", math.nan, math.inf, True, loc, flag="rhs-infinite")
    c = _constant(triple, params, False) if constant is None else constant
    ntol = params.quad_tol if tol is None else tol
    inv_p = 0.0 if p == INF else 1.0 / p
    inv_q = 0.0 if q == INF else 1.0 / q
    norms = (lp_norm(triple.chi, q, ntol) * weighted_norm(triple.phi, rho, p, ntol)
             * weighted_norm(triple.psi, rho, 1.0, ntol))
    if norms == 0.0:
        return BoundReport.build("3.1", 0.0, 0.0, loc)
    # log form: near-coincident arguments overflow the direct product
    log_rhs = ((rho + inv_p) * math.log(2.0) - math.log(c) + math.log(norms)
               - inv_q * math.log(abs(v - w)) - (inv_p + rho) * math.log(abs(u - w)))
    if log_rhs > 700.0:
        return BoundReport("3.1", math.nan, math.inf, True, loc, flag="rhs-infinite")
    rhs = math.exp(log_rhs)
    if rhs == 0.0:
        lhs = 0.0
    else:
        try:
            val, _ = basic_function_values(triple, params, u, v, w, constant=c, tol=tol)
        except DomainError:
            # D is undefined this close to u = v = w; the bound says nothing
            return BoundReport("3.1", math.nan, rhs, True, loc, flag="near-diagonal")
        lhs = abs(complex(val))
    return BoundReport.build("3.1", lhs, rhs, loc)


def _args(axis, x, sep, center):
    # the two fixed arguments sit sep apart around center
    lo, hi = center - 0.5 * sep, center + 0.5 * sep
    if axis == "w":
        return hi, lo, x
    if axis == "u":
        return x, hi, lo
    return hi, x, lo


def _check_case(case, rho, p, q):
    if case == "i":
        if not 0 < rho < 1:
            raise HypothesisError(f"case (i) needs 0 < rho < 1, got rho={rho}")
        if p is None or q is None:
            raise HypothesisError("case (i) needs exponents p and q")
        if not (p > 1 and q > 1):
            raise HypothesisError(f"case (i) needs p, q > 1, got p={p}, q={q}")
        if abs(1.0 / p + 1.0 / q - 1.0 - rho) > 1e-12:
            raise HypothesisError(f"case (i) needs 1/p + 1/q = 1 + rho, got "
                                  f"{1.0 / p + 1.0 / q} vs {1.0 + rho}")
    elif case == "ii":
        if not rho >= 1:
            raise HypothesisError(f"case (ii) needs rho >= 1, got rho={rho}")
    else:
        raise ValueError(f"case must be 'i' or 'ii', got {case!r}")


def _abs_integral(triple, params, axis, sep, center, c, tol):
    def f(x):
        u, v, w = _args(axis, x, sep, center)
        val, _ = basic_function_values(triple, params, u, v, w, constant=c,
                                       tol=0.1 * tol)
        return np.abs(val)

    res = integrate_1d(f, (-math.inf, math.inf), tol, center=center,
                       scale=max(sep, 0.5), n_init=16, limit=4000)
    return float(np.real(res.value))


def integrated_bound_scan(theorem, case, triple, params, separations, *, p=None,
                          q=None, center=0.0, constant=None, tol=None):
    """``I(s) = integral |D|`` along one axis and ``I(s) * s^rho``.

    ``theorem`` is one of ``"3.2w"``, ``"3.3u"``, ``"3.4v"`` (the letter
    names the integrated argument); the other two arguments are placed
    ``s`` apart around ``center``.  The case hypotheses are checked first.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"theorem must be one of {sorted(THEOREMS)}")
    rho = params.rho
    _check_case(case, rho, p, q)
    axis = THEOREMS[theorem]
    c = _constant(triple, params, False) if constant is None else constant
    tol = params.quad_tol if tol is None else tol
    out = []
    for s in separations:
        s = float(s)
        if not s > 0:
            raise DomainError("separations must be positive")
        i_s = _abs_integral(triple, params, axis, s, center, c, tol)
        out.append(ScanPoint(s, i_s, i_s * s ** rho))
    return out


def integrated_bound_rhs(theorem, triple, params, separation, *, constant=None, tol=None):
    """Explicit case (ii) right-hand side (``rho >= 1``)."""
    rho = params.rho
    _check_case("ii", rho, None, None)
    c = _constant(triple, params, False) if constant is None else constant
    ntol = params.quad_tol if tol is None else tol

    def l1(f):
        return lp_norm(f, 1.0, ntol)

    def pw(f):
        return power_weighted_l1(f, rho - 1.0, ntol)

    psi, chi, phi = triple.psi, triple.chi, triple.phi
    if theorem == "3.2w":
        bracket = (pw(phi) * l1(chi) + pw(chi) * l1(phi)) * l1(psi)
    elif theorem == "3.3u":
        bracket = (pw(psi) * l1(chi) + pw(chi) * l1(psi)) * l1(phi)
    elif theorem == "3.4v":
        bracket = (pw(psi) * l1(phi) + pw(phi) * l1(psi)) * l1(chi)
    else:
        raise ValueError(f"theorem must be one of {sorted(THEOREMS)}")
    return 2.0 ** (rho - 1.0) / c * separation ** (-rho) * bracket


def integrated_bound_check(theorem, triple, params, separation, *, center=0.0,
                           constant=None, tol=None):
    """Case (ii): compare ``I(s)`` with the explicit right-hand side."""
    c = _constant(triple, params, False) if constant is None else constant
    rhs = integrated_bound_rhs(theorem, triple, params, separation, constant=c, tol=tol)
    (pt,) = integrated_bound_scan(theorem, "ii", triple, params, [separation],
                                  center=center, constant=c, tol=tol)
    loc = dict(separation=float(separation), center=float(center), rho=params.rho,
               alpha=params.alpha)
    return BoundReport.build(theorem + "(ii)", pt.integral, rhs, loc)


def young_bound_check(h, g, triple, params, r, r_prime, p, q, *, u_grid=None,
                      constant=None, tol=None, **kw):
    """``||h # g||_1`` against ``C^-1 ||phi||_1 ||psi||_p ||chi||_q ||g||_r' ||h||_r``.

    The inequality carries an unspecified constant, so the report's
    ``rhs`` is the norm product alone and ``extras["ratio"]`` holds
    ``lhs / rhs`` (0 when both vanish).  ``satisfied`` only says that the
    ratio is finite.
    """
    rho = params.rho
    checks = [
        (p > 1 and q > 1, f"p, q > 1 (p={p}, q={q})"),
        (0 < rho < 1, f"0 < rho < 1 (rho={rho})"),
        (abs(1.0 / p + 1.0 / q - rho - 1.0) <= 1e-12, "1/p + 1/q = rho + 1"),
        (r > 1 and r_prime > 1, f"r, r' > 1 (r={r}, r'={r_prime})"),
        (abs(1.0 / r + 1.0 / r_prime + rho - 2.0) <= 1e-12, "1/r + 1/r' + rho = 2"),
    ]
    for ok, what in checks:
        if not ok:
            raise HypothesisError(f"hypothesis fails: {what}")
    c = _constant(triple, params, False) if constant is None else constant
    ntol = params.quad_tol if tol is None else tol
    conv = convolve_direct(h, g, triple, params, u_grid, constant=c, tol=tol, **kw)
    lhs = lp_norm(conv, 1.0)
    rhs = (lp_norm(triple.phi, 1.0, ntol) * lp_norm(triple.psi, p, ntol)
           * lp_norm(triple.chi, q, ntol) * lp_norm(g, r_prime) * lp_norm(h, r) / c)
    if rhs == 0.0:
        ratio = 0.0 if lhs == 0.0 else math.inf
    else:
        ratio = lhs / rhs
    loc = dict(r=r, r_prime=r_prime, p=p, q=q, rho=rho, alpha=params.alpha)
    return BoundReport("3.5", float(lhs), float(rhs), math.isfinite(ratio), loc,
                       "constant-unspecified", dict(ratio=ratio))

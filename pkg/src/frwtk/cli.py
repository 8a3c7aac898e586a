"""Command-line front end.

Subcommands::

    gen KIND            write a gaussian, chirp or bump test signal
    transform SIGNAL    coefficient plane of a signal
    inverse PLANE       synthesise a signal from a plane
    convolve H G        associated convolution of two signals
    basicfn             basic function at given points
    verify CHECK        run a self-check and write a JSON report

Exit status: 0 success, 1 a verification failed, 2 bad input or config,
3 numerical non-convergence.
"""
import argparse
import json
import sys

import numpy as np

from . import convo, gnfrwt, io, signals, verify
from .core import SampledSignal, TransformParams, WaveletTriple
from .errors import ConfigError, DomainError, FrwtkError, NoConverge

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_NOCONV = 0, 1, 2, 3


def _common(cfg):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--alpha", type=float, default=None,
                   help=f"fractional order, angle alpha*pi/2 (default {cfg['alpha']})")
    p.add_argument("--rho", type=float, default=None,
                   help=f"dilation exponent (default {cfg['rho']})")
    p.add_argument("--wavelet", default=None,
                   help="morlet[:omega0] | mexican | file:PATH (default from config)")
    p.add_argument("--grid", default=None, metavar="a_min,a_max,n_a,b_min,b_max,n_b",
                   help=f"scale/shift grid (default {cfg['grid']})")
    p.add_argument("--tol", type=float, default=None, help="quadrature tolerance")
    p.add_argument("--config", default=None, metavar="PATH",
                   help="flat key = value config file")
    p.add_argument("--out", default=None, metavar="PATH", help="output file (default stdout)")
    return p


def build_parser():
    cfg = io.load_config()
    common = _common(cfg)
    parser = argparse.ArgumentParser(
        prog="frwtk", description="Fractional wavelet transform toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a test signal CSV")
    g.add_argument("kind", choices=sorted(signals.KINDS))
    g.add_argument("--n", type=int, default=256, help="number of samples")
    g.add_argument("--t-min", type=float, default=-8.0)
    g.add_argument("--t-max", type=float, default=8.0)
    g.add_argument("--center", type=float, default=0.0)
    g.add_argument("--width", type=float, default=1.0)
    g.add_argument("--amplitude", type=float, default=1.0)
    g.add_argument("--carrier", type=float, default=4.0, help="chirp only")
    g.add_argument("--rate", type=float, default=0.1, help="chirp only")

    t = sub.add_parser("transform", parents=[common], help="signal CSV -> plane CSV")
    t.add_argument("signal")
    t.add_argument("--method", choices=["factored", "direct", "frft"], default="factored")

    i = sub.add_parser("inverse", parents=[common], help="plane CSV -> signal CSV")
    i.add_argument("plane")
    i.add_argument("--like", metavar="SIGNAL",
                   help="take the output time grid from this signal CSV")
    i.add_argument("--t0", type=float, default=None)
    i.add_argument("--dt", type=float, default=None)
    i.add_argument("--n", type=int, default=None)

    c = sub.add_parser("convolve", parents=[common], help="h # g as a signal CSV")
    c.add_argument("h")
    c.add_argument("g")
    c.add_argument("--u-grid", metavar="t0,dt,n",
                   help="output grid (default: h's grid shifted by half a step)")
    c.add_argument("--sample-cap", type=int, default=convo.DEFAULT_SAMPLE_CAP)

    b = sub.add_parser("basicfn", parents=[common], help="basic function values")
    b.add_argument("--u", required=True, help="comma-separated values")
    b.add_argument("--v", required=True)
    b.add_argument("--w", required=True)
    b.add_argument("--two-sided", action="store_true",
                   help="integrate over negative scales too")

    v = sub.add_parser("verify", parents=[common], help="run a self-check")
    v.add_argument("check", choices=sorted(verify.CHECKS))
    return parser


def _settings(args):
    cfg = io.load_config(args.config)
    for key in ("alpha", "rho", "wavelet", "grid", "tol"):
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    return cfg


def _params(cfg):
    return TransformParams(cfg["alpha"], cfg["rho"], cfg["tol"])


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def cmd_gen(args, cfg):
    kw = dict(center=args.center, width=args.width, amplitude=args.amplitude)
    if args.kind == "chirp":
        kw.update(carrier=args.carrier, rate=args.rate)
    sig = signals.KINDS[args.kind](args.n, args.t_min, args.t_max, **kw)
    io.write_signal(args.out, sig)
    return EXIT_OK


def cmd_transform(args, cfg):
    h = io.read_signal(args.signal)
    phi = io.parse_wavelet(cfg["wavelet"])
    grid = io.parse_grid(cfg["grid"])
    p = _params(cfg)
    if args.method == "frft":
        plane = gnfrwt.forward_via_frft(h, phi, p, grid)
    else:
        plane = gnfrwt.forward(h, phi, p, grid, method=args.method)
    io.write_plane(args.out, plane)
    return EXIT_OK


def cmd_inverse(args, cfg):
    p = _params(cfg)
    plane = io.read_plane(args.plane, p.rho)
    phi = io.parse_wavelet(cfg["wavelet"])
    if args.like:
        ref = io.read_signal(args.like)
        t0, dt, n = ref.t0, ref.dt, len(ref)
    else:
        t0, dt, n = args.t0, args.dt, args.n
        if None in (t0, dt, n):
            raise ConfigError("inverse needs --like or all of --t0, --dt, --n")
    sig = gnfrwt.inverse(plane, phi, p, t0=t0, dt=dt, n=n)
    io.write_signal(args.out, sig)
    return EXIT_OK


def cmd_convolve(args, cfg):
    h, g = io.read_signal(args.h), io.read_signal(args.g)
    triple = WaveletTriple.uniform(io.parse_wavelet(cfg["wavelet"]))
    if args.u_grid:
        vals = io.parse_floats(args.u_grid, "u-grid")
        if len(vals) != 3 or vals[2] != int(vals[2]) or vals[2] < 1:
            raise ConfigError("--u-grid needs t0,dt,n")
        u_grid = SampledSignal(vals[0], vals[1], np.zeros(int(vals[2])))
    else:
        u_grid = SampledSignal(h.t0 + 0.5 * h.dt, h.dt, np.zeros(max(len(h) - 1, 1)))
    out = convo.convolve_direct(h, g, triple, _params(cfg), u_grid,
                                sample_cap=args.sample_cap)
    io.write_signal(args.out, out)
    return EXIT_OK


def cmd_basicfn(args, cfg):
    u = io.parse_floats(args.u, "u")
    v = io.parse_floats(args.v, "v")
    w = io.parse_floats(args.w, "w")
    try:
        u, v, w = np.broadcast_arrays(np.array(u), np.array(v), np.array(w))
    except ValueError:
        raise ConfigError("--u, --v, --w must have equal lengths or length 1") from None
    triple = WaveletTriple.uniform(io.parse_wavelet(cfg["wavelet"]))
    vals, errs = convo.basic_function_values(triple, _params(cfg), u, v, w,
                                             two_sided=args.two_sided)
    rows = [dict(u=float(a), v=float(b), w=float(c), re=float(z.real), im=float(z.imag),
                 est_error=float(e)) for a, b, c, z, e in zip(u, v, w, vals, errs)]
    _write_text(args.out, json.dumps(rows, indent=2))
    return EXIT_OK


def cmd_verify(args, cfg):
    rep = verify.run_check(args.check, cfg)
    text = rep.to_json()
    sys.stdout.write(text + "\n")
    if args.out and args.out != "-":
        _write_text(args.out, text)
    return EXIT_OK if rep.passed else EXIT_FAIL


COMMANDS = {
    "gen": cmd_gen, "transform": cmd_transform, "inverse": cmd_inverse,
    "convolve": cmd_convolve, "basicfn": cmd_basicfn, "verify": cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = _settings(args)
        return COMMANDS[args.command](args, cfg)
    except NoConverge as exc:
        print(f"frwtk: no convergence: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (DomainError, FrwtkError, OSError) as exc:
        print(f"frwtk: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

"""Analyse a signal, synthesise it back, and watch the error fall with grid density.

The inverse is a Riemann sum over the scale/shift plane, so its error is
dominated by the grid.  Doubling both densities should shrink it.
"""
import argparse

import numpy as np

from frwtk import MexicanHat, TransformParams, forward, inverse
from frwtk.io import parse_grid
from frwtk.signals import chirp


def rel_err(h, grid, params):
    plane = forward(h, MexicanHat(), params, grid)
    back = inverse(plane, MexicanHat(), params, t0=h.t0, dt=h.dt, n=len(h))
    return np.linalg.norm(back.samples - h.samples) / np.linalg.norm(h.samples)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alpha", type=float, default=0.5)
    ap.add_argument("--levels", type=int, default=3, help="number of density doublings")
    args = ap.parse_args()

    h = chirp(256, -8, 8)
    params = TransformParams(args.alpha, rho=0.5)
    na, nb = 24, 81
    for _ in range(args.levels):
        grid = parse_grid(f"0.05,10,{na},-10,10,{nb}")
        print(f"grid {na:4d} x {nb:4d}: relative L2 error {rel_err(h, grid, params):.3e}")
        na, nb = 2 * na, 2 * nb - 1


if __name__ == "__main__":
    main()

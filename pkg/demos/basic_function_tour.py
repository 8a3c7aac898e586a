"""A short tour of the basic function D(u, v, w).

Evaluates D by quadrature, compares it with the Morlet and Mexican-hat
closed forms, and checks the pointwise bound at the same points.  The
printed Mexican-hat form is expected to disagree; the corrected variant
should match to quadrature accuracy.
"""
import argparse

import numpy as np

from frwtk import (MexicanHat, Morlet, TransformParams, WaveletTriple, basic_function_values,
                   mexican_basic_reduced, morlet_basic_reduced, pointwise_bound)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alpha", type=float, default=0.5)
    ap.add_argument("--rho", type=float, default=0.5)
    ap.add_argument("--points", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    p = TransformParams(args.alpha, rho=args.rho)
    mor = WaveletTriple.uniform(Morlet(5.0))
    mex = WaveletTriple.uniform(MexicanHat())
    rng = np.random.default_rng(args.seed)
    for u, v, w in rng.uniform(-2, 2, (args.points, 3)):
        print(f"(u, v, w) = ({u:+.3f}, {v:+.3f}, {w:+.3f})")
        d = complex(basic_function_values(mor, p, u, v, w, two_sided=True)[0])
        closed = morlet_basic_reduced(5.0, p, u, v, w)
        print(f"  Morlet   quad {d:.6e}  closed form rel err {abs(closed - d) / abs(d):.1e}")
        d = complex(basic_function_values(mex, p, u, v, w)[0])
        for variant in ("printed", "corrected"):
            got = mexican_basic_reduced(p, u, v, w, variant=variant)
            print(f"  Mexican  {variant:9s} rel err {abs(got - d) / abs(d):.1e}")
        rep = pointwise_bound(mor, p, 2.0, u, v, w)
        print(f"  bound    |D| = {rep.lhs:.3e} <= {rep.rhs:.3e}: {rep.satisfied}")


if __name__ == "__main__":
    main()

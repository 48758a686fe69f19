"""Write (kappa, l, |C_{l,kappa}|, l/2, asymptote) for several curvatures as CSV."""

import argparse
import sys

import numpy as np

from metricmag import circle
from metricmag.cli import write_csv


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kappas", default="1,0,-1,-10")
    ap.add_argument("--lmax", type=float, default=40.0)
    ap.add_argument("--steps", type=int, default=161)
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args(argv)

    rows = []
    for kappa in (float(k) for k in args.kappas.split(",")):
        for ell in np.linspace(args.lmax / (args.steps - 1), args.lmax, args.steps - 1):
            p = circle.CircleParams(float(ell), kappa)
            rows.append((kappa, ell, circle.circle_magnitude(p), ell / 2, circle.circle_asymptotic(p)))
    text = write_csv(("kappa", "length", "value", "half_length", "asymptote"), rows)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()

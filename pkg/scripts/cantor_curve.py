"""Write (l, |T^k_l|, |T_l|, p(l), f(l)) on a log grid of lengths as CSV."""

import argparse
import sys

import numpy as np

from metricmag import cantor
from metricmag.cli import write_csv


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lmin", type=float, default=1e-2)
    ap.add_argument("--lmax", type=float, default=1e3)
    ap.add_argument("--steps", type=int, default=200)
    ap.add_argument("--k", type=int, default=6, help="approximation level")
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args(argv)

    rows = []
    for ell in np.geomspace(args.lmin, args.lmax, args.steps):
        P = cantor.CantorParams(float(ell))
        rows.append((ell, cantor.cantor_approx_magnitude(ell, args.k),
                     cantor.cantor_magnitude(P), cantor.cantor_p(P), cantor.cantor_f(ell)))
    text = write_csv(("length", f"approx_k{args.k}", "magnitude", "p", "f"), rows)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()

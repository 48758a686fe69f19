"""Large-scale behaviour of magnitude for four families, with the remainder terms.

For each scale factor the table lists the magnitude, its leading-order
approximation and their difference:

    n points        |tX|      vs  n
    Cantor set      |T_l|     vs  f(l) l^log3(2)     (difference q2)
    interval        |[0, l]|  vs  l/2 + 1           (exact)
    circle (chord)  |C_l|     vs  l/2               (difference q3)
"""

import argparse
import sys

import numpy as np

from metricmag import cantor, circle, linear, metric, solver
from metricmag.cli import write_csv


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--scales", default="1,3,10,30,100,300")
    ap.add_argument("--points", type=int, default=12, help="size of the random cloud")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    cloud = metric.from_points(rng.random((args.points, 3)))
    rows = []
    for t in (float(s) for s in args.scales.split(",")):
        v = solver.magnitude(metric.scale(cloud, t)).value
        rows.append(("points", t, v, args.points, v - args.points))
        P = cantor.CantorParams(t)
        T = cantor.cantor_magnitude(P)
        lead = cantor.cantor_p(P)
        rows.append(("cantor", t, T, lead, T - lead))
        rows.append(("interval", t, linear.segment_magnitude(t), t / 2 + 1, 0.0))
        C = circle.circle_magnitude(circle.CircleParams(t, 0.0))
        rows.append(("circle", t, C, t / 2, C - t / 2))
    text = write_csv(("family", "scale", "value", "leading", "remainder"), rows)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()

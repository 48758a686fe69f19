"""Command-line front end.

Subcommands: ``finite``, ``sweep``, ``segment``, ``cantor``, ``circle`` and
``verify``.  Tables are written as CSV (header row, 17 significant digits)
or JSON; output goes to stdout unless ``--output`` is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import acceptance, cantor, circle, linear, metric, solver
from .errors import InvalidMetric, MetricMagError
from .numerics import Quadrature

COMMANDS = ("finite", "sweep", "segment", "cantor", "circle", "verify")


@dataclass
class RunConfig:
    command: str
    input: Path | None = None
    output: Path | None = None
    format: str = "csv"
    length: float | None = None
    grid: tuple[float, float, int] | None = None
    log_grid: bool = True
    kappa: float = 0.0
    k: int = 10
    n_list: tuple[int, ...] = ()
    scheme: str = "uniform"
    seed: int = 42
    fourier: bool = False
    samples: int = 1024
    harmonics: int = 4
    eps: float = 1e-12
    tol: float = 1e-12

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        if not (self.eps > 0 and self.tol > 0):
            raise ValueError("tolerances must be positive")


def fmt(x) -> str:
    if x is None:
        return "undefined"
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.17g}"


def write_csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def write_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def make_grid(grid: tuple[float, float, int], log: bool) -> list[float]:
    a, b, steps = grid
    if log:
        return [float(x) for x in np.geomspace(a, b, steps)]
    return [float(x) for x in np.linspace(a, b, steps)]


def parse_grid(text: str) -> tuple[float, float, int]:
    try:
        a, b, steps = text.split(":")
        a, b, steps = float(a), float(b), int(steps)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b:steps, got {text!r}")
    if not (0 < a < b) or steps < 2:
        raise argparse.ArgumentTypeError("need 0 < a < b and steps >= 2")
    return a, b, steps


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load_space(path: Path) -> metric.FiniteMetricSpace:
    with open(path) as fh:
        return metric.from_json(json.load(fh))


def _lengths(cfg: RunConfig) -> list[float]:
    if cfg.grid is not None:
        return make_grid(cfg.grid, cfg.log_grid)
    if cfg.length is None:
        raise ValueError("give --length or --grid")
    return [cfg.length]


# ------------------------------------------------------------------ commands


def cmd_finite(cfg: RunConfig) -> str:
    space = _load_space(cfg.input)
    res = solver.magnitude(space)
    if cfg.format == "json":
        out = res.to_dict()
        out["sufficiently_separated"] = solver.is_sufficiently_separated(space)
        out["homogeneous"] = solver.is_homogeneous(space)
        return write_json(out)
    rows = list(zip(res.weighting.labels, res.weighting.weights))
    rows.append(("magnitude", res.value))
    return write_csv(("label", "weight"), rows)


def cmd_sweep(cfg: RunConfig) -> str:
    space = _load_space(cfg.input)
    if cfg.grid is None:
        raise ValueError("sweep needs --t a:b:steps")
    pts = solver.magnitude_function(space, make_grid(cfg.grid, cfg.log_grid))
    rows = [(p.t, p.value, space.n, None if p.value is None else abs(p.value - space.n)) for p in pts]
    if cfg.format == "json":
        keys = ("t", "value", "reference", "error")
        return write_json([dict(zip(keys, r)) for r in rows])
    return write_csv(("t", "value", "reference", "error"), rows)


def cmd_segment(cfg: RunConfig) -> str:
    if cfg.length is None:
        raise ValueError("segment needs --length")
    closed = linear.segment_magnitude(cfg.length)
    n_list = cfg.n_list or (10, 100, 1000)
    rows = linear.segment_convergence(cfg.length, n_list, cfg.scheme, cfg.seed)
    if cfg.format == "json":
        return write_json({
            "length": cfg.length,
            "magnitude": closed,
            "scheme": cfg.scheme,
            "convergence": [
                {"n": r.n, "value": r.value, "reference": r.reference, "error": r.error}
                for r in rows
            ],
        })
    return write_csv(("n", "value", "reference", "error"), [(r.n, r.value, r.reference, r.error) for r in rows])


def cmd_cantor(cfg: RunConfig) -> str:
    if cfg.fourier:
        rep = cantor.cantor_fourier(cfg.samples, cfg.harmonics, cfg.eps)
        if cfg.format == "json":
            return write_json(rep.to_dict())
        rows = [(0, rep.mean, 0.0)] + [(h.frequency, h.amplitude, h.phase) for h in rep.harmonics]
        return write_csv(("frequency", "amplitude", "phase"), rows)
    rows = []
    for ell in _lengths(cfg):
        P = cantor.CantorParams(ell, cfg.eps)
        rows.append((
            ell,
            cantor.cantor_approx_magnitude(ell, cfg.k),
            cantor.cantor_magnitude(P),
            cantor.cantor_p(P),
            cantor.cantor_q2(P),
            cantor.cantor_f(ell, cfg.eps),
        ))
    header = ("length", f"approx_k{cfg.k}", "magnitude", "p", "q2", "f")
    if cfg.format == "json":
        return write_json([dict(zip(header, r)) for r in rows])
    return write_csv(header, rows)


def cmd_circle(cfg: RunConfig) -> str:
    q = Quadrature(tol=cfg.tol)
    if cfg.n_list:
        if cfg.length is None:
            raise ValueError("convergence table needs --length")
        rep = circle.circle_convergence(circle.CircleParams(cfg.length, cfg.kappa), cfg.n_list, q)
        rows = [(e.n, e.value, rep.limit, e.error) for e in rep.entries]
        if cfg.format == "json":
            keys = ("n", "value", "reference", "error")
            return write_json({"length": cfg.length, "kappa": cfg.kappa, "limit": rep.limit,
                               "convergence": [dict(zip(keys, r)) for r in rows]})
        return write_csv(("n", "value", "reference", "error"), rows)
    rows = []
    for ell in _lengths(cfg):
        p = circle.CircleParams(ell, cfg.kappa)
        closed = circle.intrinsic_circle_magnitude(ell) if cfg.kappa == 1.0 else None
        rows.append((ell, circle.circle_magnitude(p, q), ell / 2.0, circle.circle_asymptotic(p), closed))
    header = ("length", "value", "half_length", "asymptote", "closed_form")
    if cfg.kappa != 1.0:
        header, rows = header[:-1], [r[:-1] for r in rows]
    if cfg.format == "json":
        return write_json({"kappa": cfg.kappa, "rows": [dict(zip(header, r)) for r in rows]})
    return write_csv(header, rows)


def cmd_verify(cfg: RunConfig) -> tuple[str, bool]:
    checks = acceptance.run_all()
    ok = all(c.passed for c in checks)
    if cfg.format == "json":
        text = write_json([
            {"criterion": c.number, "name": c.name, "passed": c.passed, "detail": c.detail}
            for c in checks
        ])
    else:
        lines = [c.line() for c in checks]
        lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} criteria passed")
        text = "\n".join(lines) + "\n"
    return text, ok


HANDLERS = {
    "finite": cmd_finite,
    "sweep": cmd_sweep,
    "segment": cmd_segment,
    "cantor": cmd_cantor,
    "circle": cmd_circle,
}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute one command; returns the process exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    ok = True
    try:
        if cfg.command == "verify":
            text, ok = cmd_verify(cfg)
        else:
            text = HANDLERS[cfg.command](cfg)
    except InvalidMetric as exc:
        stdout.write(write_json(exc.report.to_dict()))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MetricMagError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.output is not None:
        cfg.output.write_text(text)
    else:
        stdout.write(text)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="metricmag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", type=Path)
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="default: json for finite, csv otherwise")

    p = sub.add_parser("finite", parents=[common], help="magnitude and weighting of a finite space")
    p.add_argument("input", type=Path)

    p = sub.add_parser("sweep", parents=[common], help="magnitude function t -> |tX|")
    p.add_argument("input", type=Path)
    p.add_argument("--t", dest="grid", type=parse_grid, required=True, metavar="A:B:STEPS")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--log", dest="log_grid", action="store_true", default=True)
    g.add_argument("--linear", dest="log_grid", action="store_false")

    p = sub.add_parser("segment", parents=[common], help="line segment limit and convergence")
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--n-list", type=parse_int_list, default=())
    p.add_argument("--scheme", choices=linear.SCHEMES, default="uniform")
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("cantor", parents=[common], help="Cantor set magnitudes")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--length", type=float)
    src.add_argument("--grid", type=parse_grid, metavar="A:B:STEPS", help="log-spaced lengths")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--fourier", action="store_true")
    p.add_argument("--samples", type=int, default=1024)
    p.add_argument("--harmonics", type=int, default=4)
    p.add_argument("--eps", type=float, default=1e-12)

    p = sub.add_parser("circle", parents=[common], help="circle magnitudes for the kappa-metrics")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--length", type=float)
    src.add_argument("--grid", type=parse_grid, metavar="A:B:STEPS", help="log-spaced lengths")
    p.add_argument("--kappa", type=float, default=0.0)
    p.add_argument("--n-list", type=parse_int_list, default=())
    p.add_argument("--tol", type=float, default=1e-12)

    sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    if fields.get("format") is None:
        fields["format"] = "json" if args.command == "finite" else "csv"
    return RunConfig(**fields)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

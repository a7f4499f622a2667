"""Command-line entry point.

Subcommands: solve, reference, eta-sweep, convergence, domain-study,
three-body, bench.  Each is configured by an optional YAML file (--config)
plus flag overrides; artifacts land under --out.

Exit codes: 0 success, 2 configuration error, 3 solver failure
(including a softness parameter at or above eta_max), 4 missing reference.
"""

from __future__ import annotations

import argparse
import sys

from .solve import SolverError
from .studies import ConfigError, ReferenceMissing, load_config, run_study

EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_REFERENCE = 4


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="YAML study configuration")
    sub.add_argument("--out", help="output directory for CSV/JSON artifacts")
    sub.add_argument("--p", type=int, help="spline degree")
    sub.add_argument("--n", type=int, help="elements per direction")
    sub.add_argument("--eta", type=float, help="softness parameter")
    sub.add_argument("--k", type=int, help="number of eigenpairs")
    sub.add_argument("--quad-order", type=int, dest="quad_order")
    sub.add_argument("--quad-order-potential", type=int,
                     dest="quad_order_potential")
    sub.add_argument("--dense-threshold", type=int, dest="dense_threshold")
    sub.add_argument("--tol", type=float)
    sub.add_argument("--seed", type=int, help="seed for sampled test data")
    sub.add_argument("--shape", choices=["lorentzian_cube", "gaussian"])
    sub.add_argument("--beta", type=float)
    sub.add_argument("--x-eps", type=float, dest="x_eps")
    sub.add_argument("--mass-ratio", type=float, dest="mass_ratio")
    sub.add_argument("--gamma0", type=float)
    sub.add_argument("--growth", type=float)
    sub.add_argument("--dimension", type=int, choices=[1, 2])
    sub.add_argument("--json", action="store_const", const=True,
                     dest="json_output", default=None,
                     help="also write a JSON eigenvalue table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="softiga",
        description="B-spline Galerkin bound-state solver with softness "
                    "penalty, and the study harness around it.")
    subs = parser.add_subparsers(dest="study", required=True)
    for name, helptext in [
        ("solve", "single discretization solve"),
        ("reference", "compute and cache a high-degree reference"),
        ("eta-sweep", "errors over a softness-parameter grid"),
        ("convergence", "errors over mesh refinements with fitted orders"),
        ("domain-study", "truncation error vs domain half-width"),
        ("three-body", "FEM/softFEM/IGA/softIGA table on the 2D problem"),
        ("bench", "wall-time benchmark of the four methods"),
    ]:
        sub = subs.add_parser(name, help=helptext)
        _add_common(sub)
        if name == "solve":
            sub.add_argument("--export-matrices", dest="export_matrices",
                             help="dump system matrices in (row, col, value) "
                                  "text format into this directory")
    return parser


def main(argv=None) -> int:
    args = vars(build_parser().parse_args(argv))
    study = args.pop("study")
    config_path = args.pop("config", None)
    overrides = {k: v for k, v in args.items() if v is not None}
    overrides["study"] = study
    try:
        cfg = load_config(config_path, overrides)
        out = run_study(cfg)
    except (ConfigError, ReferenceMissing, SolverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, ConfigError):
            return EXIT_CONFIG
        if isinstance(exc, ReferenceMissing):
            return EXIT_REFERENCE
        return EXIT_SOLVER
    if out.kind in ("solve", "reference"):
        for mode, value in out.rows:
            print(f"lambda_{mode} = {value!r}")
    if out.csv_path is not None:
        print(f"wrote {out.csv_path}")
    for key in ("fits_path", "fit_path", "json_path"):
        if key in out.extra:
            print(f"wrote {out.extra[key]}")
    for grid in out.extra.get("mode_grids", []):
        print(f"wrote {grid}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

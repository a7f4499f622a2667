#!/usr/bin/env python3
"""Run every study config under scripts/configs/ into one artifact tree.

Each study writes into <out>/<config-stem>/ so the plot tooling can pick up
the CSVs directly.  Studies share the reference cache where their specs
coincide.
"""

import argparse
import sys
import time
from pathlib import Path

from softiga.studies import load_config, run_study

CONFIG_DIR = Path(__file__).parent / "configs"

ORDER = [
    "two_body_eta_sweep_p1",
    "two_body_eta_sweep_p2",
    "two_body_convergence_p1",
    "two_body_convergence_p2",
    "two_body_domain_iga",
    "two_body_domain_softiga",
    "three_body_ratio1",
    "three_body_ratio20",
    "three_body_ratio100",
    "bench_two_body",
    "bench_three_body",
]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="out", help="artifact root directory")
    parser.add_argument("--only", nargs="*", help="run only these config stems")
    args = parser.parse_args(argv)

    cache = str(Path(args.out) / "reference_cache")
    stems = args.only or ORDER
    for stem in stems:
        path = CONFIG_DIR / f"{stem}.yaml"
        if not path.exists():
            print(f"skipping unknown config {stem}", file=sys.stderr)
            continue
        cfg = load_config(path, {"out": str(Path(args.out) / stem),
                                 "reference_cache": cache})
        t0 = time.perf_counter()
        out = run_study(cfg)
        print(f"{stem}: wrote {out.csv_path} ({time.perf_counter() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())

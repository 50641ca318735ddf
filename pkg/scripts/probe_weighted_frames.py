#!/usr/bin/env python3
"""Run the measure-minimization probe over frames with genuinely non-uniform
weights and write one JSON report per frame.

The interesting regime is exactly the one counting measure cannot reach:
split atoms (duplicated vectors at fractional weight) and quadrature weights.
Counterexample records inside each report replay without this script.

Usage:
    python scripts/probe_weighted_frames.py --out-dir reports [--trials 200] [--seed 0]
"""

import argparse
import json
import sys
from pathlib import Path

from framelab import (
    conjecture_probe,
    harmonic_discretization,
    mercedes_benz,
    random_parseval,
    weighted_split,
)


def probe_targets():
    return [
        ("split_mercedes", weighted_split(mercedes_benz(), 0, 2)),
        ("split_twice_mercedes", weighted_split(weighted_split(mercedes_benz(), 0, 2), 2, 2)),
        ("split_random_parseval_3_5", weighted_split(random_parseval(3, 5, seed=5), 1, 2)),
        ("harmonic_2_4", harmonic_discretization(2, 4)),
        ("harmonic_3_6", harmonic_discretization(3, 6)),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, frame in probe_targets():
        report = conjecture_probe(frame, trials=args.trials, seed=args.seed)
        path = out_dir / f"probe_{name}.json"
        path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
        print(
            f"{name}: ran {report['trials_run']}, skipped {report['trials_skipped']}, "
            f"confirmed {report['confirmations']}, "
            f"counterexamples {len(report['counterexamples'])} -> {path}",
            file=sys.stderr,
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())

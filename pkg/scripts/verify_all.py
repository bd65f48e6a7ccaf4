#!/usr/bin/env python3
"""Run every verification suite and write certificates to a directory, one JSON file per suite."""
import argparse
import pathlib
import sys

from spinorlab.cli import SUITES, RunOptions, dump_certificates, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="certificates", help="output directory")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--timing", action="store_true")
    args = ap.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    options = RunOptions(seed=args.seed, timing=args.timing)
    worst = 0
    for suite in list(SUITES) + ["smoothness"]:
        certs, code = run_suite(suite, options)
        (out / f"{suite}.json").write_text(dump_certificates(certs))
        n_pass = sum(c.passed for c in certs)
        print(f"{suite:12s} {n_pass}/{len(certs)} pass")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Sample rational Cartan points and compare section smoothness with membership in the 30 special lines.

Points on a valency-6 line should give singular sections and points off all
of them smooth ones.  Prints one row per point and a tally of disagreements.
"""
import argparse
import random
import sys

from spinorlab.cartan import section_from_cartan, section_smooth
from spinorlab.reflection import on_special_line, special_lines


def point_on_line(line, rng, bound):
    """A random integer combination of two spanning vectors of a special line."""
    u, v = line.basis
    s, t = rng.randint(1, bound), rng.randint(1, bound)
    return tuple(s * x + t * y for x, y in zip(u, v))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=10, help="points of each kind")
    ap.add_argument("--bound", type=int, default=9)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    lines = special_lines()
    samples = []
    for _ in range(args.count):
        samples.append(point_on_line(rng.choice(lines), rng, args.bound))
    while len(samples) < 2 * args.count:
        pt = tuple(rng.randint(-args.bound, args.bound) for _ in range(4))
        if any(pt):
            samples.append(pt)

    bad = 0
    for pt in samples:
        on_line = on_special_line(pt)
        smooth = section_smooth(section_from_cartan(pt))
        agrees = smooth != on_line
        bad += not agrees
        text = "(" + ", ".join(str(x) for x in pt) + ")"
        print(f"{text:32s} on_line={on_line!s:5s} smooth={smooth!s:5s} {'ok' if agrees else 'MISMATCH'}")
    print(f"{bad} mismatches out of {len(samples)}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

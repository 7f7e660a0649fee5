#!/usr/bin/env python3
"""Tabulate thresholds and admissibility over a grid of alphabet shapes.

For each (t, l) with t <= l up to --max-l, prints the density threshold
s0, the smallest admissible top letter s', the certified growth factor
there, and the repetition threshold for the simplified value-count bound.
Alphabets of shape {b_1<...<b_t, l+1..s'} with s' at or past the printed
value force unboundedly growing value multiplicities.

Usage:
    python scripts/bounds_table.py --max-l 4
"""

import argparse
import sys

sys.path.insert(0, "src")

from continuants import (
    density_threshold_s,
    growth_factor,
    simplified_bound_threshold,
    smallest_admissible_s,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-l", type=int, default=4)
    args = ap.parse_args()

    print(f"{'t':>3} {'l':>3} {'s0':>4} {'s_adm':>6} {'growth@s_adm':>14} {'m_thr(s_adm)':>13}")
    for l in range(1, args.max_l + 1):
        for t in range(1, l + 1):
            s0 = density_threshold_s(t, l)
            s_adm = smallest_admissible_s(t, l)
            g = growth_factor(t, l, s_adm)
            m_thr = simplified_bound_threshold(s_adm)
            mid = float(g.midpoint)
            print(f"{t:>3} {l:>3} {s0:>4} {s_adm:>6} {mid:>14.6f} {m_thr:>13}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

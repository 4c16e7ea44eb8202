#!/usr/bin/env python3
"""Render the arc diagram of an even-cycled CUD permutation.

Usage:
    python scripts/render_figure.py "(1,4,2,6,3,7)(5,8)" --out diagram.svg
"""

import argparse

from cudlab.matchings import matching_pair_text, render_arc_diagram, to_matching_pair
from cudlab.perms import CycleDecomposition, from_cycles, parse_any


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("perm", nargs="?", default="(1,4,2,6,3,7)(5,8)")
    parser.add_argument("--out", default="diagram.svg")
    args = parser.parse_args()

    value = parse_any(args.perm)
    p = from_cycles(value) if isinstance(value, CycleDecomposition) else value
    path = render_arc_diagram(p, args.out)
    print(matching_pair_text(to_matching_pair(p)))
    print(f"wrote {path}")


if __name__ == "__main__":
    main()

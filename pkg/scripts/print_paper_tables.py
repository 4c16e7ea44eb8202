#!/usr/bin/env python3
"""Regenerate the headline number tables: every catalog sequence, the small
distribution tables, and the expectation values, all from exact arithmetic.

Usage:
    python scripts/print_paper_tables.py [--n-max 10] [--dist-max 5]
"""

import argparse

from cudlab.catalog import (
    SEQUENCE_IDS,
    catalog_markers,
    expected_ud_cycles,
    expected_ud_cycles_limit,
    no_ud_cycles_count,
    no_ud_fraction_limit,
    sequence_terms,
)
from cudlab.oracle import distribution
from cudlab.perms import Family


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument("--dist-max", type=int, default=5)
    args = parser.parse_args()

    print("== catalog sequences (EGF terms) ==")
    for seq_id in SEQUENCE_IDS:
        if catalog_markers(seq_id):
            continue
        terms = sequence_terms(seq_id, args.n_max)
        print(f"{seq_id:>18}: {' '.join(str(v) for v in terms)}")

    print("\n== marked sequences at n =", args.dist_max, "==")
    for seq_id in SEQUENCE_IDS:
        markers = catalog_markers(seq_id)
        if not markers:
            continue
        poly = sequence_terms(seq_id, args.dist_max)[-1]
        print(f"{seq_id:>18} [{','.join(markers)}]: {poly}")

    print("\n== distributions over CUD_n (cycles) ==")
    for n in range(args.dist_max + 1):
        table = distribution(Family.CUD, n, ("c",))
        rows = " ".join(f"c={k}:{v}" for (k,), v in sorted(table.rows.items()))
        print(f"n={n}: {rows}")

    print("\n== expected up-down cycles ==")
    for n in (1, 2, 3, 5, 8, 12):
        value = expected_ud_cycles(n)
        print(f"n={n:>2}: {value} = {float(value):.9f}")
    print(f"limit: {expected_ud_cycles_limit():.9f}")

    print("\n== permutations with no up-down cycle ==")
    print(" ".join(str(no_ud_cycles_count(n)) for n in range(1, args.n_max + 1)))
    print(f"limiting fraction: {no_ud_fraction_limit():.10f}")


if __name__ == "__main__":
    main()

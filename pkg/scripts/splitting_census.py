#!/usr/bin/env python3
"""Census of splittings of small monic polynomials over small finite rings.

For each (ring, polynomial) pair this counts ordered splittings into monic
linear factors, rotation classes, splittings passing the commuting-
coefficient hypothesis, and two-sided roots. Useful for getting a feel for
how much looser "set of roots" is than "cyclic order of factors" once
coefficients stop commuting.
"""

from __future__ import annotations

import argparse

from cyclesplit.examples import example1_algebra
from cyclesplit.cli import parse_poly
from cyclesplit.endo import format_table
from cyclesplit.rings import ResidueRing, parse_ring_spec
from cyclesplit.search import SearchTask, enumerate_splittings, find_roots

DEFAULT_RINGS = ["Zmod:4", "Zmod:6", "UT:2:Zmod:2", "UT:2:Zmod:3", "Mat:2:Zmod:2"]
DEFAULT_POLYS = ["X^2", "X^2 - X", "X^2 - 1", "X^3 - X^2", "X^3 - 1"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rings", nargs="*", default=DEFAULT_RINGS)
    ap.add_argument("--polys", nargs="*", default=DEFAULT_POLYS)
    ap.add_argument("--with-cubic-algebra", action="store_true",
                    help="also census the rank-3 splitting algebra over Z/2 and Z/3")
    args = ap.parse_args()

    rings = [(spec, parse_ring_spec(spec)) for spec in args.rings]
    if args.with_cubic_algebra:
        rings += [
            (f"cubic-algebra/Z{p}", example1_algebra(ResidueRing(p))) for p in (2, 3)
        ]

    headers = ["ring", "poly", "splittings", "cycle classes", "commuting", "roots"]
    rows = []
    for spec, ring in rings:
        for text in args.polys:
            f = parse_poly(text, ring)
            assert f.degree is not None
            everything = enumerate_splittings(
                SearchTask(ring, f, f.degree, "all_splittings")
            )
            commuting = enumerate_splittings(
                SearchTask(ring, f, f.degree, "commuting_splittings_only")
            )
            rows.append(
                [
                    spec,
                    text,
                    str(len(everything.witnesses)),
                    str(everything.cycle_count),
                    str(len(commuting.witnesses)),
                    str(len(find_roots(f, ring))),
                ]
            )
    print(format_table(headers, rows))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Survey the budgeted Whitehead-order lattices across the catalog.

For each group, prints the HNF basis of the order lattice in class-sum
coordinates, its denominator, and whether the enumeration stabilized.  For
non-abelian groups also reports whether the lattice contains the image of
the center of Z[G] (open in general; this prints per-group verdicts at the
chosen budget, not theorems).

Usage: python scripts/xi_survey.py [rounds] [max_matrix_size]
"""

import sys
import time

sys.path.insert(0, "src")

from grax.algebra import CentralElement
from grax.fitting import Budget, lattice_from_central, xi_approx
from grax.groups import group_from_catalog
from grax.reps import irreps

GROUPS = ["C1", "C4", "C6", "C8", "S3", "D4", "D5", "Q8", "A4"]


def central_image_of_group_ring(G):
    """The lattice of class sums inside the center, i.e. zeta(Z[G])."""
    gens = []
    for cls in G.conjugacy_classes:
        coords = [1 if i == G.class_of[cls[0]] else 0
                  for i in range(len(G.conjugacy_classes))]
        gens.append(CentralElement.from_coords(G, coords))
    return lattice_from_central(G, gens)


def main():
    rounds = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    size = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    budget = Budget(max_matrix_size=size, rounds=rounds)
    for name in GROUPS:
        G = group_from_catalog(name)
        t0 = time.time()
        xi = xi_approx(G, budget)
        line = (f"{name:5} order={G.order:3} chars={len(irreps(G)):2} "
                f"denom={xi.denominator} stable={xi.stable} exact={xi.exact} "
                f"({time.time() - t0:.1f}s)")
        if not G.is_abelian():
            zc = central_image_of_group_ring(G)
            contains = all(xi.contains(x) for x in zc.elements())
            line += f" contains-center={contains}"
        print(line)
        for row in xi.lattice.basis:
            print(f"        {list(row)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Print the cyclotomic norm-relation table over a conductor/prime range.

Usage: python scripts/distribution_table.py [fmax] [ellmax]
"""

import sys

sys.path.insert(0, "src")

from grax.cyclo import euler_family_check
from grax.serde import cyclo_to_json


def main():
    fmax = int(sys.argv[1]) if len(sys.argv) > 1 else 30
    ellmax = int(sys.argv[2]) if len(sys.argv) > 2 else 13
    rows = euler_family_check(fmax, ellmax)
    print(f"{'f':>4} {'ell':>4}  verdict  norm value")
    for r in rows:
        val = cyclo_to_json(r.lhs)
        if isinstance(val, dict):
            val = f"conductor {val['n']}: {val['coeffs']}"
        print(f"{r.conductor:>4} {r.prime:>4}  {'pass' if r.passed else 'FAIL':7}  {val}")
    bad = [r for r in rows if not r.passed]
    print(f"\n{len(rows)} admissible pairs, {len(bad)} failures")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

"""Recompute the six mixed-parity examples and print a comparison table."""

import json
import sys

from orbitcalc.verification import mixed_parity_examples


def main() -> int:
    rows = mixed_parity_examples()
    for r in rows:
        mark = "ok" if r["matches"] else "differs"
        print(f"{r['group']:>4}  p(psi)={r['p_psi']}  member={r['member']} {r['relation']} eta={r['eta']}"
              f"  stated={r['stated']['member']} {r['stated']['relation']} {r['stated']['eta']}  [{mark}]")
    flagged = [r for r in rows if "readings" in r]
    for r in flagged:
        print("\nreadings for", r["group"], r["p_psi"])
        print(json.dumps(r["readings"], indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())

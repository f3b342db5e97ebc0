"""Write closure-poset diagrams (DOT and JSON) for a range of groups."""

import argparse
import json
import sys
from pathlib import Path

from orbitcalc.classical import GroupType
from orbitcalc.verification import closure_poset, poset_to_dot, poset_to_json


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--out-dir", default="hasse")
    ap.add_argument("--eta", action="store_true")
    args = ap.parse_args(argv)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for fam in "BCD":
        for n in range(1, args.max_n + 1):
            X = GroupType(fam, n)
            poset = closure_poset(X, with_eta=args.eta)
            (out / f"{X}.dot").write_text(poset_to_dot(poset))
            (out / f"{X}.json").write_text(json.dumps(poset_to_json(poset), indent=2, sort_keys=True) + "\n")
            print(f"{X}: {len(poset.nodes)} nodes, {len(poset.edges)} covering edges")
    return 0


if __name__ == "__main__":
    sys.exit(main())

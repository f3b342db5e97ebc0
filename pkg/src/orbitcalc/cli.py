"""Command-line front end.

    orbitcalc compute eta --source soOdd "[3^3 2^2]"
    orbitcalc dim C1 "[1,1]"
    orbitcalc criterion "C6:{3^3,2^2}"
    orbitcalc verify --identity lemma41 --family C --max-n 8
    orbitcalc search --family B --max-n 4
    orbitcalc hasse D2 --format dot

Exit codes: 0 success, 1 a must-hold identity failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import arthur
from .classical import (
    GroupType,
    collapse,
    expansion,
    is_special,
    is_type,
)
from .dimensions import dim_orbit
from .duality import eta, eta_alt
from .partitions import PartitionError, parse_partition, transpose
from .verification import (
    IDENTITIES,
    RANK_IDENTITIES,
    closure_poset,
    default_jobs,
    mixed_parity_examples,
    poset_to_dot,
    poset_to_json,
    run_identity,
    search_counterexamples,
)

ENV_CAP = "ORBITCALC_MAX_N"
DEFAULT_SWEEP_CAP = 12
DEFAULT_SINGLE_CAP = 30

_SOURCE_ALIASES = {
    "b": "B", "soodd": "B", "so_odd": "B", "so2n+1": "B",
    "c": "C", "sp": "C", "sp2n": "C",
    "d": "D", "soeven": "D", "so_even": "D", "so2n": "D",
}


class InputError(Exception):
    pass


def _cap(default: int) -> int:
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{ENV_CAP}={raw!r} is not an integer")


def _partition(text: str):
    try:
        p = parse_partition(text)
    except PartitionError as exc:
        raise InputError(str(exc))
    if sum(p) > _cap(DEFAULT_SINGLE_CAP):
        raise InputError(f"partition size {sum(p)} exceeds cap {_cap(DEFAULT_SINGLE_CAP)} (set {ENV_CAP})")
    return p


def _group(text: str) -> GroupType:
    try:
        return GroupType.parse(text)
    except ValueError as exc:
        raise InputError(str(exc))


def _param(text: str) -> arthur.ArthurPartitionData:
    try:
        psi = arthur.parse_parameter(text)
    except (PartitionError, ValueError) as exc:
        raise InputError(str(exc))
    if psi.N > _cap(DEFAULT_SINGLE_CAP):
        raise InputError(f"parameter size {psi.N} exceeds cap {_cap(DEFAULT_SINGLE_CAP)}")
    return psi


def _typed(p, X: GroupType):
    if not is_type(p, X):
        raise InputError(f"{p} is not a {X} partition")
    return p


# -- compute kinds ------------------------------------------------------------


def _c_transpose(a):
    p = _partition(a.partition)
    return {"input": list(p), "result": list(transpose(p))}


def _c_collapse(a):
    X, p = _group(a.group), _partition(a.partition)
    if sum(p) != X.size:
        raise InputError(f"{p} has size {sum(p)}, {X} needs {X.size}")
    return {"group": X.to_json(), "input": list(p), "result": list(collapse(p, X))}


def _c_expand(a):
    X = _group(a.group)
    p = _typed(_partition(a.partition), X)
    return {"group": X.to_json(), "input": list(p), "result": list(expansion(p, X))}


def _c_special(a):
    X = _group(a.group)
    p = _typed(_partition(a.partition), X)
    return {"group": X.to_json(), "input": list(p), "special": is_special(p, X)}


def _c_eta(a):
    fam = _SOURCE_ALIASES.get(a.source.strip().lower())
    if fam is None:
        raise InputError(f"bad --source {a.source!r} (expected B|C|D, soOdd, sp or soEven)")
    p = _partition(a.partition)
    N = sum(p)
    if (fam == "B") != (N % 2 == 1):
        raise InputError(f"{p} has size {N}, which does not fit source family {fam}")
    source = GroupType.for_size(fam, N)
    _typed(p, source)
    first, second = eta(p, source), eta_alt(p, source)
    return {
        "source": source.to_json(),
        "target": source.dual.to_json(),
        "input": list(p),
        "result": list(first),
        "routes": {"adjust_then_transpose": list(first), "transpose_then_adjust": list(second)},
        "routes_agree": first == second,
    }


def _c_dim(a):
    X = _group(a.group)
    p = _typed(_partition(a.partition), X)
    return {"group": X.to_json(), "input": list(p), "dim": dim_orbit(p, X)}


def _c_wavefront(a):
    psi = _param(a.param)
    return {**psi.to_json(), "wavefront": list(arthur.gl_wavefront(psi))}


def _c_bound(a):
    psi = _param(a.param)
    return {**psi.to_json(), "bound": list(arthur.bitorsor_bound(psi))}


def _c_construct(a):
    psi = _param(a.param)
    p1, n_star = arthur.p1_and_nstar(psi)
    return {
        **psi.to_json(),
        "p1": list(p1),
        "n_star": n_star,
        "union": list(arthur.constructed_union(psi)),
        "member": list(arthur.constructed_member_partition(psi)),
        "eta": list(arthur.eta_of(psi)),
    }


def _c_criterion(a):
    psi = _param(a.param)
    crit = arthur.check_criterion(psi)
    if psi.group.family in "BC":
        # collapse-form sides live on the transposed side; report them as orbits of G too
        lhs, rhs = transpose(crit.lhs), transpose(crit.rhs)
    else:
        lhs, rhs = crit.lhs, crit.rhs
    return {
        **psi.to_json(),
        "verdict": crit.verdict,
        "lhs": list(lhs),
        "rhs": list(rhs),
        "equation_lhs": list(crit.lhs),
        "equation_rhs": list(crit.rhs),
        "class": crit.tag,
    }


def _c_examples(a):
    return {"examples": mixed_parity_examples()}


COMPUTE_KINDS = {
    "transpose": (_c_transpose, ["partition"]),
    "collapse": (_c_collapse, ["group", "partition"]),
    "expand": (_c_expand, ["group", "partition"]),
    "special": (_c_special, ["group", "partition"]),
    "eta": (_c_eta, ["partition"]),
    "dim": (_c_dim, ["group", "partition"]),
    "wavefront": (_c_wavefront, ["param"]),
    "bound": (_c_bound, ["param"]),
    "construct": (_c_construct, ["param"]),
    "criterion": (_c_criterion, ["param"]),
    "examples": (_c_examples, []),
}


def _add_compute_parsers(sub) -> None:
    for kind, (fn, args) in COMPUTE_KINDS.items():
        sp = sub.add_parser(kind, help=f"compute {kind}")
        if kind == "eta":
            sp.add_argument("--source", required=True, help="side of the input: B|C|D (or soOdd, sp, soEven)")
        for name in args:
            sp.add_argument(name)
        sp.add_argument("--json", action="store_true", help="JSON output (the default)")
        sp.set_defaults(handler=fn)


# -- verify / search / hasse ----------------------------------------------------------


def _families(arg: str | None) -> tuple[str, ...]:
    if arg is None:
        return ("B", "C", "D")
    fams = tuple(dict.fromkeys(arg.upper().replace(",", "")))
    for f in fams:
        if f not in "BCD":
            raise InputError(f"bad family {f!r}")
    return fams


def _cmd_verify(a):
    fams = _families(a.family)
    jobs = a.jobs if a.jobs is not None else default_jobs()
    cap = _cap(DEFAULT_SWEEP_CAP)
    if a.identity in RANK_IDENTITIES and a.max_n > cap:
        raise InputError(f"--max-n {a.max_n} exceeds cap {cap} (set {ENV_CAP})")
    if a.identity not in RANK_IDENTITIES and a.max_size > 2 * cap + 1:
        raise InputError(f"--max-size {a.max_size} exceeds cap {2 * cap + 1} (set {ENV_CAP})")
    report = run_identity(a.identity, fams, max_n=a.max_n, max_size=a.max_size, min_n=a.min_n, jobs=jobs)
    return report.to_json(), (0 if report.ok else 1)


def _cmd_search(a):
    fam = _families(a.family)
    if len(fam) != 1:
        raise InputError("search takes exactly one family")
    cap = _cap(DEFAULT_SWEEP_CAP)
    if a.max_n > cap:
        raise InputError(f"--max-n {a.max_n} exceeds cap {cap} (set {ENV_CAP})")
    found = search_counterexamples(fam[0], a.max_n, a.min_n)
    return {"family": fam[0], "rank_range": [a.min_n, a.max_n], "count": len(found), "counterexamples": found}, 0


def _cmd_hasse(a):
    X = _group(a.group)
    cap = _cap(DEFAULT_SINGLE_CAP)
    if X.size > cap:
        raise InputError(f"{X} has partitions of size {X.size}, over the cap {cap} (set {ENV_CAP})")
    poset = closure_poset(X, with_eta=a.eta)
    if a.json or a.format == "json":
        return poset_to_json(poset), 0
    return poset_to_dot(poset), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitcalc", description="Partition calculus for nilpotent orbits of classical Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="single computations")
    _add_compute_parsers(compute.add_subparsers(dest="kind", required=True))
    # the compute kinds are also reachable directly, e.g. `orbitcalc dim C1 "[1,1]"`
    _add_compute_parsers(sub)

    v = sub.add_parser("verify", help="exhaustive identity sweep")
    v.add_argument("--identity", required=True, choices=IDENTITIES)
    v.add_argument("--family", help="B, C, D or a combination such as BC (default: all)")
    v.add_argument("--max-n", type=int, default=8, help="largest rank (rank-indexed identities)")
    v.add_argument("--min-n", type=int, default=0)
    v.add_argument("--max-size", type=int, default=14, help="largest partition size (size-indexed identities)")
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    v.add_argument("--json", action="store_true", help="JSON output (the default)")
    v.set_defaults(handler=_cmd_verify)

    s = sub.add_parser("search", help="list parameters where the constructed member misses the dual")
    s.add_argument("--family", required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--min-n", type=int, default=0)
    s.add_argument("--json", action="store_true", help="JSON output (the default)")
    s.set_defaults(handler=_cmd_search)

    h = sub.add_parser("hasse", help="closure poset as DOT or JSON")
    h.add_argument("group")
    h.add_argument("--format", choices=("dot", "json"), default="dot")
    h.add_argument("--json", action="store_true", help="same as --format json")
    h.add_argument("--eta", action="store_true", help="annotate nodes with their dual partition")
    h.set_defaults(handler=_cmd_hasse)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except InputError as exc:
        print(f"orbitcalc: error: {exc}", file=sys.stderr)
        return 2
    payload, code = result if isinstance(result, tuple) else (result, 0)
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

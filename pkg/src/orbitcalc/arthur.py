"""Partition data of local Arthur parameters and the constructed-member criteria.

A parameter over ``G`` (``C`` = Sp(2n), ``B`` = SO(2n+1), ``D`` = SO(2n)) is
reduced to the multiset ``{(a_i, b_i)}`` with ``p(psi) = [b_1^{a_1} ... b_r^{a_r}]``,
a partition of type ``G.dual``.  Factors with equal ``b`` are merged.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .classical import (
    GroupType,
    TypeMismatchError,
    collapse,
    enumerate_type_partitions,
    expansion,
    has_family_parity,
)
from .duality import eta
from .partitions import (
    Partition,
    PartitionError,
    dec_min,
    dominance_leq,
    inc_max,
    parse_partition,
    transpose,
    union,
)


@dataclass(frozen=True)
class ArthurPartitionData:
    """``group`` is the group ``G_n`` itself; ``factors`` are ``(a, b)`` pairs with ``b`` strictly decreasing."""

    group: GroupType
    factors: tuple[tuple[int, int], ...]

    @property
    def p_psi(self) -> Partition:
        return Partition.from_exponents((b, a) for a, b in self.factors)

    @property
    def N(self) -> int:
        return sum(a * b for a, b in self.factors)

    def __str__(self) -> str:
        body = ",".join(f"{b}^{a}" if a > 1 else str(b) for a, b in self.factors)
        return f"{self.group}:{{{body}}}"

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "p_psi": list(self.p_psi)}


def validate(group: GroupType, factors) -> ArthurPartitionData:
    """Check and canonicalize ``(a, b)`` factors for a parameter over ``group``."""
    merged: dict[int, int] = {}
    for a, b in factors:
        if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, int) or not isinstance(b, int):
            raise PartitionError(f"factor {(a, b)} has non-integer entries")
        if a <= 0 or b <= 0:
            raise PartitionError(f"factor {(a, b)} has non-positive entries")
        merged[b] = merged.get(b, 0) + a
    canon = tuple((merged[b], b) for b in sorted(merged, reverse=True))
    psi = ArthurPartitionData(group, canon)
    dual = group.dual
    if psi.N != dual.size:
        raise TypeMismatchError(f"p(psi) = {psi.p_psi} has size {psi.N}; {group} needs {dual.size}")
    if not has_family_parity(psi.p_psi, dual.family):
        kind = "symplectic" if dual.family == "C" else "orthogonal"
        raise TypeMismatchError(f"p(psi) = {psi.p_psi} is not {kind}, as {group} requires")
    return psi


def from_partition(group: GroupType, p: Partition) -> ArthurPartitionData:
    return validate(group, [(a, b) for b, a in p.multiplicities().items()])


def parse_parameter(text: str) -> ArthurPartitionData:
    """Parse ``C6:{3^3,2^2}`` (or ``C6:[3,3,3,2,2]``)."""
    m = re.fullmatch(r"\s*([BCDbcd]\s*\d+)\s*:\s*(.*?)\s*", text)
    if m is None:
        raise PartitionError(f"bad parameter {text!r} (expected e.g. C6:{{3^3,2^2}})")
    group = GroupType.parse(m.group(1))
    body = m.group(2)
    if body.startswith("{") and body.endswith("}"):
        body = "[" + body[1:-1] + "]"
    return from_partition(group, parse_partition(body))


# -- basic invariants --------------------------------------------------------------


def p_psi(psi: ArthurPartitionData) -> Partition:
    return psi.p_psi


def gl_wavefront(psi: ArthurPartitionData) -> Partition:
    """Wavefront partition of the general-linear representation attached to ``psi``."""
    return transpose(psi.p_psi)


def is_tempered(psi: ArthurPartitionData) -> bool:
    return all(b == 1 for _, b in psi.factors)


@dataclass(frozen=True)
class EndoscopicSplit:
    psi1: ArthurPartitionData  # odd b
    psi2: ArthurPartitionData  # even b

    @property
    def n1(self) -> int:
        return self.psi1.group.rank

    @property
    def n2(self) -> int:
        return self.psi2.group.rank


def split_IJ(psi: ArthurPartitionData) -> EndoscopicSplit:
    """Split into odd-``b`` and even-``b`` factors over the endoscopic pair.

    Sp(2n) -> Sp(2n1) x SO(2n2); SO(2n+1) -> SO(2n1+1) x SO(2n2+1);
    SO(2n) -> SO(2n1) x SO(2n2).
    """
    odd = tuple(f for f in psi.factors if f[1] % 2)
    even = tuple(f for f in psi.factors if f[1] % 2 == 0)
    n_odd = sum(a * b for a, b in odd)
    n_even = sum(a * b for a, b in even)
    fam = psi.group.family
    if fam == "C":
        if n_odd % 2 == 0:
            raise AssertionError(f"{psi}: odd-b part has even size {n_odd}")
        g1, g2 = GroupType("C", (n_odd - 1) // 2), GroupType("D", n_even // 2)
    elif fam == "B":
        g1, g2 = GroupType("B", n_odd // 2), GroupType("B", n_even // 2)
    else:
        g1, g2 = GroupType("D", n_odd // 2), GroupType("D", n_even // 2)
    split = EndoscopicSplit(validate(g1, odd), validate(g2, even))
    assert split.n1 + split.n2 == psi.group.rank
    return split


def bitorsor_bound(psi: ArthurPartitionData) -> Partition:
    """Conjectured upper bound for wavefront partitions on the twisted side."""
    G = psi.group
    pt = transpose(psi.p_psi)
    if G.family == "C":
        return collapse(dec_min(pt), G) if pt else pt
    return collapse(pt, G.dual)


# -- the constructed member -----------------------------------------------------


def p1_and_nstar(psi: ArthurPartitionData) -> tuple[Partition, int]:
    halves = Partition.from_exponents((b // 2, a) for a, b in psi.factors)
    n_star = sum(a for a, b in psi.factors if b % 2) // 2
    return transpose(halves), n_star


def constructed_union(psi: ArthurPartitionData) -> Partition:
    """``[p1 p1 (2n*)]``, ``[p1 p1 (2n*+1)]`` or ``[p1 p1 (2n*-1) 1]`` by family, non-positive parts dropped."""
    p1, n_star = p1_and_nstar(psi)
    fam = psi.group.family
    if fam == "C":
        extra = [2 * n_star]
    elif fam == "B":
        extra = [2 * n_star + 1]
    else:
        # with n* = 0 both the (2n*-1) and the trailing 1 are omitted
        extra = [2 * n_star - 1, 1] if n_star > 0 else []
    return union(p1, p1, extra)


def constructed_member_partition(psi: ArthurPartitionData) -> Partition:
    return expansion(constructed_union(psi), psi.group)


def eta_of(psi: ArthurPartitionData) -> Partition:
    return eta(psi.p_psi, psi.group.dual)


@dataclass(frozen=True)
class CriterionResult:
    psi: ArthurPartitionData
    form: str  # "collapse" or "expansion"
    lhs: Partition
    rhs: Partition
    verdict: bool
    tag: str

    def to_json(self) -> dict:
        return {
            "psi": self.psi.to_json(),
            "form": self.form,
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
            "verdict": self.verdict,
            "class": self.tag,
        }


def check_criterion(psi: ArthurPartitionData) -> CriterionResult:
    """Evaluate both sides of the family's criterion equation.

    C:  ([p1 p1 (2n*)]^t)_C      vs  (p(psi)^-)_C
    B:  ([p1 p1 (2n*+1)]^t)_B    vs  (p(psi)^+)_B
    D:  [p1 p1 (2n*-1) 1]^D      vs  (p(psi)^t)_D
    """
    G = psi.group
    U = constructed_union(psi)
    p = psi.p_psi
    if G.family == "C":
        lhs, rhs = collapse(transpose(U), G), collapse(dec_min(p), G)
    elif G.family == "B":
        lhs, rhs = collapse(transpose(U), G), collapse(inc_max(p), G)
    else:
        lhs, rhs = expansion(U, G), collapse(transpose(p), G)
    return CriterionResult(psi, "collapse", lhs, rhs, lhs == rhs, sufficient_condition_class(psi))


def check_expansion_form(psi: ArthurPartitionData) -> CriterionResult:
    """Constructed member partition against the Barbasch-Vogan dual of ``p(psi)``."""
    lhs = constructed_member_partition(psi)
    rhs = eta_of(psi)
    return CriterionResult(psi, "expansion", lhs, rhs, lhs == rhs, sufficient_condition_class(psi))


def check_prop58(psi: ArthurPartitionData):
    """Constructed member partition is dominated by the dual of ``p(psi)``.

    Proven for B and C; for D the verdict is computed and flagged report-only.
    """
    from .dimensions import VerificationItem

    lhs = constructed_member_partition(psi)
    rhs = eta_of(psi)
    return VerificationItem(
        name="prop58",
        case=psi.to_json(),
        lhs=lhs,
        rhs=rhs,
        passed=dominance_leq(lhs, rhs),
        details={"report_only": psi.group.family == "D"},
    )


def sufficient_condition_class(psi: ArthurPartitionData) -> str:
    """Which of the known sufficient conditions for the criterion ``psi`` meets, or ``"none"``."""
    bs = [b for _, b in psi.factors]
    fam = psi.group.family
    if not bs:
        return "none"
    if fam == "C":
        a_r, b_r = psi.factors[-1]
        if a_r == 1 and b_r == 1 and all(b % 2 == 0 for b in bs[:-1]):
            return "C-i"
        if all(b % 2 for b in bs):
            return "C-ii"
    elif fam == "B":
        a_1, b_1 = psi.factors[0]
        if b_1 % 2 == 0 and a_1 == 1 and all(b % 2 for b in bs[1:]):
            return "B-i"
        if all(b % 2 == 0 for b in bs):
            return "B-ii"
    elif len({b % 2 for b in bs}) == 1:
        return "D-same-parity"
    return "none"


def enumerate_parameters(group: GroupType) -> Iterator[ArthurPartitionData]:
    """Every parameter over ``group``, by decreasing ``p(psi)`` in lexicographic order."""
    dual = group.dual
    for p in enumerate_type_partitions(dual.size, dual):
        yield from_partition(group, p)

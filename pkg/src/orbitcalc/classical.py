"""Partitions attached to the classical Lie algebras so(2n+1), sp(2n), so(2n).

Collapse follows the Collingwood-McGovern box-moving recipe; expansion and
specialness are derived from it through transposition.  Brute-force
counterparts (``collapse_oracle``, ``expansion_oracle``) search the whole
type-restricted dominance poset and are kept independent of the recipes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .partitions import (
    Partition,
    PartitionError,
    dominance_leq,
    partitions_of,
    transpose,
)

Family = Literal["B", "C", "D"]
FAMILIES: tuple[Family, ...] = ("B", "C", "D")

_DUAL_FAMILY = {"B": "C", "C": "B", "D": "D"}


class TypeMismatchError(PartitionError):
    """A partition does not belong to the group type an operation needs."""


class OracleTieError(PartitionError):
    """A brute-force search found several maximal/minimal candidates."""


@dataclass(frozen=True, order=True)
class GroupType:
    """``B`` = so(2n+1), ``C`` = sp(2n), ``D`` = so(2n)."""

    family: Family
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 0:
            raise ValueError(f"negative rank {self.rank}")

    @property
    def size(self) -> int:
        """Size of the partitions labelling nilpotent orbits of this Lie algebra."""
        return 2 * self.rank + 1 if self.family == "B" else 2 * self.rank

    @property
    def dual(self) -> "GroupType":
        return GroupType(_DUAL_FAMILY[self.family], self.rank)

    @property
    def dim(self) -> int:
        n = self.rank
        return 2 * n * n - n if self.family == "D" else 2 * n * n + n

    @property
    def orthogonal(self) -> bool:
        return self.family != "C"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank}

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        m = re.fullmatch(r"\s*([BCDbcd])\s*(\d+)\s*", text)
        if m is None:
            raise ValueError(f"bad group type {text!r} (expected e.g. B2, C5, D4)")
        return cls(m.group(1).upper(), int(m.group(2)))

    @classmethod
    def for_size(cls, family: Family, size: int) -> "GroupType":
        if family == "B":
            if size % 2 == 0:
                raise TypeMismatchError(f"type B needs odd size, got {size}")
            return cls("B", (size - 1) // 2)
        if size % 2:
            raise TypeMismatchError(f"type {family} needs even size, got {size}")
        return cls(family, size // 2)


def dim_group(X: GroupType) -> int:
    return X.dim


# -- type predicates -------------------------------------------------------------


def is_orthogonal(p: Partition) -> bool:
    """Every even part occurs with even multiplicity."""
    return all(m % 2 == 0 for b, m in p.multiplicities().items() if b % 2 == 0)


def is_symplectic(p: Partition) -> bool:
    """Every odd part occurs with even multiplicity."""
    return all(m % 2 == 0 for b, m in p.multiplicities().items() if b % 2 == 1)


def has_family_parity(p: Partition, family: Family) -> bool:
    return is_symplectic(p) if family == "C" else is_orthogonal(p)


def is_type(p: Partition, X: GroupType) -> bool:
    return sum(p) == X.size and has_family_parity(p, X.family)


def is_very_even(p: Partition) -> bool:
    """Nonempty with all parts even; in type D such a partition labels two orbits."""
    return bool(p) and all(x % 2 == 0 for x in p)


def _check_size(p: Partition, X: GroupType) -> None:
    if sum(p) != X.size:
        raise TypeMismatchError(f"{p} has size {sum(p)}, but {X} needs size {X.size}")


def _check_type(p: Partition, X: GroupType) -> None:
    _check_size(p, X)
    if not has_family_parity(p, X.family):
        kind = "symplectic" if X.family == "C" else "orthogonal"
        raise TypeMismatchError(f"{p} is not {kind}, so it is not a {X} partition")


@dataclass(frozen=True)
class OrbitPartition:
    """A nilpotent orbit: its partition plus the I/II label of a very even type-D orbit."""

    partition: Partition
    group: GroupType
    very_even_label: str | None = None

    def __post_init__(self):
        _check_type(self.partition, self.group)
        needs_label = self.group.family == "D" and is_very_even(self.partition)
        if needs_label and self.very_even_label not in ("I", "II"):
            raise TypeMismatchError(f"very even {self.partition} needs label I or II")
        if not needs_label and self.very_even_label is not None:
            raise TypeMismatchError(f"{self.partition} in {self.group} takes no label")

    def __str__(self) -> str:
        label = f"_{self.very_even_label}" if self.very_even_label else ""
        return f"{self.partition}{label}"


def orbits_of(p: Partition, X: GroupType) -> list[OrbitPartition]:
    """The one or two orbits with partition ``p`` in type ``X``."""
    if X.family == "D" and is_very_even(p):
        return [OrbitPartition(p, X, "I"), OrbitPartition(p, X, "II")]
    return [OrbitPartition(p, X)]


# -- collapse / expansion / duality ---------------------------------------------


def collapse(p: Partition, X: GroupType) -> Partition:
    """Largest type-``X`` partition dominated by ``p``.

    Repeatedly take the largest part ``q`` of the wrong parity that occurs an
    odd number of times, lower its last occurrence to ``q - 1`` and raise the
    first later part smaller than ``q - 1`` by one (a new part 1 if none).
    """
    _check_size(p, X)
    bad_parity = 1 if X.family == "C" else 0
    parts = list(p)
    while True:
        mult = {}
        for x in parts:
            mult[x] = mult.get(x, 0) + 1
        bad = [b for b, m in mult.items() if b % 2 == bad_parity and m % 2 == 1]
        if not bad:
            return Partition(parts)
        q = max(bad)
        i = len(parts) - 1 - parts[::-1].index(q)
        parts[i] = q - 1
        for j in range(i + 1, len(parts)):
            if parts[j] < q - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts = sorted((x for x in parts if x), reverse=True)


def spaltenstein_dual(p: Partition, X: GroupType) -> Partition:
    """``d_X(p) = collapse(transpose(p), X)``."""
    _check_type(p, X)
    return collapse(transpose(p), X)


def is_special(p: Partition, X: GroupType) -> bool:
    """Fixed by the double Spaltenstein dual."""
    return spaltenstein_dual(spaltenstein_dual(p, X), X) == p


def expansion(p: Partition, X: GroupType) -> Partition:
    """Smallest special type-``X`` partition dominating the type-``X`` partition ``p``.

    Computed as the transpose of a collapse of ``p^t``: for B and C the
    collapse is in the same type, for D it is the symplectic collapse (a type-D
    partition is special exactly when its transpose is symplectic).

    Inputs that are not of type ``X`` are rejected: for those the set of
    special partitions above ``p`` can have several minimal elements.
    """
    _check_type(p, X)
    target = X if X.family != "D" else GroupType("C", X.rank)
    return transpose(collapse(transpose(p), target))


# -- enumeration and brute-force oracles --------------------------------------


@lru_cache(maxsize=None)
def _type_partitions(size: int, family: Family) -> tuple[Partition, ...]:
    return tuple(q for q in partitions_of(size) if has_family_parity(q, family))


def enumerate_type_partitions(N: int, X: GroupType) -> list[Partition]:
    """Every type-``X`` partition of ``N``, lexicographically decreasing."""
    if N != X.size:
        raise TypeMismatchError(f"{X} partitions have size {X.size}, not {N}")
    return list(_type_partitions(N, X.family))


@lru_cache(maxsize=None)
def _special_partitions(X: GroupType) -> tuple[Partition, ...]:
    # specialness via the brute-force collapse, so the expansion oracle never
    # touches the box-moving recipe
    def dual(q):
        return collapse_oracle(transpose(q), X)

    return tuple(q for q in _type_partitions(X.size, X.family) if dual(dual(q)) == q)


def collapse_oracle(p: Partition, X: GroupType) -> Partition:
    """Brute force: the unique dominance-maximum of ``{q of type X : q <= p}``."""
    _check_size(p, X)
    below = [q for q in _type_partitions(X.size, X.family) if dominance_leq(q, p)]
    if not below:
        raise TypeMismatchError(f"no {X} partition lies below {p}")
    tops = [q for q in below if all(dominance_leq(r, q) for r in below)]
    if len(tops) != 1:
        raise OracleTieError(f"collapse of {p} in {X}: candidates {tops}")
    return tops[0]


def expansion_candidates(p: Partition, X: GroupType) -> list[Partition]:
    """All dominance-minimal special type-``X`` partitions above ``p`` (any ``p`` of the right size)."""
    _check_size(p, X)
    above = [q for q in _special_partitions(X) if dominance_leq(p, q)]
    return [q for q in above if not any(r != q and dominance_leq(r, q) for r in above)]


def expansion_oracle(p: Partition, X: GroupType) -> Partition:
    """Brute force: the unique dominance-minimum of the special type-``X`` partitions above ``p``."""
    _check_type(p, X)
    above = [q for q in _special_partitions(X) if dominance_leq(p, q)]
    bottoms = [q for q in above if all(dominance_leq(q, r) for r in above)]
    if len(bottoms) != 1:
        raise OracleTieError(f"expansion of {p} in {X}: candidates {bottoms}")
    return bottoms[0]


def group_types_for_size(N: int) -> list[GroupType]:
    """The classical types whose orbit partitions have size ``N``."""
    if N % 2:
        return [GroupType("B", (N - 1) // 2)]
    return [GroupType("C", N // 2), GroupType("D", N // 2)]

"""Integer partitions and the elementary operations on them.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers.  Every operation returns a new partition in canonical form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Parts are kept within signed 64-bit range so that JSON consumers in other
# languages can read every emitted value.
MAX_PART = 2**63 - 1


class PartitionError(ValueError):
    """Raised for malformed partitions or operations outside their domain."""


class SizeMismatchError(PartitionError):
    """Raised when two partitions of different sizes are compared."""


class Partition(tuple):
    """A weakly decreasing sequence of positive integers.

    >>> Partition([3, 3, 2])
    Partition([3, 3, 2])
    >>> Partition.from_exponents([(3, 2), (2, 3)])
    Partition([3, 3, 2, 2, 2])
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        prev = None
        for x in parts:
            if isinstance(x, bool) or not isinstance(x, int):
                raise PartitionError(f"part {x!r} is not an integer")
            if x <= 0:
                raise PartitionError(f"part {x} is not positive")
            if x > MAX_PART:
                raise PartitionError(f"part {x} exceeds {MAX_PART}")
            if prev is not None and x > prev:
                raise PartitionError(f"parts {list(parts)} are not weakly decreasing")
            prev = x
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort and drop zeros before building, for unordered input."""
        return cls(sorted((x for x in parts if x != 0), reverse=True))

    @classmethod
    def from_exponents(cls, pairs: Iterable[tuple[int, int]]) -> "Partition":
        """Build ``[b_1^{a_1} b_2^{a_2} ...]`` from ``(b, a)`` pairs (part, multiplicity)."""
        parts: list[int] = []
        for b, a in pairs:
            if a < 0:
                raise PartitionError(f"negative multiplicity {a} for part {b}")
            parts.extend([b] * a)
        return cls.from_parts(parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    @property
    def size(self) -> int:
        return sum(self)

    def multiplicity(self, part: int) -> int:
        return self.count(part)

    def multiplicities(self) -> dict[int, int]:
        """Map each distinct part to its multiplicity, largest part first."""
        out: dict[int, int] = {}
        for x in self:
            out[x] = out.get(x, 0) + 1
        return out

    def exponent_str(self) -> str:
        """Exponent notation, e.g. ``[3^3 2^2]``."""
        chunks = [f"{b}^{a}" if a > 1 else str(b) for b, a in self.multiplicities().items()]
        return "[" + " ".join(chunks) + "]"

    def to_json(self) -> list[int]:
        return list(self)


# -- text syntax -------------------------------------------------------------

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``[3,3,2,2,2]`` or ``[3^2 2^3]`` (brackets optional, whitespace ignored)."""
    body = text.strip()
    if body.startswith("["):
        if not body.endswith("]"):
            raise PartitionError(f"unbalanced bracket in {text!r}")
        body = body[1:-1]
    # "3 ^ 2" is the same as "3^2"
    body = re.sub(r"\s*\^\s*", "^", body)
    tokens = [t for t in re.split(r"[\s,]+", body) if t]
    pairs = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise PartitionError(f"bad partition token {tok!r}")
        b = int(m.group(1))
        a = int(m.group(2)) if m.group(2) is not None else 1
        if b == 0:
            raise PartitionError(f"bad partition token {tok!r}: parts must be positive")
        pairs.append((b, a))
    parts = [b for b, a in pairs for _ in range(a)]
    if parts != sorted(parts, reverse=True):
        raise PartitionError(f"parts of {text!r} are not weakly decreasing")
    return Partition(parts)


def as_partition(p: Partition | Sequence[int] | str) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, str):
        return parse_partition(p)
    return Partition(p)


# -- statistics --------------------------------------------------------------


@dataclass(frozen=True)
class PartitionStats:
    """Column counts ``s`` (``s_i = #{j : p_j >= i}``) and part counts ``r`` (``r_i = #{j : p_j = i}``)."""

    s: tuple[int, ...]
    r: tuple[int, ...]


def stats(p: Partition) -> PartitionStats:
    s = transpose(p)
    r = tuple(s[i] - (s[i + 1] if i + 1 < len(s) else 0) for i in range(len(s)))
    return PartitionStats(s=tuple(s), r=r)


# -- core operations ---------------------------------------------------------


def transpose(p: Partition) -> Partition:
    if not p:
        return Partition()
    cols = []
    j = len(p)
    for i in range(1, p[0] + 1):
        while p[j - 1] < i:
            j -= 1
        cols.append(j)
    return Partition(cols)


def partial_sums(p: Sequence[int], length: int) -> list[int]:
    out, acc = [], 0
    for k in range(length):
        acc += p[k] if k < len(p) else 0
        out.append(acc)
    return out


def dominance_leq(p: Partition, q: Partition) -> bool:
    """True iff every prefix sum of ``p`` is at most the matching prefix sum of ``q``."""
    if sum(p) != sum(q):
        raise SizeMismatchError(f"cannot compare {p} (size {sum(p)}) with {q} (size {sum(q)})")
    sp = sq = 0
    for k in range(max(len(p), len(q))):
        sp += p[k] if k < len(p) else 0
        sq += q[k] if k < len(q) else 0
        if sp > sq:
            return False
    return True


def dominance_lt(p: Partition, q: Partition) -> bool:
    return p != q and dominance_leq(p, q)


def _require_nonempty(p: Partition, op: str) -> None:
    if not p:
        raise PartitionError(f"{op} is undefined on the empty partition")


def dec_min(p: Partition) -> Partition:
    """``p^-``: decrease the smallest part by one."""
    _require_nonempty(p, "dec_min")
    if p[-1] == 1:
        return Partition(p[:-1])
    return Partition(p[:-1] + (p[-1] - 1,))


def inc_max(p: Partition) -> Partition:
    """``p^+``: increase the largest part by one (the empty partition becomes ``[1]``)."""
    if not p:
        return Partition((1,))
    return Partition((p[0] + 1,) + p[1:])


def dec_max(p: Partition) -> Partition:
    """``p_-``: decrease the largest part by one, re-sorting."""
    _require_nonempty(p, "dec_max")
    return Partition.from_parts((p[0] - 1,) + p[1:])


def append_one(p: Partition) -> Partition:
    """``p_+``: append a part equal to one."""
    return Partition(tuple(p) + (1,))


def plus_minus(p: Partition) -> Partition:
    """``p^{+-}``: ``dec_min(inc_max(p))``."""
    _require_nonempty(p, "plus_minus")
    return dec_min(inc_max(p))


def union(*ps: Iterable[int]) -> Partition:
    """Multiset union of the parts of all arguments (zeros dropped)."""
    return Partition.from_parts(x for p in ps for x in p)


def pointwise_sum(*ps: Sequence[int]) -> Partition:
    """Part-by-part sum, padding shorter arguments with zeros."""
    width = max((len(p) for p in ps), default=0)
    out = [0] * width
    for p in ps:
        for i, x in enumerate(p):
            out[i] += x
    return Partition.from_parts(out)


def rectangle(part: int, mult: int) -> Partition:
    """``[part^mult]``."""
    if part == 0 or mult == 0:
        return Partition()
    return Partition((part,) * mult)


# -- enumeration -------------------------------------------------------------


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise PartitionError(f"cannot partition negative number {n}")
    if max_part is None:
        max_part = n
    yield from (Partition(t) for t in _partitions(n, max_part))


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest

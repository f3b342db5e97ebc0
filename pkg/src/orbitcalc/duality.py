"""Barbasch-Vogan duality between partitions of a classical group and of its dual.

``source`` is always the type of the *input* partition (the dual-group side);
the result is a partition of type ``source.dual``:

    B(n) -> C(n)    odd orthogonal of 2n+1  ->  symplectic of 2n
    C(n) -> B(n)    symplectic of 2n        ->  odd orthogonal of 2n+1
    D(n) -> D(n)    even orthogonal of 2n   ->  even orthogonal of 2n
"""

from __future__ import annotations

from .classical import (
    GroupType,
    TypeMismatchError,
    collapse,
    is_orthogonal,
    is_symplectic,
    is_type,
)
from .partitions import Partition, dec_min, inc_max, plus_minus, transpose

_CASE = {"B": "(i) odd orthogonal -> symplectic",
         "C": "(ii) symplectic -> odd orthogonal",
         "D": "(iii) even orthogonal -> even orthogonal"}


def _check_source(p: Partition, source: GroupType) -> None:
    if not is_type(p, source):
        raise TypeMismatchError(
            f"duality case {_CASE[source.family]} needs a {source} partition "
            f"of size {source.size}; got {p}"
        )


def eta(p: Partition, source: GroupType) -> Partition:
    """Barbasch-Vogan dual, adjusting before collapsing."""
    _check_source(p, source)
    n = source.rank
    if source.family == "B":
        return transpose(collapse(dec_min(p), GroupType("C", n)))
    if source.family == "C":
        return transpose(collapse(inc_max(p), GroupType("B", n)))
    return collapse(transpose(p), GroupType("D", n))


def eta_alt(p: Partition, source: GroupType) -> Partition:
    """Barbasch-Vogan dual by the transpose-first route.

    For type D the second route is ``((p^{+-})_C)^t``.
    """
    _check_source(p, source)
    n = source.rank
    if source.family == "B":
        return collapse(dec_min(transpose(p)), GroupType("C", n))
    if source.family == "C":
        return collapse(inc_max(transpose(p)), GroupType("B", n))
    if not p:
        return p
    return transpose(collapse(plus_minus(p), GroupType("C", n)))


def achar_identity_check(p: Partition) -> bool:
    """``(p^t)_D == ((p^{+-})_C)^t`` for ``p`` of even size that is orthogonal or has symplectic transpose."""
    if sum(p) % 2:
        raise TypeMismatchError(f"{p} has odd size {sum(p)}")
    if not (is_orthogonal(p) or is_symplectic(transpose(p))):
        raise TypeMismatchError(f"{p} is neither orthogonal nor has a symplectic transpose")
    if not p:
        return True
    n = sum(p) // 2
    return collapse(transpose(p), GroupType("D", n)) == transpose(
        collapse(plus_minus(p), GroupType("C", n))
    )

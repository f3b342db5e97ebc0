"""Dimensions of nilpotent orbits and the two dimension identities for Arthur parameters."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .classical import GroupType, TypeMismatchError, collapse, dim_group, is_type
from .duality import eta
from .partitions import Partition, stats, transpose


class DimensionError(ArithmeticError):
    """The orbit-dimension formula produced an odd or negative value."""


def dim_orbit(p: Partition, X: GroupType) -> int:
    """Dimension of the nilpotent orbit with partition ``p`` in the Lie algebra of ``X``.

    With ``s_i = #{j : p_j >= i}`` and ``r_i = #{j : p_j = i}``::

        C:  2k^2 + k - sum(s_i^2)/2 - sum_{i odd}(r_i)/2
        B:  2k^2 + k - sum(s_i^2)/2 + sum_{i odd}(r_i)/2
        D:  2k^2 - k - sum(s_i^2)/2 + sum_{i odd}(r_i)/2

    evaluated in doubled integers.
    """
    if not is_type(p, X):
        raise TypeMismatchError(f"{p} is not a {X} partition")
    k = X.rank
    st = stats(p)
    sq = sum(x * x for x in st.s)
    odd_r = sum(st.r[i - 1] for i in range(1, len(st.r) + 1, 2))
    if X.family == "C":
        twice = 2 * (2 * k * k + k) - sq - odd_r
    elif X.family == "B":
        twice = 2 * (2 * k * k + k) - sq + odd_r
    else:
        twice = 2 * (2 * k * k - k) - sq + odd_r
    if twice % 4 or twice < 0:
        raise DimensionError(f"dim formula gave {twice}/2 for {p} in {X}")
    return twice // 2


@dataclass
class VerificationItem:
    """One evaluated instance of an identity or inequality."""

    name: str
    case: dict[str, Any]
    lhs: Any
    rhs: Any
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, (Partition, tuple)):
                return list(v)
            return v

        return {
            "name": self.name,
            "case": self.case,
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "passed": self.passed,
            **({"details": {k: enc(v) for k, v in self.details.items()}} if self.details else {}),
        }


def verify_lemma41(psi) -> VerificationItem:
    """Codimension of the dual orbit equals the summed codimensions over the endoscopic split.

    ``dim g - dim eta(p(psi))`` against, for each half ``psi^k`` of the odd/even
    split, ``dim g_k^ - dim (p(psi^k)^t)_{G_k^}``, where ``G_k^`` is the dual of
    the k-th endoscopic factor.
    """
    from .arthur import split_IJ

    G = psi.group
    p = psi.p_psi
    dual_orbit = eta(p, G.dual)
    lhs = dim_group(G) - dim_orbit(dual_orbit, G)
    split = split_IJ(psi)
    rhs = 0
    terms = []
    for half in (split.psi1, split.psi2):
        Gk = half.group.dual
        bound = collapse(transpose(half.p_psi), Gk)
        term = dim_group(Gk) - dim_orbit(bound, Gk)
        terms.append({"group": str(Gk), "partition": list(bound), "codim": term})
        rhs += term
    return VerificationItem(
        name="lemma41",
        case=psi.to_json(),
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
        details={"eta": dual_orbit, "terms": terms},
    )


def verify_prop42(p: Partition, source: GroupType) -> VerificationItem:
    """``dim_g eta(p) == dim_{g^} (p^t)_{G^}`` with ``G^ = source``."""
    image = eta(p, source)
    bound = collapse(transpose(p), source)
    lhs = dim_orbit(image, source.dual)
    rhs = dim_orbit(bound, source)
    return VerificationItem(
        name="prop42",
        case={"source": source.to_json(), "p": list(p)},
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
        details={"eta": image, "collapse_of_transpose": bound},
    )

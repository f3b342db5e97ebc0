import pytest
from hypothesis import given, settings, strategies as st

from orbitcalc.classical import (
    GroupType,
    OracleTieError,
    TypeMismatchError,
    collapse,
    collapse_oracle,
    enumerate_type_partitions,
    expansion,
    expansion_candidates,
    expansion_oracle,
    group_types_for_size,
    is_special,
    is_type,
    orbits_of,
    spaltenstein_dual,
)
from orbitcalc.partitions import Partition, dominance_leq, partitions_of, transpose

from oracles import max_below, parity_ok, typed

B, C, D = (lambda n, f=f: GroupType(f, n) for f in "BCD")


def test_group_type_basics():
    assert (B(2).size, C(5).size, D(4).size) == (5, 10, 8)
    assert (B(3).dual, C(3).dual, D(3).dual) == (C(3), B(3), D(3))
    assert (B(2).dim, C(2).dim, D(2).dim) == (10, 10, 6)
    assert GroupType.parse(" c5 ") == C(5)
    assert str(D(4)) == "D4"
    assert C(5).to_json() == {"family": "C", "rank": 5}
    with pytest.raises(ValueError):
        GroupType.parse("E6")
    with pytest.raises(TypeMismatchError):
        GroupType.for_size("B", 4)


def test_collapse_examples():
    assert collapse(Partition([5, 3, 2]), C(5)) == (4, 4, 2)
    assert collapse(Partition([4, 2, 2, 1]), B(4)) == (3, 3, 1, 1, 1)
    assert collapse(Partition([2, 2, 2, 2]), D(4)) == (2, 2, 2, 2)
    assert collapse(Partition([6]), D(3)) == (5, 1)


def test_collapse_size_mismatch():
    with pytest.raises(TypeMismatchError):
        collapse(Partition([3, 2]), C(3))


@pytest.mark.parametrize("N", range(0, 13))
def test_collapse_matches_reference_everywhere(N):
    for X in group_types_for_size(N):
        for p in partitions_of(N):
            got = collapse(p, X)
            assert got == max_below(tuple(p), X.family), (p, X)
            assert got == collapse_oracle(p, X)


@given(st.lists(st.integers(1, 7), max_size=7).map(Partition.from_parts))
def test_collapse_is_type_and_below(p):
    for X in group_types_for_size(sum(p)):
        q = collapse(p, X)
        assert is_type(q, X)
        assert dominance_leq(q, p)
        assert collapse(q, X) == q


@pytest.mark.parametrize("X", [C(2), B(2), D(2), C(3), B(3), D(4)])
def test_specialness_brute_force(X):
    specials = {p for p in typed(X.size, X.family)
                if max_below(tuple(transpose(Partition(max_below(transpose(Partition(p)), X.family)))), X.family) == p}
    got = {tuple(p) for p in enumerate_type_partitions(X.size, X) if is_special(p, X)}
    assert got == specials


def test_special_examples():
    assert is_special(Partition([3, 1, 1]), B(2))
    assert not is_special(Partition([2, 2, 1]), B(2))
    assert not is_special(Partition([2, 1, 1]), C(2))
    assert is_special(Partition([2, 2]), C(2))


@pytest.mark.parametrize("N", range(1, 13))
def test_special_characterization(N):
    # B: transpose orthogonal; C and D: transpose symplectic
    for X in group_types_for_size(N):
        want = "B" if X.family == "B" else "C"
        for p in enumerate_type_partitions(N, X):
            assert is_special(p, X) == parity_ok(tuple(transpose(p)), want)


@pytest.mark.parametrize("N", range(1, 13))
def test_expansion_matches_oracle(N):
    for X in group_types_for_size(N):
        for p in enumerate_type_partitions(N, X):
            e = expansion(p, X)
            assert e == expansion_oracle(p, X)
            assert is_special(e, X) and dominance_leq(p, e)
            if is_special(p, X):
                assert e == p


def test_expansion_rejects_untyped():
    with pytest.raises(TypeMismatchError):
        expansion(Partition([3, 2, 1]), C(3))


def test_non_type_inputs_can_tie():
    ties = [p for p in partitions_of(8) if len(expansion_candidates(p, D(4))) > 1]
    assert ties
    assert not any(is_type(p, D(4)) for p in ties)
    assert OracleTieError.__mro__[1].__name__ == "PartitionError"


def test_spaltenstein_dual_is_order_reversing_on_examples():
    X = C(3)
    ps = enumerate_type_partitions(6, X)
    for p in ps:
        for q in ps:
            if dominance_leq(p, q):
                assert dominance_leq(spaltenstein_dual(q, X), spaltenstein_dual(p, X))


def test_very_even_orbits():
    assert [o.very_even_label for o in orbits_of(Partition([2, 2]), D(2))] == ["I", "II"]
    assert [o.very_even_label for o in orbits_of(Partition([3, 1]), D(2))] == [None]
    assert len(orbits_of(Partition([2, 2]), C(2))) == 1

import pytest

from orbitcalc.arthur import (
    bitorsor_bound,
    check_criterion,
    check_expansion_form,
    check_prop58,
    constructed_member_partition,
    constructed_union,
    enumerate_parameters,
    eta_of,
    from_partition,
    gl_wavefront,
    is_tempered,
    p1_and_nstar,
    parse_parameter,
    split_IJ,
    sufficient_condition_class,
    validate,
)
from orbitcalc.classical import GroupType, TypeMismatchError, is_special, is_type
from orbitcalc.partitions import Partition, PartitionError, transpose


def test_parse_and_format():
    psi = parse_parameter("C6:{3^3,2^2}")
    assert psi.group == GroupType("C", 6)
    assert psi.p_psi == (3, 3, 3, 2, 2)
    assert psi.factors == ((3, 3), (2, 2))
    assert str(psi) == "C6:{3^3,2^2}"
    assert psi.to_json() == {"group": {"family": "C", "rank": 6}, "p_psi": [3, 3, 3, 2, 2]}
    assert parse_parameter("C6:[3,3,3,2,2]") == psi
    assert parse_parameter(str(psi)) == psi


def test_validate_merges_equal_b():
    psi = validate(GroupType("C", 1), [(1, 1), (2, 1)])
    assert psi.factors == ((3, 1),)
    assert is_tempered(psi)


@pytest.mark.parametrize(
    "text",
    ["C6:{3^3,2}", "C2:{2,1,1,1}", "B2:{3,1}", "D2:{2,1,1}", "X2:{1}", "C6"],
)
def test_invalid_parameters(text):
    with pytest.raises((PartitionError, ValueError)):
        parse_parameter(text)


def test_type_mismatch_is_reported():
    with pytest.raises(TypeMismatchError, match="not orthogonal"):
        validate(GroupType("C", 2), [(1, 2), (3, 1)])


def test_wavefront():
    assert gl_wavefront(parse_parameter("C6:{3^3,2^2}")) == (5, 5, 3)


@pytest.mark.parametrize("X", [GroupType(f, n) for f in "BCD" for n in range(0, 8)], ids=str)
def test_split_sizes_and_types(X):
    for psi in enumerate_parameters(X):
        s = split_IJ(psi)
        assert s.n1 + s.n2 == X.rank
        assert all(b % 2 for _, b in s.psi1.factors)
        assert all(b % 2 == 0 for _, b in s.psi2.factors)
        expected = {"C": ("C", "D"), "B": ("B", "B"), "D": ("D", "D")}[X.family]
        assert (s.psi1.group.family, s.psi2.group.family) == expected


def test_constructed_examples():
    psi = parse_parameter("C6:{3^3,2^2}")
    p1, n_star = p1_and_nstar(psi)
    assert (p1, n_star) == ((5,), 1)
    assert constructed_union(psi) == (5, 5, 2)
    assert constructed_member_partition(psi) == (5, 5, 2)
    assert constructed_union(parse_parameter("D1:{1,1}")) == (1, 1)
    assert constructed_union(parse_parameter("D2:{2,2}")) == (2, 2)


@pytest.mark.parametrize(
    "text,member,dual,equal",
    [
        ("C6:{3^3,2^2}", (5, 5, 2), (5, 5, 2), True),
        ("C3:{2^2,1^3}", (2, 2, 2), (4, 2), False),
        ("B6:{3^2,2^3}", (5, 5, 3), (5, 5, 3), True),
        ("B4:{2^3,1^2}", (3, 3, 3), (5, 3, 1), False),
        ("D7:{3^3,2^2,1}", (5, 5, 3, 1), (5, 5, 3, 1), True),
        ("D5:{3,2^2,1^3}", (3, 3, 3, 1), (5, 3, 1, 1), False),
    ],
)
def test_mixed_parity_values(text, member, dual, equal):
    psi = parse_parameter(text)
    assert constructed_member_partition(psi) == member
    assert eta_of(psi) == dual
    assert check_expansion_form(psi).verdict is equal
    assert check_criterion(psi).verdict is equal
    assert check_prop58(psi).passed


def test_criterion_sides_symplectic_example():
    crit = check_criterion(parse_parameter("C6:{3^3,2^2}"))
    assert crit.verdict and crit.tag == "none"
    assert transpose(crit.lhs) == transpose(crit.rhs) == (5, 5, 2)
    assert crit.to_json()["class"] == "none"


@pytest.mark.parametrize("X", [GroupType(f, n) for f in "BCD" for n in range(0, 7)], ids=str)
def test_constructed_member_is_special(X):
    for psi in enumerate_parameters(X):
        m = constructed_member_partition(psi)
        assert is_type(m, X) and is_special(m, X)


@pytest.mark.parametrize("n", range(0, 8))
def test_bound_equals_dual_for_symplectic(n):
    # for Sp the bound coincides with eta, not its transpose
    for psi in enumerate_parameters(GroupType("C", n)):
        assert bitorsor_bound(psi) == eta_of(psi)


@pytest.mark.parametrize(
    "text,tag",
    [
        ("C2:{2,2,1}", "C-i"),
        ("C4:{3^3}", "C-ii"),
        ("B3:{4,1,1}", "B-i"),
        ("B2:{2,2}", "B-ii"),
        ("D3:{3,1^3}", "D-same-parity"),
        ("C6:{3^3,2^2}", "none"),
    ],
)
def test_sufficient_condition_tags(text, tag):
    psi = parse_parameter(text)
    assert sufficient_condition_class(psi) == tag
    if tag != "none":
        assert check_criterion(psi).verdict


def test_enumeration_counts():
    # p(psi) runs over orthogonal partitions of 2n+1 for Sp(2n)
    assert sum(1 for _ in enumerate_parameters(GroupType("C", 2))) == 4
    assert sum(1 for _ in enumerate_parameters(GroupType("B", 2))) == 4
    assert from_partition(GroupType("D", 0), Partition()).N == 0

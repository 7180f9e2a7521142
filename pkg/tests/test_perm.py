import pytest
from hypothesis import given, strategies as st

from primegraph.errors import DegreeMismatch
from primegraph.perm import Permutation, parse_cycles

from conftest import perm


def random_perms(max_degree=8):
    return st.integers(2, max_degree).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation)
    )


def perm_pairs():
    return st.integers(2, 8).flatmap(
        lambda n: st.tuples(
            st.permutations(list(range(1, n + 1))).map(Permutation),
            st.permutations(list(range(1, n + 1))).map(Permutation),
        )
    )


def test_construction_validates_bijection():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])
    with pytest.raises(ValueError):
        Permutation([0, 1, 2])


def test_compose_applies_left_then_right():
    a = perm(3, (1, 2))
    b = perm(3, (2, 3))
    # 1 -a-> 2 -b-> 3
    assert (a * b).apply(1) == 3


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        perm(3, (1, 2)) * perm(4, (1, 2))


def test_orders():
    assert Permutation.identity(5).order() == 1
    assert perm(3, (1, 2, 3)).order() == 3
    assert perm(5, (1, 2), (3, 4, 5)).order() == 6


def test_cycle_roundtrip():
    p = perm(6, (1, 4), (2, 5, 6))
    assert str(p) == "(1 4)(2 5 6)"
    assert parse_cycles(str(p), 6) == p
    assert parse_cycles("()", 4) == Permutation.identity(4)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_cycles("(1 2", 3)
    with pytest.raises(ValueError):
        parse_cycles("(1 x)", 3)
    with pytest.raises(ValueError):
        parse_cycles("(1 2)(2 3)", 3)


@given(perm_pairs())
def test_inverse_cancels(pair):
    a, b = pair
    n = a.degree
    assert a * a.inverse() == Permutation.identity(n)
    assert (a * b).inverse() == b.inverse() * a.inverse()


@given(random_perms())
def test_power_matches_repeated_product(p):
    acc = Permutation.identity(p.degree)
    for k in range(4):
        assert p**k == acc
        acc = acc * p
    assert p**-1 == p.inverse()


@given(random_perms())
def test_order_is_minimal(p):
    k = p.order()
    assert (p**k).is_identity()
    for j in range(1, k):
        assert not (p**j).is_identity()

import pytest

from primegraph.errors import CapExceeded, DegreeMismatch, NotInParent, NotNormal
from primegraph.group import (
    coset_action,
    generate_group,
    is_normal,
    subgroup_generated,
    trivial_subgroup,
)
from primegraph.perm import Permutation

from conftest import naive_closure, perm


def test_s3_order(s3):
    assert s3.order == 6
    assert s3.primes == (2, 3)


def test_a4_closure_matches_naive_oracle(a4):
    gens = [perm(4, (1, 2, 3)), perm(4, (1, 2), (3, 4))]
    assert a4.elements == frozenset(naive_closure(gens, 4))
    assert a4.order == 12


def test_trivial_group():
    G = generate_group(1, [])
    assert G.order == 1
    assert G.classes == (frozenset({Permutation.identity(1)}),)


def test_generate_rejects_degree_mix():
    with pytest.raises(DegreeMismatch):
        generate_group(3, [perm(3, (1, 2)), perm(4, (1, 2))])


def test_cap_enforced():
    gens = [perm(5, (1, 2, 3, 4, 5)), perm(5, (1, 2))]
    with pytest.raises(CapExceeded):
        generate_group(5, gens, max_order=50)


def test_class_sizes(s3, s4):
    assert sorted(len(c) for c in s3.classes) == [1, 2, 3]
    assert sorted(len(c) for c in s4.classes) == [1, 3, 6, 6, 8]


def test_classes_partition_and_divide(s4):
    sizes = [len(c) for c in s4.classes]
    assert sum(sizes) == s4.order
    assert frozenset().union(*s4.classes) == s4.elements
    for size in sizes:
        assert s4.order % size == 0


def test_abelian_classes_singletons():
    G = generate_group(5, [perm(5, (1, 2, 3, 4, 5))])
    assert all(len(c) == 1 for c in G.classes)


def test_subgroup_generated(s3, s4):
    z3 = subgroup_generated(s3, [perm(3, (1, 2, 3))])
    assert z3.order == 3
    whole = subgroup_generated(s3, [perm(3, (1, 2, 3)), perm(3, (1, 2))])
    assert whole.elements == s3.elements
    klein = subgroup_generated(s4, [perm(4, (1, 2), (3, 4)), perm(4, (1, 3), (2, 4))])
    assert klein.elements == frozenset(
        {
            Permutation.identity(4),
            perm(4, (1, 2), (3, 4)),
            perm(4, (1, 3), (2, 4)),
            perm(4, (1, 4), (2, 3)),
        }
    )


def test_subgroup_generated_idempotent(s4):
    klein = subgroup_generated(s4, [perm(4, (1, 2), (3, 4)), perm(4, (1, 3), (2, 4))])
    again = subgroup_generated(s4, klein.elements)
    assert again.elements == klein.elements


def test_subgroup_generated_rejects_outsiders():
    z3 = generate_group(3, [perm(3, (1, 2, 3))])
    with pytest.raises(NotInParent):
        subgroup_generated(z3, [perm(3, (1, 2))])


def test_coset_action_quotient_s4_by_klein(s4):
    klein = subgroup_generated(s4, [perm(4, (1, 2), (3, 4)), perm(4, (1, 3), (2, 4))])
    Q, qmap = coset_action(s4, klein)
    assert Q.order == 6
    assert Q.order * klein.order == s4.order
    kernel = {g for g in s4.elements if qmap[g].is_identity()}
    assert kernel == klein.elements


def test_coset_action_degenerate_cases(s3):
    whole = subgroup_generated(s3, s3.elements)
    Q, _ = coset_action(s3, whole)
    assert Q.order == 1
    Q2, qmap2 = coset_action(s3, trivial_subgroup(s3))
    assert Q2.order == s3.order
    assert len(set(qmap2.values())) == s3.order


def test_coset_action_requires_normal(s4):
    sylow3 = subgroup_generated(s4, [perm(4, (1, 2, 3))])
    assert not is_normal(s4, sylow3)
    with pytest.raises(NotNormal):
        coset_action(s4, sylow3)


def test_every_element_has_inverse_in_group(s4):
    for g in s4.elements:
        assert g.inverse() in s4.elements
        assert (g * g.inverse()).is_identity()

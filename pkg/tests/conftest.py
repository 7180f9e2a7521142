import itertools

import pytest

from primegraph.perm import Permutation
from primegraph.group import generate_group


def perm(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def naive_closure(gens, degree):
    """Independent closure oracle: full pairwise products to a fixpoint."""
    elems = {Permutation.identity(degree), *gens}
    while True:
        new = {a * b for a, b in itertools.product(elems, repeat=2)} - elems
        if not new:
            return elems
        elems |= new


@pytest.fixture(scope="session")
def s3():
    return generate_group(3, [perm(3, (1, 2, 3)), perm(3, (1, 2))], name="s3")


@pytest.fixture(scope="session")
def s4():
    return generate_group(4, [perm(4, (1, 2, 3, 4)), perm(4, (1, 2))], name="s4")


@pytest.fixture(scope="session")
def a4():
    return generate_group(4, [perm(4, (1, 2, 3)), perm(4, (1, 2), (3, 4))], name="a4")


@pytest.fixture(scope="session")
def d8():
    return generate_group(4, [perm(4, (1, 2, 3, 4)), perm(4, (1, 3))], name="d8")

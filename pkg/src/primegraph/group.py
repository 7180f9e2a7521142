"""Finite permutation groups: closure, conjugacy classes, coset actions.

Groups are fully enumerated; closures are breadth-first over a fixed
total order on image tuples, which makes every derived object
deterministic.  Orders are bounded by a configurable cap (default
20000, overridable via the ``PRIMEGRAPH_MAX_ORDER`` environment
variable or per call).
"""

from __future__ import annotations

import os

from .errors import CapExceeded, DegreeMismatch, NotInParent, NotNormal
from .numbers import prime_factors
from .perm import Permutation

DEFAULT_MAX_ORDER = 20000

# Largest order for which a Cayley index table is built; subgroup-level
# machinery falls back to tuple arithmetic above this.
_TABLE_LIMIT = 1500


def max_order_cap() -> int:
    """Active order cap: PRIMEGRAPH_MAX_ORDER env var or the default."""
    value = os.environ.get("PRIMEGRAPH_MAX_ORDER")
    if value:
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"PRIMEGRAPH_MAX_ORDER is not an integer: {value!r}")
    return DEFAULT_MAX_ORDER


def mulclose(gens, degree, seed=(), cap=None):
    """Breadth-first closure of ``seed`` under right multiplication by
    ``gens``; requires seed to lie inside <gens>.  Returns a set
    containing the identity."""
    identity = Permutation.identity(degree)
    elems = {identity}
    elems.update(gens)
    elems.update(seed)
    if cap is not None and len(elems) > cap:
        raise CapExceeded(f"closure exceeds cap {cap}")
    frontier = list(elems)
    gens = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elems:
                    elems.add(y)
                    new.append(y)
                    if cap is not None and len(elems) > cap:
                        raise CapExceeded(f"closure exceeds cap {cap}")
        frontier = new
    return elems


class FiniteGroup:
    """A fully enumerated permutation group.

    Immutable after construction; element set, conjugacy classes and
    prime divisors are computed eagerly.  ``_cache`` holds lazily
    memoised derived data (Sylow subgroups, generated subgroups,
    graphs); all of it is deterministic, so concurrent recomputation is
    harmless.
    """

    def __init__(self, degree, generators, elements, name=None):
        self.degree = degree
        self.identity = Permutation.identity(degree)
        self.generators = tuple(sorted(set(generators)))
        self.elements = frozenset(elements)
        self.order = len(self.elements)
        self.sorted_elements = tuple(sorted(self.elements))
        self.primes = prime_factors(self.order)
        self.name = name
        self.classes = self._conjugacy_classes()
        self.class_index = {}
        for i, cls in enumerate(self.classes):
            for x in cls:
                self.class_index[x] = i
        self._cache = {}

    def _conjugacy_classes(self):
        """Conjugation orbits, sorted by their least member."""
        gen_invs = [(g.inverse(), g) for g in self.generators]
        seen = set()
        classes = []
        for x in self.sorted_elements:
            if x in seen:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                new = []
                for y in frontier:
                    for ginv, g in gen_invs:
                        z = ginv * y * g
                        if z not in orbit:
                            orbit.add(z)
                            new.append(z)
                frontier = new
            seen |= orbit
            classes.append(frozenset(orbit))
        return tuple(sorted(classes, key=lambda c: min(c)))

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or f"degree {self.degree}"
        return f"<FiniteGroup {label}, order {self.order}>"


class Subgroup:
    """A subset of a parent group closed under the group operation."""

    __slots__ = ("parent", "elements", "gens", "order")

    def __init__(self, parent, elements, gens=()):
        self.parent = parent
        self.elements = frozenset(elements)
        self.gens = tuple(gens)
        self.order = len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<Subgroup of order {self.order} in {self.parent!r}>"


def generate_group(degree, gens, max_order=None, name=None):
    """Close a generator set into a FiniteGroup.

    Raises DegreeMismatch if generators disagree with ``degree`` and
    CapExceeded if the closure grows past the cap.
    """
    gens = tuple(gens)
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(f"generator degree {g.degree}, expected {degree}")
    cap = max_order if max_order is not None else max_order_cap()
    elements = mulclose(gens, degree, cap=cap)
    return FiniteGroup(degree, gens, elements, name=name)


def trivial_subgroup(G):
    return Subgroup(G, {G.identity})


def whole_subgroup(G):
    return Subgroup(G, G.elements, gens=G.generators)


def subgroup_generated(G, elems):
    """Smallest subgroup of G containing ``elems``."""
    elems = tuple(elems)
    for x in elems:
        if x not in G.elements:
            raise NotInParent(f"{x} is not an element of the parent group")
    if not elems:
        return trivial_subgroup(G)
    table = itable(G)
    if table is not None:
        idxs = iclose(table.mul, [table.index[x] for x in elems])
        return Subgroup(G, (table.elems[i] for i in idxs), gens=sorted(set(elems)))
    closed = mulclose(elems, G.degree, cap=G.order)
    return Subgroup(G, closed, gens=sorted(set(elems)))


def element_order(x: Permutation) -> int:
    """Least k >= 1 with x^k the identity (lcm of cycle lengths)."""
    return x.order()


def conjugacy_classes(G: FiniteGroup):
    """The partition of G into conjugation orbits."""
    return G.classes


def is_normal(G, H: Subgroup) -> bool:
    """True if H is normal in G (conjugation by generators suffices)."""
    if H.parent is not G:
        raise NotInParent("subgroup belongs to a different parent")
    probes = H.gens if H.gens else H.elements
    for g in G.generators:
        ginv = g.inverse()
        for h in probes:
            if ginv * h * g not in H.elements:
                return False
    return True


def coset_action(G, N: Subgroup, cap=None):
    """G acting on the right cosets of a normal subgroup N.

    Returns ``(Q, qmap)`` where Q is the induced permutation group of
    degree [G:N] and qmap sends each g in G to its induced permutation.
    The kernel of qmap is exactly N.
    """
    if N.parent is not G:
        raise NotInParent("subgroup belongs to a different parent")
    if not is_normal(G, N):
        raise NotNormal("coset_action requires a normal subgroup")
    cap = cap if cap is not None else max_order_cap()
    index = G.order // N.order
    if index > cap:
        raise CapExceeded(f"index {index} exceeds cap {cap}")

    n_elems = sorted(N.elements)
    rep_of = {}
    reps = []
    for g in G.sorted_elements:
        if g in rep_of:
            continue
        coset = [n * g for n in n_elems]
        rep = min(coset)
        reps.append(rep)
        for x in coset:
            rep_of[x] = rep
    reps.sort()
    coset_index = {r: i for i, r in enumerate(reps)}

    qmap = {}
    for g in G.sorted_elements:
        images = tuple(coset_index[rep_of[r * g]] + 1 for r in reps)
        qmap[g] = Permutation(images)
    image_gens = tuple(qmap[g] for g in G.generators) or (Permutation.identity(index),)
    Q = FiniteGroup(index, image_gens, set(qmap.values()))
    return Q, qmap


def quotient(G, N: Subgroup, cap=None):
    """Like coset_action but with cheap shortcuts for N = 1 and N = G."""
    if N.order == 1:
        return G, {g: g for g in G.elements}
    if N.order == G.order:
        one = Permutation.identity(1)
        Q = FiniteGroup(1, (one,), {one})
        return Q, {g: one for g in G.elements}
    return coset_action(G, N, cap=cap)


# ---------------------------------------------------------------------------
# Cayley index tables: integer-space closure for subgroup-heavy work.


class _IndexTable:
    __slots__ = ("elems", "index", "mul", "inv", "orders", "identity")

    def __init__(self, G):
        elems = G.sorted_elements
        index = {x: i for i, x in enumerate(elems)}
        self.elems = elems
        self.index = index
        self.mul = [[index[a * b] for b in elems] for a in elems]
        self.inv = [index[a.inverse()] for a in elems]
        self.orders = [a.order() for a in elems]
        self.identity = index[G.identity]


def itable(G) -> _IndexTable | None:
    """The group's Cayley index table, or None above the size limit."""
    if G.order > _TABLE_LIMIT:
        return None
    table = G._cache.get("itable")
    if table is None:
        table = _IndexTable(G)
        G._cache["itable"] = table
    return table


def iclose(mul, gens, seed=()):
    """Integer-space closure of ``seed`` under right multiplication by
    ``gens`` (seed must lie in the subgroup the gens generate)."""
    elems = set(seed)
    elems.update(gens)
    if not elems:
        return elems
    # Identity arises as a power of any generator; seeding is cheaper.
    frontier = list(elems)
    while frontier:
        new = []
        for x in frontier:
            row = mul[x]
            for g in gens:
                y = row[g]
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return elems


def iset_of(G, sub: Subgroup):
    """The subgroup's element set as table indices (cached per parent)."""
    table = itable(G)
    if table is None:
        return None
    cache = G._cache.setdefault("iset", {})
    got = cache.get(sub.elements)
    if got is None:
        got = frozenset(table.index[x] for x in sub.elements)
        cache[sub.elements] = got
    return got


def subgroup_from_iset(G, idxs, gens_idx=()):
    table = itable(G)
    return Subgroup(
        G,
        (table.elems[i] for i in idxs),
        gens=sorted(table.elems[i] for i in gens_idx),
    )

"""Subgroup operators and structural predicates.

All operators are literal set computations over fully enumerated
groups; a per-parent Cayley index table (see :mod:`primegraph.group`)
accelerates the inner loops without changing any result.  Functions
that accept "a group" take either a FiniteGroup or a Subgroup.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import CapExceeded, NotInParent, NotSoluble, TrivialGroup
from .group import (
    FiniteGroup,
    Subgroup,
    iclose,
    iset_of,
    itable,
    mulclose,
    quotient,
    subgroup_generated,
    trivial_subgroup,
)
from .numbers import is_p_power, is_prime, p_part

ORACLE_CAP = 300


class FormationTag(enum.Enum):
    NILPOTENT = "nilpotent"
    SUPERSOLUBLE = "supersoluble"


@dataclass(frozen=True)
class ChiefSeries:
    """1 = N_0 < N_1 < ... < N_k = G with every factor a chief factor."""

    group: FiniteGroup
    terms: tuple

    @property
    def factor_orders(self):
        return tuple(
            self.terms[i + 1].order // self.terms[i].order
            for i in range(len(self.terms) - 1)
        )


def _parent_of(H):
    return H if isinstance(H, FiniteGroup) else H.parent


def _as_subgroup(H) -> Subgroup:
    if isinstance(H, FiniteGroup):
        return Subgroup(H, H.elements, gens=H.generators)
    return H


def _check_parent(G, *subs):
    for H in subs:
        if H.parent is not G:
            raise NotInParent("subgroup belongs to a different parent group")


def as_group(H) -> FiniteGroup:
    """Realize a subgroup as a FiniteGroup in its own right (memoized)."""
    if isinstance(H, FiniteGroup):
        return H
    G = H.parent
    cache = G._cache.setdefault("as_group", {})
    got = cache.get(H.elements)
    if got is None:
        gens = H.gens or _greedy_generators(G, H)
        got = FiniteGroup(G.degree, gens, H.elements)
        cache[H.elements] = got
    return got


def _greedy_generators(G, H):
    gens = []
    closed = {G.identity}
    for x in sorted(H.elements):
        if x not in closed:
            gens.append(x)
            closed = mulclose(gens, G.degree)
            if len(closed) == H.order:
                break
    return tuple(gens)


def cyclic_subgroup(G, x) -> Subgroup:
    """<x> inside G (memoized per parent)."""
    cache = G._cache.setdefault("cyclic", {})
    got = cache.get(x)
    if got is None:
        if x not in G.elements:
            raise NotInParent(f"{x} is not in the parent group")
        elems = [x]
        y = x * x
        while y != x:
            elems.append(y)
            y = y * x
        got = Subgroup(G, elems, gens=(x,))
        cache[x] = got
    return got


def generated_pair(G, a, b) -> Subgroup:
    """<a, b> inside G (memoized per unordered pair)."""
    if a == b:
        return cyclic_subgroup(G, a)
    cache = G._cache.setdefault("gen2", {})
    key = frozenset((a, b))
    got = cache.get(key)
    if got is None:
        got = subgroup_generated(G, (a, b))
        cache[key] = got
    return got


# ---------------------------------------------------------------------------
# Pointwise operators.


def centralizer(G, S) -> Subgroup:
    """C_G(S) = elements commuting with every member of S."""
    S = list(S)
    for s in S:
        if s not in G.elements:
            raise NotInParent(f"{s} is not in the parent group")
    table = itable(G)
    if table is not None:
        mul = table.mul
        idxs = [table.index[s] for s in S]
        keep = [
            i
            for i in range(G.order)
            if all(mul[i][s] == mul[s][i] for s in idxs)
        ]
        return Subgroup(G, (table.elems[i] for i in keep))
    keep = [g for g in G.elements if all(g * s == s * g for s in S)]
    return Subgroup(G, keep)


def center(G) -> Subgroup:
    return centralizer(G, G.generators)


def normalizer(G, H: Subgroup) -> Subgroup:
    """N_G(H) = elements g with H^g = H."""
    _check_parent(G, H)
    probes = tuple(H.gens) or tuple(sorted(H.elements))
    table = itable(G)
    if table is not None:
        mul, inv = table.mul, table.inv
        hset = iset_of(G, H)
        pidx = [table.index[h] for h in probes]
        keep = [
            g
            for g in range(G.order)
            if all(mul[mul[inv[g]][h]][g] in hset for h in pidx)
        ]
        return Subgroup(G, (table.elems[i] for i in keep))
    keep = []
    for g in G.elements:
        ginv = g.inverse()
        if all(ginv * h * g in H.elements for h in probes):
            keep.append(g)
    return Subgroup(G, keep)


def product_set(A: Subgroup, B: Subgroup) -> frozenset:
    """The literal set AB = {ab | a in A, b in B}."""
    G = A.parent
    _check_parent(G, B)
    table = itable(G)
    if table is not None:
        mul = table.mul
        ia, ib = iset_of(G, A), iset_of(G, B)
        out = {mul[a][b] for a in ia for b in ib}
        return frozenset(table.elems[i] for i in out)
    return frozenset(a * b for a in A.elements for b in B.elements)


def permutes(A: Subgroup, B: Subgroup):
    """AB as a subgroup when AB = BA as sets, else None."""
    G = A.parent
    _check_parent(G, A, B)
    table = itable(G)
    if table is not None:
        mul = table.mul
        ia, ib = iset_of(G, A), iset_of(G, B)
        ab = {mul[a][b] for a in ia for b in ib}
        if all(mul[b][a] in ab for b in ib for a in ia):
            return Subgroup(
                G, (table.elems[i] for i in ab), gens=sorted({*A.gens, *B.gens})
            )
        return None
    ab = {a * b for a in A.elements for b in B.elements}
    if all(b * a in ab for b in B.elements for a in A.elements):
        return Subgroup(G, ab, gens=sorted({*A.gens, *B.gens}))
    return None


def intersect(A: Subgroup, B: Subgroup) -> Subgroup:
    _check_parent(A.parent, A, B)
    return Subgroup(A.parent, A.elements & B.elements)


def normal_closure(G, S) -> Subgroup:
    """Smallest normal subgroup of G containing S: the subgroup
    generated by the full conjugacy classes of the members of S."""
    classes = set()
    for s in S:
        if s not in G.elements:
            raise NotInParent(f"{s} is not in the parent group")
        classes.add(G.class_index[s])
    gens = [x for c in sorted(classes) for x in sorted(G.classes[c])]
    return subgroup_generated(G, gens)


def core(G, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of G inside H: the union of the
    conjugacy classes of G wholly contained in H."""
    _check_parent(G, H)
    elems = set()
    for cls in G.classes:
        if cls <= H.elements:
            elems |= cls
    return Subgroup(G, elems)


def commutator_subgroup(A: Subgroup, B: Subgroup) -> Subgroup:
    """[A, B] = <[a, b] : a in A, b in B>."""
    G = A.parent
    _check_parent(G, A, B)
    table = itable(G)
    if table is not None:
        mul, inv = table.mul, table.inv
        ia, ib = iset_of(G, A), iset_of(G, B)
        comms = {mul[mul[inv[a]][inv[b]]][mul[a][b]] for a in ia for b in ib}
        closed = iclose(mul, sorted(comms))
        return Subgroup(G, (table.elems[i] for i in closed))
    comms = {
        a.inverse() * b.inverse() * a * b
        for a in A.elements
        for b in B.elements
    }
    return subgroup_generated(G, comms)


# ---------------------------------------------------------------------------
# Sylow machinery and the O_p operators.


def _element_orders(G):
    table = itable(G)
    if table is not None:
        return {table.elems[i]: table.orders[i] for i in range(G.order)}
    return {x: x.order() for x in G.sorted_elements}


def sylow(G, p: int) -> Subgroup:
    """A Sylow p-subgroup, built by deterministic normalizer ascent."""
    cache = G._cache.setdefault("sylow", {})
    got = cache.get(p)
    if got is not None:
        return got
    target = p_part(G.order, p)
    if target == 1:
        result = trivial_subgroup(G)
    else:
        orders = G._cache.get("orders")
        if orders is None:
            orders = _element_orders(G)
            G._cache["orders"] = orders
        best = None
        for x in G.sorted_elements:
            o = orders[x]
            if o > 1 and is_p_power(o, p) and (best is None or o > orders[best]):
                best = x
        gens = [best]
        P = subgroup_generated(G, gens)
        while P.order < target:
            N = normalizer(G, P)
            for y in sorted(N.elements):
                if y not in P.elements and orders[y] > 1 and is_p_power(orders[y], p):
                    gens.append(y)
                    break
            else:
                raise AssertionError("normalizer ascent stalled")
            P = subgroup_generated(G, gens)
        result = P
    cache[p] = result
    return result


def o_p(G, p: int) -> Subgroup:
    """Largest normal p-subgroup: the core of a Sylow p-subgroup."""
    return core(G, sylow(G, p))


def o_p_prime(G, p: int) -> Subgroup:
    """Largest normal p'-subgroup, by greedy absorption of p'-classes."""
    cache = G._cache.setdefault("o_p_prime", {})
    got = cache.get(p)
    if got is not None:
        return got
    N = trivial_subgroup(G)
    for cls in G.classes:
        rep = min(cls)
        if rep.order() % p == 0:
            continue
        if cls <= N.elements:
            continue
        M = normal_closure(G, [*N.gens, rep] if N.gens else [rep])
        # M is generated by full classes, hence normal; N's classes are
        # included because N.gens generate N.
        M = subgroup_generated(G, set(M.elements) | set(N.elements))
        if M.order % p != 0:
            N = M
    cache[p] = N
    return N


def o_p_prime_p(G, p: int) -> Subgroup:
    """O_{p',p}: preimage of O_p(G / O_{p'}(G))."""
    cache = G._cache.setdefault("o_p_prime_p", {})
    got = cache.get(p)
    if got is not None:
        return got
    N = o_p_prime(G, p)
    if N.order == 1:
        result = o_p(G, p)
    else:
        Q, qmap = quotient(G, N)
        K = o_p(Q, p)
        result = Subgroup(G, (g for g in G.elements if qmap[g] in K.elements))
    cache[p] = result
    return result


# ---------------------------------------------------------------------------
# Normal structure.


def minimal_normal_subgroups(G):
    """All inclusion-minimal nontrivial normal subgroups."""
    if G.order == 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroups")
    seen = {}
    for cls in G.classes:
        rep = min(cls)
        if rep.is_identity():
            continue
        N = normal_closure(G, [rep])
        seen.setdefault(N.elements, N)
    minimal = [
        N
        for key, N in seen.items()
        if not any(other < key for other in seen)
    ]
    return tuple(sorted(minimal, key=lambda N: (N.order, sorted(N.elements))))


def chief_series(G) -> ChiefSeries:
    """A chief series built bottom-up through successive quotients."""
    terms = [trivial_subgroup(G)]
    current = terms[0]
    while current.order < G.order:
        Q, qmap = quotient(G, current)
        M = minimal_normal_subgroups(Q)[0]
        lifted = Subgroup(G, (g for g in G.elements if qmap[g] in M.elements))
        terms.append(lifted)
        current = lifted
    return ChiefSeries(G, tuple(terms))


def normal_subgroups(G):
    """All normal subgroups: joins of normal closures of single classes."""
    got = G._cache.get("normal_subgroups")
    if got is not None:
        return got
    base = {frozenset({G.identity}): trivial_subgroup(G)}
    for cls in G.classes:
        N = normal_closure(G, [min(cls)])
        base.setdefault(N.elements, N)
    pending = sorted(base.values(), key=lambda N: (N.order, sorted(N.elements)))
    i = 0
    while i < len(pending):
        H = pending[i]
        for j in range(i):
            K = pending[j]
            if H.elements <= K.elements or K.elements <= H.elements:
                continue
            J = subgroup_generated(G, H.elements | K.elements)
            if J.elements not in base:
                base[J.elements] = J
                pending.append(J)
        i += 1
    result = tuple(sorted(base.values(), key=lambda N: (N.order, sorted(N.elements))))
    G._cache["normal_subgroups"] = result
    return result


def all_subgroups(G, cap: int = ORACLE_CAP):
    """The full subgroup lattice (oracle; |G| <= cap required)."""
    if G.order > cap:
        raise CapExceeded(f"subgroup lattice limited to order {cap}")
    got = G._cache.get("all_subgroups")
    if got is not None:
        return got
    table = itable(G)
    mul = table.mul
    found = {}
    pending = []

    def add(iset, gens_idx):
        key = frozenset(iset)
        if key not in found:
            found[key] = tuple(gens_idx)
            pending.append(key)

    add(frozenset({table.identity}), ())
    for i in range(G.order):
        add(iclose(mul, [i]), (i,))
    k = 0
    while k < len(pending):
        H = pending[k]
        gh = found[H]
        for j in range(k):
            K = pending[j]
            if H <= K or K <= H:
                continue
            gens = gh + found[K]
            J = iclose(mul, gens, seed=H | K)
            add(J, gens)
        k += 1
    subs = [
        Subgroup(
            G,
            (table.elems[i] for i in key),
            gens=sorted(table.elems[i] for i in found[key]),
        )
        for key in found
    ]
    result = tuple(sorted(subs, key=lambda H: (H.order, sorted(H.elements))))
    G._cache["all_subgroups"] = result
    return result


def frattini(G) -> Subgroup:
    """Intersection of all maximal subgroups (oracle-capped)."""
    subs = all_subgroups(G)
    proper = [H.elements for H in subs if H.order < G.order]
    maximal = [h for h in proper if not any(h < other for other in proper)]
    elems = frozenset(G.elements)
    for h in maximal:
        elems &= h
    return Subgroup(G, elems)


# ---------------------------------------------------------------------------
# Class predicates.


def _pred_cache(H, name):
    G = _parent_of(H)
    return G._cache.setdefault(name, {})


def is_nilpotent(H) -> bool:
    """True iff every Sylow subgroup is normal; equivalently, for each
    prime p the p-elements number exactly the p-part of the order."""
    cache = _pred_cache(H, "nilpotent")
    key = H.elements
    got = cache.get(key)
    if got is None:
        G = _parent_of(H)
        orders = G._cache.get("orders")
        if orders is None:
            orders = _element_orders(G)
            G._cache["orders"] = orders
        n = len(key)
        got = True
        for p in prime_divisors_of(n):
            target = p_part(n, p)
            count = sum(1 for x in key if is_p_power(orders[x], p))
            if count != target:
                got = False
                break
        cache[key] = got
    return got


def prime_divisors_of(n):
    from .numbers import prime_factors

    return prime_factors(n)


def has_normal_sylow(H, p) -> bool:
    """True iff the set of p-elements matches the p-part (unique Sylow p)."""
    G = _parent_of(H)
    orders = G._cache.get("orders")
    if orders is None:
        orders = _element_orders(G)
        G._cache["orders"] = orders
    n = len(H.elements)
    target = p_part(n, p)
    return sum(1 for x in H.elements if is_p_power(orders[x], p)) == target


def is_soluble(H) -> bool:
    """True iff the derived series reaches the trivial group."""
    cache = _pred_cache(H, "soluble")
    key = H.elements
    got = cache.get(key)
    if got is None:
        G = _parent_of(H)
        current = _as_subgroup(H) if not isinstance(H, Subgroup) else H
        while True:
            derived = commutator_subgroup(current, current)
            if derived.order == current.order:
                got = current.order == 1
                break
            if derived.order == 1:
                got = True
                break
            current = derived
        cache[key] = got
    return got


def is_supersoluble(H) -> bool:
    """True iff every chief factor has prime order."""
    cache = _pred_cache(H, "supersoluble")
    key = H.elements
    got = cache.get(key)
    if got is None:
        if not is_soluble(H):
            got = False
        else:
            series = chief_series(as_group(H))
            got = all(is_prime(m) for m in series.factor_orders)
        cache[key] = got
    return got


def has_sylow_tower(G) -> bool:
    """True iff some prime ordering yields a normal series with Sylow
    factors (any ordering is accepted)."""
    G = as_group(G)
    if G.order == 1:
        return True
    from .group import is_normal

    for p in G.primes:
        P = sylow(G, p)
        if P.order > 1 and is_normal(G, P):
            Q, _ = quotient(G, P)
            if has_sylow_tower(Q):
                return True
    return False


def p_length(G, p: int) -> int:
    """Number of nontrivial p-factors in the upper p-series (soluble G)."""
    if not is_soluble(G):
        raise NotSoluble("p_length requires a soluble group")
    G = as_group(G)
    count = 0
    H = G
    while H.order > 1:
        lower = o_p_prime(H, p)
        upper = o_p_prime_p(H, p)
        if upper.order > lower.order:
            count += 1
        Q, _ = quotient(H, upper)
        H = Q
    return count

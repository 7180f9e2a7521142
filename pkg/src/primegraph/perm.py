"""Permutations of {1..n} stored as image sequences.

``a * b`` means "apply ``a`` first, then ``b``" (right action), so
conjugation is ``b.inverse() * a * b`` and powers of points read
``x^(ab) = (x^a)^b``.
"""

from __future__ import annotations

import math

from .errors import DegreeMismatch


class Permutation:
    """An immutable bijection of {1..degree}.

    ``images[i]`` is the image of the point ``i + 1``; the tuple must
    contain each of 1..degree exactly once.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Build from disjoint cycles given as sequences of points."""
        images = list(range(1, degree + 1))
        seen = set()
        for cycle in cycles:
            for i, point in enumerate(cycle):
                if not 1 <= point <= degree:
                    raise ValueError(f"point {point} outside 1..{degree}")
                if point in seen:
                    raise ValueError(f"point {point} repeated across cycles")
                seen.add(point)
                images[point - 1] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise DegreeMismatch(
                f"degree {len(self.images)} vs {len(other.images)}"
            )
        b = other.images
        return Permutation(b[i - 1] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Permutation.identity(self.degree)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self, g: "Permutation") -> "Permutation":
        """self^g = g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self.images[start - 1] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start - 1]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point - 1]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Permutation"):
        return self.images < other.images

    def __le__(self, other: "Permutation"):
        return self.images <= other.images

    def __repr__(self):
        return f"Permutation({self.images!r})"

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse whitespace-separated parenthesised cycles, e.g. ``(1 2)(3 4 5)``.

    Fixed points may be omitted; ``()`` is the identity.  Raises
    ValueError on malformed input (the group-file parser wraps this
    with positions).
    """
    cycles = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ValueError(f"expected '(' at offset {i}")
        j = text.find(")", i)
        if j < 0:
            raise ValueError(f"unclosed '(' at offset {i}")
        body = text[i + 1 : j].replace(",", " ").split()
        if body:
            try:
                cycles.append(tuple(int(tok) for tok in body))
            except ValueError:
                raise ValueError(f"non-integer point in cycle at offset {i}")
        i = j + 1
    return Permutation.from_cycles(degree, cycles)

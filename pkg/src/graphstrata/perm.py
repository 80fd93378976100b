"""Permutations of {1, ..., m} and finite subgroups of the symmetric group.

Labels are 1-based throughout.  A permutation is stored as its image
sequence: ``p.images[i - 1]`` is the image of label ``i``.  Composition is
``(a * b)(i) = a(b(i))``, so ``b`` acts first.  Groups are materialized as
explicit element tuples sorted lexicographically by image sequence; that
fixed order is what makes every canonical form downstream reproducible.

Cycle notation reads and writes strings like ``"(1 2)(3 4)"`` with the
identity written ``"()"``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .limits import MAX_GROUP_ORDER, MAX_PERM_DEGREE, SizeLimitError

__all__ = [
    "Permutation",
    "PermGroup",
    "group_from_generators",
    "symmetric_group",
    "symmetric_group_on",
    "orbit_of_label",
    "stabilizer",
    "canonical_rep",
    "parse_permutation",
    "parse_generators",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1, ..., m}, stored as its image sequence."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.images)
        if m == 0:
            raise ValueError("permutation degree must be positive")
        if sorted(self.images) != list(range(1, m + 1)):
            raise ValueError(f"not a bijection of 1..{m}: {self.images!r}")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, m + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for a in cycle:
                if not 1 <= a <= m:
                    raise ValueError(f"label {a} outside 1..{m}")
                if a in seen:
                    raise ValueError(f"label {a} repeated across cycles")
                seen.add(a)
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.degree:
            raise ValueError(f"label {i} outside 1..{self.degree}")
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (a * b)(i) = a(b(i))
        if self.degree != other.degree:
            raise ValueError("degree mismatch in composition")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated to start at its least label."""
        out = []
        seen: set[int] = set()
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return tuple(out)

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(a) for a in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.cycle_string()


_CYCLE_RE = re.compile(r"\(\s*((?:\d+)(?:\s+\d+)*)?\s*\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation literal")
    pos = 0
    cycles: list[tuple[int, ...]] = []
    while pos < len(stripped):
        match = _CYCLE_RE.match(stripped, pos)
        if match is None:
            raise ValueError(f"bad cycle notation: {text!r}")
        if match.group(1):
            cycles.append(tuple(int(tok) for tok in match.group(1).split()))
        pos = match.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    return Permutation.from_cycles(degree, cycles)


def parse_generators(text: str, degree: int) -> tuple[Permutation, ...]:
    """Parse a comma-separated list of permutations in cycle notation."""
    if not text.strip():
        return ()
    return tuple(parse_permutation(part, degree) for part in text.split(","))


@dataclass(frozen=True)
class PermGroup:
    """A subgroup of the symmetric group, held as an explicit element list.

    ``elements`` is closed under composition and inverse and sorted
    lexicographically by image sequence.
    """

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("a group has at least the identity")
        object.__setattr__(self, "_members", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self._members  # type: ignore[attr-defined]

    def generator_string(self) -> str:
        """Generators in cycle notation, comma separated; ``"()"`` if none."""
        if not self.generators:
            return "()"
        return ",".join(g.cycle_string() for g in self.generators)


def group_from_generators(
    m: int,
    generators: Iterable[Permutation],
    *,
    max_degree: int = MAX_PERM_DEGREE,
    max_order: int = MAX_GROUP_ORDER,
) -> PermGroup:
    """Close a generating set under composition (breadth-first)."""
    if m < 1:
        raise ValueError("m must be positive")
    if m > max_degree:
        raise SizeLimitError(f"degree {m} exceeds bound {max_degree}")
    gens = tuple(generators)
    for g in gens:
        if g.degree != m:
            raise ValueError(f"generator degree {g.degree} != {m}")
    identity = Permutation.identity(m)
    elements = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                c = g * a
                if c not in elements:
                    elements.add(c)
                    fresh.append(c)
                    if len(elements) > max_order:
                        raise SizeLimitError(
                            f"group order exceeds bound {max_order}"
                        )
        frontier = fresh
    return PermGroup(m, gens, tuple(sorted(elements)))


def symmetric_group(m: int) -> PermGroup:
    return symmetric_group_on(range(1, m + 1), m)


def symmetric_group_on(labels: Iterable[int], degree: int) -> PermGroup:
    """All permutations of ``labels`` inside degree ``degree``, rest fixed."""
    if degree < 1:
        raise ValueError("degree must be positive")
    moved = sorted(labels)
    for a in moved:
        if not 1 <= a <= degree:
            raise ValueError(f"label {a} outside 1..{degree}")
    base = list(range(1, degree + 1))
    elements = []
    for images in itertools.permutations(moved):
        arr = base[:]
        for slot, img in zip(moved, images):
            arr[slot - 1] = img
        elements.append(Permutation(tuple(arr)))
    gens = tuple(
        Permutation.from_cycles(degree, [(a, b)])
        for a, b in zip(moved, moved[1:])
    )
    return PermGroup(degree, gens, tuple(sorted(elements)))


def orbit_of_label(group: PermGroup, i: int) -> frozenset[int]:
    """The orbit of a label under the group action."""
    if not 1 <= i <= group.degree:
        raise ValueError(f"label {i} outside 1..{group.degree}")
    return frozenset(g(i) for g in group)


def stabilizer(group: PermGroup, labeling: Sequence[object]) -> PermGroup:
    """Elements preserving a labeling of {1, ..., m} up to slot equality.

    ``labeling[i - 1]`` is the slot holding label ``i``; two labels are
    interchangeable precisely when their slots compare equal.
    """
    if len(labeling) != group.degree:
        raise ValueError("labeling length must equal the group degree")
    kept = tuple(
        g
        for g in group
        if all(labeling[g(i) - 1] == labeling[i - 1] for i in range(1, group.degree + 1))
    )
    return PermGroup(group.degree, kept, kept)


def canonical_rep(group: PermGroup, labeling: Sequence) -> tuple:
    """Lexicographically least relabeling of ``labeling`` under the group."""
    if len(labeling) != group.degree:
        raise ValueError("labeling length must equal the group degree")
    return min(
        tuple(labeling[g(i) - 1] for i in range(1, group.degree + 1))
        for g in group
    )

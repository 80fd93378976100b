"""Marking classes of stable graphs under a permutation group.

A subgroup of the symmetric group on the leg labels declares which labels
are interchangeable.  Two labeled graphs represent the same marked curve
class when some group element carries one onto the other; the census of
such classes is the orbit fusion of the labeled census.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .perm import PermGroup, Permutation, orbit_of_label
from .stablegraph import (
    GraphIsomorphism,
    StableGraph,
    StratumCensus,
    canonical_form,
    enumerate_stable_graphs,
    graph_to_doc,
    iter_graph_isomorphisms,
)

__all__ = [
    "relabel_legs",
    "GammaWitness",
    "gamma_equivalent",
    "gamma_canonical_form",
    "GammaMarkedGraph",
    "gamma_automorphisms",
    "GammaClass",
    "GammaCensus",
    "enumerate_gamma_strata",
    "quotient_fibers",
    "gamma_census_to_doc",
    "GAMMA_CENSUS_FORMAT",
]

GAMMA_CENSUS_FORMAT = "gamma-census/1"


def _check_degree(graph: StableGraph, group: PermGroup) -> None:
    if graph.m != group.degree:
        raise ValueError(
            f"group degree {group.degree} does not match m = {graph.m}"
        )


def relabel_legs(graph: StableGraph, gamma: Permutation) -> StableGraph:
    """Send the leg labeled i to the label gamma(i), leaving vertices put."""
    if gamma.degree != graph.m:
        raise ValueError(f"permutation degree {gamma.degree} != m = {graph.m}")
    legs = [0] * graph.m
    for k, v in enumerate(graph.legs):
        legs[gamma(k + 1) - 1] = v
    return StableGraph(graph.genera, graph.edges, tuple(legs))


@dataclass(frozen=True)
class GammaWitness:
    gamma: Permutation
    isomorphism: GraphIsomorphism


def gamma_equivalent(
    a: StableGraph, b: StableGraph, group: PermGroup
) -> GammaWitness | None:
    """A relabeling in the group plus a label-respecting isomorphism, if any.

    Searches group elements in their lexicographic order, so the witness is
    deterministic.
    """
    _check_degree(a, group)
    if b.m != a.m:
        raise ValueError(f"marks differ: {a.m} vs {b.m}")
    for gamma in group:
        iso = next(iter_graph_isomorphisms(relabel_legs(a, gamma), b, True), None)
        if iso is not None:
            return GammaWitness(gamma, iso)
    return None


def gamma_canonical_form(graph: StableGraph, group: PermGroup) -> StableGraph:
    """Least canonical form over all relabelings in the group."""
    _check_degree(graph, group)
    return min(
        (canonical_form(relabel_legs(graph, gamma)) for gamma in group),
        key=StableGraph.encoding,
    )


@dataclass(frozen=True)
class GammaMarkedGraph:
    """A stable graph considered up to the group's relabelings."""

    graph: StableGraph
    group: PermGroup
    canonical: StableGraph

    @classmethod
    def of(cls, graph: StableGraph, group: PermGroup) -> "GammaMarkedGraph":
        return cls(graph, group, gamma_canonical_form(graph, group))

    def equivalent_to(self, other: "GammaMarkedGraph") -> bool:
        if self.group != other.group:
            raise ValueError("marked graphs carry different groups")
        return self.canonical == other.canonical

    def class_labels(self) -> tuple[frozenset[int], ...]:
        """Per leg label, the set of labels it is interchangeable with."""
        return tuple(
            orbit_of_label(self.group, i) for i in range(1, self.graph.m + 1)
        )


def gamma_automorphisms(
    graph: StableGraph, group: PermGroup
) -> tuple[tuple[Permutation, GraphIsomorphism], ...]:
    """All pairs (gamma, iso) with iso carrying leg i to leg gamma(i).

    The pairs form a group under componentwise composition.
    """
    _check_degree(graph, group)
    out = []
    for gamma in group:
        for iso in iter_graph_isomorphisms(relabel_legs(graph, gamma), graph, True):
            out.append((gamma, iso))
    return tuple(out)


@dataclass(frozen=True)
class GammaClass:
    """One fused class: its orbit of labeled classes and the stabilizer."""

    nodes: int
    representative: StableGraph
    orbit: tuple[StableGraph, ...]
    stabilizer: PermGroup

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)


@dataclass(frozen=True)
class GammaCensus:
    g: int
    m: int
    group: PermGroup
    classes_by_nodes: dict[int, tuple[GammaClass, ...]]

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.classes_by_nodes.values())

    def counts(self) -> dict[int, int]:
        return {i: len(v) for i, v in self.classes_by_nodes.items()}

    def all_classes(self) -> Iterator[GammaClass]:
        for i in sorted(self.classes_by_nodes):
            yield from self.classes_by_nodes[i]


def enumerate_gamma_strata(
    g: int,
    m: int,
    group: PermGroup,
    *,
    max_dim: int | None = None,
    census: StratumCensus | None = None,
) -> GammaCensus:
    """Fuse the labeled census into group orbits, node count by node count.

    Representatives are the least canonical forms of their orbits; orbit
    sizes and stabilizer orders satisfy |orbit| * |stabilizer| = |group|.
    """
    if group.degree != m:
        raise ValueError(f"group degree {group.degree} does not match m = {m}")
    if census is None:
        census = enumerate_stable_graphs(g, m, max_dim=max_dim)
    classes: dict[int, tuple[GammaClass, ...]] = {}
    for i in sorted(census.classes_by_nodes):
        orbits: dict[tuple, list[StableGraph]] = {}
        for labeled in census.classes_by_nodes[i]:
            key = gamma_canonical_form(labeled, group)
            orbits.setdefault(key.encoding(), []).append(labeled)
        bucket = []
        for enc in sorted(orbits):
            members = sorted(orbits[enc], key=StableGraph.encoding)
            rep = members[0]
            stab = tuple(
                gamma
                for gamma in group
                if canonical_form(relabel_legs(rep, gamma)) == rep
            )
            stabilizer = PermGroup(group.degree, stab, stab)
            assert len(members) * stabilizer.order == group.order
            bucket.append(
                GammaClass(
                    nodes=i,
                    representative=rep,
                    orbit=tuple(members),
                    stabilizer=stabilizer,
                )
            )
        classes[i] = tuple(bucket)
    return GammaCensus(g, m, group, classes)


def quotient_fibers(
    g: int,
    m: int,
    group: PermGroup,
    *,
    max_dim: int | None = None,
    census: StratumCensus | None = None,
) -> tuple[GammaClass, ...]:
    """Flat view of the fused census: every class with its orbit data."""
    fused = enumerate_gamma_strata(g, m, group, max_dim=max_dim, census=census)
    return tuple(fused.all_classes())


def gamma_census_to_doc(fused: GammaCensus) -> dict:
    return {
        "format": GAMMA_CENSUS_FORMAT,
        "g": fused.g,
        "m": fused.m,
        "group": [g.cycle_string() for g in fused.group.generators],
        "total": fused.total,
        "classes_by_nodes": {
            str(i): [
                {
                    "representative": graph_to_doc(cls.representative),
                    "orbit_size": cls.orbit_size,
                    "stabilizer_order": cls.stabilizer.order,
                }
                for cls in fused.classes_by_nodes[i]
            ]
            for i in sorted(fused.classes_by_nodes)
        },
    }

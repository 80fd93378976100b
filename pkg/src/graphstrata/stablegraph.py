"""Stable dual graphs of nodal curves with labeled marked points.

A graph records one vertex per irreducible component (decorated with its
geometric genus), one edge per node (loops allowed, endpoints unordered),
and one leg per marked point.  Legs carry labels 1..m and attach to
vertices.  The graph is stable when every genus-0 vertex meets at least
three special points (edge ends, loops counted twice, plus legs) and
2g - 2 + m > 0 for the total genus g.

Total genus is the sum of vertex genera plus the first Betti number of the
graph, so ``genus`` is only defined for connected graphs.  The number of
edges is the number of nodes of the curve; a stratum with i nodes has
dimension 3g - 3 + m - i.

``enumerate_stable_graphs`` lists all isomorphism classes up to a
configurable bound on 3g - 3 + m.  Isomorphisms preserve genera, the edge
multiset, and (when asked) leg labels; ``canonical_form`` picks a fixed
representative of each class by minimizing an encoding over vertex
orderings compatible with an iteratively refined vertex invariant.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .limits import DEFAULT_MAX_DIM, MAX_PERM_DEGREE, SizeLimitError

__all__ = [
    "StableGraph",
    "DisconnectedGraphError",
    "StabilityReport",
    "GraphIsomorphism",
    "StratumCensus",
    "SplitComponent",
    "HilbertNumerology",
    "genus",
    "check_stability",
    "num_nodes",
    "stratum_dim",
    "graph_isomorphism",
    "iter_graph_isomorphisms",
    "canonical_form",
    "enumerate_stable_graphs",
    "split_component",
    "hilbert_numerology",
    "graph_to_doc",
    "graph_from_doc",
    "census_to_doc",
    "dumps",
    "GRAPH_FORMAT",
    "CENSUS_FORMAT",
]

Edge = "tuple[int, int]"

GRAPH_FORMAT = "stable-graph/1"
CENSUS_FORMAT = "stable-graph-census/1"


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph."""


@dataclass(frozen=True)
class StableGraph:
    """A genus-decorated multigraph with labeled legs.

    ``genera[v]`` is the genus of vertex ``v`` (vertices are 0-indexed),
    ``edges`` is a sorted tuple of unordered endpoint pairs ``(u, v)`` with
    ``u <= v`` (a loop has ``u == v``), and ``legs[k]`` is the vertex
    carrying the leg labeled ``k + 1``.
    """

    genera: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        genera = tuple(self.genera)
        if not genera:
            raise ValueError("a graph has at least one vertex")
        nv = len(genera)
        for g in genera:
            if not isinstance(g, int) or g < 0:
                raise ValueError(f"vertex genus must be a nonnegative integer, got {g!r}")
        edges = tuple(
            (u, v) if u <= v else (v, u) for u, v in self.edges
        )
        for u, v in edges:
            if not (0 <= u < nv and 0 <= v < nv):
                raise ValueError(f"edge endpoint outside 0..{nv - 1}: {(u, v)}")
        legs = tuple(self.legs)
        for v in legs:
            if not 0 <= v < nv:
                raise ValueError(f"leg vertex outside 0..{nv - 1}: {v}")
        object.__setattr__(self, "genera", genera)
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "legs", legs)

    @property
    def num_vertices(self) -> int:
        return len(self.genera)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def m(self) -> int:
        return len(self.legs)

    def degree(self, v: int) -> int:
        """Incident half-edges at ``v``; a loop contributes two."""
        return sum((u == v) + (w == v) for u, w in self.edges)

    def legs_at(self, v: int) -> tuple[int, ...]:
        return tuple(k + 1 for k, vert in enumerate(self.legs) if vert == v)

    def is_connected(self) -> bool:
        nv = self.num_vertices
        if nv == 1:
            return True
        adj: list[set[int]] = [set() for _ in range(nv)]
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == nv

    def encoding(self) -> tuple:
        """A total-order key determining the graph up to equality."""
        return (self.num_vertices, self.m, self.genera, self.edges, self.legs)


def genus(graph: StableGraph) -> int:
    """Sum of vertex genera plus the first Betti number of the graph."""
    if not graph.is_connected():
        raise DisconnectedGraphError("genus is undefined for disconnected graphs")
    return sum(graph.genera) + graph.num_edges - graph.num_vertices + 1


@dataclass(frozen=True)
class StabilityReport:
    valid: bool
    violating_vertices: tuple[int, ...]
    graph_genus: int
    marks: int
    stable_range: bool


def check_stability(graph: StableGraph) -> StabilityReport:
    """Check the three-special-points rule and 2g - 2 + m > 0."""
    g = genus(graph)
    m = graph.m
    bad = tuple(
        v
        for v in range(graph.num_vertices)
        if graph.genera[v] == 0 and graph.degree(v) + len(graph.legs_at(v)) < 3
    )
    stable_range = 2 * g - 2 + m > 0
    return StabilityReport(
        valid=not bad and stable_range,
        violating_vertices=bad,
        graph_genus=g,
        marks=m,
        stable_range=stable_range,
    )


def num_nodes(graph: StableGraph) -> int:
    """One node of the curve per edge of the graph."""
    return graph.num_edges


def stratum_dim(graph: StableGraph) -> int:
    return 3 * genus(graph) - 3 + graph.m - graph.num_edges


# ---------------------------------------------------------------------------
# isomorphism and canonical form


def _degrees(nv: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    deg = [0] * nv
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _adjacency(edges: Sequence[tuple[int, int]]) -> Counter:
    return Counter(edges)


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


def _iter_vertex_maps(
    genera_a: Sequence[int],
    edges_a: Sequence[tuple[int, int]],
    extra_a: Sequence[tuple],
    genera_b: Sequence[int],
    edges_b: Sequence[tuple[int, int]],
    extra_b: Sequence[tuple],
) -> Iterator[tuple[int, ...]]:
    """All vertex bijections preserving genus, adjacency, and decorations."""
    nv = len(genera_a)
    if len(genera_b) != nv or len(edges_a) != len(edges_b):
        return
    deg_a = _degrees(nv, edges_a)
    deg_b = _degrees(nv, edges_b)
    keys_a = [(genera_a[v], deg_a[v], extra_a[v]) for v in range(nv)]
    keys_b = [(genera_b[v], deg_b[v], extra_b[v]) for v in range(nv)]
    if sorted(keys_a) != sorted(keys_b):
        return
    mult_a = _adjacency(edges_a)
    mult_b = _adjacency(edges_b)
    order = sorted(range(nv), key=lambda v: (keys_a[v], v))
    candidates = {
        v: tuple(w for w in range(nv) if keys_b[w] == keys_a[v]) for v in order
    }
    mapping = [-1] * nv
    used = [False] * nv

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == nv:
            yield tuple(mapping)
            return
        v = order[k]
        for w in candidates[v]:
            if used[w]:
                continue
            if mult_a[(v, v)] != mult_b[(w, w)]:
                continue
            ok = True
            for prev in order[:k]:
                if mult_a[_norm(prev, v)] != mult_b[_norm(mapping[prev], w)]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            yield from rec(k + 1)
            mapping[v] = -1
            used[w] = False

    yield from rec(0)


@dataclass(frozen=True)
class GraphIsomorphism:
    """Witness of an isomorphism: where each vertex and edge goes."""

    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]


def _edge_map(
    edges_a: Sequence[tuple[int, int]],
    edges_b: Sequence[tuple[int, int]],
    vmap: Sequence[int],
) -> tuple[int, ...]:
    slots: dict[tuple[int, int], list[int]] = {}
    for j, pair in enumerate(edges_b):
        slots.setdefault(pair, []).append(j)
    taken: dict[tuple[int, int], int] = {}
    out = []
    for u, v in edges_a:
        pair = _norm(vmap[u], vmap[v])
        k = taken.get(pair, 0)
        taken[pair] = k + 1
        out.append(slots[pair][k])
    return tuple(out)


def _leg_extras(graph: StableGraph, respect: bool) -> list[tuple]:
    if respect:
        return [graph.legs_at(v) for v in range(graph.num_vertices)]
    return [(len(graph.legs_at(v)),) for v in range(graph.num_vertices)]


def iter_graph_isomorphisms(
    a: StableGraph, b: StableGraph, respect_leg_labels: bool = True
) -> Iterator[GraphIsomorphism]:
    if a.m != b.m:
        return
    for vmap in _iter_vertex_maps(
        a.genera,
        a.edges,
        _leg_extras(a, respect_leg_labels),
        b.genera,
        b.edges,
        _leg_extras(b, respect_leg_labels),
    ):
        yield GraphIsomorphism(vmap, _edge_map(a.edges, b.edges, vmap))


def graph_isomorphism(
    a: StableGraph, b: StableGraph, respect_leg_labels: bool = True
) -> GraphIsomorphism | None:
    """First isomorphism in a deterministic search order, or None."""
    return next(iter_graph_isomorphisms(a, b, respect_leg_labels), None)


def _refined_cells(
    genera: Sequence[int],
    edges: Sequence[tuple[int, int]],
    extra: Sequence[tuple],
) -> list[list[int]]:
    """Partition vertices by an isomorphism-invariant key, finest first.

    Starts from (genus, degree, decoration) and refines by the multiset of
    neighbor classes until stable.  Cell order is part of the invariant.
    """
    nv = len(genera)
    deg = _degrees(nv, edges)
    sig: list[tuple] = [(genera[v], deg[v], extra[v]) for v in range(nv)]
    ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
    cur = [ranks[sig[v]] for v in range(nv)]
    while True:
        nbr: list[list[int]] = [[] for _ in range(nv)]
        for u, v in edges:
            nbr[u].append(cur[v])
            nbr[v].append(cur[u])
        new_sig = [(cur[v], tuple(sorted(nbr[v]))) for v in range(nv)]
        ranks = {s: r for r, s in enumerate(sorted(set(new_sig)))}
        new = [ranks[new_sig[v]] for v in range(nv)]
        if new == cur:
            break
        cur = new
    cells: dict[int, list[int]] = {}
    for v in range(nv):
        cells.setdefault(cur[v], []).append(v)
    return [cells[r] for r in sorted(cells)]


_MAX_ORDERINGS = 2_000_000


def _iter_cell_orderings(cells: list[list[int]]) -> Iterator[tuple[int, ...]]:
    total = 1
    for cell in cells:
        for k in range(2, len(cell) + 1):
            total *= k
        if total > _MAX_ORDERINGS:
            raise SizeLimitError("too many vertex orderings to canonicalize")
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        yield tuple(itertools.chain.from_iterable(choice))


def _min_encoding(
    genera: Sequence[int],
    edges: Sequence[tuple[int, int]],
    extra: Sequence[tuple],
    encode: Callable[[Sequence[int]], tuple],
) -> tuple:
    best = None
    for order in _iter_cell_orderings(_refined_cells(genera, edges, extra)):
        enc = encode(order)
        if best is None or enc < best:
            best = enc
    assert best is not None
    return best


def canonical_form(graph: StableGraph) -> StableGraph:
    """A fixed representative of the labeled isomorphism class.

    Idempotent, and equal for any two isomorphic presentations.
    """

    def encode(order: Sequence[int]) -> tuple:
        pos = {old: new for new, old in enumerate(order)}
        genera2 = tuple(graph.genera[old] for old in order)
        edges2 = tuple(sorted(_norm(pos[u], pos[v]) for u, v in graph.edges))
        legs2 = tuple(pos[v] for v in graph.legs)
        return (genera2, edges2, legs2)

    genera2, edges2, legs2 = _min_encoding(
        graph.genera, graph.edges, _leg_extras(graph, True), encode
    )
    return StableGraph(genera2, edges2, legs2)


# ---------------------------------------------------------------------------
# census enumeration


def _genus_tuples(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of ``parts`` nonnegative ints summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    def rec(remaining: int, parts_left: int, low: int) -> Iterator[tuple[int, ...]]:
        if parts_left == 1:
            if remaining >= low:
                yield (remaining,)
            return
        for first in range(low, remaining + 1):
            for rest in rec(remaining - first, parts_left - 1, first):
                yield (first,) + rest
    yield from rec(total, parts, 0)


def _edges_connected(nv: int, edges: Sequence[tuple[int, int]]) -> bool:
    if nv == 1:
        return True
    adj: list[set[int]] = [set() for _ in range(nv)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == nv


def _count_vectors(m: int, needs: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Per-vertex leg counts with the given minimums, summing to m."""
    def rec(idx: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if idx == len(needs) - 1:
            if remaining >= needs[idx]:
                yield (remaining,)
            return
        later_min = sum(needs[idx + 1:])
        for c in range(needs[idx], remaining - later_min + 1):
            for rest in rec(idx + 1, remaining - c):
                yield (c,) + rest
    if not needs:
        if m == 0:
            yield ()
        return
    yield from rec(0, m)


def _shape_classes(
    g: int, m: int, e: int
) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, int], ...]]]:
    """Isomorphism classes of (genera, leg counts, edges) with e edges.

    Vertices are decorated by genus and by how many legs they will carry;
    which labels go where is decided later.  Leg counts already satisfy the
    stability minimums, so every labeling of a shape is stable.
    """
    shapes: set[tuple] = set()
    for nv in range(1, e + 2):
        b1 = e - nv + 1
        if b1 < 0:
            continue
        gsum = g - b1
        if gsum < 0:
            continue
        pairs = [(u, v) for u in range(nv) for v in range(u, nv)]
        for genera in _genus_tuples(gsum, nv):
            for edges in itertools.combinations_with_replacement(pairs, e):
                if not _edges_connected(nv, edges):
                    continue
                deg = _degrees(nv, edges)
                needs = [
                    max(0, 3 - deg[v]) if genera[v] == 0 else 0
                    for v in range(nv)
                ]
                if sum(needs) > m:
                    continue
                for counts in _count_vectors(m, needs):
                    def encode(order: Sequence[int]) -> tuple:
                        pos = {old: new for new, old in enumerate(order)}
                        genera2 = tuple(genera[old] for old in order)
                        counts2 = tuple(counts[old] for old in order)
                        edges2 = tuple(
                            sorted(_norm(pos[u], pos[v]) for u, v in edges)
                        )
                        return (genera2, counts2, edges2)

                    shapes.add(
                        _min_encoding(
                            genera, edges, [(c,) for c in counts], encode
                        )
                    )
    return sorted(shapes)


def _iter_label_assignments(
    counts: Sequence[int], m: int
) -> Iterator[tuple[int, ...]]:
    """All ways to place labels 1..m so vertex v gets counts[v] of them."""
    legs = [0] * m

    def rec(v: int, remaining: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if v == len(counts):
            yield tuple(legs)
            return
        for chosen in itertools.combinations(remaining, counts[v]):
            for k in chosen:
                legs[k - 1] = v
            rest = tuple(x for x in remaining if x not in chosen)
            yield from rec(v + 1, rest)

    yield from rec(0, tuple(range(1, m + 1)))


@dataclass(frozen=True)
class StratumCensus:
    """All isomorphism classes for fixed (g, m), grouped by node count."""

    g: int
    m: int
    classes_by_nodes: dict[int, tuple[StableGraph, ...]]

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.classes_by_nodes.values())

    def counts(self) -> dict[int, int]:
        return {i: len(v) for i, v in self.classes_by_nodes.items()}

    def all_graphs(self) -> Iterator[StableGraph]:
        for i in sorted(self.classes_by_nodes):
            yield from self.classes_by_nodes[i]


def enumerate_stable_graphs(
    g: int,
    m: int,
    *,
    max_dim: int | None = None,
    max_legs: int | None = None,
) -> StratumCensus:
    """Census of stable graph classes of genus g with m legs.

    Generates genus partitions, then edge multisets, then leg
    distributions, deduplicating with ``canonical_form``.  Output order is
    deterministic: by node count, then by canonical encoding.
    """
    if g < 0 or m < 0:
        raise ValueError("g and m must be nonnegative")
    if 2 * g - 2 + m <= 0:
        raise ValueError(f"no stable curves with g={g}, m={m}")
    bound = DEFAULT_MAX_DIM if max_dim is None else max_dim
    dim = 3 * g - 3 + m
    if dim > bound:
        raise SizeLimitError(f"3g-3+m = {dim} exceeds bound {bound}")
    legs_bound = MAX_PERM_DEGREE if max_legs is None else max_legs
    if m > legs_bound:
        raise SizeLimitError(f"m = {m} exceeds bound {legs_bound}")
    classes: dict[int, tuple[StableGraph, ...]] = {}
    for e in range(dim + 1):
        bucket: list[StableGraph] = []
        for genera, counts, edges in _shape_classes(g, m, e):
            extras = [(c,) for c in counts]
            auts = list(
                _iter_vertex_maps(genera, edges, extras, genera, edges, extras)
            )
            for legs in _iter_label_assignments(counts, m):
                if any(
                    tuple(phi[v] for v in legs) < legs for phi in auts
                ):
                    continue
                bucket.append(canonical_form(StableGraph(genera, edges, legs)))
        bucket.sort(key=StableGraph.encoding)
        seen = {gr.encoding() for gr in bucket}
        assert len(seen) == len(bucket), "census produced duplicate classes"
        classes[e] = tuple(bucket)
    return StratumCensus(g, m, classes)


# ---------------------------------------------------------------------------
# splitting off one vertex


@dataclass(frozen=True)
class SplitComponent:
    """One vertex viewed as a curve of its own.

    Original legs keep their relative order and are relabeled 1..a; every
    incident half-edge (two per loop) becomes a fresh leg with a label
    above a.  The fresh labels are mutually interchangeable, recorded as
    the full symmetric group on them (None when there are no marks).
    """

    vertex: int
    genus: int
    marks: int
    graph: StableGraph
    group: "object | None"
    report: StabilityReport

    @property
    def stable(self) -> bool:
        return self.report.valid


def split_component(graph: StableGraph, vertex: int) -> SplitComponent:
    from .perm import symmetric_group_on

    if not 0 <= vertex < graph.num_vertices:
        raise ValueError(f"vertex {vertex} outside 0..{graph.num_vertices - 1}")
    kept = graph.legs_at(vertex)
    half_edges = graph.degree(vertex)
    marks = len(kept) + half_edges
    component = StableGraph(
        (graph.genera[vertex],), (), tuple(0 for _ in range(marks))
    )
    if marks == 0:
        group = None
    else:
        group = symmetric_group_on(range(len(kept) + 1, marks + 1), marks)
    return SplitComponent(
        vertex=vertex,
        genus=graph.genera[vertex],
        marks=marks,
        graph=component,
        group=group,
        report=check_stability(component),
    )


# ---------------------------------------------------------------------------
# Hilbert numerology for the pluricanonical embedding


@dataclass(frozen=True)
class HilbertNumerology:
    """Degree data of an n-canonical embedding of a stable marked curve.

    The Hilbert polynomial is ``leading * t + constant`` with
    ``leading = (2g - 2 + m) * n`` and ``constant = 1 - g``; the ambient
    projective space has dimension ``(2g - 2 + m) * n - g`` and the
    pushforward sheaf has rank one more than that.
    """

    g: int
    n: int
    m: int
    leading: int
    constant: int
    ambient_dim: int
    rank: int

    def polynomial_str(self) -> str:
        if self.constant == 0:
            return f"{self.leading}t"
        sign = "+" if self.constant > 0 else "-"
        return f"{self.leading}t{sign}{abs(self.constant)}"


def hilbert_numerology(g: int, n: int, m: int) -> HilbertNumerology:
    if g < 0 or m < 0:
        raise ValueError("g and m must be nonnegative")
    if n < 3:
        raise ValueError("n must be at least 3")
    if 2 * g - 2 + m <= 0:
        raise ValueError(f"no stable curves with g={g}, m={m}")
    leading = (2 * g - 2 + m) * n
    ambient = leading - g
    return HilbertNumerology(
        g=g,
        n=n,
        m=m,
        leading=leading,
        constant=1 - g,
        ambient_dim=ambient,
        rank=ambient + 1,
    )


# ---------------------------------------------------------------------------
# JSON documents


def dumps(doc: dict) -> str:
    """Serialize with fixed key order and a trailing newline."""
    return json.dumps(doc, indent=2) + "\n"


def graph_to_doc(graph: StableGraph) -> dict:
    """Graph document with explicit half-edge ids ``v<i>.h<k>``.

    Half-edge indices count up per vertex in edge order, so the document
    is a pure function of the graph.
    """
    counters = [0] * graph.num_vertices

    def half(v: int) -> str:
        k = counters[v]
        counters[v] += 1
        return f"v{v}.h{k}"

    edges = [[half(u), half(v)] for u, v in graph.edges]
    return {
        "format": GRAPH_FORMAT,
        "vertices": [{"genus": g} for g in graph.genera],
        "edges": edges,
        "legs": [
            {"label": k + 1, "vertex": f"v{v}"}
            for k, v in enumerate(graph.legs)
        ],
    }


def _parse_half_edge(text: object, nv: int, where: str) -> tuple[int, int]:
    if not isinstance(text, str) or "." not in text:
        raise ValueError(f"{where}: expected 'v<i>.h<k>', got {text!r}")
    vpart, _, hpart = text.partition(".")
    if not (vpart.startswith("v") and hpart.startswith("h")):
        raise ValueError(f"{where}: expected 'v<i>.h<k>', got {text!r}")
    try:
        v = int(vpart[1:])
        h = int(hpart[1:])
    except ValueError:
        raise ValueError(f"{where}: expected 'v<i>.h<k>', got {text!r}") from None
    if not 0 <= v < nv:
        raise ValueError(f"{where}: vertex v{v} does not exist")
    return v, h


def graph_from_doc(doc: object) -> StableGraph:
    if not isinstance(doc, dict):
        raise ValueError("graph document must be a JSON object")
    if doc.get("format") != GRAPH_FORMAT:
        raise ValueError(f"format: expected {GRAPH_FORMAT!r}, got {doc.get('format')!r}")
    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        raise ValueError("vertices: expected a nonempty list")
    genera = []
    for i, rec in enumerate(vertices):
        if not isinstance(rec, dict) or not isinstance(rec.get("genus"), int):
            raise ValueError(f"vertices[{i}]: expected an object with integer 'genus'")
        genera.append(rec["genus"])
    nv = len(genera)
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ValueError("edges: expected a list")
    seen_halves: set[tuple[int, int]] = set()
    edges = []
    for j, pair in enumerate(raw_edges):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"edges[{j}]: expected a pair of half-edge ids")
        ends = []
        for part in pair:
            v, h = _parse_half_edge(part, nv, f"edges[{j}]")
            if (v, h) in seen_halves:
                raise ValueError(f"edges[{j}]: half-edge {part} used twice")
            seen_halves.add((v, h))
            ends.append(v)
        edges.append((ends[0], ends[1]))
    raw_legs = doc.get("legs", [])
    if not isinstance(raw_legs, list):
        raise ValueError("legs: expected a list")
    by_label: dict[int, int] = {}
    for j, rec in enumerate(raw_legs):
        if not isinstance(rec, dict):
            raise ValueError(f"legs[{j}]: expected an object")
        label = rec.get("label")
        vtx = rec.get("vertex")
        if not isinstance(label, int) or label < 1:
            raise ValueError(f"legs[{j}]: 'label' must be a positive integer")
        if label in by_label:
            raise ValueError(f"legs[{j}]: label {label} repeated")
        if not isinstance(vtx, str) or not vtx.startswith("v"):
            raise ValueError(f"legs[{j}]: 'vertex' must look like 'v<i>'")
        try:
            v = int(vtx[1:])
        except ValueError:
            raise ValueError(f"legs[{j}]: 'vertex' must look like 'v<i>'") from None
        if not 0 <= v < nv:
            raise ValueError(f"legs[{j}]: vertex {vtx} does not exist")
        by_label[label] = v
    m = len(by_label)
    if by_label and sorted(by_label) != list(range(1, m + 1)):
        raise ValueError(f"legs: labels must be exactly 1..{m}")
    legs = tuple(by_label[k] for k in range(1, m + 1))
    return StableGraph(tuple(genera), tuple(edges), legs)


def census_to_doc(census: StratumCensus) -> dict:
    return {
        "format": CENSUS_FORMAT,
        "g": census.g,
        "m": census.m,
        "total": census.total,
        "classes_by_nodes": {
            str(i): [graph_to_doc(gr) for gr in census.classes_by_nodes[i]]
            for i in sorted(census.classes_by_nodes)
        },
    }

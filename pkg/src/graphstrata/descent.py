"""Finite models of marked-point data spread over a covering.

A marking that is only well defined up to a group of label swaps cannot,
in general, be written as honest sections of a family; it exists as
charts over a finite cover of the base, compatible up to the group.  This
module models the situation with finite sets:

* a ``FiniteCover`` is a surjection u from a cover set onto a base set;
* a ``ChartedMarking`` attaches to each base point s its distinguished
  fiber points D_s, and to each cover point s' an injective sequence
  sigma(s') of m of those points, the chart at s'.

``verify_star`` checks the compatibility condition: for every pair s', s''
over the same base point there is a group element gamma with
sigma_i(s') = sigma_{gamma(i)}(s'') for all i.  Injectivity makes the
witness unique, and the witnesses compose along triples.  When the
condition holds, each distinguished point acquires a well-defined class:
the orbit of its chart index (``class_function``).

Charted markings over richer covers can restate the same data
(``dominates``); two markings are the same marking class when a chart on
the fiber product restates both (``equivalent``).  A fiberwise map between
two such objects is a morphism when, at every point of a common
refinement, it carries charts to charts up to a group element
(``verify_morphism``); the report also evaluates the coarser criterion
that classes of distinguished points are preserved, and says whether the
two verdicts agree.  They agree whenever the group is the full product of
symmetric groups on its label orbits; for smaller groups the chart
criterion is strictly finer, and the report makes the disagreement
visible rather than hiding it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .perm import PermGroup, Permutation, group_from_generators, orbit_of_label, parse_generators

__all__ = [
    "FiniteCover",
    "ChartedMarking",
    "FiberMorphism",
    "StarReport",
    "DominationReport",
    "EquivalenceWitness",
    "MorphismReport",
    "verify_star",
    "class_function",
    "dominates",
    "equivalent",
    "verify_morphism",
    "globalize_trivial_group",
    "FormatError",
    "parse_marking_document",
    "parse_morphism_document",
    "format_marking",
    "render_star_report",
    "render_morphism_report",
    "render_equivalence",
    "orbit_label",
]


@dataclass(frozen=True)
class FiniteCover:
    """A surjection ``down`` from the cover set onto the base set."""

    base: tuple[str, ...]
    cover: tuple[str, ...]
    down: dict[str, str]

    def __post_init__(self) -> None:
        if not self.base:
            raise ValueError("base must be nonempty")
        if len(set(self.base)) != len(self.base):
            raise ValueError("base points must be distinct")
        if len(set(self.cover)) != len(self.cover):
            raise ValueError("cover points must be distinct")
        base_set = set(self.base)
        for c in self.cover:
            if c not in self.down:
                raise ValueError(f"cover point {c} has no image")
            if self.down[c] not in base_set:
                raise ValueError(f"cover point {c} maps outside the base")
        if set(self.down) != set(self.cover):
            raise ValueError("down map keys must be exactly the cover points")
        if set(self.down.values()) != base_set:
            raise ValueError("cover must surject onto the base")

    def fiber(self, s: str) -> tuple[str, ...]:
        return tuple(c for c in self.cover if self.down[c] == s)


@dataclass(frozen=True)
class ChartedMarking:
    """Charts sigma over a finite cover, one injective m-sequence per point."""

    cover: FiniteCover
    m: int
    group: PermGroup
    fiber_points: dict[str, tuple[str, ...]]
    sigma: dict[str, tuple[str, ...]]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be positive")
        if self.group.degree != self.m:
            raise ValueError(
                f"group degree {self.group.degree} does not match m = {self.m}"
            )
        if set(self.fiber_points) != set(self.cover.base):
            raise ValueError("fiber_points must cover exactly the base points")
        seen: dict[str, str] = {}
        for s, points in self.fiber_points.items():
            if len(set(points)) != len(points):
                raise ValueError(f"fiber over {s} repeats a point")
            for p in points:
                if p in seen:
                    raise ValueError(
                        f"point id {p} appears over both {seen[p]} and {s}"
                    )
                seen[p] = s
        if set(self.sigma) != set(self.cover.cover):
            raise ValueError("sigma must be defined on exactly the cover points")
        for c, seq in self.sigma.items():
            if len(seq) != self.m:
                raise ValueError(f"sigma({c}) must list m = {self.m} points")
            if len(set(seq)) != self.m:
                raise ValueError(f"sigma({c}) must be injective")
            allowed = set(self.fiber_points[self.cover.down[c]])
            for p in seq:
                if p not in allowed:
                    raise ValueError(
                        f"sigma({c}) uses {p}, not a fiber point over {self.cover.down[c]}"
                    )


def _match(
    seq_a: Sequence[str], seq_b: Sequence[str]
) -> Permutation | None:
    """The unique j with seq_a[i-1] == seq_b[j(i)-1], if one exists."""
    pos = {p: k + 1 for k, p in enumerate(seq_b)}
    images = []
    for p in seq_a:
        if p not in pos:
            return None
        images.append(pos[p])
    return Permutation(tuple(images))


@dataclass(frozen=True)
class StarReport:
    """Outcome of the chart compatibility check.

    ``witnesses`` maps each ordered same-fiber pair to its relabeling;
    ``missing`` lists pairs with no relabeling in the group; ``unmarked``
    lists declared fiber points no chart ever marks.  ``unique`` and
    ``coherent`` record the exhaustive uniqueness scan and the composition
    law over triples.
    """

    valid: bool
    witnesses: dict[tuple[str, str], Permutation]
    missing: tuple[tuple[str, str], ...]
    unmarked: dict[str, tuple[str, ...]]
    unique: bool
    coherent: bool


def verify_star(marking: ChartedMarking) -> StarReport:
    group = marking.group
    witnesses: dict[tuple[str, str], Permutation] = {}
    missing: list[tuple[str, str]] = []
    unique = True
    for s in marking.cover.base:
        fiber = marking.cover.fiber(s)
        for a in fiber:
            for b in fiber:
                j = _match(marking.sigma[a], marking.sigma[b])
                if j is not None and j in group:
                    witnesses[(a, b)] = j
                    count = sum(
                        1
                        for g in group
                        if all(
                            marking.sigma[a][i - 1]
                            == marking.sigma[b][g(i) - 1]
                            for i in range(1, marking.m + 1)
                        )
                    )
                    if count != 1:
                        unique = False
                else:
                    missing.append((a, b))
    unmarked: dict[str, tuple[str, ...]] = {}
    for s in marking.cover.base:
        hit: set[str] = set()
        for c in marking.cover.fiber(s):
            hit.update(marking.sigma[c])
        extra = tuple(p for p in marking.fiber_points[s] if p not in hit)
        if extra:
            unmarked[s] = extra
    coherent = True
    for s in marking.cover.base:
        fiber = marking.cover.fiber(s)
        for a in fiber:
            w = witnesses.get((a, a))
            if w is not None and not w.is_identity():
                coherent = False
        for a in fiber:
            for b in fiber:
                for c in fiber:
                    wab = witnesses.get((a, b))
                    wbc = witnesses.get((b, c))
                    wac = witnesses.get((a, c))
                    if None in (wab, wbc, wac):
                        continue
                    # sigma(a) = sigma(b) o w_ab forces w_ac = w_bc o w_ab.
                    if wbc * wab != wac:
                        coherent = False
    return StarReport(
        valid=not missing and not unmarked,
        witnesses=witnesses,
        missing=tuple(missing),
        unmarked=unmarked,
        unique=unique,
        coherent=coherent,
    )


def class_function(marking: ChartedMarking) -> dict[str, frozenset[int]]:
    """Orbit of the chart index, per distinguished point.

    Defined only when the compatibility condition holds; then the orbit
    does not depend on which chart exhibits the point.
    """
    report = verify_star(marking)
    if not report.valid:
        raise ValueError("charts are incompatible; classes are undefined")
    classes: dict[str, frozenset[int]] = {}
    for c in marking.cover.cover:
        for i, p in enumerate(marking.sigma[c], start=1):
            orbit = orbit_of_label(marking.group, i)
            if p in classes and classes[p] != orbit:
                raise AssertionError(f"class of {p} depends on the chart")
            classes[p] = orbit
    return classes


def orbit_label(orbit: frozenset[int]) -> str:
    return f"[{min(orbit)}]"


@dataclass(frozen=True)
class DominationReport:
    """Per fine cover point, the relabeling onto the coarse chart."""

    valid: bool
    witnesses: dict[str, Permutation]
    missing: tuple[str, ...]


def _require_same_setting(a: ChartedMarking, b: ChartedMarking) -> None:
    if set(a.cover.base) != set(b.cover.base):
        raise ValueError("markings live over different bases")
    if a.m != b.m:
        raise ValueError("markings have different m")
    if a.group != b.group:
        raise ValueError("markings carry different groups")
    for s in a.cover.base:
        if set(a.fiber_points[s]) != set(b.fiber_points[s]):
            raise ValueError(f"markings disagree on the fiber over {s}")


def dominates(
    fine: ChartedMarking, coarse: ChartedMarking, down: Mapping[str, str]
) -> DominationReport:
    """Check that ``fine`` restates ``coarse`` through the cover map ``down``."""
    _require_same_setting(fine, coarse)
    if set(down) != set(fine.cover.cover):
        raise ValueError("down map must be defined on exactly the fine cover")
    if set(down.values()) != set(coarse.cover.cover):
        raise ValueError("down map must surject onto the coarse cover")
    for c in fine.cover.cover:
        if coarse.cover.down[down[c]] != fine.cover.down[c]:
            raise ValueError(f"down map does not commute over {c}")
    witnesses: dict[str, Permutation] = {}
    missing: list[str] = []
    for c in fine.cover.cover:
        j = _match(fine.sigma[c], coarse.sigma[down[c]])
        if j is not None and j in fine.group:
            witnesses[c] = j
        else:
            missing.append(c)
    return DominationReport(
        valid=not missing, witnesses=witnesses, missing=tuple(missing)
    )


@dataclass(frozen=True)
class EquivalenceWitness:
    """A chart on the fiber product restating both markings."""

    refinement: ChartedMarking
    to_first: dict[str, str]
    to_second: dict[str, str]
    star: StarReport
    dom_first: DominationReport
    dom_second: DominationReport


def _fiber_product_points(
    c1: ChartedMarking, c2: ChartedMarking
) -> list[tuple[str, str]]:
    return [
        (a, b)
        for a in c1.cover.cover
        for b in c2.cover.cover
        if c1.cover.down[a] == c2.cover.down[b]
    ]


def equivalent(
    c1: ChartedMarking, c2: ChartedMarking
) -> EquivalenceWitness | None:
    """Search the fiber product for a chart dominating both markings.

    Both candidate charts (pull back the first marking, pull back the
    second) are tried in that order; the first that passes all three
    checks is returned.
    """
    _require_same_setting(c1, c2)
    pairs = _fiber_product_points(c1, c2)
    names = [f"{a}*{b}" for a, b in pairs]
    assert len(set(names)) == len(names), "cover point names collide"
    base = tuple(c1.cover.base)
    down = {name: c1.cover.down[a] for name, (a, b) in zip(names, pairs)}
    cover = FiniteCover(base, tuple(names), down)
    to_first = {name: a for name, (a, b) in zip(names, pairs)}
    to_second = {name: b for name, (a, b) in zip(names, pairs)}
    for pull in (
        {name: c1.sigma[a] for name, (a, b) in zip(names, pairs)},
        {name: c2.sigma[b] for name, (a, b) in zip(names, pairs)},
    ):
        refinement = ChartedMarking(
            cover=cover,
            m=c1.m,
            group=c1.group,
            fiber_points=dict(c1.fiber_points),
            sigma=pull,
        )
        star = verify_star(refinement)
        if not star.valid:
            continue
        dom1 = dominates(refinement, c1, to_first)
        if not dom1.valid:
            continue
        dom2 = dominates(refinement, c2, to_second)
        if not dom2.valid:
            continue
        return EquivalenceWitness(
            refinement=refinement,
            to_first=to_first,
            to_second=to_second,
            star=star,
            dom_first=dom1,
            dom_second=dom2,
        )
    return None


@dataclass(frozen=True)
class FiberMorphism:
    """A base map with one bijection of distinguished fibers per base point."""

    base_map: dict[str, str]
    fiber_maps: dict[str, dict[str, str]]


@dataclass(frozen=True)
class MorphismReport:
    """Chart verdict, class verdict, and whether they agree.

    ``valid`` is the chart criterion: at every point of the common
    refinement the fiber map carries the source chart onto the target
    chart up to a group element.  ``classes_preserved`` is the coarser
    criterion that each distinguished point keeps its class.
    """

    valid: bool
    witnesses: dict[tuple[str, str], Permutation]
    missing: tuple[tuple[str, str], ...]
    classes_preserved: bool
    class_violations: tuple[tuple[str, str], ...]
    verdicts_agree: bool


def verify_morphism(
    hm: FiberMorphism, c1: ChartedMarking, c2: ChartedMarking
) -> MorphismReport:
    if c1.m != c2.m:
        raise ValueError("markings have different m")
    if c1.group != c2.group:
        raise ValueError("markings carry different groups")
    if not verify_star(c1).valid or not verify_star(c2).valid:
        raise ValueError("both markings must pass the compatibility check")
    if set(hm.base_map) != set(c1.cover.base):
        raise ValueError("base map must be defined on exactly the source base")
    for s, t in hm.base_map.items():
        if t not in set(c2.cover.base):
            raise ValueError(f"base map sends {s} outside the target base")
    if set(hm.fiber_maps) != set(c1.cover.base):
        raise ValueError("fiber maps must be defined on exactly the source base")
    for s in c1.cover.base:
        fm = hm.fiber_maps[s]
        src = c1.fiber_points[s]
        dst = c2.fiber_points[hm.base_map[s]]
        if set(fm) != set(src):
            raise ValueError(f"fiber map over {s} must be defined on its fiber")
        if sorted(fm.values()) != sorted(set(fm.values())) or set(
            fm.values()
        ) != set(dst):
            raise ValueError(f"fiber map over {s} must biject onto the target fiber")
    witnesses: dict[tuple[str, str], Permutation] = {}
    missing: list[tuple[str, str]] = []
    for a in c1.cover.cover:
        s = c1.cover.down[a]
        for b in c2.cover.cover:
            if c2.cover.down[b] != hm.base_map[s]:
                continue
            mapped = tuple(hm.fiber_maps[s][p] for p in c1.sigma[a])
            j = _match(mapped, c2.sigma[b])
            if j is not None and j in c1.group:
                witnesses[(a, b)] = j
            else:
                missing.append((a, b))
    classes1 = class_function(c1)
    classes2 = class_function(c2)
    violations: list[tuple[str, str]] = []
    for s in c1.cover.base:
        for p in c1.fiber_points[s]:
            q = hm.fiber_maps[s][p]
            if classes2.get(q) != classes1[p]:
                violations.append((p, q))
    valid = not missing
    preserved = not violations
    return MorphismReport(
        valid=valid,
        witnesses=witnesses,
        missing=tuple(missing),
        classes_preserved=preserved,
        class_violations=tuple(violations),
        verdicts_agree=valid == preserved,
    )


def globalize_trivial_group(marking: ChartedMarking) -> ChartedMarking:
    """With a trivial group, valid charts glue to one chart over the base."""
    if marking.group.order != 1:
        raise ValueError("globalization needs the trivial group")
    if not verify_star(marking).valid:
        raise ValueError("charts are incompatible; nothing globalizes")
    sigma: dict[str, tuple[str, ...]] = {}
    for s in marking.cover.base:
        fiber = marking.cover.fiber(s)
        sigma[s] = marking.sigma[fiber[0]]
        for c in fiber[1:]:
            assert marking.sigma[c] == sigma[s]
    identity_cover = FiniteCover(
        marking.cover.base,
        marking.cover.base,
        {s: s for s in marking.cover.base},
    )
    return ChartedMarking(
        cover=identity_cover,
        m=marking.m,
        group=marking.group,
        fiber_points=dict(marking.fiber_points),
        sigma=sigma,
    )


# ---------------------------------------------------------------------------
# text documents


class FormatError(ValueError):
    """Parse failure anchored to a file and line."""

    def __init__(self, filename: str, line: int, message: str) -> None:
        super().__init__(f"{filename}:{line}: {message}")
        self.filename = filename
        self.line = line
        self.message = message


_ID_RE = re.compile(r"[A-Za-z0-9_.+-]+\Z")
_SECTION_RE = re.compile(r"\[\s*([a-z]+(?:\s+[a-z]+)?)\s*\]\Z")


def _check_id(token: str, filename: str, line: int) -> str:
    if not _ID_RE.match(token):
        raise FormatError(filename, line, f"bad identifier {token!r}")
    return token


def _split_sections(
    text: str, filename: str
) -> list[tuple[str, int, list[tuple[int, str]]]]:
    sections: list[tuple[str, int, list[tuple[int, str]]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _SECTION_RE.match(line)
        if match:
            sections.append((match.group(1), lineno, []))
            continue
        if not sections:
            raise FormatError(filename, lineno, "content before any [section]")
        sections[-1][2].append((lineno, line))
    return sections


def _parse_arrow_list(
    value: str, filename: str, line: int
) -> list[tuple[str, str]]:
    out = []
    for part in value.split(","):
        part = part.strip()
        if not part:
            raise FormatError(filename, line, "empty entry in list")
        pieces = part.split("->")
        if len(pieces) != 2:
            raise FormatError(filename, line, f"expected 'a -> b', got {part!r}")
        out.append(
            (
                _check_id(pieces[0].strip(), filename, line),
                _check_id(pieces[1].strip(), filename, line),
            )
        )
    return out


def _parse_marking_section(
    lines: list[tuple[int, str]], header_line: int, filename: str
) -> ChartedMarking:
    m: int | None = None
    group_text: tuple[int, str] | None = None
    base: tuple[str, ...] | None = None
    cover_entries: list[tuple[str, str]] | None = None
    fibers: dict[str, tuple[str, ...]] = {}
    sigmas: dict[str, tuple[str, ...]] = {}
    for lineno, line in lines:
        if "=" not in line:
            raise FormatError(filename, lineno, f"expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key_parts = key.split()
        value = value.strip()
        if key_parts == ["m"]:
            if m is not None:
                raise FormatError(filename, lineno, "duplicate 'm'")
            try:
                m = int(value)
            except ValueError:
                raise FormatError(filename, lineno, f"m must be an integer, got {value!r}") from None
        elif key_parts == ["group"]:
            if group_text is not None:
                raise FormatError(filename, lineno, "duplicate 'group'")
            group_text = (lineno, value)
        elif key_parts == ["base"]:
            if base is not None:
                raise FormatError(filename, lineno, "duplicate 'base'")
            base = tuple(_check_id(tok, filename, lineno) for tok in value.split())
        elif key_parts == ["cover"]:
            if cover_entries is not None:
                raise FormatError(filename, lineno, "duplicate 'cover'")
            cover_entries = _parse_arrow_list(value, filename, lineno)
        elif len(key_parts) == 2 and key_parts[0] == "fiber":
            name = _check_id(key_parts[1], filename, lineno)
            if name in fibers:
                raise FormatError(filename, lineno, f"duplicate 'fiber {name}'")
            fibers[name] = tuple(
                _check_id(tok, filename, lineno) for tok in value.split()
            )
        elif len(key_parts) == 2 and key_parts[0] == "sigma":
            name = _check_id(key_parts[1], filename, lineno)
            if name in sigmas:
                raise FormatError(filename, lineno, f"duplicate 'sigma {name}'")
            sigmas[name] = tuple(
                _check_id(tok, filename, lineno) for tok in value.split()
            )
        else:
            raise FormatError(filename, lineno, f"unknown key {key.strip()!r}")
    if m is None:
        raise FormatError(filename, header_line, "missing 'm = <int>'")
    if base is None:
        raise FormatError(filename, header_line, "missing 'base = <points>'")
    if cover_entries is None:
        raise FormatError(filename, header_line, "missing 'cover = <point> -> <base>, ...'")
    if group_text is None:
        generators: tuple[Permutation, ...] = ()
        group_line = header_line
    else:
        group_line, raw = group_text
        try:
            generators = parse_generators(raw, m)
        except ValueError as exc:
            raise FormatError(filename, group_line, str(exc)) from None
    try:
        group = group_from_generators(m, generators)
        cover = FiniteCover(
            base,
            tuple(c for c, _ in cover_entries),
            dict(cover_entries),
        )
        return ChartedMarking(
            cover=cover, m=m, group=group, fiber_points=fibers, sigma=sigmas
        )
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(filename, header_line, str(exc)) from None


def parse_marking_document(text: str, filename: str = "<input>") -> ChartedMarking:
    sections = _split_sections(text, filename)
    if len(sections) != 1 or sections[0][0] != "marking":
        raise FormatError(filename, 1, "expected exactly one [marking] section")
    _, header_line, lines = sections[0]
    return _parse_marking_section(lines, header_line, filename)


def parse_morphism_document(
    text: str, filename: str = "<input>"
) -> tuple[FiberMorphism, ChartedMarking, ChartedMarking]:
    sections = {name: (line, body) for name, line, body in _split_sections(text, filename)}
    expected = {"marking source", "marking target", "morphism"}
    if set(sections) != expected:
        raise FormatError(
            filename,
            1,
            "expected sections [marking source], [marking target], [morphism]",
        )
    src_line, src_body = sections["marking source"]
    tgt_line, tgt_body = sections["marking target"]
    source = _parse_marking_section(src_body, src_line, filename)
    target = _parse_marking_section(tgt_body, tgt_line, filename)
    mor_line, mor_body = sections["morphism"]
    base_map: dict[str, str] | None = None
    fiber_maps: dict[str, dict[str, str]] = {}
    for lineno, line in mor_body:
        if "=" not in line:
            raise FormatError(filename, lineno, f"expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key_parts = key.split()
        if key_parts == ["h"]:
            if base_map is not None:
                raise FormatError(filename, lineno, "duplicate 'h'")
            base_map = dict(_parse_arrow_list(value.strip(), filename, lineno))
        elif len(key_parts) == 2 and key_parts[0] == "map":
            name = _check_id(key_parts[1], filename, lineno)
            if name in fiber_maps:
                raise FormatError(filename, lineno, f"duplicate 'map {name}'")
            fiber_maps[name] = dict(
                _parse_arrow_list(value.strip(), filename, lineno)
            )
        else:
            raise FormatError(filename, lineno, f"unknown key {key.strip()!r}")
    if base_map is None:
        raise FormatError(filename, mor_line, "missing 'h = <base> -> <base>, ...'")
    return FiberMorphism(base_map=base_map, fiber_maps=fiber_maps), source, target


def format_marking(marking: ChartedMarking, name: str = "marking") -> str:
    lines = [f"[{name}]"]
    lines.append(f"m = {marking.m}")
    lines.append(f"group = {marking.group.generator_string()}")
    lines.append("base = " + " ".join(marking.cover.base))
    lines.append(
        "cover = "
        + ", ".join(f"{c} -> {marking.cover.down[c]}" for c in marking.cover.cover)
    )
    for s in marking.cover.base:
        lines.append(f"fiber {s} = " + " ".join(marking.fiber_points[s]))
    for c in marking.cover.cover:
        lines.append(f"sigma {c} = " + " ".join(marking.sigma[c]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# report rendering


def render_star_report(marking: ChartedMarking, report: StarReport) -> str:
    lines = []
    for s in marking.cover.base:
        fiber = marking.cover.fiber(s)
        for a in fiber:
            for b in fiber:
                w = report.witnesses.get((a, b))
                if w is None:
                    lines.append(f"({a}, {b}): NO WITNESS")
                else:
                    lines.append(f"({a}, {b}): gamma = {w.cycle_string()}")
    for s in marking.cover.base:
        if s in report.unmarked:
            lines.append(
                f"fiber {s}: unmarked points " + " ".join(report.unmarked[s])
            )
    if report.valid:
        classes = class_function(marking)
        for s in marking.cover.base:
            for p in marking.fiber_points[s]:
                lines.append(f"class({p}) = {orbit_label(classes[p])}")
    lines.append("VALID" if report.valid else "INVALID")
    return "\n".join(lines) + "\n"


def render_equivalence(
    c1: ChartedMarking, c2: ChartedMarking, witness: EquivalenceWitness | None
) -> str:
    if witness is None:
        return "NOT EQUIVALENT\n"
    lines = [f"refinement: {len(witness.refinement.cover.cover)} cover points"]
    for name in witness.refinement.cover.cover:
        left = witness.dom_first.witnesses[name].cycle_string()
        right = witness.dom_second.witnesses[name].cycle_string()
        lines.append(f"({name}): left gamma = {left}, right gamma = {right}")
    lines.append("EQUIVALENT")
    return "\n".join(lines) + "\n"


def render_morphism_report(
    hm: FiberMorphism,
    c1: ChartedMarking,
    c2: ChartedMarking,
    report: MorphismReport,
) -> str:
    lines = []
    for a in c1.cover.cover:
        s = c1.cover.down[a]
        for b in c2.cover.cover:
            if c2.cover.down[b] != hm.base_map[s]:
                continue
            w = report.witnesses.get((a, b))
            if w is None:
                lines.append(f"({a}*{b}): NO WITNESS")
            else:
                lines.append(f"({a}*{b}): gamma = {w.cycle_string()}")
    lines.append(f"charts: {'VALID' if report.valid else 'INVALID'}")
    lines.append(
        f"classes preserved: {'yes' if report.classes_preserved else 'no'}"
    )
    for p, q in report.class_violations:
        lines.append(f"class violation: {p} -> {q}")
    lines.append(f"verdicts agree: {'yes' if report.verdicts_agree else 'no'}")
    lines.append("VALID" if report.valid else "INVALID")
    return "\n".join(lines) + "\n"

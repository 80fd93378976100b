import itertools

import pytest

from graphstrata.descent import (
    ChartedMarking,
    FiberMorphism,
    FiniteCover,
    FormatError,
    class_function,
    dominates,
    equivalent,
    format_marking,
    globalize_trivial_group,
    parse_marking_document,
    parse_morphism_document,
    render_morphism_report,
    render_star_report,
    verify_morphism,
    verify_star,
)
from graphstrata.perm import (
    Permutation,
    group_from_generators,
    parse_generators,
    parse_permutation,
    symmetric_group,
)


def make_group(gens, m):
    return group_from_generators(m, parse_generators(gens, m))


def single_chart(sigma, gens="(1 2),(3 4)", m=4, cover_point="s"):
    """One base point, one cover point, four distinguished points."""
    return ChartedMarking(
        cover=FiniteCover(("x",), (cover_point,), {cover_point: "x"}),
        m=m,
        group=make_group(gens, m),
        fiber_points={"x": ("p1", "p2", "p3", "p4")[:4]},
        sigma={cover_point: sigma},
    )


# ---------------------------------------------------------------------------
# construction


def test_cover_validation():
    with pytest.raises(ValueError):
        FiniteCover((), ("a",), {"a": "x"})
    with pytest.raises(ValueError):
        FiniteCover(("x",), ("a",), {"a": "y"})
    with pytest.raises(ValueError):
        FiniteCover(("x", "y"), ("a",), {"a": "x"})  # y uncovered
    with pytest.raises(ValueError):
        FiniteCover(("x", "x"), ("a",), {"a": "x"})
    cover = FiniteCover(("x", "y"), ("a", "b", "c"), {"a": "x", "b": "y", "c": "x"})
    assert cover.fiber("x") == ("a", "c")


def test_marking_validation():
    with pytest.raises(ValueError):
        single_chart(("p1", "p1", "p3", "p4"))  # repeated point
    with pytest.raises(ValueError):
        single_chart(("p1", "p2", "p3"))  # wrong length
    with pytest.raises(ValueError):
        single_chart(("p1", "p2", "p3", "q9"))  # outside the fiber
    with pytest.raises(ValueError):
        single_chart(("p1", "p2", "p3", "p4"), gens="(1 2)", m=3)
    cover = FiniteCover(("x", "y"), ("a", "b"), {"a": "x", "b": "y"})
    with pytest.raises(ValueError):
        ChartedMarking(
            cover=cover,
            m=1,
            group=make_group("", 1),
            fiber_points={"x": ("p",), "y": ("p",)},  # id reused across fibers
            sigma={"a": ("p",), "b": ("p",)},
        )


# ---------------------------------------------------------------------------
# chart compatibility


def test_intro_marking_is_valid(intro_marking):
    report = verify_star(intro_marking)
    assert report.valid
    assert report.unique
    assert report.coherent
    assert report.missing == ()
    assert report.witnesses[("s1", "s2")] == parse_permutation("(1 2)(3 4)", 4)
    assert report.witnesses[("s2", "s1")] == parse_permutation("(1 2)(3 4)", 4)
    assert report.witnesses[("s1", "s1")].is_identity()


def test_intro_fails_with_smaller_group(intro_small_group_marking):
    report = verify_star(intro_small_group_marking)
    assert not report.valid
    assert set(report.missing) == {("s1", "s2"), ("s2", "s1")}


def test_identity_cover_valid_with_identity_witnesses():
    marking = single_chart(("p1", "p2", "p3", "p4"))
    report = verify_star(marking)
    assert report.valid
    assert all(w.is_identity() for w in report.witnesses.values())


def test_unmarked_points_invalidate():
    cover = FiniteCover(("x",), ("s",), {"s": "x"})
    marking = ChartedMarking(
        cover=cover,
        m=2,
        group=make_group("", 2),
        fiber_points={"x": ("p1", "p2", "p3")},
        sigma={"s": ("p1", "p2")},
    )
    report = verify_star(marking)
    assert not report.valid
    assert report.unmarked == {"x": ("p3",)}
    with pytest.raises(ValueError):
        class_function(marking)


def test_witness_coherence_across_triples():
    # three sheets over one point, pairwise twisted inside the group
    cover = FiniteCover(("x",), ("a", "b", "c"), {"a": "x", "b": "x", "c": "x"})
    marking = ChartedMarking(
        cover=cover,
        m=4,
        group=symmetric_group(4),
        fiber_points={"x": ("p1", "p2", "p3", "p4")},
        sigma={
            "a": ("p1", "p2", "p3", "p4"),
            "b": ("p2", "p3", "p1", "p4"),
            "c": ("p2", "p1", "p4", "p3"),
        },
    )
    report = verify_star(marking)
    assert report.valid and report.coherent and report.unique
    w = report.witnesses
    for s, t, u in itertools.product("abc", repeat=3):
        assert w[(t, u)] * w[(s, t)] == w[(s, u)]


def test_class_function_values(intro_marking):
    classes = class_function(intro_marking)
    assert classes["p1"] == classes["p2"] == frozenset({1, 2})
    assert classes["p3"] == classes["p4"] == frozenset({3, 4})


def test_class_function_trivial_group():
    marking = single_chart(("p1", "p2", "p3", "p4"), gens="")
    classes = class_function(marking)
    assert classes == {
        "p1": frozenset({1}),
        "p2": frozenset({2}),
        "p3": frozenset({3}),
        "p4": frozenset({4}),
    }


def test_class_function_full_symmetric_group():
    marking = single_chart(("p3", "p1", "p4", "p2"), gens="(1 2),(2 3),(3 4)")
    classes = class_function(marking)
    assert set(classes.values()) == {frozenset({1, 2, 3, 4})}


def test_star_report_rendering(intro_marking):
    text = render_star_report(intro_marking, verify_star(intro_marking))
    assert "(s1, s2): gamma = (1 2)(3 4)" in text
    assert "class(p1) = [1]" in text
    assert "class(p4) = [3]" in text
    assert text.endswith("VALID\n")


# ---------------------------------------------------------------------------
# domination


def two_sheets(sigma_a, sigma_b, gens="(1 2),(3 4)"):
    cover = FiniteCover(("x",), ("a", "b"), {"a": "x", "b": "x"})
    return ChartedMarking(
        cover=cover,
        m=4,
        group=make_group(gens, 4),
        fiber_points={"x": ("p1", "p2", "p3", "p4")},
        sigma={"a": sigma_a, "b": sigma_b},
    )


def test_dominates_self_by_identity(intro_marking):
    report = dominates(
        intro_marking, intro_marking, {"s1": "s1", "s2": "s2"}
    )
    assert report.valid
    assert all(w.is_identity() for w in report.witnesses.values())


def test_disjoint_union_dominates_single_chart():
    coarse = single_chart(("p1", "p2", "p3", "p4"))
    fine = two_sheets(("p1", "p2", "p3", "p4"), ("p2", "p1", "p4", "p3"))
    report = dominates(fine, coarse, {"a": "s", "b": "s"})
    assert report.valid
    assert report.witnesses["a"].is_identity()
    assert report.witnesses["b"] == parse_permutation("(1 2)(3 4)", 4)


def test_domination_fails_outside_group():
    coarse = single_chart(("p1", "p2", "p3", "p4"))
    fine = two_sheets(("p1", "p2", "p3", "p4"), ("p3", "p2", "p1", "p4"))
    report = dominates(fine, coarse, {"a": "s", "b": "s"})
    assert not report.valid
    assert report.missing == ("b",)


def test_domination_structural_errors(intro_marking):
    other_base = single_chart(("p1", "p2", "p3", "p4"))
    with pytest.raises(ValueError):
        dominates(intro_marking, intro_marking, {"s1": "s1"})
    with pytest.raises(ValueError):
        dominates(
            intro_marking,
            single_chart(("p1", "p2", "p3", "p4"), gens="(1 2)"),
            {"s1": "s", "s2": "s"},
        )
    report = dominates(intro_marking, other_base, {"s1": "s", "s2": "s"})
    assert report.valid


def test_class_function_invariant_under_domination():
    coarse = single_chart(("p2", "p1", "p3", "p4"))
    fine = two_sheets(("p2", "p1", "p3", "p4"), ("p1", "p2", "p4", "p3"))
    assert dominates(fine, coarse, {"a": "s", "b": "s"}).valid
    assert class_function(fine) == class_function(coarse)


# ---------------------------------------------------------------------------
# equivalence


def test_equivalent_reflexive(intro_marking):
    witness = equivalent(intro_marking, intro_marking)
    assert witness is not None
    assert witness.star.valid
    assert witness.dom_first.valid and witness.dom_second.valid


def test_equivalent_single_charts_differing_by_group_element():
    a = single_chart(("p1", "p2", "p3", "p4"))
    b = single_chart(("p2", "p1", "p3", "p4"), cover_point="t")
    assert equivalent(a, b) is not None
    assert equivalent(b, a) is not None


def test_not_equivalent_outside_group():
    a = single_chart(("p1", "p2", "p3", "p4"))
    b = single_chart(("p3", "p2", "p1", "p4"), cover_point="t")
    assert equivalent(a, b) is None
    assert equivalent(b, a) is None


def test_equivalent_symmetric_on_pairs():
    charts = [
        single_chart(("p1", "p2", "p3", "p4")),
        single_chart(("p2", "p1", "p4", "p3"), cover_point="t"),
        single_chart(("p3", "p2", "p1", "p4"), cover_point="u"),
    ]
    for a, b in itertools.permutations(charts, 2):
        assert (equivalent(a, b) is None) == (equivalent(b, a) is None)


def test_equivalent_transitive_on_fixture_triples(intro_marking):
    charts = [
        intro_marking,
        single_chart(("p1", "p2", "p3", "p4")),
        single_chart(("p2", "p1", "p3", "p4"), cover_point="t"),
        single_chart(("p1", "p2", "p4", "p3"), cover_point="u"),
        single_chart(("p3", "p2", "p1", "p4"), cover_point="w"),
    ]
    for a, b, c in itertools.permutations(charts, 3):
        if equivalent(a, b) is not None and equivalent(b, c) is not None:
            assert equivalent(a, c) is not None


def test_equivalent_requires_same_setting(intro_marking):
    with pytest.raises(ValueError):
        equivalent(
            intro_marking, single_chart(("p1", "p2", "p3", "p4"), gens="(1 2)")
        )


# ---------------------------------------------------------------------------
# morphisms


def identity_morphism(marking):
    return FiberMorphism(
        base_map={s: s for s in marking.cover.base},
        fiber_maps={
            s: {p: p for p in marking.fiber_points[s]}
            for s in marking.cover.base
        },
    )


def compose_morphisms(second, first, source_of_first):
    base_map = {s: second.base_map[first.base_map[s]] for s in first.base_map}
    fiber_maps = {}
    for s in source_of_first.cover.base:
        t = first.base_map[s]
        fiber_maps[s] = {
            p: second.fiber_maps[t][q] for p, q in first.fiber_maps[s].items()
        }
    return FiberMorphism(base_map=base_map, fiber_maps=fiber_maps)


def test_identity_morphism_valid(intro_marking):
    report = verify_morphism(
        identity_morphism(intro_marking), intro_marking, intro_marking
    )
    assert report.valid
    assert report.classes_preserved
    assert report.verdicts_agree
    assert report.witnesses[("s1", "s1")].is_identity()


def test_twist_endomorphism_valid(fixtures_dir):
    text = (fixtures_dir / "twist-endomorphism.desc").read_text()
    hm, src, tgt = parse_morphism_document(text, "twist-endomorphism.desc")
    report = verify_morphism(hm, src, tgt)
    assert report.valid
    assert report.classes_preserved
    # per-pair witnesses differ, which is exactly why the check is pointwise
    assert report.witnesses[("s1", "s1")] == parse_permutation("(1 2)(3 4)", 4)
    assert report.witnesses[("s1", "s2")].is_identity()


def test_class_breaking_map_invalid():
    marking = single_chart(("p1", "p2", "p3", "p4"))
    hm = FiberMorphism(
        base_map={"x": "x"},
        fiber_maps={"x": {"p1": "p1", "p2": "p3", "p3": "p2", "p4": "p4"}},
    )
    report = verify_morphism(hm, marking, marking)
    assert not report.valid
    assert not report.classes_preserved
    assert report.verdicts_agree
    assert ("p2", "p3") in report.class_violations


def test_chart_and_class_verdicts_can_differ():
    # cyclic group: swapping two points preserves the single class but no
    # group element matches the swapped chart
    marking = ChartedMarking(
        cover=FiniteCover(("x",), ("s",), {"s": "x"}),
        m=3,
        group=make_group("(1 2 3)", 3),
        fiber_points={"x": ("p1", "p2", "p3")},
        sigma={"s": ("p1", "p2", "p3")},
    )
    hm = FiberMorphism(
        base_map={"x": "x"},
        fiber_maps={"x": {"p1": "p2", "p2": "p1", "p3": "p3"}},
    )
    report = verify_morphism(hm, marking, marking)
    assert not report.valid
    assert report.classes_preserved
    assert not report.verdicts_agree


def test_composition_of_valid_morphisms_is_valid(fixtures_dir):
    text = (fixtures_dir / "twist-endomorphism.desc").read_text()
    twist, src, tgt = parse_morphism_document(text)
    ident = identity_morphism(src)
    for second, first in [
        (twist, twist),
        (twist, ident),
        (ident, twist),
    ]:
        assert verify_morphism(first, src, tgt).valid
        assert verify_morphism(second, src, tgt).valid
        composed = compose_morphisms(second, first, src)
        assert verify_morphism(composed, src, tgt).valid


def test_morphism_requires_valid_markings(intro_small_group_marking):
    hm = identity_morphism(intro_small_group_marking)
    with pytest.raises(ValueError):
        verify_morphism(
            hm, intro_small_group_marking, intro_small_group_marking
        )


def test_morphism_structural_checks(intro_marking):
    with pytest.raises(ValueError):
        verify_morphism(
            FiberMorphism(base_map={}, fiber_maps={}),
            intro_marking,
            intro_marking,
        )
    not_a_bijection = FiberMorphism(
        base_map={"x": "x"},
        fiber_maps={"x": {"p1": "p1", "p2": "p1", "p3": "p3", "p4": "p4"}},
    )
    with pytest.raises(ValueError):
        verify_morphism(not_a_bijection, intro_marking, intro_marking)


def test_morphism_report_rendering(intro_marking):
    report = verify_morphism(
        identity_morphism(intro_marking), intro_marking, intro_marking
    )
    text = render_morphism_report(
        identity_morphism(intro_marking), intro_marking, intro_marking, report
    )
    assert "charts: VALID" in text
    assert "classes preserved: yes" in text
    assert "verdicts agree: yes" in text
    assert text.endswith("VALID\n")


# ---------------------------------------------------------------------------
# globalization


def test_globalize_identity_cover():
    marking = single_chart(("p1", "p2", "p3", "p4"), gens="")
    flat = globalize_trivial_group(marking)
    assert flat.sigma == {"x": ("p1", "p2", "p3", "p4")}
    assert flat.cover.cover == ("x",)
    again = globalize_trivial_group(flat)
    assert again.sigma == flat.sigma


def test_globalize_two_sheets():
    marking = two_sheets(
        ("p1", "p2", "p3", "p4"), ("p1", "p2", "p3", "p4"), gens=""
    )
    flat = globalize_trivial_group(marking)
    assert flat.cover.cover == ("x",)
    assert flat.sigma["x"] == ("p1", "p2", "p3", "p4")


def test_globalize_preconditions(intro_marking):
    with pytest.raises(ValueError):
        globalize_trivial_group(intro_marking)  # group not trivial
    disagreeing = two_sheets(
        ("p1", "p2", "p3", "p4"), ("p2", "p1", "p3", "p4"), gens=""
    )
    assert not verify_star(disagreeing).valid
    with pytest.raises(ValueError):
        globalize_trivial_group(disagreeing)


# ---------------------------------------------------------------------------
# documents


def test_parse_round_trip(intro_marking):
    text = format_marking(intro_marking)
    assert parse_marking_document(text) == intro_marking


def test_parse_reports_file_and_line():
    bad = "[marking]\nm = 4\nbase = x\nnonsense\n"
    with pytest.raises(FormatError) as err:
        parse_marking_document(bad, "bad.desc")
    assert "bad.desc:4" in str(err.value)


@pytest.mark.parametrize(
    "text,needle",
    [
        ("m = 4\n", "before any"),
        ("[marking]\nbase = x\ncover = s -> x\n", "missing 'm"),
        ("[marking]\nm = q\n", "integer"),
        ("[marking]\nm = 4\nm = 4\n", "duplicate"),
        ("[marking]\nm = 4\nbase = x\ncover = s => x\n", "expected 'a -> b'"),
        ("[marking]\nm = 4\nwhatever = 3\n", "unknown key"),
        ("[marking]\nm = 4\nbase = x*y\n", "bad identifier"),
        ("[marking]\nm = 4\ngroup = (1 5)\nbase = x\ncover = s -> x\n", "outside"),
    ],
)
def test_parse_failures(text, needle):
    with pytest.raises(FormatError) as err:
        parse_marking_document(text, "doc.desc")
    assert needle in str(err.value)
    assert str(err.value).startswith("doc.desc:")


def test_morphism_document_requires_all_sections():
    with pytest.raises(FormatError):
        parse_morphism_document("[marking source]\nm = 1\n", "doc.desc")


def test_semantic_errors_are_anchored():
    # structurally broken marking: sigma uses a point outside the fiber
    text = (
        "[marking]\n"
        "m = 2\n"
        "base = x\n"
        "cover = s -> x\n"
        "fiber x = p q\n"
        "sigma s = p z\n"
    )
    with pytest.raises(FormatError) as err:
        parse_marking_document(text, "doc.desc")
    assert str(err.value).startswith("doc.desc:")

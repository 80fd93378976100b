import pytest
from hypothesis import given, strategies as st

from graphstrata.limits import SizeLimitError
from graphstrata.perm import (
    PermGroup,
    Permutation,
    canonical_rep,
    group_from_generators,
    orbit_of_label,
    parse_generators,
    parse_permutation,
    stabilizer,
    symmetric_group,
    symmetric_group_on,
)


def perms(max_degree=6):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(
            lambda images: Permutation(tuple(images))
        )
    )


def test_images_define_the_map():
    p = Permutation((2, 3, 1))
    assert p(1) == 2 and p(2) == 3 and p(3) == 1


def test_composition_applies_right_factor_first():
    a = parse_permutation("(1 2)", 3)
    b = parse_permutation("(2 3)", 3)
    # (a*b)(3) = a(b(3)) = a(2) = 1
    assert (a * b)(3) == 1
    assert (a * b).images == (2, 3, 1)
    assert (b * a).images == (3, 1, 2)


def test_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    with pytest.raises(ValueError):
        Permutation((0, 1))
    with pytest.raises(ValueError):
        Permutation(())


def test_from_cycles_validation():
    with pytest.raises(ValueError):
        Permutation.from_cycles(4, [(1, 5)])
    with pytest.raises(ValueError):
        Permutation.from_cycles(4, [(1, 2), (2, 3)])


@pytest.mark.parametrize(
    "text,degree,images",
    [
        ("()", 3, (1, 2, 3)),
        ("(1 2)", 4, (2, 1, 3, 4)),
        ("(1 2)(3 4)", 4, (2, 1, 4, 3)),
        ("(1 2 3)", 3, (2, 3, 1)),
        ("  (2 3) ( 1 4 ) ", 4, (4, 3, 2, 1)),
    ],
)
def test_parse_permutation(text, degree, images):
    assert parse_permutation(text, degree).images == images


@pytest.mark.parametrize("text", ["", "1 2", "(1 2", "(1,2)", "(1 2)x"])
def test_parse_permutation_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_permutation(text, 4)


def test_cycle_string_round_trip():
    for text in ["()", "(1 2)", "(1 2)(3 4)", "(1 3 2)", "(2 4)"]:
        p = parse_permutation(text, 4)
        assert parse_permutation(p.cycle_string(), 4) == p


@given(perms())
def test_inverse_cancels(p):
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


@given(perms())
def test_cycle_string_parses_back(p):
    assert parse_permutation(p.cycle_string(), p.degree) == p


@given(perms(5), perms(5))
def test_inverse_reverses_products(a, b):
    if a.degree != b.degree:
        return
    assert (a * b).inverse() == b.inverse() * a.inverse()


def test_parse_generators_comma_separated():
    gens = parse_generators("(1 2), (3 4)", 4)
    assert [g.images for g in gens] == [(2, 1, 3, 4), (1, 2, 4, 3)]
    assert parse_generators("", 4) == ()


@pytest.mark.parametrize(
    "gens,order",
    [
        ("", 1),
        ("(1 2)", 2),
        ("(1 2),(3 4)", 4),
        ("(1 2 3)", 3),
        ("(1 2),(2 3),(3 4)", 24),
    ],
)
def test_group_closure_orders(gens, order):
    group = group_from_generators(4, parse_generators(gens, 4))
    assert group.order == order


def test_group_elements_sorted_and_identity_first():
    group = group_from_generators(4, parse_generators("(1 2),(3 4)", 4))
    assert list(group.elements) == sorted(group.elements)
    assert group.elements[0].is_identity()


def test_group_is_closed():
    group = group_from_generators(4, parse_generators("(1 2),(2 3)", 4))
    for a in group:
        assert a.inverse() in group
        for b in group:
            assert a * b in group


def test_group_bounds():
    with pytest.raises(SizeLimitError):
        group_from_generators(11, ())
    with pytest.raises(SizeLimitError):
        group_from_generators(
            5, parse_generators("(1 2),(2 3),(3 4),(4 5)", 5), max_order=10
        )


def test_symmetric_group_order():
    assert symmetric_group(4).order == 24
    assert symmetric_group(1).order == 1


def test_symmetric_group_on_subset():
    group = symmetric_group_on([2, 3, 4], 4)
    assert group.order == 6
    assert all(g(1) == 1 for g in group)
    assert orbit_of_label(group, 2) == frozenset({2, 3, 4})


def test_orbits():
    v4 = group_from_generators(4, parse_generators("(1 2),(3 4)", 4))
    assert orbit_of_label(v4, 1) == frozenset({1, 2})
    assert orbit_of_label(v4, 4) == frozenset({3, 4})
    assert orbit_of_label(symmetric_group(4), 2) == frozenset({1, 2, 3, 4})
    with pytest.raises(ValueError):
        orbit_of_label(v4, 5)


def test_stabilizer_of_labeling():
    s3 = symmetric_group(3)
    stab = stabilizer(s3, ["a", "a", "b"])
    assert stab.order == 2
    assert all(lab in (1, 2) for g in stab for lab in (g(1),))


def test_stabilizer_is_subgroup():
    s4 = symmetric_group(4)
    stab = stabilizer(s4, [0, 1, 0, 1])
    assert stab.order == 4
    for a in stab:
        for b in stab:
            assert a * b in stab


def test_canonical_rep_is_orbit_minimum():
    v4 = group_from_generators(4, parse_generators("(1 2),(3 4)", 4))
    assert canonical_rep(v4, (2, 1, 3, 4)) == (1, 2, 3, 4)
    assert canonical_rep(v4, (4, 3, 2, 1)) == (3, 4, 1, 2)
    # constant on the orbit
    for g in v4:
        moved = tuple((2, 1, 3, 4)[g(i) - 1] for i in range(1, 5))
        assert canonical_rep(v4, moved) == canonical_rep(v4, (2, 1, 3, 4))


def test_generator_string():
    assert group_from_generators(3, ()).generator_string() == "()"
    v4 = group_from_generators(4, parse_generators("(1 2),(3 4)", 4))
    assert v4.generator_string() == "(1 2),(3 4)"


def test_group_membership():
    v4 = group_from_generators(4, parse_generators("(1 2),(3 4)", 4))
    assert parse_permutation("(1 2)(3 4)", 4) in v4
    assert parse_permutation("(1 3)", 4) not in v4


def test_empty_group_rejected():
    with pytest.raises(ValueError):
        PermGroup(2, (), ())

"""Solved map spaces, the actor construction, and sequence lifting.

Expected bases below were worked out by hand from the defining identities
and double-checked against the mod-2 enumerations in test_acceptance.
"""
from fractions import Fraction

import pytest
from conftest import (
    XMOD_IDS,
    _basis,
    pair_composites_land_in_layer_spaces,
    pair_pair_composites_agree_under_brackets,
    quad_pair_and_quad_quad_composites_agree,
)
from hypothesis import given
from hypothesis import strategies as st

from lbxmod import QQ
from lbxmod.algebra import validate_leibniz
from lbxmod.bider import (
    ShortExactSequence,
    actor,
    bider_algebra,
    bider_qn,
    bider_xmod,
    canonical_morphism,
    delta,
    inner_action_pair,
    inner_biderivation,
    inner_quadruple,
    inner_xmod,
    lift_sequence,
    outer_xmod,
    sequence_problems,
)
from lbxmod.catalog import build_entry
from lbxmod.linalg import Matrix
from lbxmod.xmod import validate_morphism, validate_xmod


def flats(space):
    return [tuple(v) for v in space.space.basis_vectors()]


def q(*vals):
    return tuple(Fraction(v) for v in vals)


def test_pair_space_of_l2():
    space = bider_algebra(build_entry("l2", QQ))
    assert space.dim == 3
    assert flats(space) == [
        q(1, 0, 0, 2, 1, 0, 0, 0),
        q(0, 0, 1, 0, 0, 0, 0, 0),
        q(0, 0, 0, 0, 0, 0, 1, 0),
    ]
    tab = space.algebra.table
    nz = {
        (i, j): tuple(tab[i][j])
        for i in range(3)
        for j in range(3)
        if any(c for c in tab[i][j])
    }
    assert nz == {
        (0, 1): q(0, 1, -1),
        (1, 0): q(0, -1, 0),
        (2, 0): q(0, 0, -1),
    }
    assert validate_leibniz(space.algebra).ok


def test_pair_space_of_r2_is_antisymmetric_and_inner():
    a = build_entry("r2", QQ)
    space = bider_algebra(a)
    assert space.dim == 2
    assert flats(space) == [q(0, 0, 1, 0, 0, 0, 1, 0), q(0, 0, 0, 1, 0, 0, 0, 1)]
    tab = space.algebra.table
    assert tuple(tab[0][1]) == q(-1, 0)
    assert tuple(tab[1][0]) == q(1, 0)
    assert all(not c for c in tab[0][0]) and all(not c for c in tab[1][1])
    # the two halves of every member coincide, and every member is inner
    for d, dd in _basis(space):
        assert d == dd
    assert space.coords_of_maps(inner_biderivation(a, (QQ.one, QQ.zero))) == q(0, 1)
    assert space.coords_of_maps(inner_biderivation(a, (QQ.zero, QQ.one))) == q(-1, 0)


def test_pair_space_of_sl2_is_all_inner():
    a = build_entry("sl2", QQ)
    space = bider_algebra(a)
    assert space.dim == 3
    units = [
        (QQ.one, QQ.zero, QQ.zero),
        (QQ.zero, QQ.one, QQ.zero),
        (QQ.zero, QQ.zero, QQ.one),
    ]
    coords = [space.coords_of_maps(inner_biderivation(a, u)) for u in units]
    assert all(c is not None for c in coords)
    m = Matrix.from_columns(QQ, coords, 3)
    from lbxmod.linalg import rref

    assert rref(m).rank == 3  # inner pairs already fill the space


def test_abelian_pair_space_has_no_constraints():
    assert bider_algebra(build_entry("a2", QQ)).dim == 8


def test_action_pair_space_of_the_inclusion_fixture():
    x = build_entry("l2-ann-incl", QQ)
    space = bider_qn(x)
    assert space.dim == 2
    assert flats(space) == [q(1, 0, 0, 0), q(0, 0, 1, 0)]
    assert all(
        not c for row in space.algebra.table for cell in row for c in cell
    )  # abelian


def test_quadruple_space_of_the_inclusion_fixture():
    x = build_entry("l2-ann-incl", QQ)
    space = bider_xmod(x)
    assert space.dim == 3
    assert flats(space) == [
        q(1, 0, Fraction(1, 2), 0, 0, 1, Fraction(1, 2), 0, 0, 0),
        q(0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
        q(0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    ]


def test_delta_of_the_inclusion_fixture():
    m = delta(build_entry("l2-ann-incl", QQ))
    assert m.rows == 3 and m.cols == 2
    assert [list(r) for r in m.entries] == [[0, 0], [1, 0], [0, 1]]


ACTOR_DIMS = {
    "zero-into-l2": (0, 3),
    "l2-id": (3, 3),
    "l2-ann-incl": (2, 3),
    "r2-id": (2, 2),
    "sl2-id": (3, 3),
}


@pytest.mark.parametrize("cid", sorted(ACTOR_DIMS))
def test_actor_shapes_and_validity(cid):
    x = build_entry(cid, QQ)
    a = actor(x)
    assert (a.top.dim, a.base.dim) == ACTOR_DIMS[cid]
    assert validate_xmod(a).ok
    assert validate_morphism(canonical_morphism(x)).ok


INNER_OUTER_DIMS = {
    "zero-into-l2": ((0, 1), (0, 2)),
    "l2-id": ((1, 1), (2, 2)),
    "l2-ann-incl": ((0, 1), (2, 2)),
    "r2-id": ((2, 2), (0, 0)),
    "sl2-id": ((3, 3), (0, 0)),
}


@pytest.mark.parametrize("cid", sorted(INNER_OUTER_DIMS))
def test_inner_and_outer_parts(cid):
    x = build_entry(cid, QQ)
    inn = inner_xmod(x)
    out = outer_xmod(x)
    expected_inner, expected_outer = INNER_OUTER_DIMS[cid]
    assert (inn.top_space.dim, inn.base_space.dim) == expected_inner
    assert (out.xmod.top.dim, out.xmod.base.dim) == expected_outer
    assert validate_xmod(out.xmod).ok
    assert validate_morphism(out.projection()).ok


def test_inner_members_solve_the_defining_systems():
    x = build_entry("sl2-id", QQ)
    pairs, quads = bider_qn(x), bider_xmod(x)
    for i in range(x.top.dim):
        u = tuple(QQ.one if j == i else QQ.zero for j in range(x.top.dim))
        assert pairs.coords_of_maps(inner_action_pair(x, u)) is not None
        assert quads.coords_of_maps(inner_quadruple(x, u)) is not None


@pytest.mark.parametrize("cid", XMOD_IDS)
def test_composites_of_pairs_land_where_they_should(cid):
    x = build_entry(cid, QQ)
    assert pair_composites_land_in_layer_spaces(x)
    assert pair_pair_composites_agree_under_brackets(x)


@pytest.mark.parametrize("cid", XMOD_IDS)
def test_the_twelve_composite_identities(cid):
    assert quad_pair_and_quad_quad_composites_agree(build_entry(cid, QQ))


small = st.integers(min_value=-3, max_value=3)


@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_pair_brackets_follow_the_solved_table(cu, cv):
    space = bider_algebra(build_entry("l2", QQ))
    u = space.member_from_coords([Fraction(c) for c in cu])
    v = space.member_from_coords([Fraction(c) for c in cv])
    d1, dd1 = u
    d2, dd2 = v
    w = (d1 @ d2 - d2 @ d1, dd1 @ d2 - d2 @ dd1)
    coords = space.coords_of_maps(w)
    assert coords is not None
    # bilinear expansion of the structure table gives the same coordinates
    tab = space.algebra.table
    expect = [QQ.zero] * 3
    for i, a in enumerate(u_coords := [Fraction(c) for c in cu]):
        for j, b in enumerate([Fraction(c) for c in cv]):
            for k in range(3):
                expect[k] += a * b * tab[i][j][k]
    assert list(coords) == expect


def test_lift_along_the_direct_sum_sequence():
    s = build_entry("sl2-seq", QQ)
    assert sequence_problems(s) == []
    lifted = lift_sequence(s)
    assert validate_morphism(lifted.morphism).ok
    assert lifted.morphism.source == s.middle
    assert lifted.morphism.target == actor(s.first)
    assert lifted.warnings == ()
    # sl2 is complete: the outer part is trivial, so the induced maps are
    # the zero maps out of the quotient's one-dimensional layers
    assert (lifted.induced_top.rows, lifted.induced_top.cols) == (0, 1)
    assert (lifted.induced_base.rows, lifted.induced_base.cols) == (0, 1)


def test_sequence_problems_flags_a_broken_projection():
    s = build_entry("sl2-seq", QQ)
    broken = ShortExactSequence(
        s.first,
        s.middle,
        s.last,
        s.include,
        type(s.project)(
            s.middle,
            s.last,
            Matrix.zeros(QQ, 1, 4),
            Matrix.zeros(QQ, 1, 4),
        ),
    )
    problems = sequence_problems(broken)
    assert any("surjective" in p for p in problems)

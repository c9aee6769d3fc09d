"""Biderivation spaces and the actor crossed module.

Three flavours of solution space are computed here, all as kernels of
constraint matrices assembled by evaluating the (linear) defining identities
on unit matrices:

* ``bider_algebra(a)`` — pairs (der, antider) of maps a -> a where ``der``
  is a derivation, ``antider`` an anti-derivation, and both have the same
  left brackets: [x, der(y)] = [x, antider(y)].
* ``bider_qn(x)`` — pairs of maps base -> top of a crossed module, with the
  same three identities written through the action brackets.
* ``bider_xmod(x)`` — quadruples (top_der, top_antider, base_der,
  base_antider) acting on both layers at once, compatible with the boundary
  and the action.

Each space carries an induced Leibniz bracket; ``actor`` assembles the
crossed module (pair space) -> (quadruple space) whose boundary sends a pair
to its boundary-composed quadruple.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .action import ActionData
from .algebra import LeibnizAlgebra, _unit
from .fields import Field, InputDataError, Scalar
from .linalg import LinearSolveError, Matrix, Subspace, nullspace, solve_vector, sub_vectors
from .xmod import (
    NO_CONDITION_WARNING,
    CrossedModule,
    QuotientXMod,
    SubXMod,
    XModMorphism,
    check_conditions,
    image,
    quotient_xmod,
    validate_morphism,
)


class NotExactError(ValueError):
    """A claimed short exact sequence fails one of its checks."""


Maps = tuple[Matrix, ...]


@dataclass(frozen=True)
class MapSpace:
    """A solution space of tuples of linear maps, with its induced bracket.

    ``space`` lives in the flat coordinate space obtained by concatenating
    the row-major entries of each map; ``algebra`` is the Leibniz structure
    on the canonical (echelon) basis of that space.
    """

    field: Field
    shapes: tuple[tuple[int, int], ...]
    space: Subspace
    algebra: LeibnizAlgebra

    @property
    def dim(self) -> int:
        return self.space.dim

    def flatten(self, mats: Maps) -> tuple[Scalar, ...]:
        out: list[Scalar] = []
        for mat, (r, c) in zip(mats, self.shapes):
            if (mat.rows, mat.cols) != (r, c):
                raise InputDataError("map tuple does not match this space's shapes")
            for row in mat.entries:
                out.extend(row)
        return tuple(out)

    def unflatten(self, vec: Sequence[Scalar]) -> Maps:
        mats = []
        pos = 0
        for r, c in self.shapes:
            rows = tuple(tuple(vec[pos + i * c + j] for j in range(c)) for i in range(r))
            pos += r * c
            mats.append(Matrix(self.field, r, c, rows))
        return tuple(mats)

    def basis_maps(self, t: int) -> Maps:
        return self.unflatten(self.space.basis.entries[t])

    def coords_of_maps(self, mats: Maps) -> Optional[tuple[Scalar, ...]]:
        return self.space.coords_of(self.flatten(mats))

    def member_from_coords(self, coords: Sequence[Scalar]) -> Maps:
        return self.unflatten(self.space.linear_combination(coords))


def _solve_map_space(
    field: Field,
    shapes: tuple[tuple[int, int], ...],
    constraint_fn: Callable[[Maps], list[Scalar]],
) -> Subspace:
    """Nullspace of the linear system `constraint_fn(maps) = 0`."""
    total = sum(r * c for r, c in shapes)
    if total == 0:
        return Subspace.zero(field, 0)
    columns = []
    z, o = field.zero, field.one
    for u in range(total):
        mats = []
        pos = 0
        for r, c in shapes:
            rows = [[z] * c for _ in range(r)]
            if pos <= u < pos + r * c:
                off = u - pos
                rows[off // c][off % c] = o
            pos += r * c
            mats.append(Matrix(field, r, c, tuple(tuple(row) for row in rows)))
        columns.append(tuple(constraint_fn(tuple(mats))))
    n_rows = len(columns[0])
    constraint = Matrix(field, n_rows, total,
                        tuple(tuple(columns[u][r] for u in range(total)) for r in range(n_rows)))
    return nullspace(constraint)


def _space_with_algebra(
    field: Field,
    shapes: tuple[tuple[int, int], ...],
    constraint_fn: Callable[[Maps], list[Scalar]],
    bracket_fn: Callable[[Maps, Maps], Maps],
) -> MapSpace:
    space = _solve_map_space(field, shapes, constraint_fn)
    probe = MapSpace(field, shapes, space, LeibnizAlgebra.abelian(field, 0))
    k = space.dim
    table = []
    for s in range(k):
        row = []
        for t in range(k):
            w = bracket_fn(probe.basis_maps(s), probe.basis_maps(t))
            coords = space.coords_of(probe.flatten(w))
            if coords is None:
                raise LinearSolveError("bracket of two solutions left the solution space")
            row.append(coords)
        table.append(tuple(row))
    alg = LeibnizAlgebra(field, k, tuple(table))
    return MapSpace(field, shapes, space, alg)


# -- pair spaces on a single algebra ------------------------------------


@functools.lru_cache(maxsize=None)
def bider_algebra(a: LeibnizAlgebra) -> MapSpace:
    n = a.dim
    units = [_unit(a.field, n, i) for i in range(n)]

    def constraints(mats: Maps) -> list[Scalar]:
        d, dd = mats
        out: list[Scalar] = []
        for i in range(n):
            for j in range(n):
                der = sub_vectors(
                    d.apply(a.table[i][j]),
                    tuple(x + y for x, y in zip(a.bracket(d.column(i), units[j]),
                                                a.bracket(units[i], d.column(j)))),
                )
                anti = sub_vectors(
                    dd.apply(a.table[i][j]),
                    sub_vectors(a.bracket(dd.column(i), units[j]), a.bracket(dd.column(j), units[i])),
                )
                mixed = a.bracket(units[i], sub_vectors(d.column(j), dd.column(j)))
                out.extend(der)
                out.extend(anti)
                out.extend(mixed)
        return out

    def bracket(x: Maps, y: Maps) -> Maps:
        d1, dd1 = x
        d2, dd2 = y
        return (d1 @ d2 - d2 @ d1, dd1 @ d2 - d2 @ dd1)

    return _space_with_algebra(a.field, ((n, n), (n, n)), constraints, bracket)


def inner_biderivation(a: LeibnizAlgebra, x: Sequence[Scalar]) -> Maps:
    """The pair generated by an element: (y -> -[y, x], y -> [x, y])."""
    return (-a.right_operator(x), a.left_operator(x))


# -- pair spaces base -> top on a crossed module -------------------------


@functools.lru_cache(maxsize=None)
def bider_qn(x: CrossedModule) -> MapSpace:
    q, n_alg, act = x.base, x.top, x.action
    qd, nd = q.dim, n_alg.dim
    qunits = [_unit(q.field, qd, a) for a in range(qd)]

    def constraints(mats: Maps) -> list[Scalar]:
        d, dd = mats
        out: list[Scalar] = []
        for a in range(qd):
            for b in range(qd):
                der = sub_vectors(
                    d.apply(q.table[a][b]),
                    tuple(u + v for u, v in zip(act.act_right(d.column(a), qunits[b]),
                                                act.act_left(qunits[a], d.column(b)))),
                )
                anti = sub_vectors(
                    dd.apply(q.table[a][b]),
                    sub_vectors(act.act_right(dd.column(a), qunits[b]),
                                act.act_right(dd.column(b), qunits[a])),
                )
                mixed = act.act_left(qunits[a], sub_vectors(d.column(b), dd.column(b)))
                out.extend(der)
                out.extend(anti)
                out.extend(mixed)
        return out

    mu = x.boundary

    def bracket(u: Maps, v: Maps) -> Maps:
        d1, dd1 = u
        d2, dd2 = v
        return (d1 @ (mu @ d2) - d2 @ (mu @ d1), dd1 @ (mu @ d2) - d2 @ (mu @ dd1))

    return _space_with_algebra(q.field, ((nd, qd), (nd, qd)), constraints, bracket)


def inner_action_pair(x: CrossedModule, nvec: Sequence[Scalar]) -> Maps:
    """The pair generated by a top element: (q -> -[q, n], q -> [n, q])."""
    f = x.top.field
    qd = x.base.dim
    dcols = [tuple(-c for c in x.action.act_left(_unit(f, qd, a), nvec)) for a in range(qd)]
    ddcols = [x.action.act_right(nvec, _unit(f, qd, a)) for a in range(qd)]
    return (Matrix.from_columns(f, dcols, x.top.dim), Matrix.from_columns(f, ddcols, x.top.dim))


# -- quadruple spaces on a crossed module --------------------------------


@functools.lru_cache(maxsize=None)
def bider_xmod(x: CrossedModule) -> MapSpace:
    n_alg, q, act, mu = x.top, x.base, x.action, x.boundary
    nd, qd = n_alg.dim, q.dim
    nunits = [_unit(q.field, nd, i) for i in range(nd)]
    qunits = [_unit(q.field, qd, a) for a in range(qd)]

    def constraints(mats: Maps) -> list[Scalar]:
        s1, t1, s2, t2 = mats
        out: list[Scalar] = []
        # (s1, t1) is a biderivation pair of the top algebra
        for i in range(nd):
            for j in range(nd):
                out.extend(sub_vectors(
                    s1.apply(n_alg.table[i][j]),
                    tuple(u + v for u, v in zip(n_alg.bracket(s1.column(i), nunits[j]),
                                                n_alg.bracket(nunits[i], s1.column(j)))),
                ))
                out.extend(sub_vectors(
                    t1.apply(n_alg.table[i][j]),
                    sub_vectors(n_alg.bracket(t1.column(i), nunits[j]),
                                n_alg.bracket(t1.column(j), nunits[i])),
                ))
                out.extend(n_alg.bracket(nunits[i], sub_vectors(s1.column(j), t1.column(j))))
        # (s2, t2) is a biderivation pair of the base algebra
        for a in range(qd):
            for b in range(qd):
                out.extend(sub_vectors(
                    s2.apply(q.table[a][b]),
                    tuple(u + v for u, v in zip(q.bracket(s2.column(a), qunits[b]),
                                                q.bracket(qunits[a], s2.column(b)))),
                ))
                out.extend(sub_vectors(
                    t2.apply(q.table[a][b]),
                    sub_vectors(q.bracket(t2.column(a), qunits[b]),
                                q.bracket(t2.column(b), qunits[a])),
                ))
                out.extend(q.bracket(qunits[a], sub_vectors(s2.column(b), t2.column(b))))
        # boundary compatibility
        for mat_pair in ((s1, s2), (t1, t2)):
            top_side, base_side = mat_pair
            diff = mu @ top_side - base_side @ mu
            for row in diff.entries:
                out.extend(row)
        # action compatibility
        for a in range(qd):
            for i in range(nd):
                la = act.left[a][i]
                ra = act.right[i][a]
                out.extend(sub_vectors(
                    s1.apply(la),
                    tuple(u + v for u, v in zip(act.act_left(s2.column(a), nunits[i]),
                                                act.act_left(qunits[a], s1.column(i)))),
                ))
                out.extend(sub_vectors(
                    s1.apply(ra),
                    tuple(u + v for u, v in zip(act.act_right(s1.column(i), qunits[a]),
                                                act.act_right(nunits[i], s2.column(a)))),
                ))
                out.extend(sub_vectors(
                    t1.apply(la),
                    sub_vectors(act.act_left(t2.column(a), nunits[i]),
                                act.act_right(t1.column(i), qunits[a])),
                ))
                out.extend(sub_vectors(
                    t1.apply(ra),
                    sub_vectors(act.act_right(t1.column(i), qunits[a]),
                                act.act_left(t2.column(a), nunits[i])),
                ))
                out.extend(act.act_left(qunits[a], sub_vectors(s1.column(i), t1.column(i))))
                out.extend(act.act_right(nunits[i], sub_vectors(s2.column(a), t2.column(a))))
        return out

    def bracket(u: Maps, v: Maps) -> Maps:
        s1, t1, s2, t2 = u
        s1p, t1p, s2p, t2p = v
        return (s1 @ s1p - s1p @ s1, t1 @ s1p - s1p @ t1,
                s2 @ s2p - s2p @ s2, t2 @ s2p - s2p @ t2)

    return _space_with_algebra(q.field, ((nd, nd), (nd, nd), (qd, qd), (qd, qd)), constraints, bracket)


def inner_quadruple(x: CrossedModule, qvec: Sequence[Scalar]) -> Maps:
    """The quadruple generated by a base element q: acts by -[., q] and
    [q, .] on both layers."""
    f = x.top.field
    nd = x.top.dim
    s1_cols = [tuple(-c for c in x.action.act_right(_unit(f, nd, i), qvec)) for i in range(nd)]
    t1_cols = [x.action.act_left(qvec, _unit(f, nd, i)) for i in range(nd)]
    return (
        Matrix.from_columns(f, s1_cols, nd),
        Matrix.from_columns(f, t1_cols, nd),
        -x.base.right_operator(qvec),
        x.base.left_operator(qvec),
    )


# -- the actor ----------------------------------------------------------


def pair_quad_bracket_left(quad: Maps, pair: Maps) -> Maps:
    """[quadruple, pair] inside the actor's top layer."""
    s1, t1, s2, _t2 = quad
    d, dd = pair
    return (s1 @ d - d @ s2, t1 @ d - d @ _t2)


def pair_quad_bracket_right(pair: Maps, quad: Maps) -> Maps:
    """[pair, quadruple]."""
    s1, _t1, s2, _t2 = quad
    d, dd = pair
    return (d @ s2 - s1 @ d, dd @ s2 - s1 @ dd)


@functools.lru_cache(maxsize=None)
def delta(x: CrossedModule) -> Matrix:
    """Boundary of the actor: compose a pair with the boundary on both sides."""
    pairs = bider_qn(x)
    quads = bider_xmod(x)
    mu = x.boundary
    cols = []
    for t in range(pairs.dim):
        d, dd = pairs.basis_maps(t)
        quad = (d @ mu, dd @ mu, mu @ d, mu @ dd)
        coords = quads.coords_of_maps(quad)
        if coords is None:
            raise LinearSolveError("boundary-composed pair is not a quadruple solution")
        cols.append(coords)
    return Matrix.from_columns(x.top.field, cols, quads.dim)


@functools.lru_cache(maxsize=None)
def actor(x: CrossedModule) -> CrossedModule:
    """The crossed module (pair space) -> (quadruple space)."""
    pairs = bider_qn(x)
    quads = bider_xmod(x)
    f = x.top.field

    def pair_coords(maps: Maps) -> tuple[Scalar, ...]:
        coords = pairs.coords_of_maps(maps)
        if coords is None:
            raise LinearSolveError("actor action left the pair space")
        return coords

    left = tuple(
        tuple(pair_coords(pair_quad_bracket_left(quads.basis_maps(a), pairs.basis_maps(i)))
              for i in range(pairs.dim))
        for a in range(quads.dim)
    )
    right = tuple(
        tuple(pair_coords(pair_quad_bracket_right(pairs.basis_maps(i), quads.basis_maps(a)))
              for a in range(quads.dim))
        for i in range(pairs.dim)
    )
    act = ActionData(quads.algebra, pairs.algebra, left, right)
    return CrossedModule(pairs.algebra, quads.algebra, delta(x), act)


@functools.lru_cache(maxsize=None)
def canonical_morphism(x: CrossedModule) -> XModMorphism:
    """x -> actor(x): elements go to the pairs/quadruples they generate."""
    pairs = bider_qn(x)
    quads = bider_xmod(x)
    f = x.top.field
    top_cols = []
    for i in range(x.top.dim):
        coords = pairs.coords_of_maps(inner_action_pair(x, _unit(f, x.top.dim, i)))
        if coords is None:
            raise LinearSolveError("inner pair is not a pair-space solution")
        top_cols.append(coords)
    base_cols = []
    for a in range(x.base.dim):
        coords = quads.coords_of_maps(inner_quadruple(x, _unit(f, x.base.dim, a)))
        if coords is None:
            raise LinearSolveError("inner quadruple is not a quadruple-space solution")
        base_cols.append(coords)
    return XModMorphism(
        x, actor(x),
        Matrix.from_columns(f, top_cols, pairs.dim),
        Matrix.from_columns(f, base_cols, quads.dim),
    )


def inner_xmod(x: CrossedModule) -> SubXMod:
    """Image of the canonical morphism inside the actor."""
    return image(canonical_morphism(x))


def outer_xmod(x: CrossedModule) -> QuotientXMod:
    """Actor modulo the inner part."""
    inn = inner_xmod(x)
    return quotient_xmod(actor(x), inn.top_space, inn.base_space)


# -- short exact sequences and lifting -----------------------------------


@dataclass(frozen=True)
class ShortExactSequence:
    first: CrossedModule
    middle: CrossedModule
    last: CrossedModule
    include: XModMorphism
    project: XModMorphism


def sequence_problems(s: ShortExactSequence) -> list[str]:
    problems = []
    if s.include.source != s.first or s.include.target != s.middle:
        problems.append("inclusion endpoints do not match the sequence")
    if s.project.source != s.middle or s.project.target != s.last:
        problems.append("projection endpoints do not match the sequence")
    if problems:
        return problems
    if not validate_morphism(s.include).ok:
        problems.append("inclusion is not a morphism")
    if not validate_morphism(s.project).ok:
        problems.append("projection is not a morphism")
    from .linalg import column_space, rref

    for layer, inc, proj, first_dim, last_dim in (
        ("top", s.include.top_map, s.project.top_map, s.first.top.dim, s.last.top.dim),
        ("base", s.include.base_map, s.project.base_map, s.first.base.dim, s.last.base.dim),
    ):
        if rref(inc).rank != first_dim:
            problems.append(f"{layer} inclusion is not injective")
        if rref(proj).rank != last_dim:
            problems.append(f"{layer} projection is not surjective")
        from .linalg import nullspace as _ns

        if column_space(inc) != _ns(proj):
            problems.append(f"{layer} layer is not exact in the middle")
    return problems


@dataclass(frozen=True)
class LiftResult:
    """(middle -> actor(first)) plus the induced (last -> outer) data."""

    morphism: XModMorphism
    outer: QuotientXMod
    induced_top: Matrix
    induced_base: Matrix
    warnings: tuple[str, ...]


def _pullback(mat: Matrix, vec) -> tuple[Scalar, ...]:
    c = solve_vector(mat, vec)
    if c is None:
        raise LinearSolveError("value has no preimage though exactness promises one")
    return c


def lift_sequence(s: ShortExactSequence) -> LiftResult:
    """Extend the sequence's first part to its actor along the middle.

    Every middle element acts on the embedded copy of the first crossed
    module; pulling that action back through the (injective) inclusion gives
    the pair/quadruple the element generates, and passing to the quotient by
    the inner part yields the induced maps from the last crossed module into
    the outer one.
    """
    problems = sequence_problems(s)
    if problems:
        raise NotExactError("; ".join(problems))
    x = s.first
    mid = s.middle
    f = x.top.field
    ft, fb = s.include.top_map, s.include.base_map
    pairs = bider_qn(x)
    quads = bider_xmod(x)

    alpha_cols = []
    for i in range(mid.top.dim):
        e = _unit(f, mid.top.dim, i)
        dcols = []
        ddcols = []
        for a in range(x.base.dim):
            qa = fb.column(a)
            dcols.append(tuple(-c for c in _pullback(ft, mid.action.act_left(qa, e))))
            ddcols.append(_pullback(ft, mid.action.act_right(e, qa)))
        pair = (Matrix.from_columns(f, dcols, x.top.dim), Matrix.from_columns(f, ddcols, x.top.dim))
        coords = pairs.coords_of_maps(pair)
        if coords is None:
            raise LinearSolveError("lifted pair is not a pair-space solution")
        alpha_cols.append(coords)
    alpha = Matrix.from_columns(f, alpha_cols, pairs.dim)

    beta_cols = []
    for a in range(mid.base.dim):
        e = _unit(f, mid.base.dim, a)
        s1_cols = []
        t1_cols = []
        for i in range(x.top.dim):
            ni = ft.column(i)
            s1_cols.append(tuple(-c for c in _pullback(ft, mid.action.act_right(ni, e))))
            t1_cols.append(_pullback(ft, mid.action.act_left(e, ni)))
        s2_cols = []
        t2_cols = []
        for b in range(x.base.dim):
            qb = fb.column(b)
            s2_cols.append(tuple(-c for c in _pullback(fb, mid.base.bracket(qb, e))))
            t2_cols.append(_pullback(fb, mid.base.bracket(e, qb)))
        quad = (
            Matrix.from_columns(f, s1_cols, x.top.dim),
            Matrix.from_columns(f, t1_cols, x.top.dim),
            Matrix.from_columns(f, s2_cols, x.base.dim),
            Matrix.from_columns(f, t2_cols, x.base.dim),
        )
        coords = quads.coords_of_maps(quad)
        if coords is None:
            raise LinearSolveError("lifted quadruple is not a quadruple-space solution")
        beta_cols.append(coords)
    beta = Matrix.from_columns(f, beta_cols, quads.dim)

    morphism = XModMorphism(mid, actor(x), alpha, beta)
    out = outer_xmod(x)

    induced_top_cols = []
    for r in range(s.last.top.dim):
        w = _pullback(s.project.top_map, _unit(f, s.last.top.dim, r))
        induced_top_cols.append(out.top_project.apply(alpha.apply(w)))
    induced_base_cols = []
    for r in range(s.last.base.dim):
        w = _pullback(s.project.base_map, _unit(f, s.last.base.dim, r))
        induced_base_cols.append(out.base_project.apply(beta.apply(w)))
    induced_top = Matrix.from_columns(f, induced_top_cols, out.xmod.top.dim)
    induced_base = Matrix.from_columns(f, induced_base_cols, out.xmod.base.dim)

    warnings = () if check_conditions(x).any_holds else (NO_CONDITION_WARNING,)
    return LiftResult(morphism, out, induced_top, induced_base, warnings)

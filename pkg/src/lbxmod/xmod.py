"""Crossed modules of Leibniz algebras: validation, sub/quotient objects,
morphisms, kernels, images, centers and the support conditions used by the
reconstruction theorems.

A crossed module is a boundary homomorphism ``top -> base`` together with an
action of the base on the top satisfying the two usual compatibility laws:
the boundary is equivariant (XLb1) and boundary images act like the internal
bracket (XLb2, the Peiffer identities).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .action import ActionData, semidirect_algebra, validate_action
from .algebra import (
    LeibnizAlgebra,
    ValidationReport,
    Violation,
    _unit,
    annihilator,
    commutator,
    is_ideal,
    quotient_algebra,
    subalgebra_on,
)
from .fields import InputDataError, Scalar
from .linalg import LinearSolveError, Matrix, Subspace, column_space, nullspace


class NotAnIdealError(ValueError):
    """The requested sub-object is not a crossed-module ideal."""


@dataclass(frozen=True)
class CrossedModule:
    top: LeibnizAlgebra
    base: LeibnizAlgebra
    boundary: Matrix          # base.dim x top.dim
    action: ActionData        # base acting on top

    def __post_init__(self) -> None:
        if self.boundary.rows != self.base.dim or self.boundary.cols != self.top.dim:
            raise InputDataError("boundary matrix shape does not match the two algebras")
        if self.action.actor is not self.base and self.action.actor != self.base:
            raise InputDataError("action actor is not the base algebra")
        if self.action.target is not self.top and self.action.target != self.top:
            raise InputDataError("action target is not the top algebra")

    @classmethod
    def identity_on(cls, a: LeibnizAlgebra) -> "CrossedModule":
        return cls(a, a, Matrix.identity(a.field, a.dim), ActionData.by_bracket(a))

    @classmethod
    def inclusion_of_ideal(cls, a: LeibnizAlgebra, s: Subspace) -> "CrossedModule":
        """An ideal of a, included into a, acted on by the bracket of a."""
        sub, incl = subalgebra_on(a, s)
        rows = s.basis_vectors()
        left = tuple(
            tuple(_coords(s, a.bracket(_unit(a.field, a.dim, i), rows[t])) for t in range(s.dim))
            for i in range(a.dim)
        )
        right = tuple(
            tuple(_coords(s, a.bracket(rows[t], _unit(a.field, a.dim, i))) for i in range(a.dim))
            for t in range(s.dim)
        )
        act = ActionData(a, sub, left, right)
        return cls(sub, a, incl, act)


def _coords(s: Subspace, vec) -> tuple[Scalar, ...]:
    c = s.coords_of(vec)
    if c is None:
        raise LinearSolveError("vector left the subspace it was supposed to stay in")
    return c


def validate_xmod(x: CrossedModule, check_components: bool = True) -> ValidationReport:
    """Full validity check; labels are prefixed with the failing layer."""
    from .algebra import validate_leibniz

    bad: list[Violation] = []
    if check_components:
        for v in validate_leibniz(x.top).violations:
            bad.append(Violation("top:" + v.axiom, v.witness, v.lhs, v.rhs))
        for v in validate_leibniz(x.base).violations:
            bad.append(Violation("base:" + v.axiom, v.witness, v.lhs, v.rhs))
        for v in validate_action(x.action).violations:
            bad.append(Violation("action:" + v.axiom, v.witness, v.lhs, v.rhs))

    m, p, eta = x.top, x.base, x.boundary
    mu_cols = [eta.column(i) for i in range(m.dim)]
    pu = [_unit(p.field, p.dim, a) for a in range(p.dim)]
    mu_units = [_unit(m.field, m.dim, i) for i in range(m.dim)]

    # boundary is a homomorphism
    for i in range(m.dim):
        for j in range(m.dim):
            lhs = eta.apply(m.table[i][j])
            rhs = p.bracket(mu_cols[i], mu_cols[j])
            if lhs != rhs:
                bad.append(Violation("hom", (i, j), lhs, rhs))

    # XLb1: the boundary intertwines both action brackets
    for a in range(p.dim):
        for i in range(m.dim):
            lhs = eta.apply(x.action.left[a][i])
            rhs = p.bracket(pu[a], mu_cols[i])
            if lhs != rhs:
                bad.append(Violation("XLb1-left", (a, i), lhs, rhs))
            lhs2 = eta.apply(x.action.right[i][a])
            rhs2 = p.bracket(mu_cols[i], pu[a])
            if lhs2 != rhs2:
                bad.append(Violation("XLb1-right", (i, a), lhs2, rhs2))

    # XLb2: boundary images act by the internal bracket (Peiffer)
    for i in range(m.dim):
        for j in range(m.dim):
            lhs = x.action.act_left(mu_cols[i], mu_units[j])
            if lhs != m.table[i][j]:
                bad.append(Violation("XLb2-left", (i, j), lhs, m.table[i][j]))
            rhs = x.action.act_right(mu_units[i], mu_cols[j])
            if rhs != m.table[i][j]:
                bad.append(Violation("XLb2-right", (i, j), rhs, m.table[i][j]))
    return ValidationReport(tuple(bad))


@dataclass(frozen=True)
class XModMorphism:
    source: CrossedModule
    target: CrossedModule
    top_map: Matrix   # target.top.dim x source.top.dim
    base_map: Matrix  # target.base.dim x source.base.dim

    def __post_init__(self) -> None:
        if self.top_map.rows != self.target.top.dim or self.top_map.cols != self.source.top.dim:
            raise InputDataError("top map has the wrong shape")
        if self.base_map.rows != self.target.base.dim or self.base_map.cols != self.source.base.dim:
            raise InputDataError("base map has the wrong shape")


def identity_morphism(x: CrossedModule) -> XModMorphism:
    f = x.top.field
    return XModMorphism(x, x, Matrix.identity(f, x.top.dim), Matrix.identity(f, x.base.dim))


def compose_morphisms(g: XModMorphism, f: XModMorphism) -> XModMorphism:
    if g.source != f.target:
        raise InputDataError("morphisms do not compose")
    return XModMorphism(f.source, g.target, g.top_map @ f.top_map, g.base_map @ f.base_map)


def validate_morphism(f: XModMorphism) -> ValidationReport:
    """Homomorphism on both layers, boundary square, action equivariance."""
    bad: list[Violation] = []
    s, t = f.source, f.target
    ft, fb = f.top_map, f.base_map

    for i in range(s.top.dim):
        for j in range(s.top.dim):
            lhs = ft.apply(s.top.table[i][j])
            rhs = t.top.bracket(ft.column(i), ft.column(j))
            if lhs != rhs:
                bad.append(Violation("top-hom", (i, j), lhs, rhs))
    for a in range(s.base.dim):
        for b in range(s.base.dim):
            lhs = fb.apply(s.base.table[a][b])
            rhs = t.base.bracket(fb.column(a), fb.column(b))
            if lhs != rhs:
                bad.append(Violation("base-hom", (a, b), lhs, rhs))

    sq_lhs = t.boundary @ ft
    sq_rhs = fb @ s.boundary
    if sq_lhs != sq_rhs:
        bad.append(Violation("boundary-square", (), tuple(x for r in sq_lhs.entries for x in r),
                             tuple(x for r in sq_rhs.entries for x in r)))

    for a in range(s.base.dim):
        for i in range(s.top.dim):
            lhs = ft.apply(s.action.left[a][i])
            rhs = t.action.act_left(fb.column(a), ft.column(i))
            if lhs != rhs:
                bad.append(Violation("action-left", (a, i), lhs, rhs))
            lhs2 = ft.apply(s.action.right[i][a])
            rhs2 = t.action.act_right(ft.column(i), fb.column(a))
            if lhs2 != rhs2:
                bad.append(Violation("action-right", (i, a), lhs2, rhs2))
    return ValidationReport(tuple(bad))


# -- embedded sub-objects and quotients --------------------------------


@dataclass(frozen=True)
class SubXMod:
    """A crossed module carried by a pair of subspaces of a parent."""

    parent: CrossedModule
    xmod: CrossedModule
    top_space: Subspace
    base_space: Subspace
    top_include: Matrix
    base_include: Matrix
    warnings: tuple[str, ...] = dc_field(default=())

    def inclusion(self) -> XModMorphism:
        return XModMorphism(self.xmod, self.parent, self.top_include, self.base_include)


def sub_xmod(x: CrossedModule, top_space: Subspace, base_space: Subspace,
             warnings: tuple[str, ...] = ()) -> SubXMod:
    """Induce a crossed module on bracket/action/boundary-closed subspaces."""
    top_alg, top_incl = subalgebra_on(x.top, top_space)
    base_alg, base_incl = subalgebra_on(x.base, base_space)
    t_rows = top_space.basis_vectors()
    b_rows = base_space.basis_vectors()
    bdy_cols = [_coords(base_space, x.boundary.apply(v)) for v in t_rows]
    bdy = Matrix.from_columns(x.top.field, bdy_cols, base_space.dim)
    left = tuple(
        tuple(_coords(top_space, x.action.act_left(b_rows[a], t_rows[i])) for i in range(top_space.dim))
        for a in range(base_space.dim)
    )
    right = tuple(
        tuple(_coords(top_space, x.action.act_right(t_rows[i], b_rows[a])) for a in range(base_space.dim))
        for i in range(top_space.dim)
    )
    act = ActionData(base_alg, top_alg, left, right)
    small = CrossedModule(top_alg, base_alg, bdy, act)
    return SubXMod(x, small, top_space, base_space, top_incl, base_incl, warnings)


def kernel(f: XModMorphism) -> SubXMod:
    return sub_xmod(f.source, nullspace(f.top_map), nullspace(f.base_map))


def image(f: XModMorphism) -> SubXMod:
    return sub_xmod(f.target, column_space(f.top_map), column_space(f.base_map))


@dataclass(frozen=True)
class QuotientXMod:
    parent: CrossedModule
    xmod: CrossedModule
    top_project: Matrix
    base_project: Matrix

    def projection(self) -> XModMorphism:
        return XModMorphism(self.parent, self.xmod, self.top_project, self.base_project)


def check_xmod_ideal(x: CrossedModule, top_space: Subspace, base_space: Subspace) -> list[str]:
    """Reasons the pair fails to be a crossed-module ideal (empty = fine)."""
    problems = []
    if not is_ideal(x.top, top_space):
        problems.append("top subspace is not an ideal of the top algebra")
    if not is_ideal(x.base, base_space):
        problems.append("base subspace is not an ideal of the base algebra")
    for v in top_space.basis_vectors():
        if not base_space.contains(x.boundary.apply(v)):
            problems.append("boundary image of the top part leaves the base part")
            break
    f = x.top.field
    base_units = [_unit(f, x.base.dim, a) for a in range(x.base.dim)]
    top_units = [_unit(f, x.top.dim, i) for i in range(x.top.dim)]
    ok = True
    for b in base_space.basis_vectors():
        for u in top_units:
            if not (top_space.contains(x.action.act_left(b, u)) and top_space.contains(x.action.act_right(u, b))):
                ok = False
    if not ok:
        problems.append("base part does not act into the top part")
    ok = True
    for v in top_space.basis_vectors():
        for q in base_units:
            if not (top_space.contains(x.action.act_left(q, v)) and top_space.contains(x.action.act_right(v, q))):
                ok = False
    if not ok:
        problems.append("top part is not stable under the base action")
    return problems


def quotient_xmod(x: CrossedModule, top_space: Subspace, base_space: Subspace) -> QuotientXMod:
    problems = check_xmod_ideal(x, top_space, base_space)
    if problems:
        raise NotAnIdealError("; ".join(problems))
    top_q, top_proj = quotient_algebra(x.top, top_space)
    base_q, base_proj = quotient_algebra(x.base, base_space)
    t_reps = top_space.complement_indices()
    b_reps = base_space.complement_indices()
    f = x.top.field
    bdy_cols = [base_proj.apply(x.boundary.column(r)) for r in t_reps]
    bdy = Matrix.from_columns(f, bdy_cols, base_q.dim)
    left = tuple(
        tuple(top_proj.apply(x.action.left[a][i]) for i in t_reps)
        for a in b_reps
    )
    right = tuple(
        tuple(top_proj.apply(x.action.right[i][a]) for a in b_reps)
        for i in t_reps
    )
    act = ActionData(base_q, top_q, left, right)
    return QuotientXMod(x, CrossedModule(top_q, base_q, bdy, act), top_proj, base_proj)


# -- support conditions and the center ---------------------------------


@dataclass(frozen=True)
class ConditionFlags:
    """The three alternative hypotheses for reconstructing actions from
    morphisms into the actor: con1 = both annihilators vanish, con2 = the
    top annihilator vanishes and the base is perfect, con3 = both layers
    are perfect."""

    con1: bool
    con2: bool
    con3: bool

    @property
    def any_holds(self) -> bool:
        return self.con1 or self.con2 or self.con3

    def failed(self) -> tuple[str, ...]:
        return tuple(name for name, v in (("con1", self.con1), ("con2", self.con2), ("con3", self.con3)) if not v)


def condition_profile(x: CrossedModule) -> dict:
    """Raw facts behind the flags, convenient for reports."""
    ann_top = annihilator(x.top)
    ann_base = annihilator(x.base)
    top_perfect = commutator(x.top).dim == x.top.dim
    base_perfect = commutator(x.base).dim == x.base.dim
    return {
        "ann_top_dim": ann_top.dim,
        "ann_base_dim": ann_base.dim,
        "top_perfect": top_perfect,
        "base_perfect": base_perfect,
    }


def check_conditions(x: CrossedModule) -> ConditionFlags:
    prof = condition_profile(x)
    ann_top0 = prof["ann_top_dim"] == 0
    ann_base0 = prof["ann_base_dim"] == 0
    return ConditionFlags(
        con1=ann_top0 and ann_base0,
        con2=ann_top0 and prof["base_perfect"],
        con3=prof["top_perfect"] and prof["base_perfect"],
    )


NO_CONDITION_WARNING = (
    "none of con1/con2/con3 hold; the result is the canonical construction "
    "but the reconstruction theorems do not apply"
)


def invariant_top_subspace(x: CrossedModule) -> Subspace:
    """{v in top : [q, v] = 0 = [v, q] for the whole base}."""
    f = x.top.field
    if x.base.dim == 0 or x.top.dim == 0:
        return Subspace.full(f, x.top.dim)
    blocks = None
    for a in range(x.base.dim):
        u = _unit(f, x.base.dim, a)
        stack = x.action.left_operator(u).vstack(x.action.right_operator(u))
        blocks = stack if blocks is None else blocks.vstack(stack)
    assert blocks is not None
    return nullspace(blocks)


def trivially_acting_base_subspace(x: CrossedModule) -> Subspace:
    """{q in base : [q, top] = 0 = [top, q]}."""
    f = x.top.field
    if x.top.dim == 0:
        return Subspace.full(f, x.base.dim)
    blocks = None
    for i in range(x.top.dim):
        lcols = [x.action.left[a][i] for a in range(x.base.dim)]
        rcols = [x.action.right[i][a] for a in range(x.base.dim)]
        stack = Matrix.from_columns(f, lcols, x.top.dim).vstack(Matrix.from_columns(f, rcols, x.top.dim))
        blocks = stack if blocks is None else blocks.vstack(stack)
    assert blocks is not None
    return nullspace(blocks)


def center(x: CrossedModule) -> SubXMod:
    """The central sub-crossed-module: invariant top part over the part of
    the base that acts trivially and annihilates the base algebra."""
    top_space = invariant_top_subspace(x)
    base_space = trivially_acting_base_subspace(x).intersect(annihilator(x.base))
    warnings = () if check_conditions(x).any_holds else (NO_CONDITION_WARNING,)
    return sub_xmod(x, top_space, base_space, warnings)

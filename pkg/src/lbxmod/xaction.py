"""Actions of one crossed module on another, described by equations.

An action of a crossed module (m, p, eta) — the ``actor_xmod`` — on a crossed
module (n, q, mu) — the ``target_xmod`` — consists of ordinary actions of the
algebra p on both n and q, together with two cross pairings m x q -> n and
q x m -> n, all subject to a family of labeled compatibility identities.
Validating those identities, converting such data to and from morphisms into
the actor, and forming the semidirect product crossed module all live here.

Bracket conventions inside the identities: brackets of m with n or q go
through eta (so [m, n] means [eta(m), n] and so on); [q, n]-style brackets are
the target crossed module's own action.  The two pairings are written as
tensors ``cross_mq[i][a]`` and ``cross_qm[a][i]`` with values in n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .action import ActionData, Tensor, semidirect_algebra, validate_action
from .algebra import LeibnizAlgebra, ValidationReport, Violation, _unit
from .fields import Field, InputDataError, Scalar
from .linalg import LinearSolveError, Matrix, add_vectors, scale_vector, zero_vector
from .bider import MapSpace, ShortExactSequence, actor, bider_qn, bider_xmod
from .xmod import (
    ConditionFlags,
    CrossedModule,
    XModMorphism,
    check_conditions,
    condition_profile,
    validate_morphism,
    validate_xmod,
)

#: labels that may fail while still permitting the morphism construction
RELAXABLE_LABELS = ("LbM6a", "LbM6b", "p_on_n:act6", "p_on_q:act6")


class ActionAxiomError(ValueError):
    """The action data violates identities that the construction needs."""

    def __init__(self, labels: Sequence[str]):
        super().__init__("action data violates " + ", ".join(labels))
        self.labels = tuple(labels)


class InvalidMorphismError(ValueError):
    """The given maps are not a morphism of crossed modules."""


class ConditionsNotMetError(ValueError):
    """Recovering an action from a morphism needs one support condition."""

    def __init__(self, flags: ConditionFlags, profile: dict):
        msg = (
            "cannot recover an action: none of the support conditions hold "
            f"(failed: {', '.join(flags.failed())}; top annihilator dim "
            f"{profile['ann_top_dim']}, base annihilator dim {profile['ann_base_dim']}, "
            f"top perfect: {profile['top_perfect']}, base perfect: {profile['base_perfect']})"
        )
        super().__init__(msg)
        self.flags = flags
        self.profile = profile


def _bilinear(field: Field, tensor: Tensor, x: Sequence[Scalar], y: Sequence[Scalar], out_dim: int):
    out = zero_vector(field, out_dim)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            out = add_vectors(out, scale_vector(xi * yj, tensor[i][j]))
    return out


@dataclass(frozen=True)
class XModActionData:
    actor_xmod: CrossedModule   # (m, p, eta)
    target_xmod: CrossedModule  # (n, q, mu)
    act_on_top: ActionData      # p acting on n
    act_on_base: ActionData     # p acting on q
    cross_mq: Tensor            # cross_mq[i][a] = the pairing of m_i with q_a, in n
    cross_qm: Tensor            # cross_qm[a][i] = the pairing of q_a with m_i, in n

    def __post_init__(self) -> None:
        m, p = self.actor_xmod.top, self.actor_xmod.base
        n, q = self.target_xmod.top, self.target_xmod.base
        if self.act_on_top.actor != p or self.act_on_top.target != n:
            raise InputDataError("p-on-n action endpoints do not match the crossed modules")
        if self.act_on_base.actor != p or self.act_on_base.target != q:
            raise InputDataError("p-on-q action endpoints do not match the crossed modules")
        if len(self.cross_mq) != m.dim or any(
            len(r) != q.dim or any(len(v) != n.dim for v in r) for r in self.cross_mq
        ):
            raise InputDataError("m-q pairing tensor has the wrong shape")
        if len(self.cross_qm) != q.dim or any(
            len(r) != m.dim or any(len(v) != n.dim for v in r) for r in self.cross_qm
        ):
            raise InputDataError("q-m pairing tensor has the wrong shape")

    # bilinear evaluation of the two pairings
    def pair_mq(self, mvec: Sequence[Scalar], qvec: Sequence[Scalar]):
        return _bilinear(self.field, self.cross_mq, mvec, qvec, self.target_xmod.top.dim)

    def pair_qm(self, qvec: Sequence[Scalar], mvec: Sequence[Scalar]):
        return _bilinear(self.field, self.cross_qm, qvec, mvec, self.target_xmod.top.dim)

    @property
    def field(self) -> Field:
        return self.actor_xmod.top.field


def validate_xmod_action(d: XModActionData, check_components: bool = True) -> ValidationReport:
    """Check every labeled identity of a crossed-module action.

    Component checks (both crossed modules and both algebra actions) get
    prefixed labels; the mixed identities use their own labels LbEQ*,
    LbCOM*, LbM*.
    """
    bad: list[Violation] = []
    if check_components:
        for prefix, rep in (
            ("x:", validate_xmod(d.actor_xmod)),
            ("y:", validate_xmod(d.target_xmod)),
            ("p_on_n:", validate_action(d.act_on_top)),
            ("p_on_q:", validate_action(d.act_on_base)),
        ):
            for v in rep.violations:
                bad.append(Violation(prefix + v.axiom, v.witness, v.lhs, v.rhs))

    x, y = d.actor_xmod, d.target_xmod
    m, p, eta = x.top, x.base, x.boundary
    n, q, mu = y.top, y.base, y.boundary
    pn, pq, yact, xact = d.act_on_top, d.act_on_base, y.action, x.action
    f = d.field
    pu = [_unit(f, p.dim, b) for b in range(p.dim)]
    qu = [_unit(f, q.dim, a) for a in range(q.dim)]
    nu = [_unit(f, n.dim, j) for j in range(n.dim)]
    muj = [mu.column(j) for j in range(n.dim)]   # boundary images of n-basis
    etai = [eta.column(i) for i in range(m.dim)]  # boundary images of m-basis

    def check(label, witness, lhs, rhs):
        if tuple(lhs) != tuple(rhs):
            bad.append(Violation(label, witness, tuple(lhs), tuple(rhs)))

    def minus(v):
        return tuple(-c for c in v)

    def diff(u, v):
        return tuple(a - b for a, b in zip(u, v))

    def plus(u, v):
        return tuple(a + b for a, b in zip(u, v))

    # boundary equivariance for the p-actions
    for b in range(p.dim):
        for j in range(n.dim):
            check("LbEQ1", (b, j), mu.apply(pn.left[b][j]), pq.act_left(pu[b], muj[j]))
            check("LbEQ2", (j, b), mu.apply(pn.right[j][b]), pq.act_right(muj[j], pu[b]))

    # compatibility of the p- and q-actions on n
    for j in range(n.dim):
        for b in range(p.dim):
            for a in range(q.dim):
                check("LbCOM1", (j, b, a),
                      yact.act_right(nu[j], pq.left[b][a]),
                      diff(yact.act_right(pn.right[j][b], qu[a]),
                           pn.act_right(yact.act_right(nu[j], qu[a]), pu[b])))
                check("LbCOM2", (b, j, a),
                      pn.act_left(pu[b], yact.act_right(nu[j], qu[a])),
                      diff(yact.act_right(pn.left[b][j], qu[a]),
                           yact.act_left(pq.left[b][a], nu[j])))
                check("LbCOM3", (b, a, j),
                      pn.act_left(pu[b], yact.act_left(qu[a], nu[j])),
                      diff(yact.act_left(pq.left[b][a], nu[j]),
                           yact.act_right(pn.left[b][j], qu[a])))
                check("LbCOM4", (j, a, b),
                      yact.act_right(nu[j], pq.right[a][b]),
                      diff(pn.act_right(yact.act_right(nu[j], qu[a]), pu[b]),
                           yact.act_right(pn.right[j][b], qu[a])))
                check("LbCOM5", (a, j, b),
                      yact.act_left(qu[a], pn.right[j][b]),
                      diff(pn.act_right(yact.act_left(qu[a], nu[j]), pu[b]),
                           yact.act_left(pq.right[a][b], nu[j])))
                check("LbCOM6", (a, b, j),
                      yact.act_left(qu[a], pn.left[b][j]),
                      diff(yact.act_left(pq.right[a][b], nu[j]),
                           pn.act_right(yact.act_left(qu[a], nu[j]), pu[b])))

    # pairing identities
    for a in range(q.dim):
        for i in range(m.dim):
            check("LbM1a", (a, i), mu.apply(d.cross_qm[a][i]), pq.act_right(qu[a], etai[i]))
            check("LbM1b", (i, a), mu.apply(d.cross_mq[i][a]), pq.act_left(etai[i], qu[a]))
    for j in range(n.dim):
        for i in range(m.dim):
            mi = _unit(f, m.dim, i)
            check("LbM2a", (j, i), d.pair_qm(muj[j], mi), pn.act_right(nu[j], etai[i]))
            check("LbM2b", (i, j), d.pair_mq(mi, muj[j]), pn.act_left(etai[i], nu[j]))
    for a in range(q.dim):
        for b in range(p.dim):
            for i in range(m.dim):
                mi = _unit(f, m.dim, i)
                check("LbM3a", (a, b, i),
                      d.pair_qm(qu[a], xact.left[b][i]),
                      diff(d.pair_qm(pq.act_right(qu[a], pu[b]), mi),
                           pn.act_right(d.cross_qm[a][i], pu[b])))
                check("LbM3b", (b, i, a),
                      d.pair_mq(xact.left[b][i], qu[a]),
                      diff(d.pair_qm(pq.act_left(pu[b], qu[a]), mi),
                           pn.act_left(pu[b], d.cross_qm[a][i])))
                check("LbM3c", (a, i, b),
                      d.pair_qm(qu[a], xact.right[i][b]),
                      diff(pn.act_right(d.cross_qm[a][i], pu[b]),
                           d.pair_qm(pq.act_right(qu[a], pu[b]), mi)))
                check("LbM3d", (i, b, a),
                      d.pair_mq(xact.right[i][b], qu[a]),
                      diff(pn.act_right(d.cross_mq[i][a], pu[b]),
                           d.pair_mq(mi, pq.act_right(qu[a], pu[b]))))
    for a in range(q.dim):
        for i in range(m.dim):
            for j in range(m.dim):
                mi = _unit(f, m.dim, i)
                mj = _unit(f, m.dim, j)
                check("LbM4a", (a, i, j),
                      d.pair_qm(qu[a], m.table[i][j]),
                      diff(pn.act_right(d.cross_qm[a][i], etai[j]),
                           pn.act_right(d.cross_qm[a][j], etai[i])))
                check("LbM4b", (i, j, a),
                      d.pair_mq(m.table[i][j], qu[a]),
                      diff(pn.act_right(d.cross_mq[i][a], etai[j]),
                           pn.act_left(etai[i], d.cross_qm[a][j])))
    for a in range(q.dim):
        for b in range(q.dim):
            for i in range(m.dim):
                mi = _unit(f, m.dim, i)
                check("LbM5a", (a, b, i),
                      d.pair_qm(q.table[a][b], mi),
                      plus(yact.act_right(d.cross_qm[a][i], qu[b]),
                           yact.act_left(qu[a], d.cross_qm[b][i])))
                check("LbM5b", (i, a, b),
                      d.pair_mq(mi, q.table[a][b]),
                      diff(yact.act_right(d.cross_mq[i][a], qu[b]),
                           yact.act_right(d.cross_mq[i][b], qu[a])))
                check("LbM5c", (a, i, b),
                      yact.act_left(qu[a], d.cross_mq[i][b]),
                      minus(yact.act_left(qu[a], d.cross_qm[b][i])))
    for i in range(m.dim):
        for b in range(p.dim):
            for a in range(q.dim):
                mi = _unit(f, m.dim, i)
                check("LbM6a", (i, b, a),
                      d.pair_mq(mi, pq.left[b][a]),
                      minus(d.pair_mq(mi, pq.right[a][b])))
                check("LbM6b", (b, i, a),
                      pn.act_left(pu[b], d.cross_mq[i][a]),
                      minus(pn.act_left(pu[b], d.cross_qm[a][i])))
    return ValidationReport(tuple(bad))


# -- morphisms into the actor -------------------------------------------


@dataclass(frozen=True)
class ActorMorphism:
    """A morphism from ``source`` into the actor of ``around``.

    Stored with the crossed module the actor was built from, so the actor's
    pair/quadruple spaces can be reconstructed without ambiguity.
    """

    source: CrossedModule
    around: CrossedModule
    top_map: Matrix   # into the pair space of `around`
    base_map: Matrix  # into the quadruple space of `around`

    def as_xmod_morphism(self) -> XModMorphism:
        return XModMorphism(self.source, actor(self.around), self.top_map, self.base_map)


@dataclass(frozen=True)
class ActionToMorphismResult:
    morphism: ActorMorphism
    relaxed_failures: tuple[str, ...]  # relaxable labels that actually failed


def morphism_from_action(d: XModActionData) -> ActionToMorphismResult:
    """Build the morphism (source -> actor(target)) induced by action data.

    Elements of the actor-side top go to the pairs built from the two cross
    pairings; base elements go to the quadruples built from the two algebra
    actions.  All identities except the relaxable ones must hold.
    """
    report = validate_xmod_action(d, check_components=True)
    hard = tuple(sorted({v.axiom for v in report.violations} - set(RELAXABLE_LABELS)))
    if hard:
        raise ActionAxiomError(hard)
    relaxed = tuple(sorted({v.axiom for v in report.violations} & set(RELAXABLE_LABELS)))

    x, y = d.actor_xmod, d.target_xmod
    f = d.field
    pairs = bider_qn(y)
    quads = bider_xmod(y)

    top_cols = []
    for i in range(x.top.dim):
        dmat = Matrix.from_columns(
            f, [tuple(-c for c in d.cross_qm[a][i]) for a in range(y.base.dim)], y.top.dim)
        ddmat = Matrix.from_columns(
            f, [d.cross_mq[i][a] for a in range(y.base.dim)], y.top.dim)
        coords = pairs.coords_of_maps((dmat, ddmat))
        if coords is None:
            raise LinearSolveError("pairing maps do not form a pair-space solution")
        top_cols.append(coords)

    base_cols = []
    for b in range(x.base.dim):
        s1 = Matrix.from_columns(
            f, [tuple(-c for c in d.act_on_top.right[j][b]) for j in range(y.top.dim)], y.top.dim)
        t1 = Matrix.from_columns(
            f, [d.act_on_top.left[b][j] for j in range(y.top.dim)], y.top.dim)
        s2 = Matrix.from_columns(
            f, [tuple(-c for c in d.act_on_base.right[a][b]) for a in range(y.base.dim)], y.base.dim)
        t2 = Matrix.from_columns(
            f, [d.act_on_base.left[b][a] for a in range(y.base.dim)], y.base.dim)
        coords = quads.coords_of_maps((s1, t1, s2, t2))
        if coords is None:
            raise LinearSolveError("action maps do not form a quadruple-space solution")
        base_cols.append(coords)

    morphism = ActorMorphism(
        x, y,
        Matrix.from_columns(f, top_cols, pairs.dim),
        Matrix.from_columns(f, base_cols, quads.dim),
    )
    return ActionToMorphismResult(morphism, relaxed)


def action_from_morphism(fm: ActorMorphism) -> XModActionData:
    """Recover action data from a morphism into the actor.

    Requires at least one support condition on the target crossed module;
    refuses otherwise, naming the failed conditions.
    """
    y = fm.around
    flags = check_conditions(y)
    if not flags.any_holds:
        raise ConditionsNotMetError(flags, condition_profile(y))
    rep = validate_morphism(fm.as_xmod_morphism())
    if not rep.ok:
        raise InvalidMorphismError(
            "the given maps are not a morphism into the actor: " + ", ".join(rep.labels()))

    x = fm.source
    f = y.top.field
    pairs = bider_qn(y)
    quads = bider_xmod(y)
    n_dim, q_dim = y.top.dim, y.base.dim

    pn_left = []
    pn_right = [[None] * x.base.dim for _ in range(n_dim)]
    pq_left = []
    pq_right = [[None] * x.base.dim for _ in range(q_dim)]
    for b in range(x.base.dim):
        s1, t1, s2, t2 = quads.member_from_coords(fm.base_map.column(b))
        pn_left.append(tuple(t1.column(j) for j in range(n_dim)))
        for j in range(n_dim):
            pn_right[j][b] = tuple(-c for c in s1.column(j))
        pq_left.append(tuple(t2.column(a) for a in range(q_dim)))
        for a in range(q_dim):
            pq_right[a][b] = tuple(-c for c in s2.column(a))

    act_on_top = ActionData(x.base, y.top, tuple(pn_left),
                            tuple(tuple(row) for row in pn_right))
    act_on_base = ActionData(x.base, y.base, tuple(pq_left),
                             tuple(tuple(row) for row in pq_right))

    cross_mq = [[None] * q_dim for _ in range(x.top.dim)]
    cross_qm = [[None] * x.top.dim for _ in range(q_dim)]
    for i in range(x.top.dim):
        dmat, ddmat = pairs.member_from_coords(fm.top_map.column(i))
        for a in range(q_dim):
            cross_mq[i][a] = ddmat.column(a)
            cross_qm[a][i] = tuple(-c for c in dmat.column(a))

    return XModActionData(
        x, y, act_on_top, act_on_base,
        tuple(tuple(row) for row in cross_mq),
        tuple(tuple(row) for row in cross_qm),
    )


# -- semidirect product of crossed modules --------------------------------


@dataclass(frozen=True)
class SemidirectXMod:
    """The split extension built from crossed-module action data."""

    xmod: CrossedModule
    include: XModMorphism   # target crossed module -> semidirect
    project: XModMorphism   # semidirect -> actor crossed module
    section: XModMorphism   # actor crossed module -> semidirect

    def sequence(self) -> ShortExactSequence:
        return ShortExactSequence(
            self.include.source, self.xmod, self.project.target, self.include, self.project)


def semidirect_xmod(d: XModActionData) -> SemidirectXMod:
    """Top and base semidirect algebras with the block boundary and the
    mixed action; includes the canonical splitting morphisms."""
    x, y = d.actor_xmod, d.target_xmod
    m, p, eta = x.top, x.base, x.boundary
    n, q, mu = y.top, y.base, y.boundary
    f = d.field

    # action of m on n through the boundary, for the top-layer product
    m_on_n = ActionData(
        m, n,
        tuple(tuple(d.act_on_top.act_left(eta.column(i), _unit(f, n.dim, j))
                    for j in range(n.dim)) for i in range(m.dim)),
        tuple(tuple(d.act_on_top.act_right(_unit(f, n.dim, j), eta.column(i))
                    for i in range(m.dim)) for j in range(n.dim)),
    )
    top_semi = semidirect_algebra(m_on_n)
    base_semi = semidirect_algebra(ActionData(p, q, d.act_on_base.left, d.act_on_base.right))

    top_dim = n.dim + m.dim
    base_dim = q.dim + p.dim
    z = f.zero

    def pad_n(v):
        return tuple(v) + tuple(z for _ in range(m.dim))

    def pad_m(v):
        return tuple(z for _ in range(n.dim)) + tuple(v)

    bdy_cols = [tuple(mu.column(j)) + tuple(z for _ in range(p.dim)) for j in range(n.dim)]
    bdy_cols += [tuple(z for _ in range(q.dim)) + tuple(eta.column(i)) for i in range(m.dim)]
    boundary = Matrix.from_columns(f, bdy_cols, base_dim)

    yact = y.action
    left = []
    for A in range(base_dim):
        row = []
        for I in range(top_dim):
            if A < q.dim and I < n.dim:
                row.append(pad_n(yact.left[A][I]))
            elif A < q.dim:
                row.append(pad_n(d.cross_qm[A][I - n.dim]))
            elif I < n.dim:
                row.append(pad_n(d.act_on_top.left[A - q.dim][I]))
            else:
                row.append(pad_m(x.action.left[A - q.dim][I - n.dim]))
        left.append(tuple(row))
    right = []
    for I in range(top_dim):
        row = []
        for A in range(base_dim):
            if I < n.dim and A < q.dim:
                row.append(pad_n(yact.right[I][A]))
            elif I < n.dim:
                row.append(pad_n(d.act_on_top.right[I][A - q.dim]))
            elif A < q.dim:
                row.append(pad_n(d.cross_mq[I - n.dim][A]))
            else:
                row.append(pad_m(x.action.right[I - n.dim][A - q.dim]))
        right.append(tuple(row))

    act = ActionData(base_semi.algebra, top_semi.algebra, tuple(left), tuple(right))
    semi = CrossedModule(top_semi.algebra, base_semi.algebra, boundary, act)

    include = XModMorphism(y, semi, top_semi.include_target, base_semi.include_target)
    proj_top = Matrix.from_columns(
        f, [zero_vector(f, m.dim) for _ in range(n.dim)] + [_unit(f, m.dim, i) for i in range(m.dim)], m.dim)
    proj_base = Matrix.from_columns(
        f, [zero_vector(f, p.dim) for _ in range(q.dim)] + [_unit(f, p.dim, b) for b in range(p.dim)], p.dim)
    project = XModMorphism(semi, x, proj_top, proj_base)
    section = XModMorphism(x, semi, top_semi.include_actor, base_semi.include_actor)
    return SemidirectXMod(semi, include, project, section)

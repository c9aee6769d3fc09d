"""Actions of one Leibniz algebra on another, and semidirect products.

An action of ``actor`` on ``target`` is a pair of bilinear brackets
[p, m] (``left``) and [m, p] (``right``) with values in the target, subject
to six compatibility identities mixing them with the two algebra brackets.
The tensors are stored as ``left[a][i]`` = [p_a, m_i] and
``right[i][a]`` = [m_i, p_a], each a target coordinate vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import LeibnizAlgebra, ValidationReport, Violation, _unit
from .fields import InputDataError, Scalar
from .linalg import Matrix, add_vectors, scale_vector, sub_vectors, zero_vector

Tensor = tuple[tuple[tuple[Scalar, ...], ...], ...]


def _freeze_tensor(field, data, d0: int, d1: int, d2: int) -> Tensor:
    if len(data) != d0 or any(len(r) != d1 or any(len(v) != d2 for v in r) for r in data):
        raise InputDataError(f"action tensor shape is not {d0}x{d1}x{d2}")
    return tuple(tuple(tuple(field.coerce(x) for x in v) for v in r) for r in data)


@dataclass(frozen=True)
class ActionData:
    actor: LeibnizAlgebra
    target: LeibnizAlgebra
    left: Tensor   # left[a][i]  = [p_a, m_i], a vector in the target
    right: Tensor  # right[i][a] = [m_i, p_a]

    def __post_init__(self) -> None:
        p, m = self.actor.dim, self.target.dim
        _freeze_tensor(self.actor.field, self.left, p, m, m)
        _freeze_tensor(self.actor.field, self.right, m, p, m)
        if self.actor.field != self.target.field:
            raise InputDataError("actor and target live over different fields")

    @classmethod
    def build(cls, actor: LeibnizAlgebra, target: LeibnizAlgebra, left, right) -> "ActionData":
        f = actor.field
        lf = _freeze_tensor(f, left, actor.dim, target.dim, target.dim)
        rf = _freeze_tensor(f, right, target.dim, actor.dim, target.dim)
        return cls(actor, target, lf, rf)

    @classmethod
    def zero(cls, actor: LeibnizAlgebra, target: LeibnizAlgebra) -> "ActionData":
        z = zero_vector(actor.field, target.dim)
        left = tuple(tuple(z for _ in range(target.dim)) for _ in range(actor.dim))
        right = tuple(tuple(z for _ in range(actor.dim)) for _ in range(target.dim))
        return cls(actor, target, left, right)

    @classmethod
    def by_bracket(cls, a: LeibnizAlgebra) -> "ActionData":
        """An algebra acting on itself through its own bracket."""
        left = tuple(tuple(a.table[i][j] for j in range(a.dim)) for i in range(a.dim))
        return cls(a, a, left, left)

    # -- evaluation ---------------------------------------------------

    def act_left(self, pvec: Sequence[Scalar], mvec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        out = zero_vector(self.target.field, self.target.dim)
        for a, pa in enumerate(pvec):
            if not pa:
                continue
            for i, mi in enumerate(mvec):
                if not mi:
                    continue
                out = add_vectors(out, scale_vector(pa * mi, self.left[a][i]))
        return out

    def act_right(self, mvec: Sequence[Scalar], pvec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        out = zero_vector(self.target.field, self.target.dim)
        for i, mi in enumerate(mvec):
            if not mi:
                continue
            for a, pa in enumerate(pvec):
                if not pa:
                    continue
                out = add_vectors(out, scale_vector(mi * pa, self.right[i][a]))
        return out

    def left_operator(self, pvec: Sequence[Scalar]) -> Matrix:
        """Matrix of m -> [p, m] for a fixed actor element."""
        cols = [self.act_left(pvec, _unit(self.target.field, self.target.dim, i)) for i in range(self.target.dim)]
        return Matrix.from_columns(self.target.field, cols, self.target.dim)

    def right_operator(self, pvec: Sequence[Scalar]) -> Matrix:
        """Matrix of m -> [m, p] for a fixed actor element."""
        cols = [self.act_right(_unit(self.target.field, self.target.dim, i), pvec) for i in range(self.target.dim)]
        return Matrix.from_columns(self.target.field, cols, self.target.dim)


def validate_action(d: ActionData) -> ValidationReport:
    """Check the six mixed identities on all basis triples.

    Labels act1..act6 pick out which identity failed; the witness tuple
    lists the basis indices in the order the identity quantifies them.
    """
    p, m = d.actor, d.target
    pu = [_unit(p.field, p.dim, a) for a in range(p.dim)]
    mu = [_unit(m.field, m.dim, i) for i in range(m.dim)]
    bad: list[Violation] = []

    def check(label: str, witness: tuple[int, ...], lhs, rhs1, rhs2) -> None:
        rhs = sub_vectors(rhs1, rhs2)
        if lhs != rhs:
            bad.append(Violation(label, witness, tuple(lhs), tuple(rhs)))

    for a in range(p.dim):
        for i in range(m.dim):
            for j in range(m.dim):
                check("act1", (a, i, j),
                      d.act_left(pu[a], m.table[i][j]),
                      m.bracket(d.left[a][i], mu[j]),
                      m.bracket(d.left[a][j], mu[i]))
                check("act2", (i, a, j),
                      m.bracket(mu[i], d.left[a][j]),
                      m.bracket(d.right[i][a], mu[j]),
                      d.act_right(m.table[i][j], pu[a]))
                check("act3", (i, j, a),
                      m.bracket(mu[i], d.right[j][a]),
                      d.act_right(m.table[i][j], pu[a]),
                      m.bracket(d.right[i][a], mu[j]))
    for i in range(m.dim):
        for a in range(p.dim):
            for b in range(p.dim):
                check("act4", (i, a, b),
                      d.act_right(mu[i], p.table[a][b]),
                      d.act_right(d.right[i][a], pu[b]),
                      d.act_right(d.right[i][b], pu[a]))
    for a in range(p.dim):
        for i in range(m.dim):
            for b in range(p.dim):
                check("act5", (a, i, b),
                      d.act_left(pu[a], d.right[i][b]),
                      d.act_right(d.left[a][i], pu[b]),
                      d.act_left(p.table[a][b], mu[i]))
                check("act6", (a, b, i),
                      d.act_left(pu[a], d.left[b][i]),
                      d.act_left(p.table[a][b], mu[i]),
                      d.act_right(d.left[a][i], pu[b]))
    return ValidationReport(tuple(bad))


@dataclass(frozen=True)
class SemidirectAlgebra:
    algebra: LeibnizAlgebra
    include_target: Matrix  # target -> sum, first block
    include_actor: Matrix   # actor -> sum, second block


def semidirect_algebra(d: ActionData) -> SemidirectAlgebra:
    """Target-plus-actor algebra with bracket twisted by the action.

    Basis order is the target block first, then the actor block:
    [(m, p), (m', p')] = ([m, m'] + [p, m'] + [m, p'], [p, p']).
    """
    m, p = d.target, d.actor
    n = m.dim + p.dim
    f = m.field
    z = f.zero

    def pad_m(v):
        return tuple(v) + tuple(z for _ in range(p.dim))

    def pad_p(v):
        return tuple(z for _ in range(m.dim)) + tuple(v)

    tab = [[None] * n for _ in range(n)]
    for i in range(m.dim):
        for j in range(m.dim):
            tab[i][j] = pad_m(m.table[i][j])
        for b in range(p.dim):
            tab[i][m.dim + b] = pad_m(d.right[i][b])
    for a in range(p.dim):
        for j in range(m.dim):
            tab[m.dim + a][j] = pad_m(d.left[a][j])
        for b in range(p.dim):
            tab[m.dim + a][m.dim + b] = pad_p(p.table[a][b])
    alg = LeibnizAlgebra(f, n, tuple(tuple(row) for row in tab))
    inc_m = Matrix.from_columns(f, [_unit(f, n, i) for i in range(m.dim)], n)
    inc_p = Matrix.from_columns(f, [_unit(f, n, m.dim + a) for a in range(p.dim)], n)
    return SemidirectAlgebra(alg, inc_m, inc_p)

"""Finite-dimensional Leibniz (Loday) algebras via structure-constant tables.

An algebra of dimension n over a field k is the table of basis brackets
``table[i][j]`` = the coordinate vector of [e_i, e_j].  The defining identity
used throughout is the left version

    [[x, y], z] = [x, [y, z]] + [[x, z], y].
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Optional, Sequence

from .fields import Field, InputDataError, Scalar
from .linalg import (
    LinearSolveError,
    Matrix,
    Subspace,
    add_vectors,
    nullspace,
    scale_vector,
    zero_vector,
)

MAX_DIM = 64  # guard against accidentally huge inputs


@dataclass(frozen=True)
class LeibnizAlgebra:
    field: Field
    dim: int
    table: tuple[tuple[tuple[Scalar, ...], ...], ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if not 0 <= self.dim <= MAX_DIM:
            raise InputDataError(f"dimension {self.dim} outside [0, {MAX_DIM}]")
        if len(self.table) != self.dim or any(
            len(row) != self.dim or any(len(v) != self.dim for v in row) for row in self.table
        ):
            raise InputDataError("structure table shape does not match dimension")
        if self.names is not None and len(self.names) != self.dim:
            raise InputDataError("basis name list does not match dimension")

    # -- construction -------------------------------------------------

    @classmethod
    def from_brackets(
        cls,
        field: Field,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, object]],
        names: Optional[Sequence[str]] = None,
    ) -> "LeibnizAlgebra":
        """Build from a sparse {(i, j): {k: coefficient}} description."""
        z = field.zero
        tab = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise InputDataError(f"bracket index ({i}, {j}) out of range")
            for k, c in terms.items():
                if not 0 <= k < dim:
                    raise InputDataError(f"bracket target index {k} out of range")
                tab[i][j][k] = field.coerce(c)
        frozen = tuple(tuple(tuple(v) for v in row) for row in tab)
        return cls(field, dim, frozen, tuple(names) if names is not None else None)

    @classmethod
    def abelian(cls, field: Field, dim: int, names: Optional[Sequence[str]] = None) -> "LeibnizAlgebra":
        return cls.from_brackets(field, dim, {}, names)

    # -- basic operations ---------------------------------------------

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> tuple[Scalar, ...]:
        out = zero_vector(self.field, self.dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                out = add_vectors(out, scale_vector(xi * yj, self.table[i][j]))
        return out

    def left_operator(self, x: Sequence[Scalar]) -> Matrix:
        """Matrix of y -> [x, y]."""
        cols = [self.bracket(x, _unit(self.field, self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_operator(self, x: Sequence[Scalar]) -> Matrix:
        """Matrix of y -> [y, x]."""
        cols = [self.bracket(_unit(self.field, self.dim, j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)


def _unit(field: Field, n: int, i: int) -> tuple[Scalar, ...]:
    return tuple(field.one if j == i else field.zero for j in range(n))


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    lhs: tuple[Scalar, ...]
    rhs: tuple[Scalar, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = dc_field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def labels(self) -> tuple[str, ...]:
        return tuple(sorted({v.axiom for v in self.violations}))


def validate_leibniz(a: LeibnizAlgebra) -> ValidationReport:
    """Check [[x,y],z] = [x,[y,z]] + [[x,z],y] on all basis triples."""
    bad = []
    units = [_unit(a.field, a.dim, i) for i in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                lhs = a.bracket(a.table[i][j], units[k])
                rhs = add_vectors(a.bracket(units[i], a.table[j][k]), a.bracket(a.table[i][k], units[j]))
                if lhs != rhs:
                    bad.append(Violation("leibniz", (i, j, k), lhs, rhs))
    return ValidationReport(tuple(bad))


def annihilator(a: LeibnizAlgebra) -> Subspace:
    """{x : [y, x] = 0 = [x, y] for all y}, the two-sided annihilator."""
    if a.dim == 0:
        return Subspace.zero(a.field, 0)
    blocks = None
    for i in range(a.dim):
        li = a.left_operator(_unit(a.field, a.dim, i))
        ri = a.right_operator(_unit(a.field, a.dim, i))
        stack = li.vstack(ri)
        blocks = stack if blocks is None else blocks.vstack(stack)
    assert blocks is not None
    return nullspace(blocks)


def commutator(a: LeibnizAlgebra) -> Subspace:
    """Span of all basis brackets [e_i, e_j]."""
    rows = [a.table[i][j] for i in range(a.dim) for j in range(a.dim)]
    return Subspace.from_rows(a.field, a.dim, rows)


def is_ideal(a: LeibnizAlgebra, s: Subspace) -> bool:
    if s.ambient != a.dim:
        raise InputDataError("subspace does not live in the algebra")
    units = [_unit(a.field, a.dim, i) for i in range(a.dim)]
    for v in s.basis_vectors():
        for u in units:
            if not s.contains(a.bracket(u, v)) or not s.contains(a.bracket(v, u)):
                return False
    return True


def subalgebra_on(a: LeibnizAlgebra, s: Subspace) -> tuple[LeibnizAlgebra, Matrix]:
    """The induced algebra on a bracket-closed subspace.

    Returns the small algebra in the coordinates of s's basis rows together
    with the inclusion matrix (a.dim x s.dim).
    """
    k = s.dim
    rows = s.basis_vectors()
    tab = []
    for i in range(k):
        tab_row = []
        for j in range(k):
            w = a.bracket(rows[i], rows[j])
            coords = s.coords_of(w)
            if coords is None:
                raise LinearSolveError("subspace is not closed under the bracket")
            tab_row.append(coords)
        tab.append(tuple(tab_row))
    small = LeibnizAlgebra(a.field, k, tuple(tab))
    incl = Matrix.from_columns(a.field, list(rows), a.dim)
    return small, incl


def quotient_algebra(a: LeibnizAlgebra, ideal: Subspace) -> tuple[LeibnizAlgebra, Matrix]:
    """Quotient by a two-sided ideal, with the projection matrix.

    Representatives are the standard basis vectors at the non-pivot
    coordinates of the ideal's echelon basis, in index order.
    """
    if not is_ideal(a, ideal):
        raise InputDataError("quotient requested by a subspace that is not an ideal")
    reps = ideal.complement_indices()
    proj = ideal.projection_matrix()
    tab = []
    for r in reps:
        tab.append(tuple(proj.apply(a.table[r][s]) for s in reps))
    small = LeibnizAlgebra(a.field, len(reps), tuple(tab))
    return small, proj


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra) -> tuple[LeibnizAlgebra, Matrix, Matrix]:
    """Block direct sum with the two inclusion matrices."""
    if a.field != b.field:
        raise InputDataError("direct sum over different fields")
    n = a.dim + b.dim
    z = a.field.zero
    tab = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                tab[i][j][k] = a.table[i][j][k]
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                tab[a.dim + i][a.dim + j][a.dim + k] = b.table[i][j][k]
    alg = LeibnizAlgebra(a.field, n, tuple(tuple(tuple(v) for v in row) for row in tab))
    incl_a = Matrix.from_columns(a.field, [_unit(a.field, n, i) for i in range(a.dim)], n)
    incl_b = Matrix.from_columns(a.field, [_unit(a.field, n, a.dim + i) for i in range(b.dim)], n)
    return alg, incl_a, incl_b

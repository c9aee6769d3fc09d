"""Exact dense linear algebra over a field object.

Matrices are immutable row-major tuples; linear maps act on column vectors
(``apply``), so a map f: k^c -> k^r is an r x c matrix.  Subspaces of k^n are
stored by their unique reduced-row-echelon basis, which makes equality of
subspaces plain tuple equality and keeps every downstream report canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .fields import Field, InputDataError, Scalar


class LinearSolveError(RuntimeError):
    """A vector that theory says must lie in a solution space does not.

    Raising this means a bug (or an invalid input that slipped past
    validation), never a normal failure mode.
    """


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise InputDataError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r in self.entries:
            if len(r) != self.cols:
                raise InputDataError(f"expected {self.cols} cols, got {len(r)}")

    # -- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[object]], cols: Optional[int] = None) -> "Matrix":
        data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if cols is None:
            if not data:
                raise InputDataError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        return cls(field, len(data), cols, data)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence[Scalar]], rows: int) -> "Matrix":
        return cls(field, rows, len(columns), tuple(tuple(col[i] for col in columns) for i in range(rows)))

    # -- accessors ----------------------------------------------------

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            self.field, self.rows, self.cols,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            self.field, self.rows, self.cols,
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, tuple(tuple(c * a for a in row) for row in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputDataError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        z = self.field.zero
        out = []
        for i in range(self.rows):
            ri = self.entries[i]
            out.append(tuple(
                sum((ri[k] * other.entries[k][j] for k in range(self.cols)), z)
                for j in range(other.cols)
            ))
        return Matrix(self.field, self.rows, other.cols, tuple(out))

    def apply(self, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise InputDataError(f"vector of length {len(vec)} for a {self.rows}x{self.cols} matrix")
        z = self.field.zero
        return tuple(sum((row[k] * vec[k] for k in range(self.cols)), z) for row in self.entries)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise InputDataError("hstack row mismatch")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      tuple(ra + rb for ra, rb in zip(self.entries, other.entries)))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise InputDataError("vstack col mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise InputDataError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def zero_vector(field: Field, n: int) -> tuple[Scalar, ...]:
    return tuple(field.zero for _ in range(n))


def unit_vector(field: Field, n: int, i: int) -> tuple[Scalar, ...]:
    return tuple(field.one if j == i else field.zero for j in range(n))


def add_vectors(a: Sequence[Scalar], b: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(x + y for x, y in zip(a, b))


def sub_vectors(a: Sequence[Scalar], b: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(x - y for x, y in zip(a, b))


def scale_vector(c: Scalar, a: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(c * x for x in a)


@dataclass(frozen=True)
class RrefResult:
    matrix: Matrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form with the first-nonzero pivot rule."""
    work = [list(row) for row in m.entries]
    pivots: list[int] = []
    pr = 0  # next pivot row
    for col in range(m.cols):
        # find the first row at or below pr with a nonzero entry in col
        sel = next((r for r in range(pr, m.rows) if work[r][col]), None)
        if sel is None:
            continue
        work[pr], work[sel] = work[sel], work[pr]
        inv = m.field.one / work[pr][col]
        work[pr] = [inv * x for x in work[pr]]
        for r in range(m.rows):
            if r != pr and work[r][col]:
                c = work[r][col]
                work[r] = [x - c * y for x, y in zip(work[r], work[pr])]
        pivots.append(col)
        pr += 1
        if pr == m.rows:
            break
    reduced = Matrix(m.field, m.rows, m.cols, tuple(tuple(row) for row in work))
    return RrefResult(reduced, tuple(pivots))


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^ambient, held by its unique RREF basis (rows)."""

    field: Field
    ambient: int
    basis: Matrix  # dim x ambient, in reduced row echelon form, full row rank
    pivots: tuple[int, ...]

    @classmethod
    def from_rows(cls, field: Field, ambient: int, rows: Iterable[Sequence[Scalar]]) -> "Subspace":
        mat = Matrix(field, 0, ambient, ())
        data = tuple(tuple(r) for r in rows)
        if data:
            mat = Matrix(field, len(data), ambient, data)
        red = rref(mat)
        keep = red.matrix.entries[: red.rank]
        return cls(field, ambient, Matrix(field, red.rank, ambient, keep), red.pivots)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, Matrix(field, 0, ambient, ()), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, Matrix.identity(field, ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> tuple[tuple[Scalar, ...], ...]:
        return self.basis.entries

    def reduce(self, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Subtract basis rows to zero out the pivot coordinates of vec."""
        v = list(vec)
        for t, p in enumerate(self.pivots):
            if v[p]:
                c = v[p]
                row = self.basis.entries[t]
                v = [x - c * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, vec: Sequence[Scalar]) -> bool:
        return not any(self.reduce(vec))

    def coords_of(self, vec: Sequence[Scalar]) -> Optional[tuple[Scalar, ...]]:
        """Coordinates of vec in the basis rows, or None if vec is outside."""
        coords = tuple(vec[p] for p in self.pivots)
        if self.contains(vec):
            return coords
        return None

    def linear_combination(self, coords: Sequence[Scalar]) -> tuple[Scalar, ...]:
        v = list(zero_vector(self.field, self.ambient))
        for c, row in zip(coords, self.basis.entries):
            if c:
                v = [x + c * y for x, y in zip(v, row)]
        return tuple(v)

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace.from_rows(self.field, self.ambient, self.basis.entries + other.basis.entries)

    def perp_generators(self) -> Matrix:
        """Rows spanning {z : v . z = 0 for all v in this subspace}."""
        return nullspace(self.basis).basis

    def intersect(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        stacked = self.perp_generators().vstack(other.perp_generators())
        return nullspace(stacked)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        return all(other.contains(row) for row in self.basis.entries)

    def complement_indices(self) -> tuple[int, ...]:
        """Standard coordinates not used as pivots, in index order.

        The matching standard basis vectors represent a basis of
        k^ambient modulo this subspace.
        """
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient) if j not in piv)

    def projection_matrix(self) -> Matrix:
        """Map k^ambient onto the span of the complement representatives.

        Row r / column j holds the coefficient of representative r in the
        canonical reduction of e_j modulo this subspace.
        """
        reps = self.complement_indices()
        cols = []
        for j in range(self.ambient):
            rem = self.reduce(unit_vector(self.field, self.ambient, j))
            cols.append(tuple(rem[r] for r in reps))
        return Matrix.from_columns(self.field, cols, len(reps))

    def _same_ambient(self, other: "Subspace") -> None:
        if self.ambient != other.ambient or self.field != other.field:
            raise InputDataError("subspaces live in different ambient spaces")


def nullspace(m: Matrix) -> Subspace:
    """Kernel of m acting on column vectors, as a subspace of k^cols."""
    red = rref(m)
    piv = red.pivots
    pivset = set(piv)
    free = [j for j in range(m.cols) if j not in pivset]
    rows = []
    for f in free:
        v = [m.field.zero] * m.cols
        v[f] = m.field.one
        for t, p in enumerate(piv):
            v[p] = -red.matrix.entries[t][f]
        rows.append(tuple(v))
    return Subspace.from_rows(m.field, m.cols, rows)


def column_space(m: Matrix) -> Subspace:
    return Subspace.from_rows(m.field, m.rows, m.transpose().entries)


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """One exact solution X of a @ X = b (free variables set to zero).

    Returns None when the system is inconsistent.  b may have several
    columns; they are solved against a single echelon pass.
    """
    if a.rows != b.rows:
        raise InputDataError("solve: row mismatch")
    red = rref(a.hstack(b))
    for t, p in enumerate(red.pivots):
        if p >= a.cols:  # a pivot inside the right-hand block
            return None
    z = a.field.zero
    out = [[z] * b.cols for _ in range(a.cols)]
    for t, p in enumerate(red.pivots):
        for c in range(b.cols):
            out[p][c] = red.matrix.entries[t][a.cols + c]
    return Matrix(a.field, a.cols, b.cols, tuple(tuple(r) for r in out))


def solve_vector(a: Matrix, vec: Sequence[Scalar]) -> Optional[tuple[Scalar, ...]]:
    res = solve(a, Matrix.from_columns(a.field, [tuple(vec)], a.rows))
    if res is None:
        return None
    return res.column(0)


def all_vectors(field: Field, n: int, elements: Sequence[Scalar]) -> Iterable[tuple[Scalar, ...]]:
    """Every vector of k^n for a finite scalar list (test/enumeration aid)."""
    return itertools.product(elements, repeat=n)

"""Exact integer linear algebra: Smith normal form, kernels, subquotients.

All computations run on immutable dense matrices of Python ints, so results
are exact; Smith-form coefficient growth is absorbed by arbitrary precision.

Orientation convention used throughout homkit: a presentation matrix has one
ROW per generator and one COLUMN per relation, and matrices act on column
vectors.  A vector is a plain tuple of ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .errors import InputError

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of arbitrary-precision integers, row-major.

    Zero-dimensional matrices are legal and represent zero maps.
    """

    rows: int
    cols: int
    data: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise InputError("matrix data does not match declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: Optional[int] = None, cols: Optional[int] = None) -> "IntMatrix":
        n = len(entries)
        rows = n if rows is None else rows
        cols = n if cols is None else cols
        return cls(rows, cols, tuple(
            tuple(entries[i] if i == j and i < n else 0 for j in range(cols))
            for i in range(rows)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: Optional[int] = None) -> "IntMatrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls(rows, len(columns), tuple(
            tuple(int(col[i]) for col in columns) for i in range(rows)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.data[ij[0]][ij[1]]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in row) for row in self.data))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shape mismatch in addition")
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(c * x for x in row) for row in self.data))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError("matrix shape mismatch in product")
        bt = other.transpose().data
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt) for row in self.data))

    def apply(self, vec: Sequence[int]) -> Vector:
        if len(vec) != self.cols:
            raise InputError("vector length does not match matrix columns")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        """Kronecker product; index (i, k) of the product is i*other.rows + k."""
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        data = tuple(
            tuple(self.data[i][j] * other.data[k][l]
                  for j in range(self.cols) for l in range(other.cols))
            for i in range(self.rows) for k in range(other.rows))
        return IntMatrix(rows, cols, data)


def hstack(*mats: IntMatrix) -> IntMatrix:
    mats = tuple(m for m in mats)
    if not mats:
        raise InputError("hstack needs at least one matrix")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise InputError("hstack: row counts differ")
    data = tuple(tuple(x for m in mats for x in m.data[i]) for i in range(rows))
    return IntMatrix(rows, sum(m.cols for m in mats), data)


def vstack(*mats: IntMatrix) -> IntMatrix:
    mats = tuple(m for m in mats)
    if not mats:
        raise InputError("vstack needs at least one matrix")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise InputError("vstack: column counts differ")
    data = tuple(row for m in mats for row in m.data)
    return IntMatrix(sum(m.rows for m in mats), cols, data)


def block(grid: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Assemble a block matrix from a grid of compatible blocks."""
    return vstack(*(hstack(*row) for row in grid))


def block_diag(*mats: IntMatrix) -> IntMatrix:
    n = len(mats)
    grid = [[mats[i] if i == j else IntMatrix.zero(mats[i].rows, mats[j].cols)
             for j in range(n)] for i in range(n)]
    return block(grid)


def vec(m: IntMatrix) -> Vector:
    """Column-major vectorization: vec(A X B) = (B^T kron A) vec(X)."""
    return tuple(m.data[i][j] for j in range(m.cols) for i in range(m.rows))


def unvec(v: Sequence[int], rows: int, cols: int) -> IntMatrix:
    if len(v) != rows * cols:
        raise InputError("unvec: length mismatch")
    return IntMatrix(rows, cols, tuple(
        tuple(v[j * rows + i] for j in range(cols)) for i in range(rows)))


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular U, V and diagonal S with U @ A @ V = S.

    Diagonal entries are nonnegative, each divides the next, zeros trail.
    """

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> Vector:
        n = min(self.s.rows, self.s.cols)
        return tuple(self.s.data[i][i] for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _pivot(a: list[list[int]], k: int, rows: int, cols: int) -> Optional[tuple[int, int]]:
    """Nonzero entry of a[k:, k:] with minimal |value|, lowest (i, j) on ties."""
    best = None
    best_abs = None
    for i in range(k, rows):
        ai = a[i]
        for j in range(k, cols):
            x = ai[j]
            if x != 0:
                ax = -x if x < 0 else x
                if best_abs is None or ax < best_abs:
                    best, best_abs = (i, j), ax
                    if ax == 1:
                        return best
    return best


def snf(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form of an integer matrix.

    Pivots are chosen by minimal absolute value with lowest-index tie-break,
    so the returned (U, S, V) is deterministic.
    """
    rows, cols = a.rows, a.cols
    s = [list(r) for r in a.data]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i1, i2):
        if i1 != i2:
            s[i1], s[i2] = s[i2], s[i1]
            u[i1], u[i2] = u[i2], u[i1]

    def swap_cols(j1, j2):
        if j1 != j2:
            for r in s:
                r[j1], r[j2] = r[j2], r[j1]
            for r in v:
                r[j1], r[j2] = r[j2], r[j1]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        sd, ss = s[dst], s[src]
        for j in range(cols):
            sd[j] += c * ss[j]
        ud, us = u[dst], u[src]
        for j in range(rows):
            ud[j] += c * us[j]

    def add_col(dst, src, c):
        for r in s:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    for k in range(min(rows, cols)):
        while True:
            piv = _pivot(s, k, rows, cols)
            if piv is None:
                break
            swap_rows(k, piv[0])
            swap_cols(k, piv[1])
            p = s[k][k]
            dirty = False
            for i in range(k + 1, rows):
                if s[i][k] != 0:
                    add_row(i, k, -(s[i][k] // p))
                    if s[i][k] != 0:
                        dirty = True
            if dirty:
                continue
            for j in range(k + 1, cols):
                if s[k][j] != 0:
                    add_col(j, k, -(s[k][j] // p))
                    if s[k][j] != 0:
                        dirty = True
            if dirty:
                continue
            # Row/column k are clear; enforce divisibility of the remaining block.
            offender = None
            for i in range(k + 1, rows):
                si = s[i]
                for j in range(k + 1, cols):
                    if si[j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(k, offender, 1)
        if s[k][k] < 0:
            negate_row(k)

    return SmithDecomposition(
        IntMatrix.from_rows(u, rows), IntMatrix.from_rows(s, cols), IntMatrix.from_rows(v, cols))


def cokernel_invariants(a: IntMatrix) -> tuple[int, tuple[int, ...]]:
    """Canonical form of coker(a): (free rank, invariant factors >= 2).

    Rows of `a` index generators, columns index relations.
    """
    diag = snf(a).diagonal
    factors = tuple(d for d in diag if d >= 2)
    rank = a.rows - sum(1 for d in diag if d != 0)
    return rank, factors


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns form a basis of the lattice ker(a); the kernel is saturated."""
    dec = snf(a)
    r = dec.rank
    cols = [dec.v.column(j) for j in range(r, a.cols)]
    return IntMatrix.from_columns(cols, rows=a.cols)


def solve(a: IntMatrix, b: Sequence[int]) -> Optional[Vector]:
    """One integer solution x of a @ x = b, or None if none exists."""
    if len(b) != a.rows:
        raise InputError("solve: right-hand side has wrong length")
    dec = snf(a)
    ub = dec.u.apply(b)
    n = min(a.rows, a.cols)
    y = [0] * a.cols
    for i in range(a.rows):
        d = dec.s.data[i][i] if i < n else 0
        if d == 0:
            if ub[i] != 0:
                return None
        else:
            q, r = divmod(ub[i], d)
            if r != 0:
                return None
            y[i] = q
    return dec.v.apply(y)


def solve_matrix(a: IntMatrix, b: IntMatrix) -> Optional[IntMatrix]:
    """X with a @ X = b, columnwise, or None."""
    if a.rows != b.rows:
        raise InputError("solve_matrix: row counts differ")
    cols = []
    for j in range(b.cols):
        x = solve(a, b.column(j))
        if x is None:
            return None
        cols.append(x)
    return IntMatrix.from_columns(cols, rows=a.cols)


def lattice_basis(gens: IntMatrix) -> IntMatrix:
    """Basis of the lattice spanned by the columns of `gens`."""
    dec = snf(gens)
    av = gens @ dec.v
    cols = [av.column(j) for j in range(dec.rank)]
    return IntMatrix.from_columns(cols, rows=gens.rows)


def in_lattice(gens: IntMatrix, vec_: Sequence[int]) -> bool:
    return solve(gens, vec_) is not None


def lattice_contains(outer: IntMatrix, inner: IntMatrix) -> bool:
    """True if every column of `inner` lies in the column lattice of `outer`."""
    return solve_matrix(outer, inner) is not None


def lattices_equal(a: IntMatrix, b: IntMatrix) -> bool:
    return lattice_contains(a, b) and lattice_contains(b, a)


def preimage_gens(a: IntMatrix, target_gens: IntMatrix) -> IntMatrix:
    """Basis of the lattice {x : a @ x lies in the column lattice of target_gens}."""
    if target_gens.cols == 0:
        return kernel_basis(a)
    if a.rows != target_gens.rows:
        raise InputError("preimage_gens: ambient dimensions differ")
    k = kernel_basis(hstack(a, target_gens))
    proj = IntMatrix(a.cols, k.cols, tuple(k.data[i] for i in range(a.cols)))
    return lattice_basis(proj)


@dataclass(frozen=True)
class Subquotient:
    """A subquotient P/Q of some Z^n with elements addressable by coordinates.

    `basis` has one column per generator (a basis of the sublattice P), and
    `presentation` presents the quotient in those coordinates: one row per
    generator, one column per relation.
    """

    ambient_dim: int
    basis: IntMatrix
    presentation: IntMatrix

    @cached_property
    def invariants(self) -> tuple[int, tuple[int, ...]]:
        return cokernel_invariants(self.presentation)

    @property
    def ngens(self) -> int:
        return self.basis.cols

    def from_coords(self, coords: Sequence[int]) -> Vector:
        """Ambient representative of the element with the given coordinates."""
        return self.basis.apply(coords)

    def to_coords(self, ambient: Sequence[int]) -> Vector:
        """Coordinates of an ambient vector; it must lie in the sublattice."""
        x = solve(self.basis, ambient)
        if x is None:
            raise InputError("vector does not lie in the subgroup")
        return x


def lattice_quotient(p_gens: IntMatrix, q_gens: IntMatrix) -> Subquotient:
    """The quotient lattice(p_gens)/lattice(q_gens); Q must be contained in P."""
    if p_gens.rows != q_gens.rows:
        raise InputError("lattice_quotient: ambient dimensions differ")
    basis = lattice_basis(p_gens)
    rel = solve_matrix(basis, q_gens)
    if rel is None:
        raise InputError("denominator lattice is not contained in the numerator")
    return Subquotient(p_gens.rows, basis, rel)


def subquotient(l: IntMatrix, n: IntMatrix) -> Subquotient:
    """ker(l)/im(n), with coordinates in a stored basis of ker(l).

    Requires l @ n = 0; rejects other inputs as "not a subcomplex".
    """
    if l.cols != n.rows:
        raise InputError("subquotient: shapes are incompatible")
    if not (l @ n).is_zero():
        raise InputError("not a subcomplex: L @ N is nonzero")
    basis = kernel_basis(l)
    rel = solve_matrix(basis, n)
    if rel is None:  # cannot happen when l @ n = 0: the kernel is saturated
        raise InputError("not a subcomplex: image does not lie in the kernel")
    return Subquotient(l.cols, basis, rel)

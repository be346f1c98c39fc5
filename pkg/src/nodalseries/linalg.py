"""Exact rational linear algebra: matrices, canonical subspaces, minors.

All arithmetic uses :class:`fractions.Fraction`, so every result is exact and
subspace equality is decidable: a subspace is stored as the reduced row
echelon basis of its row space, which is the unique canonical representative.
Values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Rational = Fraction

_Entry = int | Fraction | str


def format_rational(value: Fraction) -> str:
    """Render ``p/q``, or plain ``p`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix; entries stored row-major."""

    nrows: int
    ncols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError(
                f"expected {self.nrows * self.ncols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[_Entry]], ncols: int | None = None) -> "Matrix":
        rows = [tuple(Fraction(e) for e in row) for row in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("rows have unequal lengths")
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row length")
            ncols = width
        elif ncols is None:
            raise ValueError("ncols is required for a matrix with no rows")
        flat = tuple(e for row in rows for e in row)
        return cls(len(rows), ncols, flat)

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(self.row(i) for i in range(self.nrows))

    def __str__(self) -> str:
        return "[" + "; ".join(
            " ".join(format_rational(e) for e in row) for row in self.rows()
        ) + "]"


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form (Gauss-Jordan); zero rows stay at the bottom.

    The result is the unique RREF of the input, so matrices with equal row
    space reduce to identical values once zero rows are discarded.
    """
    work = [list(m.row(i)) for i in range(m.nrows)]
    pivot_row = 0
    for col in range(m.ncols):
        pivot = None
        for r in range(pivot_row, m.nrows):
            if work[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        lead = work[pivot_row][col]
        if lead != 1:
            work[pivot_row] = [e / lead for e in work[pivot_row]]
        for r in range(m.nrows):
            if r != pivot_row and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
        if pivot_row == m.nrows:
            break
    return Matrix.from_rows(work, ncols=m.ncols)


def kernel_basis(m: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    """Basis of the right kernel {x : m x = 0}, one vector per free column."""
    reduced = rref(m)
    pivots: list[int] = []
    for i in range(reduced.nrows):
        row = reduced.row(i)
        for j, e in enumerate(row):
            if e != 0:
                pivots.append(j)
                break
    pivot_set = set(pivots)
    out = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.ncols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced.at(r, free)
        out.append(tuple(vec))
    return tuple(out)


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by fraction-free-enough Gaussian elimination."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    work = [list(m.row(i)) for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if work[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        lead = work[col][col]
        det *= lead
        for r in range(col + 1, n):
            if work[r][col] != 0:
                factor = work[r][col] / lead
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return det


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim in canonical (RREF) basis.

    Two subspaces are equal as values exactly when they are equal as sets of
    vectors; the canonical basis makes the dataclass equality and hash do the
    right thing.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self) -> None:
        if self.ambient_dim < 0:
            raise ValueError("ambient dimension must be nonnegative")
        if self.basis.ncols != self.ambient_dim:
            raise ValueError("basis width does not match the ambient dimension")
        if self.basis.nrows > self.ambient_dim:
            raise ValueError("more basis rows than the ambient dimension")
        # Guard canonicity: strictly increasing pivots, unit leads, cleared columns.
        last_pivot = -1
        for i in range(self.basis.nrows):
            row = self.basis.row(i)
            pivot = next((j for j, e in enumerate(row) if e != 0), None)
            if pivot is None:
                raise ValueError("zero row in a subspace basis")
            if pivot <= last_pivot or row[pivot] != 1:
                raise ValueError("basis is not in reduced row echelon form")
            for r in range(self.basis.nrows):
                if r != i and self.basis.at(r, pivot) != 0:
                    raise ValueError("basis is not in reduced row echelon form")
            last_pivot = pivot

    @classmethod
    def from_spanning(
        cls, ambient_dim: int, vectors: Iterable[Sequence[_Entry]]
    ) -> "Subspace":
        """Canonical subspace spanned by the given vectors.

        Equal spans produce bit-identical values regardless of the order,
        scaling or redundancy of the input vectors.
        """
        rows = [tuple(Fraction(e) for e in v) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError(
                    f"vector of length {len(row)} in ambient dimension {ambient_dim}"
                )
        reduced = rref(Matrix.from_rows(rows, ncols=ambient_dim))
        kept = [r for r in reduced.rows() if any(e != 0 for e in r)]
        return cls(ambient_dim, Matrix.from_rows(kept, ncols=ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.from_rows([], ncols=ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        rows = [
            [Fraction(1) if i == j else Fraction(0) for j in range(ambient_dim)]
            for i in range(ambient_dim)
        ]
        return cls(ambient_dim, Matrix.from_rows(rows, ncols=ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def basis_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.basis.rows()

    def contains_vector(self, vector: Sequence[_Entry]) -> bool:
        vec = [Fraction(e) for e in vector]
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length does not match the ambient dimension")
        for i in range(self.basis.nrows):
            row = self.basis.row(i)
            pivot = next(j for j, e in enumerate(row) if e != 0)
            if vec[pivot] != 0:
                factor = vec[pivot]
                vec = [a - factor * b for a, b in zip(vec, row)]
        return all(e == 0 for e in vec)

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return all(self.contains_vector(r) for r in other.basis_rows())

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_and_intersection(self, other)[0]

    def __and__(self, other: "Subspace") -> "Subspace":
        return sum_and_intersection(self, other)[1]

    def __str__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    """Smallest subspace containing both arguments."""
    return sum_and_intersection(a, b)[0]


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Largest subspace contained in both arguments."""
    return sum_and_intersection(a, b)[1]


def sum_and_intersection(a: Subspace, b: Subspace) -> tuple[Subspace, Subspace]:
    """Sum and intersection in one elimination (Zassenhaus block trick).

    Row-reducing the block matrix [A | A; B | 0] leaves the sum in the left
    halves of the rows with nonzero left half, and the intersection in the
    right halves of the rows whose left half vanished.
    """
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    n = a.ambient_dim
    stacked = [row + row for row in a.basis_rows()]
    stacked += [row + tuple(Fraction(0) for _ in range(n)) for row in b.basis_rows()]
    reduced = rref(Matrix.from_rows(stacked, ncols=2 * n))
    sum_rows = []
    meet_rows = []
    for r in reduced.rows():
        left, right = r[:n], r[n:]
        if any(e != 0 for e in left):
            sum_rows.append(left)
        elif any(e != 0 for e in right):
            meet_rows.append(right)
    return (
        Subspace.from_spanning(n, sum_rows),
        Subspace.from_spanning(n, meet_rows),
    )


def zero_coordinate_section(v: Subspace, coords: Iterable[int]) -> Subspace:
    """The subspace {w in v : w[c] = 0 for each requested coordinate c}.

    Computed on coefficients: combinations of the basis rows killing the
    selected columns are the kernel of the basis restricted to them.
    """
    cols = sorted(set(coords))
    for c in cols:
        if not 0 <= c < v.ambient_dim:
            raise ValueError(f"coordinate {c} outside ambient dimension {v.ambient_dim}")
    if not cols or v.dim == 0:
        return v
    restricted = Matrix.from_rows(
        [[row[c] for row in v.basis_rows()] for c in cols], ncols=v.dim
    )
    combos = kernel_basis(restricted)
    vectors = []
    for combo in combos:
        vec = [Fraction(0)] * v.ambient_dim
        for coeff, row in zip(combo, v.basis_rows()):
            if coeff != 0:
                vec = [a + coeff * b for a, b in zip(vec, row)]
        vectors.append(vec)
    return Subspace.from_spanning(v.ambient_dim, vectors)


def pluecker(v: Subspace) -> dict[tuple[int, ...], Fraction]:
    """All dim(v)-sized minors of the canonical basis, by column index set.

    The output is normalized so the lexicographically first nonzero minor is
    1; at least one minor is nonzero. These are the Pluecker coordinates of
    the subspace as a point of the Grassmannian.
    """
    n = v.dim
    rows = v.basis_rows()
    out: dict[tuple[int, ...], Fraction] = {}
    first_nonzero: Fraction | None = None
    for cols in combinations(range(v.ambient_dim), n):
        minor = determinant(
            Matrix.from_rows([[row[c] for c in cols] for row in rows], ncols=n)
        )
        if minor != 0 and first_nonzero is None:
            first_nonzero = minor
        out[cols] = minor
    assert first_nonzero is not None  # RREF basis always has a unit pivot minor
    if first_nonzero != 1:
        out = {k: val / first_nonzero for k, val in out.items()}
    return out

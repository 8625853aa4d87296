"""Exact rational dense linear algebra.

Everything here runs over ``fractions.Fraction``, so rank and kernel
results are exact: there is no tolerance anywhere in this module, and
downstream verdicts that hinge on a rank computation are certificate
grade.  Matrices are dense lists of lists; the working sizes in this
project stay below a few hundred rows, where density is the simplest
correct choice.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def _frac_rows(data) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in data]


class RatMatrix:
    """A rows x cols matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable]):
        self.data = _frac_rows(data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, vec: Sequence, rows: int, cols: int) -> "RatMatrix":
        if len(vec) != rows * cols:
            raise ValueError("length mismatch")
        return cls([vec[i * cols:(i + 1) * cols] for i in range(rows)])

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.flatten())

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix([[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-a for a in row] for row in self.data])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        bt = list(zip(*other.data))
        return RatMatrix([[sum(a * b for a, b in zip(row, col)) for col in bt]
                          for row in self.data])

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix([[c * a for a in row] for row in self.data])

    def transpose(self) -> "RatMatrix":
        return RatMatrix(list(zip(*self.data)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def flatten(self) -> Vector:
        return tuple(x for row in self.data for x in row)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def rank(self) -> int:
        _, pivots = _rref([row[:] for row in self.data])
        return len(pivots)

    def _same_shape(self, other: "RatMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols})"


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns).

    The pivot in each column is chosen to be a unit entry when one is
    available (smallest numerator and denominator otherwise), which keeps
    intermediate fractions small without changing the exact result.
    """
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pr = None
        best = None
        for i in range(r, n_rows):
            x = rows[i][c]
            if x == 0:
                continue
            size = abs(x.numerator).bit_length() + x.denominator.bit_length()
            if best is None or size < best:
                pr, best = i, size
                if size <= 2:   # a unit entry; no better pivot exists
                    break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        pivot = prow[c]
        if pivot != 1:
            inv = 1 / pivot
            rows[r] = prow = [inv * x for x in prow]
        support = [j for j in range(c, n_cols) if prow[j]]
        for i in range(n_rows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f == 0:
                continue
            for j in support:
                row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank_of_vectors(vecs: Sequence[Sequence]) -> int:
    if not vecs:
        return 0
    _, pivots = _rref(_frac_rows(vecs))
    return len(pivots)


class Subspace:
    """A subspace of Q^ambient_dim, held as an independent basis.

    The basis is stored both as given and in reduced row echelon form;
    the reduced form makes membership and containment pure rank checks.
    """

    def __init__(self, ambient_dim: int, basis: Iterable[Sequence], check: bool = True):
        self.ambient_dim = ambient_dim
        self.basis: list[Vector] = [tuple(Fraction(x) for x in v) for v in basis]
        for v in self.basis:
            if len(v) != ambient_dim:
                raise ValueError("basis vector of wrong length")
        reduced, pivots = _rref(_frac_rows(self.basis))
        if check and len(pivots) != len(self.basis):
            raise ValueError("basis vectors are dependent")
        self._reduced = [tuple(row) for row in reduced[:len(pivots)]]
        self._pivots = pivots

    @classmethod
    def span(cls, ambient_dim: int, vecs: Iterable[Sequence]) -> "Subspace":
        """Subspace spanned by possibly dependent vectors."""
        reduced, pivots = _rref(_frac_rows(vecs))
        return cls(ambient_dim, [tuple(r) for r in reduced[:len(pivots)]], check=False)

    @property
    def dim(self) -> int:
        return len(self._reduced)

    def member(self, vec: Sequence) -> bool:
        v = [Fraction(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return rank_of_vectors(list(self._reduced) + [v]) == self.dim

    def contains(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        stacked = list(self._reduced) + list(other._reduced)
        return rank_of_vectors(stacked) == self.dim

    def intersection_dim(self, other: "Subspace") -> int:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        joint = rank_of_vectors(list(self._reduced) + list(other._reduced))
        return self.dim + other.dim - joint

    def coords(self, vec: Sequence) -> list[Fraction] | None:
        """Coefficients of vec in the stored (original) basis, or None."""
        v = [Fraction(x) for x in vec]
        if not self.basis:
            return [] if all(x == 0 for x in v) else None
        aug = [[self.basis[j][i] for j in range(len(self.basis))] + [v[i]]
               for i in range(self.ambient_dim)]
        rows, pivots = _rref(aug)
        k = len(self.basis)
        if k in pivots:
            return None  # inconsistent: vec outside the span
        sol = [Fraction(0)] * k
        for r, c in enumerate(pivots):
            sol[c] = rows[r][k]
        return sol


def kernel(a: RatMatrix) -> Subspace:
    """Basis of the right null space of a; dim = cols - rank, exactly."""
    rows, pivots = _rref([row[:] for row in a.data])
    pivot_set = set(pivots)
    free = [c for c in range(a.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * a.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return Subspace(a.cols, basis, check=False)


def bracket(x: RatMatrix, y: RatMatrix) -> RatMatrix:
    """Matrix commutator [x, y] = xy - yx."""
    if x.rows != x.cols or y.rows != y.cols or x.rows != y.rows:
        raise ValueError("bracket needs square matrices of equal size")
    return x @ y - y @ x

def trace_form(x: RatMatrix, y: RatMatrix) -> Fraction:
    """The invariant pairing tr(xy) on a matrix Lie algebra."""
    if x.rows != x.cols or y.rows != y.cols or x.rows != y.rows:
        raise ValueError("trace_form needs square matrices of equal size")
    return sum((sum(a * b for a, b in zip(x.data[i], col))
                for i, col in enumerate(zip(*y.data))), Fraction(0))

"""Exact rational linear algebra: rank, nullspace, affine solves.

Everything operates on ``fractions.Fraction`` entries, so results are exact;
stability verdicts downstream are boundary-sensitive and must never see a
rounded pivot.  Rank uses fraction-free (Bareiss) elimination on a
denominator-cleared integer copy to bound coefficient growth; row reduction
for nullspaces and solves works directly over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Rat = Fraction

QVec = tuple[Rat, ...]


def rat(value) -> Rat:
    """Coerce ints, strings like '3/4' or '-2', and Fractions to Rat."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rat(value: Rat) -> str:
    """Serialize as 'p/q', or 'p' when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vec(values: Iterable) -> QVec:
    return tuple(rat(v) for v in values)


def vec_add(a: Sequence[Rat], b: Sequence[Rat]) -> QVec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence[Rat], b: Sequence[Rat]) -> QVec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c: Rat, a: Sequence[Rat]) -> QVec:
    return tuple(c * x for x in a)


def vec_dot(a: Sequence[Rat], b: Sequence[Rat]) -> Rat:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def is_zero_vec(a: Sequence[Rat]) -> bool:
    return all(x == 0 for x in a)


def proportional(a: Sequence[Rat], b: Sequence[Rat]) -> bool:
    """Projective equality of nonzero vectors via vanishing 2x2 minors.

    Never normalizes by a chosen coordinate, so it is safe at boundaries
    (a zero leading entry does not break the test).
    """
    if len(a) != len(b):
        return False
    if is_zero_vec(a) or is_zero_vec(b):
        raise ValueError("proportionality is only defined for nonzero vectors")
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


class QMat:
    """Dense matrix over Q; rows of Fractions, immutable by convention."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        self.data: list[list[Rat]] = [[rat(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMat":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "QMat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Rat]]) -> "QMat":
        if not columns:
            return cls([])
        n = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(n)])

    def column(self, j: int) -> QVec:
        return tuple(self.data[i][j] for i in range(self.rows))

    def row(self, i: int) -> QVec:
        return tuple(self.data[i])

    def transpose(self) -> "QMat":
        return QMat([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def matvec(self, v: Sequence[Rat]) -> QVec:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(vec_dot(row, v) for row in self.data)

    def matmul(self, other: "QMat") -> "QMat":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = [[Fraction(0)] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            rowi = self.data[i]
            for k in range(self.cols):
                a = rowi[k]
                if a == 0:
                    continue
                rowk = other.data[k]
                for j in range(other.cols):
                    out[i][j] += a * rowk[j]
        return QMat(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, QMat) and self.data == other.data

    def __repr__(self) -> str:
        return f"QMat({self.data!r})"


def rank(m: QMat) -> int:
    """Exact rank over Q by fraction-free (Bareiss) elimination.

    The matrix is scaled row-wise to integers first; Bareiss keeps every
    intermediate value an integer and divides exactly by the previous pivot,
    which bounds entry growth at desk scale.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    a: list[list[int]] = []
    for row in m.data:
        denom_lcm = 1
        for x in row:
            denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
        a.append([int(x * denom_lcm) for x in row])
    n_rows, n_cols = m.rows, m.cols
    prev_pivot = 1
    piv_r = 0
    for piv_c in range(n_cols):
        pivot_row = None
        for i in range(piv_r, n_rows):
            if a[i][piv_c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != piv_r:
            a[piv_r], a[pivot_row] = a[pivot_row], a[piv_r]
        pivot = a[piv_r][piv_c]
        for i in range(piv_r + 1, n_rows):
            for j in range(piv_c + 1, n_cols):
                a[i][j] = (a[i][j] * pivot - a[i][piv_c] * a[piv_r][j]) // prev_pivot
            a[i][piv_c] = 0
        prev_pivot = pivot
        piv_r += 1
        if piv_r == n_rows:
            break
    return piv_r


def rref(m: QMat) -> tuple[list[list[Rat]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot column indices)."""
    a = [list(row) for row in m.data]
    n_rows, n_cols = m.rows, m.cols
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        pivot_row = None
        for i in range(piv_r, n_rows):
            if a[i][piv_c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[piv_r], a[pivot_row] = a[pivot_row], a[piv_r]
        inv = 1 / a[piv_r][piv_c]
        a[piv_r] = [x * inv for x in a[piv_r]]
        for i in range(n_rows):
            if i != piv_r and a[i][piv_c] != 0:
                f = a[i][piv_c]
                a[i] = [x - f * y for x, y in zip(a[i], a[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return a, pivots


def nullspace(m: QMat) -> list[QVec]:
    """Basis of the right kernel; exactly cols - rank vectors, m @ v = 0."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(Fraction(1 if i == j else 0) for i in range(m.cols)) for j in range(m.cols)]
    a, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class AffineSubspace:
    """Nonempty solution set ``basepoint + span(directions)`` in Q^n.

    A zero-dimensional subspace (single point) has an empty direction list;
    an inconsistent system is represented by ``None`` from solve_affine,
    never by this class.
    """

    basepoint: QVec
    directions: tuple[QVec, ...]
    ambient_dim: int

    @property
    def dim(self) -> int:
        return len(self.directions)

    def point(self, coeffs: Sequence[Rat]) -> QVec:
        out = list(self.basepoint)
        for c, d in zip(coeffs, self.directions, strict=True):
            for i in range(self.ambient_dim):
                out[i] += c * d[i]
        return tuple(out)

    def contains(self, x: Sequence[Rat]) -> bool:
        diff = vec_sub(x, self.basepoint)
        if not self.directions:
            return is_zero_vec(diff)
        mat = QMat.from_columns(list(self.directions))
        return solve_affine(mat, diff) is not None


def solve_affine(a: QMat, b: Sequence[Rat]) -> Optional[AffineSubspace]:
    """Full exact solution set of a x = b, or None when inconsistent."""
    b = vec(b)
    if len(b) != a.rows:
        raise ValueError(f"rhs length {len(b)} != rows {a.rows}")
    aug = QMat([list(row) + [bi] for row, bi in zip(a.data, b)]) if a.rows else None
    if a.rows == 0:
        basis = [tuple(Fraction(1 if i == j else 0) for i in range(a.cols)) for j in range(a.cols)]
        return AffineSubspace(tuple([Fraction(0)] * a.cols), tuple(basis), a.cols)
    rows, pivots = rref(aug)
    for r in range(len(rows)):
        if all(x == 0 for x in rows[r][: a.cols]) and rows[r][a.cols] != 0:
            return None
    base = [Fraction(0)] * a.cols
    for r, pc in enumerate(pivots):
        if pc == a.cols:
            return None
        base[pc] = rows[r][a.cols]
    reduced = QMat([row[: a.cols] for row in rows])
    dirs = nullspace(reduced)
    return AffineSubspace(tuple(base), tuple(dirs), a.cols)


def column_span_contains(columns: Sequence[Sequence[Rat]], v: Sequence[Rat]) -> bool:
    """Whether v lies in the span of the given columns (all length-matched)."""
    if is_zero_vec(v):
        return True
    if not columns:
        return False
    return solve_affine(QMat.from_columns(list(columns)), v) is not None


def independent_columns(columns: Sequence[Sequence[Rat]]) -> list[int]:
    """Indices of a maximal independent subset, greedily from the left."""
    chosen: list[int] = []
    kept: list[Sequence[Rat]] = []
    for idx, col in enumerate(columns):
        if not column_span_contains(kept, col):
            kept.append(col)
            chosen.append(idx)
    return chosen

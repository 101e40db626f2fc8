# bcinverse_engine/backends/linalg.py
"""
Exact dense linear algebra over the rationals and prime fields.

Matrices are immutable row-major tuples of exact scalars. Every subspace is
stored as the nonzero rows of a reduced row-echelon form, so two subspaces are
equal exactly when their bases compare equal.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from bcinverse_engine.errors import DimensionMismatch, UnsupportedBackend, ensure
from bcinverse_engine.rings.scalars import Scalar, ScalarRing

logger = logging.getLogger(__name__)

Row = Tuple[Scalar, ...]


@dataclass(frozen=True)
class ExactMatrix:
    field: ScalarRing
    entries: Tuple[Row, ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise DimensionMismatch("matrices must have at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def from_rows(cls, field: ScalarRing, rows: Iterable[Iterable[Scalar]]) -> "ExactMatrix":
        return cls(field, tuple(tuple(field.normalize(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, field: ScalarRing, n: int) -> "ExactMatrix":
        return cls.from_rows(field, ((1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: ScalarRing, rows: int, cols: int) -> "ExactMatrix":
        return cls.from_rows(field, ((0,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def _check_shape(self, other: "ExactMatrix") -> None:
        if self.field != other.field or self.shape != other.shape:
            raise DimensionMismatch(f"cannot combine {self.shape} and {other.shape} matrices")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        add = self.field.add
        return ExactMatrix(
            self.field,
            tuple(tuple(add(x, y) for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        neg = self.field.neg
        return ExactMatrix(self.field, tuple(tuple(neg(x) for x in row) for row in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field or self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        columns = list(zip(*other.entries))
        return ExactMatrix(
            f,
            tuple(
                tuple(f.normalize(sum(x * y for x, y in zip(row, col))) for col in columns)
                for row in self.entries
            ),
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, tuple(zip(*self.entries)))

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for row in self.entries for x in row)

    def format(self) -> str:
        fmt = self.field.format
        return "[" + ",".join("[" + ",".join(fmt(x) for x in row) + "]" for row in self.entries) + "]"

    def __repr__(self) -> str:
        return f"ExactMatrix({self.format()})"


def _require_field(field: ScalarRing) -> None:
    if not field.is_field:
        raise UnsupportedBackend(f"linear algebra needs a field, got {field!r}")


# =========================
# Row reduction
# =========================

class RowReduction(NamedTuple):
    form: ExactMatrix
    rank: int
    transform: ExactMatrix

    @property
    def pivots(self) -> Tuple[int, ...]:
        found = []
        for row in self.form.entries[: self.rank]:
            found.append(next(j for j, x in enumerate(row) if x != 0))
        return tuple(found)


@lru_cache(maxsize=16384)
def rref(m: ExactMatrix) -> RowReduction:
    """Gauss-Jordan elimination with first-nonzero pivoting; transform @ m == form."""
    f = m.field
    _require_field(f)
    a: List[List[Scalar]] = [list(row) for row in m.entries]
    t: List[List[Scalar]] = [list(row) for row in ExactMatrix.identity(f, m.rows).entries]

    pivot_row = 0
    for col in range(m.cols):
        if pivot_row == m.rows:
            break
        src = next((r for r in range(pivot_row, m.rows) if not f.is_zero(a[r][col])), None)
        if src is None:
            continue
        a[pivot_row], a[src] = a[src], a[pivot_row]
        t[pivot_row], t[src] = t[src], t[pivot_row]

        inv = f.inv(a[pivot_row][col])
        a[pivot_row] = [f.mul(inv, x) for x in a[pivot_row]]
        t[pivot_row] = [f.mul(inv, x) for x in t[pivot_row]]

        for r in range(m.rows):
            factor = a[r][col]
            if r == pivot_row or f.is_zero(factor):
                continue
            a[r] = [f.sub(x, f.mul(factor, y)) for x, y in zip(a[r], a[pivot_row])]
            t[r] = [f.sub(x, f.mul(factor, y)) for x, y in zip(t[r], t[pivot_row])]
        pivot_row += 1

    return RowReduction(ExactMatrix.from_rows(f, a), pivot_row, ExactMatrix.from_rows(f, t))


def rank(m: ExactMatrix) -> int:
    return rref(m).rank


def matrix_inverse(m: ExactMatrix) -> Optional[ExactMatrix]:
    if m.rows != m.cols:
        return None
    reduction = rref(m)
    return reduction.transform if reduction.rank == m.rows else None


# =========================
# Subspaces
# =========================

class SubspaceSide(str, Enum):
    COLUMN_SPACE = "column_space"
    ROW_SPACE = "row_space"
    NULL_SPACE = "null_space"
    LEFT_NULL_SPACE = "left_null_space"

    @property
    def orientation(self) -> str:
        if self in (SubspaceSide.COLUMN_SPACE, SubspaceSide.NULL_SPACE):
            return "column"
        return "row"


@dataclass(frozen=True)
class SubspaceBasis:
    field: ScalarRing
    ambient: int
    basis: Tuple[Row, ...]
    side: SubspaceSide

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis


def _span_rank(field: ScalarRing, vectors: Sequence[Row], ambient: int) -> int:
    if not vectors:
        return 0
    return rref(ExactMatrix(field, tuple(vectors))).rank


def _canonical(field: ScalarRing, vectors: Sequence[Row], ambient: int, side: SubspaceSide) -> SubspaceBasis:
    if not vectors:
        return SubspaceBasis(field, ambient, (), side)
    reduction = rref(ExactMatrix.from_rows(field, vectors))
    return SubspaceBasis(field, ambient, reduction.form.entries[: reduction.rank], side)


@lru_cache(maxsize=16384)
def column_space(m: ExactMatrix) -> SubspaceBasis:
    return _canonical(m.field, m.transpose().entries, m.rows, SubspaceSide.COLUMN_SPACE)


@lru_cache(maxsize=16384)
def row_space(m: ExactMatrix) -> SubspaceBasis:
    return _canonical(m.field, m.entries, m.cols, SubspaceSide.ROW_SPACE)


def _kernel_vectors(m: ExactMatrix) -> List[Row]:
    f = m.field
    reduction = rref(m)
    pivots = reduction.pivots
    free = [j for j in range(m.cols) if j not in pivots]
    vectors = []
    for j in free:
        v = [f.zero] * m.cols
        v[j] = f.one
        for i, p in enumerate(pivots):
            v[p] = f.neg(reduction.form.entries[i][j])
        vectors.append(tuple(v))
    return vectors


@lru_cache(maxsize=16384)
def null_space(m: ExactMatrix) -> SubspaceBasis:
    space = _canonical(m.field, _kernel_vectors(m), m.cols, SubspaceSide.NULL_SPACE)
    ensure(rank(m) + space.dim == m.cols, "rank-nullity violated", shape=m.shape)
    return space


@lru_cache(maxsize=16384)
def left_null_space(m: ExactMatrix) -> SubspaceBasis:
    t = m.transpose()
    space = _canonical(m.field, _kernel_vectors(t), m.rows, SubspaceSide.LEFT_NULL_SPACE)
    ensure(rank(t) + space.dim == m.rows, "rank-nullity violated", shape=m.shape)
    return space


def _check_compatible(x: SubspaceBasis, y: SubspaceBasis) -> None:
    if x.field != y.field or x.ambient != y.ambient or x.side.orientation != y.side.orientation:
        raise DimensionMismatch(
            f"incompatible subspaces: {x.side.value} in dim {x.ambient} vs {y.side.value} in dim {y.ambient}"
        )


def subspace_subset(x: SubspaceBasis, y: SubspaceBasis) -> bool:
    _check_compatible(x, y)
    if x.dim > y.dim:
        return False
    return _span_rank(x.field, y.basis + x.basis, x.ambient) == y.dim


def subspace_equal(x: SubspaceBasis, y: SubspaceBasis) -> bool:
    _check_compatible(x, y)
    return x.basis == y.basis


def intersection_is_zero(x: SubspaceBasis, y: SubspaceBasis) -> bool:
    _check_compatible(x, y)
    return _span_rank(x.field, x.basis + y.basis, x.ambient) == x.dim + y.dim


def subspace_direct_sum(x: SubspaceBasis, y: SubspaceBasis) -> bool:
    _check_compatible(x, y)
    if x.dim + y.dim != x.ambient:
        return False
    return _span_rank(x.field, x.basis + y.basis, x.ambient) == x.ambient


# =========================
# Inner inverses
# =========================

@lru_cache(maxsize=16384)
def inner_inverse(m: ExactMatrix) -> ExactMatrix:
    """
    One inner inverse g (m @ g @ m == m) from the rank normal form.

    With U the rref transform, U m = form; a permutation Q moving the pivot
    columns to the front and a column elimination W give U m Q W = [[I_r, 0],
    [0, 0]], so g = Q W E U where E is the transposed normal form.
    """
    f = m.field
    reduction = rref(m)
    r, pivots = reduction.rank, reduction.pivots
    order = list(pivots) + [j for j in range(m.cols) if j not in pivots]

    q = [[f.zero] * m.cols for _ in range(m.cols)]
    for new, old in enumerate(order):
        q[old][new] = f.one

    w = [[f.one if i == j else f.zero for j in range(m.cols)] for i in range(m.cols)]
    for i in range(r):
        for k, col in enumerate(order[r:], start=r):
            w[i][k] = f.neg(reduction.form.entries[i][col])

    e = [[f.one if i == j and i < r else f.zero for j in range(m.rows)] for i in range(m.cols)]

    g = (
        ExactMatrix.from_rows(f, q)
        @ ExactMatrix.from_rows(f, w)
        @ ExactMatrix.from_rows(f, e)
        @ reduction.transform
    )
    ensure(m @ g @ m == m, "inner inverse construction failed", m=m.format())
    return g


def enumerate_inner_inverses_param(m: ExactMatrix, s: ExactMatrix, t: ExactMatrix) -> ExactMatrix:
    """The general inner inverse g0 + (I - g0 m) s + t (I - m g0), for any s and t."""
    g0 = inner_inverse(m)
    f = m.field
    out = (
        g0
        + (ExactMatrix.identity(f, m.cols) - g0 @ m) @ s
        + t @ (ExactMatrix.identity(f, m.rows) - m @ g0)
    )
    ensure(m @ out @ m == m, "parametrized inner inverse failed", m=m.format())
    return out


def inner_inverse_witnesses(m: ExactMatrix, limit: int = 2) -> List[ExactMatrix]:
    """Up to ``limit`` distinct inner inverses, the canonical one first."""
    f = m.field
    g0 = inner_inverse(m)
    found = [g0]
    ones = ExactMatrix.from_rows(f, ((1,) * m.rows for _ in range(m.cols)))
    zero = ExactMatrix.zeros(f, m.cols, m.rows)
    for s, t in ((ones, zero), (zero, ones)):
        if len(found) >= limit:
            break
        g = enumerate_inner_inverses_param(m, s, t)
        if g not in found:
            found.append(g)
    return found


# =========================
# Integer matrices (Z/nZ units)
# =========================

def integer_determinant(entries: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; exact on integers."""
    n = len(entries)
    m = [list(row) for row in entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def adjugate(entries: Sequence[Sequence[int]]) -> List[List[int]]:
    n = len(entries)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(map(list, entries)) if k != i]
            adj[j][i] = (-1) ** (i + j) * integer_determinant(minor)
    return adj

"""
Exact linear algebra over the rationals and prime fields
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from bcinverse_engine.backends import linalg
from bcinverse_engine.backends.linalg import ExactMatrix, SubspaceSide
from bcinverse_engine.errors import DimensionMismatch, UnsupportedBackend
from bcinverse_engine.rings.scalars import PrimeField, Rationals, Residues

Q = Rationals()
F5 = PrimeField(5)


def M(rows, field=Q):
    return ExactMatrix.from_rows(field, rows)


def square(field, size, lo=-3, hi=3):
    cell = st.integers(min_value=lo, max_value=hi)
    return st.lists(st.lists(cell, min_size=size, max_size=size), min_size=size, max_size=size).map(
        lambda rows: M(rows, field)
    )


def rectangular(field):
    return st.tuples(st.integers(1, 3), st.integers(1, 3)).flatmap(
        lambda shape: st.lists(
            st.lists(st.integers(-3, 3), min_size=shape[1], max_size=shape[1]), min_size=shape[0], max_size=shape[0]
        ).map(lambda rows: M(rows, field))
    )


class TestRowReduction:
    """Gauss-Jordan elimination"""

    def test_scalar(self):
        reduction = linalg.rref(M([[2]]))
        assert reduction.form == M([[1]])
        assert reduction.rank == 1
        assert reduction.transform == M([[Fraction(1, 2)]])

    def test_rank_deficient(self):
        reduction = linalg.rref(M([[1, 2], [2, 4]]))
        assert reduction.form == M([[1, 2], [0, 0]])
        assert reduction.rank == 1
        assert reduction.pivots == (0,)

    def test_zero_matrix(self):
        assert linalg.rank(M([[0, 0], [0, 0]])) == 0

    def test_prime_field_reduction(self):
        assert linalg.rank(M([[1, 2], [3, 1]], F5)) == 1

    def test_residue_ring_is_rejected(self):
        with pytest.raises(UnsupportedBackend):
            linalg.rref(M([[2, 0], [0, 1]], Residues(4)))

    @hsettings(max_examples=80, deadline=None)
    @given(rectangular(Q))
    def test_transform_reduces(self, m):
        reduction = linalg.rref(m)
        assert reduction.transform @ m == reduction.form
        assert len(reduction.pivots) == reduction.rank


class TestInverse:
    """Matrix inverses via rref"""

    def test_invertible(self):
        m = M([[1, 1], [0, 1]])
        assert linalg.matrix_inverse(m) == M([[1, -1], [0, 1]])

    def test_singular(self):
        assert linalg.matrix_inverse(M([[1, 2], [2, 4]])) is None

    def test_non_square(self):
        assert linalg.matrix_inverse(M([[1, 0, 0], [0, 1, 0]])) is None

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            M([[1, 2]]) @ M([[1, 2]])


class TestSubspaces:
    """Column, row and null spaces"""

    def test_nilpotent_column_space_equals_null_space(self):
        n = M([[0, 1], [0, 0]])
        assert linalg.subspace_equal(linalg.column_space(n), linalg.null_space(n))
        assert not linalg.intersection_is_zero(linalg.column_space(n), linalg.null_space(n))

    def test_idempotent_splits(self):
        e = M([[1, 0], [0, 0]])
        assert linalg.subspace_direct_sum(linalg.column_space(e), linalg.null_space(e))
        assert linalg.subspace_direct_sum(linalg.row_space(e), linalg.left_null_space(e))

    def test_subset(self):
        small = linalg.column_space(M([[1, 0], [1, 0]]))
        whole = linalg.column_space(M([[1, 0], [0, 1]]))
        assert linalg.subspace_subset(small, whole)
        assert not linalg.subspace_subset(whole, small)

    def test_orientation_mismatch(self):
        m = M([[1, 0], [0, 0]])
        with pytest.raises(DimensionMismatch):
            linalg.subspace_subset(linalg.column_space(m), linalg.row_space(m))

    def test_canonical_bases(self):
        a = linalg.column_space(M([[2, 4], [1, 2]]))
        b = linalg.column_space(M([[6, 0], [3, 0]]))
        assert a == b
        assert a.side == SubspaceSide.COLUMN_SPACE
        assert a.dim == 1

    @hsettings(max_examples=80, deadline=None)
    @given(rectangular(Q))
    def test_rank_nullity(self, m):
        assert linalg.rank(m) + linalg.null_space(m).dim == m.cols
        assert linalg.rank(m) + linalg.left_null_space(m).dim == m.rows
        for v in linalg.null_space(m).basis:
            assert (m @ M([[x] for x in v])).is_zero()


class TestInnerInverses:
    """Generalized inverses from the rank normal form"""

    @hsettings(max_examples=80, deadline=None)
    @given(rectangular(Q))
    def test_inner_inverse(self, m):
        g = linalg.inner_inverse(m)
        assert g.shape == (m.cols, m.rows)
        assert m @ g @ m == m

    @hsettings(max_examples=60, deadline=None)
    @given(square(F5, 3, 0, 4))
    def test_witnesses_are_distinct_inner_inverses(self, m):
        found = linalg.inner_inverse_witnesses(m, limit=3)
        assert found[0] == linalg.inner_inverse(m)
        assert len(set(found)) == len(found)
        for g in found:
            assert m @ g @ m == m

    def test_invertible_has_one_witness(self):
        m = M([[1, 1], [0, 1]])
        assert linalg.inner_inverse_witnesses(m, limit=3) == [M([[1, -1], [0, 1]])]

    def test_zero_matrix_witnesses(self):
        found = linalg.inner_inverse_witnesses(M([[0, 0], [0, 0]]), limit=2)
        assert len(found) == 2


class TestIntegerMatrices:
    """Bareiss determinant and adjugate"""

    @pytest.mark.parametrize(
        "rows, det",
        [
            ([[3]], 3),
            ([[1, 2], [3, 4]], -2),
            ([[0, 1], [1, 0]], -1),
            ([[2, 0, 1], [1, 3, 2], [1, 1, 1]], 0),
            ([[0, 2, 1], [1, 0, 0], [0, 0, 3]], -6),
        ],
    )
    def test_determinant(self, rows, det):
        assert linalg.integer_determinant(rows) == det

    def test_adjugate_identity(self):
        rows = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
        adj = linalg.adjugate(rows)
        det = linalg.integer_determinant(rows)
        product = [[sum(rows[i][k] * adj[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        assert product == [[det if i == j else 0 for j in range(3)] for i in range(3)]

"""
Subspace backend for matrix rings over fields
"""
import itertools

import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from bcinverse_engine.backends.finite import FiniteBackend
from bcinverse_engine.backends.matrix import MatrixBackend
from bcinverse_engine.errors import MixedRings, UnsupportedBackend
from bcinverse_engine.rings.parsing import parse_ring

M2Q = parse_ring("mat:q:2")
M3Q = parse_ring("mat:q:3")


def matrix_literals(size):
    cell = st.integers(min_value=-2, max_value=2).map(str)
    return st.lists(st.lists(cell, min_size=size, max_size=size), min_size=size, max_size=size).map(
        lambda rows: "[" + ",".join("[" + ",".join(r) + "]" for r in rows) + "]"
    )


class TestConstruction:
    """Backend selection"""

    def test_rejects_composite_moduli(self):
        with pytest.raises(UnsupportedBackend):
            MatrixBackend(parse_ring("mat:zn:4:2"))

    def test_rejects_modular_rings(self, z6):
        with pytest.raises(UnsupportedBackend):
            MatrixBackend(z6)

    def test_index_bound_is_size(self, m2q):
        assert MatrixBackend(m2q).index_bound == 2

    def test_mixed_rings(self, m2q):
        with pytest.raises(MixedRings):
            MatrixBackend(m2q).right_ideal(M3Q.one)


class TestPredicates:
    """Ideal predicates reduce to rank computations"""

    def test_nilpotent(self, m2q):
        B, n = MatrixBackend(m2q), m2q.parse("[[0,1],[0,0]]")
        assert not B.splits_right(n, n)
        assert not B.splits_left(n, n)
        assert not B.right_annihilator_meets_trivially(n, n)

    def test_idempotent_splits(self, m2q):
        B, p = MatrixBackend(m2q), m2q.parse("[[1,1],[0,0]]")
        assert B.splits_right(p, p)
        assert B.splits_left(p, p)

    def test_ideal_inclusions(self, m2q):
        B = MatrixBackend(m2q)
        e, f = m2q.parse("[[1,0],[0,0]]"), m2q.parse("[[2,3],[0,0]]")
        assert B.right_ideal_equal(e, f)
        assert not B.left_ideal_equal(e, f)
        assert B.right_ideal_within(e, m2q.one)
        assert not B.right_ideal_within(m2q.one, e)
        assert B.left_annihilator_equal(e, f)

    def test_rank(self, m2q):
        assert MatrixBackend(m2q).rank(m2q.parse("[[1,2],[2,4]]")) == 1

    def test_every_matrix_is_regular(self, m2q):
        B = MatrixBackend(m2q)
        for literal in ("[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[1,2],[2,4]]", "[[1,1],[0,1]]"):
            x = m2q.parse(literal)
            for g in B.inner_inverse_witnesses(x, limit=2):
                assert x * g * x == x

    @hsettings(max_examples=60, deadline=None)
    @given(matrix_literals(3), matrix_literals(3))
    def test_annihilator_duality(self, x_literal, y_literal):
        B = MatrixBackend(M3Q)
        x, y = M3Q.parse(x_literal), M3Q.parse(y_literal)
        # xR ⊆ yR iff °y ⊆ °x, every matrix being regular
        assert B.right_ideal_within(x, y) == B.left_annihilator_within(y, x)
        assert B.left_ideal_within(x, y) == B.right_annihilator_within(y, x)


class TestAgainstEnumeration:
    """On M_2(Z_2) both backends answer every predicate identically"""

    PREDICATES = (
        "right_ideal_within",
        "left_ideal_within",
        "right_annihilator_within",
        "left_annihilator_within",
        "right_annihilator_meets_trivially",
        "left_annihilator_meets_trivially",
        "splits_right",
        "splits_left",
    )

    def test_all_pairs(self, m2z2, settings):
        subspaces, finite = MatrixBackend(m2z2), FiniteBackend(m2z2, settings)
        elements = list(m2z2.elements())
        for x, y in itertools.product(elements, repeat=2):
            for name in self.PREDICATES:
                assert getattr(subspaces, name)(x, y) == getattr(finite, name)(x, y), (name, x, y)

    def test_regularity(self, m2z2, settings):
        subspaces, finite = MatrixBackend(m2z2), FiniteBackend(m2z2, settings)
        for x in m2z2.elements():
            assert subspaces.is_regular(x) and finite.is_regular(x)
            assert x * subspaces.inner_inverse(x) * x == x

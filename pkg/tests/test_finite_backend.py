"""
Exhaustive finite backend
"""
import pytest

from bcinverse_engine.backends.finite import ElementSet, FiniteBackend, enumerate_ring
from bcinverse_engine.backends.matrix import backend_for
from bcinverse_engine.config.settings import EnumerationSettings, Settings
from bcinverse_engine.errors import CardinalityGuard, InfiniteRing, MixedRings, NotAdditivelyClosed
from bcinverse_engine.rings.parsing import parse_ring


@pytest.fixture
def backend(z6, settings):
    return FiniteBackend(z6, settings)


def elems(ring, *literals):
    return [ring.parse(x) for x in literals]


class TestEnumeration:
    """Guards around exhaustive enumeration"""

    def test_counts(self, z6, settings):
        assert enumerate_ring(z6, settings).count == 6

    def test_infinite_ring(self, m2q, settings):
        with pytest.raises(InfiniteRing):
            FiniteBackend(m2q, settings)

    def test_cardinality_guard(self):
        tight = Settings(_env_file=None, enumeration=EnumerationSettings(max_cardinality=10))
        with pytest.raises(CardinalityGuard) as exc:
            enumerate_ring(parse_ring("zn:12"), tight)
        assert exc.value.details == {"cardinality": 12, "limit": 10}

    def test_backend_selection(self, z6, m2q, settings):
        assert backend_for(z6, settings).name == "finite"
        assert backend_for(parse_ring("mat:zn:4:2"), settings).name == "finite"
        assert backend_for(m2q, settings).name == "matrix"


class TestIdealSets:
    """Principal ideals and annihilators in Z/6Z"""

    def test_right_ideal(self, backend, z6):
        assert backend.right_ideal(z6.parse("2")).literals() == ["0", "2", "4"]

    def test_right_annihilator(self, backend, z6):
        assert backend.right_annihilator(z6.parse("2")).literals() == ["0", "3"]

    def test_left_and_right_agree_when_commutative(self, backend, z6):
        for x in z6.elements():
            assert backend.left_ideal(x) == backend.right_ideal(x)
            assert backend.left_annihilator(x) == backend.right_annihilator(x)

    def test_product_set(self, backend, z6):
        assert backend.product_set([], "R", elems(z6, "4", "2", "4")).literals() == ["0", "2", "4"]
        assert backend.product_set(elems(z6, "3"), "R", elems(z6, "2")).literals() == ["0"]
        assert len(backend.whole_ring()) == 6

    def test_product_set_middle(self, backend, z6):
        with pytest.raises(ValueError):
            backend.product_set(elems(z6, "1"), "S")

    def test_direct_sums(self, backend, z6):
        two = z6.parse("2")
        assert backend.is_direct_sum(backend.right_ideal(two), backend.right_annihilator(two))
        assert not backend.is_direct_sum(backend.right_ideal(two), backend.right_ideal(two))

    def test_direct_sum_needs_subgroups(self, backend, z6):
        broken = ElementSet.of(z6, elems(z6, "0", "1"))
        with pytest.raises(NotAdditivelyClosed):
            backend.is_direct_sum(broken, backend.whole_ring())

    def test_mixed_rings(self, backend):
        with pytest.raises(MixedRings):
            backend.right_ideal(parse_ring("zn:5").parse("1"))


class TestVocabulary:
    """Derived predicates"""

    def test_splits(self, backend, z6):
        two, four, three = elems(z6, "2", "4", "3")
        assert backend.splits_right(two, four)
        assert backend.splits_left(two, two)
        assert not backend.splits_right(three, two)

    def test_within_and_equal(self, backend, z6):
        two, four, three = elems(z6, "2", "4", "3")
        assert backend.right_ideal_equal(two, four)
        assert backend.left_ideal_within(two, z6.one)
        assert not backend.right_ideal_within(three, two)
        assert backend.right_annihilator_equal(two, four)
        assert backend.left_annihilator_within(z6.one, three)

    def test_meets_trivially(self, backend, z6):
        two, three = elems(z6, "2", "3")
        assert backend.right_annihilator_meets_trivially(two, two)
        assert not backend.left_annihilator_meets_trivially(two, three)


class TestRegularity:
    """Inner inverses by enumeration"""

    def test_inner_inverses(self, backend, z6):
        assert [x.literal() for x in backend.inner_inverses(z6.parse("2"))] == ["2", "5"]
        assert [x.literal() for x in backend.inner_inverses(z6.one)] == ["1"]
        assert len(backend.inner_inverses(z6.zero)) == 6

    def test_witness_limit(self, backend, z6):
        assert len(backend.inner_inverse_witnesses(z6.zero, limit=2)) == 2
        assert backend.inner_inverse(z6.parse("2")).literal() == "2"

    def test_every_residue_is_regular(self, backend, z6):
        assert all(backend.is_regular(x) for x in z6.elements())

    def test_non_regular_in_z4(self, settings):
        z4 = parse_ring("zn:4")
        assert not FiniteBackend(z4, settings).is_regular(z4.parse("2"))

    def test_index_bound(self, backend):
        assert backend.index_bound == 6


class TestDefinitionalSearch:
    """Brute-force (b,c)-inverses"""

    def test_existing(self, backend, z6):
        assert backend.brute_force_bc(*elems(z6, "2", "4", "4")).literal() == "2"

    def test_absent(self, backend, z6):
        assert backend.brute_force_bc(*elems(z6, "2", "3", "3")) is None

    def test_unit_data(self, backend, z6):
        # (1,1)-inverse of a unit is its inverse
        assert backend.brute_force_bc(*elems(z6, "5", "1", "1")).literal() == "5"

    def test_one_sided_sets(self, backend, z6):
        a, b, c = elems(z6, "2", "4", "4")
        assert z6.parse("2") in backend.left_bc_inverses(a, b, c)
        assert z6.parse("2") in backend.right_bc_inverses(a, b, c)
        assert backend.left_bc_inverses(*elems(z6, "2", "3", "3")) == []

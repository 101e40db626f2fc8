# bcinverse_engine/backends/finite.py
"""
Exhaustive backend for finite rings: every ideal and annihilator is
materialized as an explicit, canonically sorted element set. This is the
oracle the other backend is checked against.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from bcinverse_engine.backends.base import IdealBackend
from bcinverse_engine.config.settings import Settings, get_settings
from bcinverse_engine.errors import (
    CardinalityGuard,
    InfiniteRing,
    MixedRings,
    NotAdditivelyClosed,
    UniquenessViolation,
)
from bcinverse_engine.rings.base import Element, RingHandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ElementSet:
    ring: RingHandle
    members: Tuple[Element, ...]
    _index: FrozenSet[Element] = field(default=frozenset(), compare=False, repr=False)

    @classmethod
    def of(cls, ring: RingHandle, elements: Iterable[Element]) -> "ElementSet":
        unique = frozenset(elements)
        ordered = tuple(sorted(unique, key=Element.sort_key))
        return cls(ring, ordered, unique)

    def __contains__(self, x: Element) -> bool:
        return x in self._index

    def __iter__(self) -> Iterator[Element]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "ElementSet") -> bool:
        return self._index <= other._index

    def intersection(self, other: "ElementSet") -> "ElementSet":
        return ElementSet.of(self.ring, self._index & other._index)

    def is_zero_set(self) -> bool:
        return len(self.members) == 1 and self.members[0].is_zero()

    def is_additively_closed(self) -> bool:
        if self.ring.zero not in self._index:
            return False
        return all(x + y in self._index for x in self.members for y in self.members)

    def literals(self) -> List[str]:
        return [x.literal() for x in self.members]


@dataclass(frozen=True)
class FiniteEnumeration:
    ring: RingHandle
    elements: Tuple[Element, ...]

    @property
    def count(self) -> int:
        return len(self.elements)


def enumerate_ring(ring: RingHandle, settings: Optional[Settings] = None) -> FiniteEnumeration:
    settings = settings or get_settings()
    if not ring.is_finite:
        raise InfiniteRing(f"{ring.spec} is infinite; the finite backend cannot enumerate it")
    limit = settings.enumeration.max_cardinality
    if ring.cardinality > limit:
        raise CardinalityGuard(
            f"{ring.spec} has {ring.cardinality} elements, above the enumeration limit {limit}",
            {"cardinality": ring.cardinality, "limit": limit},
        )
    return FiniteEnumeration(ring, tuple(ring.elements()))


class FiniteBackend(IdealBackend):
    name = "finite"

    def __init__(self, ring: RingHandle, settings: Optional[Settings] = None):
        super().__init__(ring)
        self.enumeration = enumerate_ring(ring, settings)
        self.elements = self.enumeration.elements
        self._sets: Dict[Tuple[str, Element], ElementSet] = {}
        self._inner: Dict[Element, List[Element]] = {}
        logger.debug(f"Finite backend ready for {ring.spec} ({self.enumeration.count} elements)")

    def _check(self, *xs: Element) -> None:
        for x in xs:
            if x.ring != self.ring:
                raise MixedRings(f"{x.ring.spec} element passed to a {self.ring.spec} backend")

    def _cached(self, kind: str, a: Element, build: Callable[[], Iterable[Element]]) -> ElementSet:
        key = (kind, a)
        found = self._sets.get(key)
        if found is None:
            self._check(a)
            found = ElementSet.of(self.ring, build())
            self._sets[key] = found
        return found

    # =========================
    # Ideals and annihilators
    # =========================

    def right_ideal(self, a: Element) -> ElementSet:
        return self._cached("aR", a, lambda: (a * x for x in self.elements))

    def left_ideal(self, a: Element) -> ElementSet:
        return self._cached("Ra", a, lambda: (x * a for x in self.elements))

    def right_annihilator(self, a: Element) -> ElementSet:
        return self._cached("a°", a, lambda: (x for x in self.elements if (a * x).is_zero()))

    def left_annihilator(self, a: Element) -> ElementSet:
        return self._cached("°a", a, lambda: (x for x in self.elements if (x * a).is_zero()))

    @property
    def index_bound(self) -> int:
        return self.enumeration.count

    def whole_ring(self) -> ElementSet:
        return self.right_ideal(self.ring.one)

    def product_set(self, prefix: Sequence[Element], middle: str = "R", suffix: Sequence[Element] = ()) -> ElementSet:
        """{p r s : r ∈ R} with p, s the products of ``prefix`` and ``suffix``."""
        if middle != "R":
            raise ValueError(f"only the whole ring may sit in the middle, got {middle!r}")
        self._check(*prefix, *suffix)
        p, s = self.ring.one, self.ring.one
        for x in prefix:
            p = p * x
        for x in suffix:
            s = s * x
        return ElementSet.of(self.ring, (p * r * s for r in self.elements))

    def is_direct_sum(self, x: ElementSet, y: ElementSet) -> bool:
        """R = x ⊕ y as additive groups."""
        for part in (x, y):
            if not part.is_additively_closed():
                raise NotAdditivelyClosed(f"{part.literals()} is not an additive subgroup of {self.ring.spec}")
        if not x.intersection(y).is_zero_set():
            return False
        covered = {u + v for u in x for v in y}
        return len(covered) == self.enumeration.count

    # =========================
    # Descriptor tests
    # =========================

    def _subset(self, x: ElementSet, y: ElementSet) -> bool:
        return x <= y

    def _meets_trivially(self, x: ElementSet, y: ElementSet) -> bool:
        return x.intersection(y).is_zero_set()

    def _direct_sum(self, x: ElementSet, y: ElementSet) -> bool:
        return self.is_direct_sum(x, y)

    # =========================
    # Regularity
    # =========================

    def inner_inverses(self, a: Element) -> List[Element]:
        found = self._inner.get(a)
        if found is None:
            self._check(a)
            found = [x for x in self.elements if a * x * a == a]
            self._inner[a] = found
        return found

    def inner_inverse_witnesses(self, a: Element, limit: int = 2) -> List[Element]:
        return self.inner_inverses(a)[:limit]

    def is_regular(self, a: Element) -> bool:
        return bool(self.inner_inverses(a))

    # =========================
    # Definitional search
    # =========================

    def solutions(self, predicate: Callable[[Element], bool]) -> List[Element]:
        return [y for y in self.elements if predicate(y)]

    def definitional_solutions(self, a: Element, b: Element, c: Element) -> List[Element]:
        """Every y with y ∈ bRy ∩ yRc, yab = b and cay = c."""
        self._check(a, b, c)
        ab, ca = a * b, c * a

        def satisfies(y: Element) -> bool:
            if y * ab != b or ca * y != c:
                return False
            return y in self.product_set([b], "R", [y]) and y in self.product_set([y], "R", [c])

        return self.solutions(satisfies)

    def brute_force_bc(self, a: Element, b: Element, c: Element) -> Optional[Element]:
        found = self.definitional_solutions(a, b, c)
        if len(found) > 1:
            raise UniquenessViolation(
                f"{len(found)} distinct (b,c)-inverses found",
                {"a": a.literal(), "b": b.literal(), "c": c.literal(), "found": [y.literal() for y in found]},
            )
        return found[0] if found else None

    def left_bc_inverses(self, a: Element, b: Element, c: Element) -> List[Element]:
        """Every x with Rx ⊆ Rc and xab = b."""
        ab, rc = a * b, self.left_ideal(c)
        return self.solutions(lambda x: x * ab == b and x in rc)

    def right_bc_inverses(self, a: Element, b: Element, c: Element) -> List[Element]:
        """Every y with yR ⊆ bR and cay = c."""
        ca, br = c * a, self.right_ideal(b)
        return self.solutions(lambda y: ca * y == c and y in br)

# bcinverse_engine/backends/base.py
"""
The predicate vocabulary every backend speaks.

Notation: xR, Rx are the principal right/left ideals, x° = {r : xr = 0} and
°x = {r : rx = 0} the right/left annihilators. Each backend maps these sets
to a computable IdealDescriptor (an explicit element set or a subspace) and
supplies subset, trivial-intersection and direct-sum tests on descriptors.
"""
from abc import ABC, abstractmethod
from typing import Any, List, Optional

from bcinverse_engine.rings.base import Element, RingHandle

IdealDescriptor = Any


class IdealBackend(ABC):
    name: str = "abstract"

    def __init__(self, ring: RingHandle):
        self.ring = ring

    # =========================
    # Descriptors
    # =========================

    @abstractmethod
    def right_ideal(self, a: Element) -> IdealDescriptor:
        """aR"""

    @abstractmethod
    def left_ideal(self, a: Element) -> IdealDescriptor:
        """Ra"""

    @abstractmethod
    def right_annihilator(self, a: Element) -> IdealDescriptor:
        """a°"""

    @abstractmethod
    def left_annihilator(self, a: Element) -> IdealDescriptor:
        """°a"""

    @abstractmethod
    def _subset(self, x: IdealDescriptor, y: IdealDescriptor) -> bool:
        ...

    @abstractmethod
    def _meets_trivially(self, x: IdealDescriptor, y: IdealDescriptor) -> bool:
        ...

    @abstractmethod
    def _direct_sum(self, x: IdealDescriptor, y: IdealDescriptor) -> bool:
        ...

    @property
    @abstractmethod
    def index_bound(self) -> int:
        """Upper bound on the Drazin index of any element."""

    # =========================
    # Regularity
    # =========================

    @abstractmethod
    def inner_inverse_witnesses(self, a: Element, limit: int = 2) -> List[Element]:
        """Up to ``limit`` distinct x with axa = a, in canonical order; empty if a is not regular."""

    def inner_inverse(self, a: Element) -> Optional[Element]:
        found = self.inner_inverse_witnesses(a, limit=1)
        return found[0] if found else None

    def is_regular(self, a: Element) -> bool:
        return self.inner_inverse(a) is not None

    # =========================
    # Derived vocabulary
    # =========================

    def right_ideal_within(self, x: Element, y: Element) -> bool:
        """xR ⊆ yR, i.e. x ∈ yR"""
        return self._subset(self.right_ideal(x), self.right_ideal(y))

    def left_ideal_within(self, x: Element, y: Element) -> bool:
        """Rx ⊆ Ry, i.e. x ∈ Ry"""
        return self._subset(self.left_ideal(x), self.left_ideal(y))

    def right_ideal_equal(self, x: Element, y: Element) -> bool:
        return self.right_ideal_within(x, y) and self.right_ideal_within(y, x)

    def left_ideal_equal(self, x: Element, y: Element) -> bool:
        return self.left_ideal_within(x, y) and self.left_ideal_within(y, x)

    def right_annihilator_within(self, x: Element, y: Element) -> bool:
        """x° ⊆ y°"""
        return self._subset(self.right_annihilator(x), self.right_annihilator(y))

    def left_annihilator_within(self, x: Element, y: Element) -> bool:
        """°x ⊆ °y"""
        return self._subset(self.left_annihilator(x), self.left_annihilator(y))

    def right_annihilator_equal(self, x: Element, y: Element) -> bool:
        return self.right_annihilator_within(x, y) and self.right_annihilator_within(y, x)

    def left_annihilator_equal(self, x: Element, y: Element) -> bool:
        return self.left_annihilator_within(x, y) and self.left_annihilator_within(y, x)

    def right_annihilator_meets_trivially(self, x: Element, y: Element) -> bool:
        """x° ∩ yR = {0}"""
        return self._meets_trivially(self.right_annihilator(x), self.right_ideal(y))

    def left_annihilator_meets_trivially(self, x: Element, y: Element) -> bool:
        """°x ∩ Ry = {0}"""
        return self._meets_trivially(self.left_annihilator(x), self.left_ideal(y))

    def splits_right(self, x: Element, y: Element) -> bool:
        """R = xR ⊕ y°"""
        return self._direct_sum(self.right_ideal(x), self.right_annihilator(y))

    def splits_left(self, x: Element, y: Element) -> bool:
        """R = Rx ⊕ °y"""
        return self._direct_sum(self.left_ideal(x), self.left_annihilator(y))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.ring.spec})"

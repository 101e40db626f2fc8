# bcinverse_engine/backends/matrix.py
"""
Subspace backend for M_k(F), F the rationals or a prime field.

In the full matrix ring xR = {X : col(X) ⊆ col(x)} and x° = {X : col(X) ⊆
null(x)}; dually Rx and °x are governed by row(x) and leftnull(x). Every
ideal predicate therefore reduces to a rank computation on F^k, which keeps
the infinite ring M_k(Q) decidable.
"""
import logging
from typing import List, Optional

from bcinverse_engine.backends import linalg
from bcinverse_engine.backends.base import IdealBackend
from bcinverse_engine.backends.finite import FiniteBackend
from bcinverse_engine.backends.linalg import SubspaceBasis
from bcinverse_engine.config.settings import Settings
from bcinverse_engine.errors import MixedRings, UnsupportedBackend
from bcinverse_engine.rings.base import Element, RingHandle
from bcinverse_engine.rings.matrix_ring import MatrixRing

logger = logging.getLogger(__name__)


class MatrixBackend(IdealBackend):
    name = "matrix"

    def __init__(self, ring: RingHandle):
        if not isinstance(ring, MatrixRing):
            raise UnsupportedBackend(
                f"the matrix backend needs M_k over a field, got {ring.spec}; composite moduli use the finite backend"
            )
        super().__init__(ring)
        self.size = ring.size

    def _matrix(self, a: Element) -> linalg.ExactMatrix:
        if a.ring != self.ring:
            raise MixedRings(f"{a.ring.spec} element passed to a {self.ring.spec} backend")
        return self.ring.to_matrix(a.payload)

    @property
    def index_bound(self) -> int:
        return self.size

    def right_ideal(self, a: Element) -> SubspaceBasis:
        return linalg.column_space(self._matrix(a))

    def left_ideal(self, a: Element) -> SubspaceBasis:
        return linalg.row_space(self._matrix(a))

    def right_annihilator(self, a: Element) -> SubspaceBasis:
        return linalg.null_space(self._matrix(a))

    def left_annihilator(self, a: Element) -> SubspaceBasis:
        return linalg.left_null_space(self._matrix(a))

    def _subset(self, x: SubspaceBasis, y: SubspaceBasis) -> bool:
        return linalg.subspace_subset(x, y)

    def _meets_trivially(self, x: SubspaceBasis, y: SubspaceBasis) -> bool:
        return linalg.intersection_is_zero(x, y)

    def _direct_sum(self, x: SubspaceBasis, y: SubspaceBasis) -> bool:
        return linalg.subspace_direct_sum(x, y)

    def inner_inverse_witnesses(self, a: Element, limit: int = 2) -> List[Element]:
        found = linalg.inner_inverse_witnesses(self._matrix(a), limit)
        return [self.ring.element(g.entries) for g in found]

    def rank(self, a: Element) -> int:
        return linalg.rank(self._matrix(a))


def backend_for(ring: RingHandle, settings: Optional[Settings] = None) -> IdealBackend:
    """Subspace backend for matrix rings over fields, enumeration for everything else."""
    if isinstance(ring, MatrixRing):
        return MatrixBackend(ring)
    backend = FiniteBackend(ring, settings)
    logger.debug(f"Using finite backend for {ring.spec}")
    return backend

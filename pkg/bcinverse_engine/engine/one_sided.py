# bcinverse_engine/engine/one_sided.py
"""
Left and right (b,c)-inverses.

x is a left (b,c)-inverse of a when Rx ⊆ Rc and xab = b; y is a right one when
yR ⊆ bR and cay = c. Left invertibility is b ∈ Rcab, right is c ∈ cabR.
"""
import logging
from typing import Optional

from bcinverse_engine.engine import criteria as crit
from bcinverse_engine.engine.inverses import EngineCore
from bcinverse_engine.errors import NotOneSidedInvertible, NotRegular, OnlyOneSided, ensure
from bcinverse_engine.rings.base import Element

logger = logging.getLogger(__name__)


class OneSidedMixin(EngineCore):
    def is_left_bc_inverse(self, x: Element, a: Element, b: Element, c: Element) -> bool:
        self._check(x, a, b, c)
        return crit.is_left_bc_inverse(self.backend, x, a, b, c)

    def is_right_bc_inverse(self, y: Element, a: Element, b: Element, c: Element) -> bool:
        self._check(y, a, b, c)
        return crit.is_right_bc_inverse(self.backend, y, a, b, c)

    def is_left_bc_invertible(self, a: Element, b: Element, c: Element) -> bool:
        self._check(a, b, c)
        return self.backend.left_ideal_within(b, c * a * b)

    def is_right_bc_invertible(self, a: Element, b: Element, c: Element) -> bool:
        self._check(a, b, c)
        return self.backend.right_ideal_within(c, c * a * b)

    def _family_inner(self, side: str, invertible: bool, a: Element, b: Element, c: Element) -> Element:
        where = self._where(a=a, b=b, c=c)
        if not invertible:
            raise NotOneSidedInvertible(f"a is not {side} (b,c)-invertible", where)
        g = self.inner_inverse(c * a * b)
        if g is None:
            raise NotRegular("cab has no inner inverse", {"cab": (c * a * b).literal(), **where})
        return g

    def left_bc_family(self, a: Element, b: Element, c: Element, v: Element) -> Element:
        """b(cab)⁻c + v[1 − cab(cab)⁻]c"""
        self._check(v)
        g = self._family_inner("left", self.is_left_bc_invertible(a, b, c), a, b, c)
        cab = c * a * b
        x = b * g * c + v * (self.ring.one - cab * g) * c
        ensure(self.is_left_bc_inverse(x, a, b, c), "left family member is not a left (b,c)-inverse",
               **self._where(a=a, b=b, c=c, v=v))
        return x

    def right_bc_family(self, a: Element, b: Element, c: Element, u: Element) -> Element:
        """b(cab)⁻c + b[1 − (cab)⁻cab]u"""
        self._check(u)
        g = self._family_inner("right", self.is_right_bc_invertible(a, b, c), a, b, c)
        cab = c * a * b
        y = b * g * c + b * (self.ring.one - g * cab) * u
        ensure(self.is_right_bc_inverse(y, a, b, c), "right family member is not a right (b,c)-inverse",
               **self._where(a=a, b=b, c=c, u=u))
        return y

    def left_right_coincide(self, a: Element, b: Element, c: Element) -> Optional[Element]:
        """The common left and right (b,c)-inverse; OnlyOneSided when exactly one side exists."""
        left, right = self.is_left_bc_invertible(a, b, c), self.is_right_bc_invertible(a, b, c)
        if left != right:
            side = "left" if left else "right"
            logger.info(f"Only the {side} (b,c)-inverse exists for {self._where(a=a, b=b, c=c)}")
            raise OnlyOneSided(side)
        if not left:
            return None
        report = self.bc_inverse(a, b, c)
        where = self._where(a=a, b=b, c=c)
        ensure(report.exists, "left and right inverses exist without a two-sided one", **where)
        zero = self.ring.zero
        x = report.value
        ensure(self.left_bc_family(a, b, c, zero) == x, "left inverse differs from the (b,c)-inverse", **where)
        ensure(self.right_bc_family(a, b, c, zero) == x, "right inverse differs from the (b,c)-inverse", **where)
        return x

    def star_duality_check(self, y: Element, a: Element, b: Element, c: Element) -> bool:
        """y is a left (b,c)-inverse of a iff y* is a right (c*,b*)-inverse of a*."""
        self._check(y, a, b, c)
        left = self.is_left_bc_inverse(y, a, b, c)
        right = self.is_right_bc_inverse(y.star(), a.star(), c.star(), b.star())
        return left == right

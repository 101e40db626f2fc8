# bcinverse_engine/engine/specializations.py
"""
Classical inverses as (b,c)-inverses:

    group        (a, a)
    Drazin       (a^k, a^k), k minimal
    Moore-Penrose (a*, a*)
    core         (a, a*)
    dual core    (a*, a)
"""
import logging
from dataclasses import replace
from typing import Optional

from bcinverse_engine.engine import criteria as crit
from bcinverse_engine.engine.criteria import CriterionId
from bcinverse_engine.engine.inverses import EngineCore
from bcinverse_engine.engine.reports import InverseReport
from bcinverse_engine.errors import IndexBoundExceeded, NoInvolution, ensure, present
from bcinverse_engine.rings.base import Element

logger = logging.getLogger(__name__)


class SpecializationMixin(EngineCore):
    def _require_involution(self) -> None:
        if not self.ring.has_involution:
            raise NoInvolution(f"{self.ring.spec} carries no involution")

    # =========================
    # {1,3}, {1,4} and Moore-Penrose
    # =========================

    def one_three_inverse(self, a: Element) -> Optional[Element]:
        """A witness x with axa = a and (ax)* = ax, built as (a(a*a)⁻)*."""
        self._require_involution()
        self._check(a)
        s = a.star()
        decomposes = crit.one_three_decomposition(self.backend, a)
        solvable = self.backend.left_ideal_within(a, s * a)
        ensure(decomposes == solvable, "R = Ra* ⊕ °a disagrees with a ∈ Ra*a", **self._where(a=a))
        if not decomposes:
            return None
        g = self.inner_inverse(s * a)
        ensure(g is not None, "a*a must be regular when a has a {1,3}-inverse", **self._where(a=a))
        x = (a * g).star()
        ensure(x.star() * s * a == a, "x*a*a = a failed", **self._where(a=a, x=x))
        ensure(a * x * a == a and (a * x).star() == a * x, "{1,3} identities failed", **self._where(a=a, x=x))
        return x

    def one_four_inverse(self, a: Element) -> Optional[Element]:
        """A witness y with aya = a and (ya)* = ya, built as ((aa*)⁻a)*."""
        self._require_involution()
        self._check(a)
        s = a.star()
        decomposes = crit.one_four_decomposition(self.backend, a)
        solvable = self.backend.right_ideal_within(a, a * s)
        ensure(decomposes == solvable, "R = a*R ⊕ a° disagrees with a ∈ aa*R", **self._where(a=a))
        if not decomposes:
            return None
        g = self.inner_inverse(a * s)
        ensure(g is not None, "aa* must be regular when a has a {1,4}-inverse", **self._where(a=a))
        y = (g * a).star()
        ensure(a * s * y.star() == a, "aa*y* = a failed", **self._where(a=a, y=y))
        ensure(a * y * a == a and (y * a).star() == y * a, "{1,4} identities failed", **self._where(a=a, y=y))
        return y

    def moore_penrose(self, a: Element) -> InverseReport:
        self._require_involution()
        self._check(a)
        s = a.star()
        report = self.bc_inverse(a, s, s)
        where = self._where(a=a)
        both = crit.one_three_decomposition(self.backend, a) and crit.one_four_decomposition(self.backend, a)
        ensure(report.exists == both, "Moore-Penrose existence differs from {1,3} and {1,4}", **where)
        if report.exists:
            x = present(report.value, "reported inverse has no value", a=a.literal())
            ensure(a * x * a == a and x * a * x == x, "Penrose equations 1-2 failed", **where)
            ensure((a * x).star() == a * x and (x * a).star() == x * a, "Penrose equations 3-4 failed", **where)
        return report

    # =========================
    # Core and dual core
    # =========================

    def core_inverse(self, a: Element) -> InverseReport:
        self._require_involution()
        self._check(a)
        where = self._where(a=a)
        report = self.bc_inverse(a, a, a.star())
        decomp = crit.settle(CriterionId.CORE_DECOMP, crit.core_items(self.backend, a), **where)
        crit.agree({CriterionId.FORMULA_CONDITIONS: report.exists, CriterionId.CORE_DECOMP: decomp}, **where)
        has_group_and_13 = self.group_exists(a) and crit.one_three_decomposition(self.backend, a)
        ensure(report.exists == has_group_and_13, "core existence differs from group and {1,3}", **where)
        if report.exists:
            x = present(report.value, "reported inverse has no value", a=a.literal())
            ensure(a * x * a == a and x * a * x == x and (a * x).star() == a * x, "core identities failed", **where)
            ensure(x * a * a == a and a * x * x == x, "core identities failed", **where)
        return report.with_criteria({CriterionId.CORE_DECOMP: decomp})

    def dual_core_inverse(self, a: Element) -> InverseReport:
        self._require_involution()
        self._check(a)
        where = self._where(a=a)
        report = self.bc_inverse(a, a.star(), a)
        decomp = crit.settle(CriterionId.CORE_DECOMP, crit.dual_core_items(self.backend, a), **where)
        crit.agree({CriterionId.FORMULA_CONDITIONS: report.exists, CriterionId.CORE_DECOMP: decomp}, **where)
        has_group_and_14 = self.group_exists(a) and crit.one_four_decomposition(self.backend, a)
        ensure(report.exists == has_group_and_14, "dual core existence differs from group and {1,4}", **where)
        if report.exists:
            x = present(report.value, "reported inverse has no value", a=a.literal())
            ensure(a * x * a == a and x * a * x == x and (x * a).star() == x * a, "dual core identities failed", **where)
            ensure(a * a * x == a and x * x * a == x, "dual core identities failed", **where)
        return report.with_criteria({CriterionId.CORE_DECOMP: decomp})

    # =========================
    # Drazin
    # =========================

    def drazin_inverse(self, a: Element) -> InverseReport:
        """Smallest k up to the backend's index bound with an (a^k, a^k)-inverse."""
        self._check(a)
        bound = self.backend.index_bound
        power = a
        for k in range(1, bound + 1):
            report = self.bc_inverse(a, power, power)
            if report.exists:
                x = present(report.value, "reported inverse has no value", a=a.literal())
                where = self._where(a=a, x=x)
                ensure(power * x * a == power, "a^k x a = a^k failed", **where)
                ensure(x * a * x == x and a * x == x * a, "Drazin identities failed", **where)
                unit = a.unit_inverse()
                if unit is not None:
                    ensure(x == unit, "Drazin inverse of a unit must be its inverse", **where)
                logger.debug(f"Drazin index of {a.literal()} is {k}")
                return replace(report, index=k, invertible=unit is not None)
            power = power * a
        raise IndexBoundExceeded(f"no (a^k,a^k)-inverse for k up to {bound}", {"a": a.literal(), "bound": bound})

    # =========================
    # Inner (b,c)-inverses
    # =========================

    def inner_outer_bc(self, a: Element, b: Element, c: Element) -> InverseReport:
        """The (b,c)-inverse when it is also an inner inverse of a."""
        self._check(a, b, c)
        where = self._where(a=a, b=b, c=c)
        report = self.bc_inverse(a, b, c)
        items = crit.inner_outer_items(self.backend, a, b, c)
        items["inner_bc_inverse"] = report.exists and a * report.value * a == a
        inner = crit.settle(CriterionId.INNER_OUTER, items, **where)
        if not inner:
            return InverseReport.absent({CriterionId.INNER_OUTER: False})
        return InverseReport(
            exists=True,
            value=report.value,
            criteria={CriterionId.INNER_OUTER: True},
            inner_inverse_used=report.inner_inverse_used,
            definitional_check=report.definitional_check,
        )

    def inner_reflexive_right(self, a: Element, b: Element) -> InverseReport:
        """y = b(ab)⁻ with aya = a, yay = y and yR = bR."""
        self._check(a, b)
        where = self._where(a=a, b=b)
        ok = crit.settle(CriterionId.INNER_REFLEXIVE, crit.inner_reflexive_right_items(self.backend, a, b), **where)
        if not ok:
            return InverseReport.absent({CriterionId.INNER_REFLEXIVE: False})
        g = self.inner_inverse(a * b)
        ensure(g is not None, "ab must be regular", **where)
        y = b * g
        check = a * y * a == a and y * a * y == y and self.backend.right_ideal_equal(y, b)
        return InverseReport(True, y, criteria={CriterionId.INNER_REFLEXIVE: True}, inner_inverse_used=g,
                             definitional_check=check)

    def inner_reflexive_left(self, a: Element, c: Element) -> InverseReport:
        """y = (ca)⁻c with aya = a, yay = y and Ry = Rc."""
        self._check(a, c)
        where = self._where(a=a, c=c)
        ok = crit.settle(CriterionId.INNER_REFLEXIVE, crit.inner_reflexive_left_items(self.backend, a, c), **where)
        if not ok:
            return InverseReport.absent({CriterionId.INNER_REFLEXIVE: False})
        g = self.inner_inverse(c * a)
        ensure(g is not None, "ca must be regular", **where)
        y = g * c
        check = a * y * a == a and y * a * y == y and self.backend.left_ideal_equal(y, c)
        return InverseReport(True, y, criteria={CriterionId.INNER_REFLEXIVE: True}, inner_inverse_used=g,
                             definitional_check=check)

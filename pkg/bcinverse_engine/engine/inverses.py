# bcinverse_engine/engine/inverses.py
"""
Two-sided (b,c)-inverses: the closed form b(cab)⁻c, its existence criteria,
the definitional predicates and the inverse along an element.
"""
import logging
from typing import Dict, List, Optional, Tuple

from bcinverse_engine.backends.base import IdealBackend
from bcinverse_engine.config.settings import Settings, get_settings
from bcinverse_engine.engine import criteria as crit
from bcinverse_engine.engine.criteria import CriterionId
from bcinverse_engine.engine.reports import InverseReport
from bcinverse_engine.errors import HypothesisFailed, MixedRings, ensure, present
from bcinverse_engine.rings.base import Element

logger = logging.getLogger(__name__)


class EngineCore:
    """Caches live as long as the engine; services and suite contexts build one per command."""

    def __init__(self, backend: IdealBackend, settings: Optional[Settings] = None):
        self.backend = backend
        self.ring = backend.ring
        self.settings = settings or get_settings()
        self._bc_cache: Dict[Tuple[Element, Element, Element], InverseReport] = {}

    def _check(self, *xs: Element) -> None:
        for x in xs:
            if x.ring != self.ring:
                raise MixedRings(f"{x.ring.spec} element passed to an engine over {self.ring.spec}")

    @staticmethod
    def _where(**xs: Element) -> Dict[str, str]:
        return {k: v.literal() for k, v in xs.items()}

    def inner_inverse(self, x: Element) -> Optional[Element]:
        return self.backend.inner_inverse(x)

    def formula_value(self, a: Element, b: Element, c: Element) -> Tuple[Optional[Element], Optional[Element]]:
        """(b g c, g) for an inner inverse g of cab, or (None, None) when cab is not regular."""
        g = self.inner_inverse(c * a * b)
        if g is None:
            return None, None
        return b * g * c, g

    def _cross_check(self, x: Element, a: Element, b: Element, c: Element) -> None:
        # independence of the inner inverse holds only for (b,c)-invertible a
        if not self.settings.engine.cross_check_inner_inverses:
            return
        witnesses: List[Element] = self.backend.inner_inverse_witnesses(c * a * b, limit=2)
        for h in witnesses[1:]:
            ensure(b * h * c == x, "b(cab)⁻c depends on the inner inverse", **self._where(a=a, b=b, c=c, h=h))

    # =========================
    # Existence criteria
    # =========================

    def bc_exists_drazin(self, a: Element, b: Element, c: Element) -> bool:
        self._check(a, b, c)
        return crit.drazin_ideal(self.backend, a, b, c)

    def bc_exists_kcc(self, a: Element, b: Element, c: Element) -> bool:
        self._check(a, b, c)
        items = crit.kcc_decomposition(self.backend, a, b, c)
        return crit.settle(CriterionId.KCC_DECOMP, items, **self._where(a=a, b=b, c=c))

    def bc_exists_annihilator(self, a: Element, b: Element, c: Element) -> bool:
        self._check(a, b, c)
        items = crit.annihilator_decomposition(self.backend, a, b, c)
        return crit.settle(CriterionId.ANNIHILATOR_DECOMP, items, **self._where(a=a, b=b, c=c))

    def bc_exists_fiveway(self, a: Element, b: Element, c: Element) -> bool:
        self._check(a, b, c)
        items = crit.five_way(self.backend, a, b, c, self.inner_inverse(c * a * b))
        return crit.settle(CriterionId.FIVE_WAY, items, **self._where(a=a, b=b, c=c))

    def existence_criteria(
        self, a: Element, b: Element, c: Element, candidate: Optional[Element]
    ) -> Dict[CriterionId, bool]:
        B = self.backend
        b_regular, c_regular = B.is_regular(b), B.is_regular(c)
        hybrid = annihilator = False
        if candidate is not None:
            hybrid = c_regular and crit.hybrid_definition(B, candidate, a, b, c)
            annihilator = b_regular and c_regular and crit.annihilator_definition(B, candidate, a, b, c)
        return {
            CriterionId.DRAZIN_IDEAL: self.bc_exists_drazin(a, b, c),
            CriterionId.KCC_DECOMP: self.bc_exists_kcc(a, b, c),
            CriterionId.ANNIHILATOR_DECOMP: self.bc_exists_annihilator(a, b, c),
            CriterionId.FORMULA_CONDITIONS: crit.formula_conditions(B, a, b, c),
            CriterionId.FIVE_WAY: self.bc_exists_fiveway(a, b, c),
            CriterionId.HYBRID_DEF: hybrid,
            CriterionId.ANNIHILATOR_DEF: annihilator,
        }

    # =========================
    # (b,c)-inverse
    # =========================

    def definitional_check(self, y: Element, a: Element, b: Element, c: Element) -> bool:
        """yab = b, cay = c and yay = y, yR = bR, Ry = Rc."""
        return y * a * b == b and c * a * y == c and crit.bc_characterization(self.backend, y, a, b, c)

    def bc_inverse(self, a: Element, b: Element, c: Element) -> InverseReport:
        self._check(a, b, c)
        cached = self._bc_cache.get((a, b, c))
        if cached is not None:
            return cached
        report = self._bc_inverse(a, b, c)
        self._bc_cache[(a, b, c)] = report
        return report

    def _bc_inverse(self, a: Element, b: Element, c: Element) -> InverseReport:
        x, g = self.formula_value(a, b, c)
        found = self.existence_criteria(a, b, c, x)
        if not crit.agree(found, **self._where(a=a, b=b, c=c)):
            return InverseReport.absent(found)
        x = present(x, "b(cab)⁻c missing for an invertible a", **self._where(a=a, b=b, c=c))
        self._cross_check(x, a, b, c)
        return InverseReport(
            exists=True,
            value=x,
            criteria=found,
            inner_inverse_used=g,
            definitional_check=self.definitional_check(x, a, b, c),
        )

    def is_bc_inverse(self, y: Element, a: Element, b: Element, c: Element) -> bool:
        self._check(y, a, b, c)
        return crit.bc_characterization(self.backend, y, a, b, c)

    def is_hybrid_bc(self, y: Element, a: Element, b: Element, c: Element) -> bool:
        self._check(y, a, b, c)
        return crit.hybrid_definition(self.backend, y, a, b, c)

    def is_annihilator_bc(self, y: Element, a: Element, b: Element, c: Element) -> bool:
        self._check(y, a, b, c)
        return crit.annihilator_definition(self.backend, y, a, b, c)

    def generator_invariance(self, a: Element, b: Element, c: Element, u: Element, v: Element) -> bool:
        """(b,c)- and (u,v)-inverses agree whenever bR = uR and Rc = Rv."""
        self._check(a, b, c, u, v)
        if not (self.backend.right_ideal_equal(b, u) and self.backend.left_ideal_equal(c, v)):
            raise HypothesisFailed("generator invariance needs bR = uR and Rc = Rv", self._where(b=b, c=c, u=u, v=v))
        first, second = self.bc_inverse(a, b, c), self.bc_inverse(a, u, v)
        return first.exists == second.exists and first.value == second.value

    # =========================
    # Group inverse and inverse along d
    # =========================

    def group_exists(self, a: Element) -> bool:
        return self.backend.splits_right(a, a)

    def group_characterizations(self, a: Element) -> Dict[str, bool]:
        self._check(a)
        items = crit.group_items(self.backend, a)
        items["group_invertible"] = self.bc_inverse(a, a, a).exists
        crit.settle(CriterionId.GROUP_DECOMP, items, **self._where(a=a))
        return items

    def group_inverse(self, a: Element) -> InverseReport:
        self._check(a)
        report = self.bc_inverse(a, a, a)
        decomp = crit.settle(CriterionId.GROUP_DECOMP, crit.group_items(self.backend, a), **self._where(a=a))
        found = {CriterionId.FORMULA_CONDITIONS: report.exists, CriterionId.GROUP_DECOMP: decomp}
        crit.agree(found, **self._where(a=a))
        if report.exists:
            x = present(report.value, "group inverse value missing", **self._where(a=a))
            where = self._where(a=a, x=x)
            ensure(a * x * a == a and x * a * x == x and a * x == x * a, "group inverse identities", **where)
            ensure(a * x * x == x and x * a * a == a, "ay²=y, ya²=a failed", **where)
        return report.with_criteria({CriterionId.GROUP_DECOMP: decomp})

    def inverse_along(self, a: Element, d: Element) -> InverseReport:
        self._check(a, d)
        report = self.bc_inverse(a, d, d)
        where = self._where(a=a, d=d)
        along = {
            CriterionId.ALONG_IDEALS: crit.along_ideals(self.backend, a, d),
            CriterionId.ALONG_FORMULA: crit.along_formula(self.backend, a, d),
            CriterionId.ALONG_GROUP: crit.settle(
                CriterionId.ALONG_GROUP, crit.along_group_items(self.backend, a, d), **where
            ),
        }
        crit.agree({CriterionId.FORMULA_CONDITIONS: report.exists, **along}, **where)
        if report.exists:
            ad, da = a * d, d * a
            ad_group, da_group = self.bc_inverse(ad, ad, ad), self.bc_inverse(da, da, da)
            ensure(ad_group.exists and da_group.exists, "ad and da must be group invertible", **where)
            ad_sharp = present(ad_group.value, "(ad)^# missing", **where)
            da_sharp = present(da_group.value, "(da)^# missing", **where)
            ensure(report.value == d * ad_sharp, "inverse along d differs from d(ad)^#", **where)
            ensure(report.value == da_sharp * d, "inverse along d differs from (da)^#d", **where)
        return report.with_criteria(along)

    def group_via_along(
        self, a: Element, d: Element, b: Optional[Element] = None, c: Optional[Element] = None
    ) -> Element:
        """d(ad)^#, checked against (da)^#d and the (b,c)-inverse; b and c default to d."""
        b = d if b is None else b
        c = d if c is None else c
        self._check(a, d, b, c)
        where = self._where(a=a, b=b, c=c, d=d)
        report = self.bc_inverse(a, b, c)
        if not (self.backend.right_ideal_equal(d, b) and self.backend.right_annihilator_equal(d, c) and report.exists):
            raise HypothesisFailed("needs dR = bR, d° = c° and a (b,c)-invertible", where)
        ad_group = self.bc_inverse(a * d, a * d, a * d)
        da_group = self.bc_inverse(d * a, d * a, d * a)
        ensure(ad_group.exists and da_group.exists, "ad and da must be group invertible", **where)
        ad_sharp = present(ad_group.value, "(ad)^# missing", **where)
        da_sharp = present(da_group.value, "(da)^# missing", **where)
        x = d * ad_sharp
        ensure(x == da_sharp * d, "d(ad)^# differs from (da)^#d", **where)
        ensure(x == report.value, "d(ad)^# differs from the (b,c)-inverse", **where)
        return x

# bcinverse_engine/engine/criteria.py
"""
Existence criteria as pure predicates over an IdealBackend.

Each multi-item criterion returns its items by name; ``settle`` collapses the
items to one verdict and raises CriteriaDisagreement when they differ, since
the items are proven equivalent.
"""
import logging
from enum import Enum
from typing import Dict, Optional

from bcinverse_engine.backends.base import IdealBackend
from bcinverse_engine.errors import CriteriaDisagreement
from bcinverse_engine.rings.base import Element

logger = logging.getLogger(__name__)

Items = Dict[str, bool]


class CriterionId(str, Enum):
    DRAZIN_IDEAL = "DrazinIdeal"
    KCC_DECOMP = "KccDecomp"
    ANNIHILATOR_DECOMP = "AnnihilatorDecomp"
    FORMULA_CONDITIONS = "FormulaConditions"
    FIVE_WAY = "FiveWay"
    HYBRID_DEF = "HybridDef"
    ANNIHILATOR_DEF = "AnnihilatorDef"
    INNER_OUTER = "InnerOuter"
    INNER_REFLEXIVE = "InnerReflexive"
    GROUP_DECOMP = "GroupDecomp"
    ONE_THREE_DECOMP = "OneThreeDecomp"
    ONE_FOUR_DECOMP = "OneFourDecomp"
    CORE_DECOMP = "CoreDecomp"
    ALONG_IDEALS = "AlongIdeals"
    ALONG_GROUP = "AlongGroup"
    ALONG_FORMULA = "AlongFormula"


def settle(criterion: CriterionId, items: Items, **context: str) -> bool:
    verdicts = set(items.values())
    if len(verdicts) != 1:
        logger.error(f"{criterion.value} items disagree: {items} at {context}")
        raise CriteriaDisagreement(
            f"{criterion.value} items disagree",
            {"criterion": criterion.value, "items": items, **context},
        )
    return verdicts.pop()


# =========================
# (b,c)-invertibility
# =========================

def drazin_ideal(B: IdealBackend, a: Element, b: Element, c: Element) -> bool:
    """b ∈ Rcab and c ∈ cabR"""
    cab = c * a * b
    return B.left_ideal_within(b, cab) and B.right_ideal_within(c, cab)


def kcc_decomposition(B: IdealBackend, a: Element, b: Element, c: Element) -> Items:
    return {
        "item2": B.is_regular(c) and B.right_annihilator_meets_trivially(a, b) and B.splits_right(a * b, c),
        "item3": B.is_regular(b) and B.left_annihilator_meets_trivially(a, c) and B.splits_left(c * a, b),
    }


def annihilator_decomposition(B: IdealBackend, a: Element, b: Element, c: Element) -> Items:
    return {
        "item2": B.is_regular(c) and B.right_annihilator_equal(a * b, b) and B.splits_right(a * b, c),
        "item3": B.is_regular(b) and B.left_annihilator_equal(c * a, c) and B.splits_left(c * a, b),
    }


def formula_conditions(B: IdealBackend, a: Element, b: Element, c: Element) -> bool:
    """cab regular, b° = (cab)° and cR = cabR"""
    cab = c * a * b
    return B.is_regular(cab) and B.right_annihilator_equal(b, cab) and B.right_ideal_equal(c, cab)


def five_way(B: IdealBackend, a: Element, b: Element, c: Element, g: Optional[Element]) -> Items:
    """Items (2) to (5); ``g`` is an inner inverse of cab or None when cab is not regular."""
    ab, ca, cab = a * b, c * a, c * a * b
    left_split = B.splits_left(c, ab) and B.left_ideal_equal(b, ab)
    right_split = B.splits_right(b, ca) and B.right_ideal_equal(c, ca)
    b_reg, c_reg = B.is_regular(b), B.is_regular(c)
    if g is None:
        item4 = item5 = False
    else:
        x = b * g * c
        item4 = B.left_ideal_within(c, x) and left_split
        item5 = B.right_ideal_within(b, x) and right_split
    return {
        "item2": b_reg and c_reg and B.left_annihilator_equal(c, cab) and left_split,
        "item3": b_reg and c_reg and B.right_annihilator_equal(b, cab) and right_split,
        "item4": item4,
        "item5": item5,
    }


# =========================
# Definitional predicates
# =========================

def is_outer(y: Element, a: Element) -> bool:
    return y * a * y == y


def bc_characterization(B: IdealBackend, y: Element, a: Element, b: Element, c: Element) -> bool:
    """yay = y, yR = bR and Ry = Rc"""
    return is_outer(y, a) and B.right_ideal_equal(y, b) and B.left_ideal_equal(y, c)


def hybrid_definition(B: IdealBackend, y: Element, a: Element, b: Element, c: Element) -> bool:
    """yay = y, yR = bR and y° = c°"""
    return is_outer(y, a) and B.right_ideal_equal(y, b) and B.right_annihilator_equal(y, c)


def annihilator_definition(B: IdealBackend, y: Element, a: Element, b: Element, c: Element) -> bool:
    """yay = y, °y = °b and y° = c°"""
    return is_outer(y, a) and B.left_annihilator_equal(y, b) and B.right_annihilator_equal(y, c)


def is_left_bc_inverse(B: IdealBackend, x: Element, a: Element, b: Element, c: Element) -> bool:
    """Rx ⊆ Rc and xab = b"""
    return x * a * b == b and B.left_ideal_within(x, c)


def is_right_bc_inverse(B: IdealBackend, y: Element, a: Element, b: Element, c: Element) -> bool:
    """yR ⊆ bR and cay = c"""
    return c * a * y == c and B.right_ideal_within(y, b)


# =========================
# Inner (b,c)-inverses
# =========================

def inner_outer_items(B: IdealBackend, a: Element, b: Element, c: Element) -> Items:
    ab, ca = a * b, c * a
    regular = B.is_regular(a)
    return {
        "item2": regular
        and B.right_ideal_equal(a, ab)
        and B.left_ideal_equal(ca, a)
        and B.right_annihilator_equal(ab, b)
        and B.left_annihilator_equal(ca, c),
        "item3": regular and B.splits_right(b, a) and B.splits_left(c, a),
    }


def inner_reflexive_right_items(B: IdealBackend, a: Element, b: Element) -> Items:
    """Some y has aya = a, yay = y and yR = bR."""
    regular = B.is_regular(a)
    return {
        "item2": regular and B.right_ideal_equal(a, a * b) and B.right_annihilator_equal(a * b, b),
        "item3": regular and B.splits_right(b, a),
    }


def inner_reflexive_left_items(B: IdealBackend, a: Element, c: Element) -> Items:
    """Some y has aya = a, yay = y and Ry = Rc."""
    regular = B.is_regular(a)
    return {
        "item2": regular and B.left_ideal_equal(c * a, a) and B.left_annihilator_equal(c * a, c),
        "item3": regular and B.splits_left(c, a),
    }


# =========================
# Specializations
# =========================

def group_items(B: IdealBackend, a: Element) -> Items:
    aa = a * a
    return {
        "right_split": B.splits_right(a, a),
        "left_split": B.splits_left(a, a),
        "square_solvable": B.right_ideal_within(a, aa) and B.left_ideal_within(a, aa),
    }


def one_three_decomposition(B: IdealBackend, a: Element) -> bool:
    """R = Ra* ⊕ °a"""
    return B.splits_left(a.star(), a)


def one_four_decomposition(B: IdealBackend, a: Element) -> bool:
    """R = a*R ⊕ a°"""
    return B.splits_right(a.star(), a)


def core_items(B: IdealBackend, a: Element) -> Items:
    s, aa = a.star(), a * a
    return {
        "item2": B.right_ideal_equal(a, aa) and B.left_ideal_equal(s * a, a) and B.right_annihilator_equal(aa, a),
        "item3": B.splits_right(a, a) and B.splits_left(s, a),
    }


def dual_core_items(B: IdealBackend, a: Element) -> Items:
    s, aa = a.star(), a * a
    return {
        "item2": B.left_ideal_equal(a, aa) and B.right_ideal_equal(a * s, a) and B.left_annihilator_equal(aa, a),
        "item3": B.splits_left(a, a) and B.splits_right(s, a),
    }


def along_ideals(B: IdealBackend, a: Element, d: Element) -> bool:
    """dR = dadR and Rd = Rdad"""
    dad = d * a * d
    return B.right_ideal_equal(d, dad) and B.left_ideal_equal(d, dad)


def along_formula(B: IdealBackend, a: Element, d: Element) -> bool:
    """dad regular, d° = (dad)° and dR = dadR"""
    dad = d * a * d
    return B.is_regular(dad) and B.right_annihilator_equal(d, dad) and B.right_ideal_equal(d, dad)


def along_group_items(B: IdealBackend, a: Element, d: Element) -> Items:
    da, ad = d * a, a * d
    return {
        "item2": B.right_ideal_within(d, da) and B.splits_right(da, da),
        "item3": B.left_ideal_within(d, ad) and B.splits_right(ad, ad),
    }


def agree(criteria: Dict[CriterionId, bool], **context: str) -> bool:
    """Common verdict of criteria proven equivalent; CriteriaDisagreement otherwise."""
    verdicts = set(criteria.values())
    if len(verdicts) != 1:
        shown = {k.value: v for k, v in criteria.items()}
        logger.error(f"existence criteria disagree: {shown} at {context}")
        raise CriteriaDisagreement("existence criteria disagree", {"criteria": shown, **context})
    return verdicts.pop()

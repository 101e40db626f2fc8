# bcinverse_engine/verifier/suites.py
"""
One suite per verified result. Each check receives the suite context and one
input tuple, recomputes both sides of the result and yields a Failure for
every side that disagrees.
"""
from typing import Dict, Iterable, Iterator, List, Optional

from bcinverse_engine.engine import criteria as crit
from bcinverse_engine.errors import OnlyOneSided
from bcinverse_engine.rings.base import Element
from bcinverse_engine.verifier.registry import Failure, SuiteContext, expect, show, suite

Failures = Iterator[Failure]


def _agree(check: str, items: Dict[str, bool]) -> Failures:
    if len(set(items.values())) > 1:
        yield Failure(check, "all items equal", ", ".join(f"{k}={show(v)}" for k, v in items.items()))


def _each(check: str, expected: bool, items: Dict[str, bool]) -> Failures:
    for name, verdict in items.items():
        yield from expect(f"{check} {name}", expected, verdict)


def _canonical(xs: Iterable[Element]) -> List[Element]:
    return sorted(set(xs), key=Element.sort_key)


# =========================
# Definition and preliminaries
# =========================

@suite("eq1-uniqueness", "a,b,c", needs_oracle=True)
def eq1_uniqueness(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """At most one y has y ∈ bRy ∩ yRc, yab = b and cay = c, and the engine finds it."""
    found = ctx.oracle.definitional_solutions(a, b, c)
    yield from expect("at most one solution", True, len(found) <= 1)
    report = ctx.engine.bc_inverse(a, b, c)
    yield from expect("engine existence", bool(found), report.exists)
    if found and report.exists:
        yield from expect("engine value", found[0], report.value)


@suite("lemma-annihilator", "a,b")
def lemma_annihilator(ctx: SuiteContext, a: Element, b: Element) -> Failures:
    """aR ⊆ bR implies °b ⊆ °a, with the converse for regular b; dually on the left."""
    B = ctx.backend
    b_regular = B.is_regular(b)
    if B.right_ideal_within(a, b):
        yield from expect("aR⊆bR ⇒ °b⊆°a", True, B.left_annihilator_within(b, a))
    if b_regular and B.left_annihilator_within(b, a):
        yield from expect("°b⊆°a ⇒ aR⊆bR", True, B.right_ideal_within(a, b))
    if B.left_ideal_within(a, b):
        yield from expect("Ra⊆Rb ⇒ b°⊆a°", True, B.right_annihilator_within(b, a))
    if b_regular and B.right_annihilator_within(b, a):
        yield from expect("b°⊆a° ⇒ Ra⊆Rb", True, B.left_ideal_within(a, b))


@suite("lemma-pirregulara", "a,b")
def lemma_pirregulara(ctx: SuiteContext, a: Element, b: Element) -> Failures:
    """Regularity passes between generators of the same principal ideal."""
    B = ctx.backend
    if B.is_regular(a) and B.right_ideal_equal(a, b):
        yield from expect("aR=bR ⇒ b regular", True, B.is_regular(b))
    if B.is_regular(a) and B.left_ideal_equal(a, b):
        yield from expect("Ra=Rb ⇒ b regular", True, B.is_regular(b))


@suite("lemma-pirdcca", "a,y")
def lemma_pirdcca(ctx: SuiteContext, a: Element, y: Element) -> Failures:
    """yay = y gives yaR = yR, Ray = Ry and trivial annihilator intersections."""
    if y * a * y != y:
        return
    B = ctx.backend
    yield from expect("yaR=yR", True, B.right_ideal_equal(y * a, y))
    yield from expect("Ray=Ry", True, B.left_ideal_equal(a * y, y))
    yield from expect("a°∩yR={0}", True, B.right_annihilator_meets_trivially(a, y))
    yield from expect("a°∩yaR={0}", True, B.right_annihilator_meets_trivially(a, y * a))
    yield from expect("°a∩Ry={0}", True, B.left_annihilator_meets_trivially(a, y))
    yield from expect("°a∩Ray={0}", True, B.left_annihilator_meets_trivially(a, a * y))


@suite("lemma-pirgroupa", "a")
def lemma_pirgroupa(ctx: SuiteContext, a: Element) -> Failures:
    """Group invertibility via R=aR⊕a°, R=Ra⊕°a and solvability of a²x=a, ya²=a."""
    items = ctx.engine.group_characterizations(a)
    yield from _each("group", ctx.truth(a, a, a) is not None, items)


@suite("lemma-134invese", "a", needs_involution=True)
def lemma_134invese(ctx: SuiteContext, a: Element) -> Failures:
    """{1,3}- and {1,4}-inverses: defining identities and direct-sum existence."""
    B, E, s = ctx.backend, ctx.engine, a.star()
    x13, x14 = E.one_three_inverse(a), E.one_four_inverse(a)
    yield from expect("{1,3} exists iff R=Ra*⊕°a", crit.one_three_decomposition(B, a), x13 is not None)
    yield from expect("{1,4} exists iff R=a*R⊕a°", crit.one_four_decomposition(B, a), x14 is not None)
    if ctx.oracle is None:
        return
    any13 = any14 = False
    for x in ctx.elements:
        is13 = a * x * a == a and (a * x).star() == a * x
        is14 = a * x * a == a and (x * a).star() == x * a
        any13, any14 = any13 or is13, any14 or is14
        yield from expect(f"x={x.literal()} in a{{1,3}} iff x*a*a=a", is13, x.star() * s * a == a)
        yield from expect(f"x={x.literal()} in a{{1,4}} iff aa*x*=a", is14, a * s * x.star() == a)
    yield from expect("some {1,3}-inverse exists", any13, x13 is not None)
    yield from expect("some {1,4}-inverse exists", any14, x14 is not None)


# =========================
# (b,c)-inverse characterizations
# =========================

@suite("lemma-abcire", "a,b,c", needs_oracle=True)
def lemma_abcire(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """y is the (b,c)-inverse iff yay = y, yR = bR and Ry = Rc."""
    truth = ctx.truth(a, b, c)
    for y in ctx.elements:
        yield from expect(f"y={y.literal()}", y == truth, ctx.engine.is_bc_inverse(y, a, b, c))


@suite("lemma-abcirg", "a,b,c")
def lemma_abcirg(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """A (b,c)-inverse exists iff b ∈ Rcab and c ∈ cabR."""
    yield from expect("b∈Rcab and c∈cabR", ctx.truth(a, b, c) is not None, ctx.engine.bc_exists_drazin(a, b, c))


@suite("lemma-abcirf", "a,b,c")
def lemma_abcirf(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """A (b,c)-invertible a forces cab, b and c regular."""
    if ctx.truth(a, b, c) is None:
        return
    B = ctx.backend
    yield from expect("cab regular", True, B.is_regular(c * a * b))
    yield from expect("b regular", True, B.is_regular(b))
    yield from expect("c regular", True, B.is_regular(c))


@suite("lemma-abcirl", "a,b,c")
def lemma_abcirl(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """c ∈ R⁻, a°∩bR={0}, R=abR⊕c° and its left-sided twin."""
    items = crit.kcc_decomposition(ctx.backend, a, b, c)
    yield from _each("decomposition", ctx.truth(a, b, c) is not None, items)


@suite("lemma-abcirn", "a,b,c", needs_oracle=True)
def lemma_abcirn(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """Hybrid and annihilator (b,c)-inverses collapse to the (b,c)-inverse under regularity."""
    B = ctx.backend
    truth = ctx.truth(a, b, c)
    b_regular, c_regular = B.is_regular(b), B.is_regular(c)
    for y in ctx.elements:
        is_bc = y == truth
        yield from expect(f"y={y.literal()} hybrid", is_bc, c_regular and crit.hybrid_definition(B, y, a, b, c))
        yield from expect(
            f"y={y.literal()} annihilator",
            is_bc,
            b_regular and c_regular and crit.annihilator_definition(B, y, a, b, c),
        )


@suite("thm-anihilata", "a,b,c")
def thm_anihilata(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """c ∈ R⁻, (ab)° = b° and R = abR ⊕ c°, and its left-sided twin."""
    items = crit.annihilator_decomposition(ctx.backend, a, b, c)
    yield from _each("decomposition", ctx.truth(a, b, c) is not None, items)


@suite("lemma-ats2innera", "a,b,c")
def lemma_ats2innera(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """For x = b(cab)⁻c: xax=x with bR=xR, with bR⊆xR, Rb=Rcab and b°=(cab)° agree."""
    B, cab = ctx.backend, c * a * b
    for g in ctx.inner_inverses(cab):
        x = b * g * c
        outer = x * a * x == x
        yield from _agree(f"g={g.literal()}", {
            "(1)": outer and B.right_ideal_equal(b, x),
            "(2)": outer and B.right_ideal_within(b, x),
            "(3)": B.left_ideal_equal(b, cab),
            "(4)": B.is_regular(b) and B.right_annihilator_equal(b, cab),
        })


@suite("lemma-ats2innerabdd", "a,b,c")
def lemma_ats2innerabdd(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """For x = b(cab)⁻c: xax=x with Rx=Rc, with Rc⊆Rx, cR=cabR and °c=°(cab) agree."""
    B, cab = ctx.backend, c * a * b
    for g in ctx.inner_inverses(cab):
        x = b * g * c
        outer = x * a * x == x
        yield from _agree(f"g={g.literal()}", {
            "(1)": outer and B.left_ideal_equal(x, c),
            "(2)": outer and B.left_ideal_within(c, x),
            "(3)": B.right_ideal_equal(c, cab),
            "(4)": B.is_regular(c) and B.left_annihilator_equal(c, cab),
        })


@suite("lemma-ats2iannnera", "a,b,c")
def lemma_ats2iannnera(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """For x = b(cab)⁻c: xax=x with x°=c°, with x°⊆c° and cR=cabR agree."""
    B, cab = ctx.backend, c * a * b
    for g in ctx.inner_inverses(cab):
        x = b * g * c
        outer = x * a * x == x
        yield from _agree(f"g={g.literal()}", {
            "(1)": outer and B.right_annihilator_equal(x, c),
            "(2)": outer and B.right_annihilator_within(x, c),
            "(3)": B.right_ideal_equal(c, cab),
        })


def _formula_sweep(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    B, cab = ctx.backend, c * a * b
    truth = ctx.truth(a, b, c)
    witnesses = ctx.inner_inverses(cab)
    if not witnesses:
        yield from expect("non-regular cab leaves no inverse", None, truth)
    for g in witnesses:
        x = b * g * c
        items = {
            "(1)": ctx.engine.definitional_check(x, a, b, c),
            "(2)": x * a * x == x and B.right_ideal_within(b, x) and B.right_annihilator_within(x, c),
            "(3)": B.right_annihilator_equal(b, cab) and B.right_ideal_equal(c, cab),
        }
        yield from _agree(f"g={g.literal()}", items)
        yield from expect(f"g={g.literal()} existence", truth is not None, items["(1)"])
        if truth is not None:
            yield from expect(f"g={g.literal()} value", truth, x)
    report = ctx.engine.bc_inverse(a, b, c)
    yield from expect("engine existence", truth is not None, report.exists)
    yield from expect("engine value", truth, report.value)


@suite("thm-informuast2a", "a,b,c")
def thm_informuast2a(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """b(cab)⁻c is the (b,c)-inverse iff b°=(cab)° and cR=cabR, for every inner inverse."""
    yield from _formula_sweep(ctx, a, b, c)


@suite("cor-informuast2aal", "a,d")
def cor_informuast2aal(ctx: SuiteContext, a: Element, d: Element) -> Failures:
    """d(dad)⁻d is the inverse along d iff d°=(dad)° and dR=dadR."""
    yield from _formula_sweep(ctx, a, d, d)
    yield from expect("AlongFormula", ctx.truth(a, d, d) is not None, crit.along_formula(ctx.backend, a, d))


@suite("thm-fiveway", "a,b,c")
def thm_fiveway(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """R=Rc⊕°(ab) and Rb=Rab, with the three sibling conditions."""
    exists = ctx.truth(a, b, c) is not None
    witnesses = ctx.inner_inverses(c * a * b) or [None]
    for g in witnesses:
        items = crit.five_way(ctx.backend, a, b, c, g)
        yield from _each(f"g={show(g)}", exists, items)


@suite("thm-inofbcbca", "a,b,c")
def thm_inofbcbca(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """The (b,c)-inverse is inner iff aR=abR, Rca=Ra, ... iff R=a°⊕bR and R=°a⊕Rc."""
    truth = ctx.truth(a, b, c)
    inner = truth is not None and a * truth * a == a
    yield from _each("inner (b,c)-inverse", inner, crit.inner_outer_items(ctx.backend, a, b, c))
    yield from expect("engine existence", inner, ctx.engine.inner_outer_bc(a, b, c).exists)


@suite("thm-inofbca", "a,b")
def thm_inofbca(ctx: SuiteContext, a: Element, b: Element) -> Failures:
    """Some y has aya=a, yay=y, yR=bR iff a regular, aR=abR, (ab)°=b° iff a regular, R=a°⊕bR."""
    B = ctx.backend
    report = ctx.engine.inner_reflexive_right(a, b)
    yield from expect("witness b(ab)⁻", report.exists, report.definitional_check)
    if ctx.oracle is not None:
        found = ctx.search(lambda y: a * y * a == a and y * a * y == y and B.right_ideal_equal(y, b))
        yield from _each("search", bool(found), crit.inner_reflexive_right_items(B, a, b))
        yield from expect("engine existence", bool(found), report.exists)


@suite("thm-inofbcdua", "a,c")
def thm_inofbcdua(ctx: SuiteContext, a: Element, c: Element) -> Failures:
    """Some y has aya=a, yay=y, Ry=Rc iff a regular, Rca=Ra, °(ca)=°c iff a regular, R=°a⊕Rc."""
    B = ctx.backend
    report = ctx.engine.inner_reflexive_left(a, c)
    yield from expect("witness (ca)⁻c", report.exists, report.definitional_check)
    if ctx.oracle is not None:
        found = ctx.search(lambda y: a * y * a == a and y * a * y == y and B.left_ideal_equal(y, c))
        yield from _each("search", bool(found), crit.inner_reflexive_left_items(B, a, c))
        yield from expect("engine existence", bool(found), report.exists)


# =========================
# One-sided inverses
# =========================

@suite("lemma-star-duality", "y,a,b,c", needs_involution=True)
def lemma_star_duality(ctx: SuiteContext, y: Element, a: Element, b: Element, c: Element) -> Failures:
    """y is a left (b,c)-inverse of a iff y* is a right (c*,b*)-inverse of a*."""
    yield from expect("duality", True, ctx.engine.star_duality_check(y, a, b, c))


@suite("thm-general-solutions", "a,b,c", needs_oracle=True)
def thm_general_solutions(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """The parametrized families list exactly the left and right (b,c)-inverses."""
    E = ctx.engine
    lefts = _canonical(ctx.oracle.left_bc_inverses(a, b, c))
    rights = _canonical(ctx.oracle.right_bc_inverses(a, b, c))
    left_ok, right_ok = E.is_left_bc_invertible(a, b, c), E.is_right_bc_invertible(a, b, c)
    yield from expect("left invertible iff b∈Rcab", bool(lefts), left_ok)
    yield from expect("right invertible iff c∈cabR", bool(rights), right_ok)
    if not ctx.backend.is_regular(c * a * b):
        return
    if left_ok:
        family = _canonical(E.left_bc_family(a, b, c, v) for v in ctx.elements)
        yield from expect("left family", lefts, family)
    if right_ok:
        family = _canonical(E.right_bc_family(a, b, c, u) for u in ctx.elements)
        yield from expect("right family", rights, family)


@suite("thm-coincide", "a,b,c", needs_oracle=True)
def thm_coincide(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """When both exist, the left and right (b,c)-inverses are unique and equal."""
    lefts = _canonical(ctx.oracle.left_bc_inverses(a, b, c))
    rights = _canonical(ctx.oracle.right_bc_inverses(a, b, c))
    if lefts and rights:
        yield from expect("unique left inverse", 1, len(lefts))
        yield from expect("unique right inverse", 1, len(rights))
        yield from expect("left equals right", lefts, rights)
        yield from expect("engine value", lefts[0], ctx.engine.left_right_coincide(a, b, c))
    elif lefts or rights:
        side = "left" if lefts else "right"
        try:
            got: Optional[Element] = ctx.engine.left_right_coincide(a, b, c)
            yield Failure("one-sided signal", side, f"returned {show(got)}")
        except OnlyOneSided as signal:
            yield from expect("one-sided signal", side, signal.side)
    else:
        yield from expect("no one-sided inverse", None, ctx.engine.left_right_coincide(a, b, c))


# =========================
# Changing generators
# =========================

@suite("lemma-bcuva", "a,b,c", needs_oracle=True)
def lemma_bcuva(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """bR=uR and Rc=Rv give equal (b,c)- and (u,v)-inverses."""
    B = ctx.backend
    us = ctx.search(lambda u: B.right_ideal_equal(u, b))
    vs = ctx.search(lambda v: B.left_ideal_equal(v, c))
    for u in us:
        for v in vs:
            yield from expect(f"u={u.literal()}, v={v.literal()}", True, ctx.engine.generator_invariance(a, b, c, u, v))


@suite("cor-bcbcwa", "a,b,c", needs_oracle=True)
def cor_bcbcwa(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """bR=ebR and Rc=Rcf carry the (b,c)-inverse to the (eb,cf)-inverse."""
    truth = ctx.truth(a, b, c)
    if truth is None:
        return
    B = ctx.backend
    es = ctx.search(lambda e: B.right_ideal_equal(b, e * b))
    fs = ctx.search(lambda f: B.left_ideal_equal(c, c * f))
    for e in es:
        for f in fs:
            yield from expect(f"e={e.literal()}, f={f.literal()}", truth, ctx.truth(a, e * b, c * f))


# =========================
# Inverse along d
# =========================

@suite("lemma-alongd", "a,d")
def lemma_alongd(ctx: SuiteContext, a: Element, d: Element) -> Failures:
    """The inverse along d exists iff dR⊆daR with (da)^#, iff Rd⊆Rad with (ad)^#; it is d(ad)^#."""
    E = ctx.engine
    report = E.inverse_along(a, d)
    yield from _each("along", report.exists, crit.along_group_items(ctx.backend, a, d))
    yield from expect("equals the (d,d)-inverse", ctx.truth(a, d, d), report.value)
    if report.exists:
        ad_group, da_group = E.group_inverse(a * d), E.group_inverse(d * a)
        yield from expect("(ad)^# exists", True, ad_group.exists)
        yield from expect("(da)^# exists", True, da_group.exists)
        if ad_group.exists and da_group.exists:
            yield from expect("d(ad)^#", report.value, d * ad_group.value)
            yield from expect("(da)^#d", report.value, da_group.value * d)


@suite("lemma-alongo", "a,d")
def lemma_alongo(ctx: SuiteContext, a: Element, d: Element) -> Failures:
    """a is invertible along d iff dR=dadR and Rd=Rdad."""
    yield from expect("dR=dadR and Rd=Rdad", ctx.truth(a, d, d) is not None, crit.along_ideals(ctx.backend, a, d))


@suite("lemma-ats2ringgroupa", "a,b,c", needs_oracle=True)
def lemma_ats2ringgroupa(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """With dR=bR and d°=c°, ad and da are group invertible and d(ad)^# is the (b,c)-inverse."""
    truth = ctx.truth(a, b, c)
    if truth is None:
        return
    B, E = ctx.backend, ctx.engine
    for d in ctx.search(lambda d: B.right_ideal_equal(d, b) and B.right_annihilator_equal(d, c)):
        yield from expect(f"d={d.literal()} ad group invertible", True, E.group_exists(a * d))
        yield from expect(f"d={d.literal()} da group invertible", True, E.group_exists(d * a))
        yield from expect(f"d={d.literal()} d(ad)^#", truth, E.group_via_along(a, d, b, c))


@suite("rmk-along-bc", "a,b,c", needs_oracle=True)
def rmk_along_bc(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """b, c regular with dR=bR, d°=c°: the (b,c)-inverse is the inverse along d."""
    B = ctx.backend
    if not (B.is_regular(b) and B.is_regular(c)):
        return
    truth = ctx.truth(a, b, c)
    for d in ctx.search(lambda d: B.right_ideal_equal(d, b) and B.right_annihilator_equal(d, c)):
        yield from expect(f"d={d.literal()}", truth, ctx.truth(a, d, d))


# =========================
# Group, core and Moore-Penrose
# =========================

@suite("eq-12drp", "a,y")
def eq_12drp(ctx: SuiteContext, a: Element, y: Element) -> Failures:
    """ay²=y, ya²=a imply aya=a, yay=y (and dually); both systems together give y = a^#."""
    right = a * y * y == y and y * a * a == a
    left = y * y * a == y and a * a * y == a
    reflexive = a * y * a == a and y * a * y == y
    yield from expect("ay²=y, ya²=a ⇒ reflexive", right, right and reflexive)
    yield from expect("y²a=y, a²y=a ⇒ reflexive", left, left and reflexive)
    if right or left:
        group = ctx.engine.group_inverse(a)
        yield from expect("a group invertible", True, group.exists)
        if right and left:
            yield from expect("y = a^#", y, group.value)


@suite("cor-corinoc", "a", needs_involution=True)
def cor_corinoc(ctx: SuiteContext, a: Element) -> Failures:
    """Core invertibility: aR=a²R, Ra*a=Ra, (a²)°=a°; R=a°⊕aR, R=°a⊕Ra*; a ∈ R^# ∩ R^{1,3}."""
    B, E = ctx.backend, ctx.engine
    core, dual = E.core_inverse(a), E.dual_core_inverse(a)
    items = crit.core_items(B, a)
    items["(4)"] = E.group_exists(a) and E.one_three_inverse(a) is not None
    yield from _each("core", core.exists, items)
    dual_items = crit.dual_core_items(B, a)
    dual_items["(4)"] = E.group_exists(a) and E.one_four_inverse(a) is not None
    yield from _each("dual core", dual.exists, dual_items)
    if ctx.oracle is not None:
        yield from expect("core is the (a,a*)-inverse", ctx.truth(a, a, a.star()), core.value)
        yield from expect("dual core is the (a*,a)-inverse", ctx.truth(a, a.star(), a), dual.value)


@suite("cor-corinoa", "a,x", needs_involution=True)
def cor_corinoa(ctx: SuiteContext, a: Element, x: Element) -> Failures:
    """a^† = x iff axa=a, xR=a*R, Rx=Ra*; a^# = x iff axa=a, xR=aR, Rx=Ra."""
    B, E, s = ctx.backend, ctx.engine, a.star()
    inner = a * x * a == a
    mp, group = E.moore_penrose(a), E.group_inverse(a)
    yield from expect(
        "Moore-Penrose", mp.exists and mp.value == x, inner and B.right_ideal_equal(x, s) and B.left_ideal_equal(x, s)
    )
    yield from expect(
        "group", group.exists and group.value == x, inner and B.right_ideal_equal(x, a) and B.left_ideal_equal(x, a)
    )


def _drazin_checks(ctx: SuiteContext, a: Element) -> Failures:
    E = ctx.engine
    drazin = E.drazin_inverse(a)
    x, k = drazin.value, drazin.index
    power = a ** k
    yield from expect("a^k x a = a^k", power, power * x * a)
    yield from expect("xax=x", x, x * a * x)
    yield from expect("ax=xa", a * x, x * a)
    yield from expect("index within bound", True, 1 <= k <= ctx.backend.index_bound)
    if k > 1:
        below = a ** (k - 1)
        yield from expect("index minimal", False, E.bc_inverse(a, below, below).exists)
    yield from expect("invertible flag", a.unit_inverse() is not None, drazin.invertible)
    group = E.group_inverse(a)
    if group.exists:
        yield from expect("group inverse commutes", a * group.value, group.value * a)


@suite("drazin", "a")
def drazin(ctx: SuiteContext, a: Element) -> Failures:
    """Drazin identities with minimal index; the group inverse commutes with a."""
    yield from _drazin_checks(ctx, a)


@suite("specializations", "a", needs_involution=True)
def specializations(ctx: SuiteContext, a: Element) -> Failures:
    """Penrose equations, Drazin identities with minimal index, core iff group and {1,3}."""
    E = ctx.engine
    mp = E.moore_penrose(a)
    if mp.exists:
        x = mp.value
        yield from expect("axa=a", a, a * x * a)
        yield from expect("xax=x", x, x * a * x)
        yield from expect("(ax)*=ax", a * x, (a * x).star())
        yield from expect("(xa)*=xa", x * a, (x * a).star())
    yield from _drazin_checks(ctx, a)
    core = E.core_inverse(a)
    yield from expect("core iff group and {1,3}", core.exists, E.group_exists(a) and E.one_three_inverse(a) is not None)


# =========================
# Backend agreement
# =========================

@suite("cross-backend", "a,b,c", needs_oracle=True, needs_field_matrices=True)
def cross_backend(ctx: SuiteContext, a: Element, b: Element, c: Element) -> Failures:
    """Subspace predicates and finite enumeration give identical (b,c)-inverses."""
    subspace, enumerated = ctx.engine, ctx.oracle_engine
    by_rank, by_sets = subspace.bc_inverse(a, b, c), enumerated.bc_inverse(a, b, c)
    yield from expect("existence", by_sets.exists, by_rank.exists)
    yield from expect("value", by_sets.value, by_rank.value)
    yield from expect("definitional search", ctx.truth(a, b, c), by_rank.value)
    yield from expect("b∈Rcab and c∈cabR", enumerated.bc_exists_drazin(a, b, c), subspace.bc_exists_drazin(a, b, c))
    yield from expect("left invertible", enumerated.is_left_bc_invertible(a, b, c), subspace.is_left_bc_invertible(a, b, c))
    yield from expect(
        "right invertible", enumerated.is_right_bc_invertible(a, b, c), subspace.is_right_bc_invertible(a, b, c)
    )

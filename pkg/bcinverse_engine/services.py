# bcinverse_engine/services.py
"""
Commands and their executor, shared by the CLI and the HTTP surface.

A Compute command names an engine operation from OPERATIONS and passes element
literals under the flag names a, b, c, d, u, v. Predicates on a candidate y
(is_bc_inverse and friends) read y from d.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from bcinverse_engine.backends.finite import FiniteBackend
from bcinverse_engine.config.settings import Settings, get_settings
from bcinverse_engine.engine.criteria import CriterionId
from bcinverse_engine.engine.engine import InverseEngine, engine_for
from bcinverse_engine.engine.reports import InverseReport
from bcinverse_engine.errors import InvalidCommand, OnlyOneSided
from bcinverse_engine.rings.base import Element, RingHandle
from bcinverse_engine.rings.parsing import parse_ring
from bcinverse_engine.verifier.runner import cross_backend_check, run_suites

logger = logging.getLogger(__name__)

ARGUMENT_NAMES = ("a", "b", "c", "d", "u", "v")


# =========================
# Commands
# =========================

@dataclass(frozen=True)
class Compute:
    ring: str
    op: str
    args: Dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Verify:
    ring: str
    suite: str = "all"
    seed: Optional[int] = None
    sampled: bool = False


@dataclass(frozen=True)
class Enumerate:
    ring: str


@dataclass(frozen=True)
class CrossCheck:
    p: int
    k: int
    seed: Optional[int] = None
    sampled: bool = False


Command = Union[Compute, Verify, Enumerate, CrossCheck]


@dataclass(frozen=True)
class Outcome:
    """JSON-ready payload plus whether the command succeeded as a check."""

    payload: Any
    ok: bool = True


# =========================
# Operation catalog
# =========================

Runner = Callable[..., InverseReport]


@dataclass(frozen=True)
class Operation:
    name: str
    required: Tuple[str, ...]
    run: Runner
    optional: Tuple[str, ...] = ()
    summary: str = ""

    def check_arguments(self, given: Dict[str, str]) -> None:
        missing = [k for k in self.required if k not in given]
        extra = [k for k in given if k not in self.required and k not in self.optional]
        if missing or extra:
            raise InvalidCommand(
                f"{self.name} takes --{' --'.join(self.required)}"
                + (f" [--{' --'.join(self.optional)}]" if self.optional else ""),
                {"missing": missing, "unexpected": extra},
            )


def verdict(flag: bool, *criteria: CriterionId) -> InverseReport:
    return InverseReport(exists=flag, criteria={c: flag for c in criteria})


def witness(x: Optional[Element], check: bool = True) -> InverseReport:
    if x is None:
        return InverseReport.absent()
    return InverseReport(exists=True, value=x, definitional_check=check)


def _left_family(E: InverseEngine, a: Element, b: Element, c: Element, v: Element) -> InverseReport:
    x = E.left_bc_family(a, b, c, v)
    return witness(x, E.is_left_bc_inverse(x, a, b, c))


def _right_family(E: InverseEngine, a: Element, b: Element, c: Element, u: Element) -> InverseReport:
    y = E.right_bc_family(a, b, c, u)
    return witness(y, E.is_right_bc_inverse(y, a, b, c))


def _coincide(E: InverseEngine, a: Element, b: Element, c: Element) -> InverseReport:
    try:
        x = E.left_right_coincide(a, b, c)
    except OnlyOneSided as signal:
        logger.info(f"left_right_coincide signalled: {signal.message}")
        return InverseReport(exists=False, signal="only_one_sided")
    if x is None:
        return InverseReport.absent()
    return witness(x, E.definitional_check(x, a, b, c))


def _one_three(E: InverseEngine, a: Element) -> InverseReport:
    x = E.one_three_inverse(a)
    report = witness(x, x is not None and a * x * a == a and (a * x).star() == a * x)
    return report.with_criteria({CriterionId.ONE_THREE_DECOMP: report.exists})


def _one_four(E: InverseEngine, a: Element) -> InverseReport:
    x = E.one_four_inverse(a)
    report = witness(x, x is not None and a * x * a == a and (x * a).star() == x * a)
    return report.with_criteria({CriterionId.ONE_FOUR_DECOMP: report.exists})


def _group_via_along(
    E: InverseEngine, a: Element, d: Element, b: Optional[Element] = None, c: Optional[Element] = None
) -> InverseReport:
    x = E.group_via_along(a, d, b, c)
    return witness(x, E.definitional_check(x, a, d if b is None else b, d if c is None else c))


def _group_characterizations(E: InverseEngine, a: Element) -> InverseReport:
    items = E.group_characterizations(a)
    return verdict(items["group_invertible"], CriterionId.GROUP_DECOMP)


def _catalog() -> Dict[str, Operation]:
    abc = ("a", "b", "c")
    ops = [
        Operation("bc_inverse", abc, lambda E, a, b, c: E.bc_inverse(a, b, c), summary="b(cab)⁻c with every criterion"),
        Operation("bc_exists_drazin", abc,
                  lambda E, a, b, c: verdict(E.bc_exists_drazin(a, b, c), CriterionId.DRAZIN_IDEAL)),
        Operation("bc_exists_kcc", abc,
                  lambda E, a, b, c: verdict(E.bc_exists_kcc(a, b, c), CriterionId.KCC_DECOMP)),
        Operation("bc_exists_annihilator", abc,
                  lambda E, a, b, c: verdict(E.bc_exists_annihilator(a, b, c), CriterionId.ANNIHILATOR_DECOMP)),
        Operation("bc_exists_fiveway", abc,
                  lambda E, a, b, c: verdict(E.bc_exists_fiveway(a, b, c), CriterionId.FIVE_WAY)),
        Operation("is_bc_inverse", ("d",) + abc, lambda E, d, a, b, c: verdict(E.is_bc_inverse(d, a, b, c)),
                  summary="y from --d"),
        Operation("is_hybrid_bc", ("d",) + abc,
                  lambda E, d, a, b, c: verdict(E.is_hybrid_bc(d, a, b, c), CriterionId.HYBRID_DEF), summary="y from --d"),
        Operation("is_annihilator_bc", ("d",) + abc,
                  lambda E, d, a, b, c: verdict(E.is_annihilator_bc(d, a, b, c), CriterionId.ANNIHILATOR_DEF),
                  summary="y from --d"),
        Operation("is_left_bc_inverse", ("d",) + abc, lambda E, d, a, b, c: verdict(E.is_left_bc_inverse(d, a, b, c)),
                  summary="x from --d"),
        Operation("is_right_bc_inverse", ("d",) + abc,
                  lambda E, d, a, b, c: verdict(E.is_right_bc_inverse(d, a, b, c)), summary="y from --d"),
        Operation("is_left_bc_invertible", abc, lambda E, a, b, c: verdict(E.is_left_bc_invertible(a, b, c))),
        Operation("is_right_bc_invertible", abc, lambda E, a, b, c: verdict(E.is_right_bc_invertible(a, b, c))),
        Operation("left_bc_family", abc + ("v",), _left_family),
        Operation("right_bc_family", abc + ("u",), _right_family),
        Operation("left_right_coincide", abc, _coincide),
        Operation("star_duality_check", ("d",) + abc,
                  lambda E, d, a, b, c: verdict(E.star_duality_check(d, a, b, c)), summary="y from --d"),
        Operation("generator_invariance", abc + ("u", "v"),
                  lambda E, a, b, c, u, v: verdict(E.generator_invariance(a, b, c, u, v))),
        Operation("inverse_along", ("a", "d"), lambda E, a, d: E.inverse_along(a, d)),
        Operation("group_inverse", ("a",), lambda E, a: E.group_inverse(a)),
        Operation("group_characterizations", ("a",), _group_characterizations),
        Operation("group_via_along", ("a", "d"), _group_via_along, optional=("b", "c")),
        Operation("moore_penrose", ("a",), lambda E, a: E.moore_penrose(a)),
        Operation("core_inverse", ("a",), lambda E, a: E.core_inverse(a)),
        Operation("dual_core_inverse", ("a",), lambda E, a: E.dual_core_inverse(a)),
        Operation("one_three_inverse", ("a",), _one_three),
        Operation("one_four_inverse", ("a",), _one_four),
        Operation("drazin_inverse", ("a",), lambda E, a: E.drazin_inverse(a)),
        Operation("inner_outer_bc", abc, lambda E, a, b, c: E.inner_outer_bc(a, b, c)),
        Operation("inner_reflexive_right", ("a", "b"), lambda E, a, b: E.inner_reflexive_right(a, b)),
        Operation("inner_reflexive_left", ("a", "c"), lambda E, a, c: E.inner_reflexive_left(a, c)),
    ]
    return {op.name: op for op in ops}


OPERATIONS: Dict[str, Operation] = _catalog()


def get_operation(name: str) -> Operation:
    try:
        return OPERATIONS[name]
    except KeyError:
        raise InvalidCommand(f"unknown op {name!r}", {"known": sorted(OPERATIONS)}) from None


# =========================
# Executor
# =========================

def compute(command: Compute, settings: Settings) -> InverseReport:
    op = get_operation(command.op)
    op.check_arguments(command.args)
    ring = parse_ring(command.ring)
    elements = {k: ring.parse(v) for k, v in command.args.items()}
    engine = engine_for(ring, settings)
    logger.info(f"Computing {op.name} on {ring.spec}")
    return op.run(engine, **elements)


def enumerate_ring_summary(ring: RingHandle, settings: Settings) -> Dict[str, Any]:
    """Elements, units, idempotents and regular elements with their inner-inverse counts."""
    backend = FiniteBackend(ring, settings)
    elements = backend.elements
    regular: List[Dict[str, Any]] = []
    for x in elements:
        count = len(backend.inner_inverses(x))
        if count:
            regular.append({"element": x.literal(), "inner_inverses": count})
    return {
        "ring": ring.spec,
        "cardinality": len(elements),
        "involution": ring.involution.value,
        "elements": [x.literal() for x in elements],
        "units": [x.literal() for x in elements if x.unit_inverse() is not None],
        "idempotents": [x.literal() for x in elements if x.is_idempotent()],
        "regular": regular,
    }


def execute(command: Command, settings: Optional[Settings] = None) -> Outcome:
    settings = settings or get_settings()
    if isinstance(command, Compute):
        return Outcome(compute(command, settings).to_dict())
    if isinstance(command, Verify):
        ring = parse_ring(command.ring)
        reports = run_suites(ring, command.suite, sampled=command.sampled, seed=command.seed, settings=settings)
        return Outcome([r.to_dict() for r in reports], ok=all(r.passed for r in reports))
    if isinstance(command, Enumerate):
        return Outcome(enumerate_ring_summary(parse_ring(command.ring), settings))
    if isinstance(command, CrossCheck):
        report = cross_backend_check(command.p, command.k, sampled=command.sampled, seed=command.seed, settings=settings)
        return Outcome(report.to_dict(), ok=report.passed)
    raise InvalidCommand(f"unsupported command {type(command).__name__}")

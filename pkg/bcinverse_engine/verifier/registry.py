# bcinverse_engine/verifier/registry.py
"""
Suite registry and the per-ring context checks run against.

A check is a generator over one input tuple that yields a Failure for every
identity it finds violated.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from bcinverse_engine.backends.finite import FiniteBackend
from bcinverse_engine.config.settings import Settings
from bcinverse_engine.engine.engine import InverseEngine, engine_for
from bcinverse_engine.errors import CardinalityGuard, SuiteNotApplicable, UnknownSuite
from bcinverse_engine.rings.base import Element, RingHandle
from bcinverse_engine.rings.matrix_ring import MatrixRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Failure:
    check: str
    expected: str
    got: str


def show(value: Any) -> str:
    if isinstance(value, Element):
        return value.literal()
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(show(v) for v in value) + "]"
    return str(value)


def expect(check: str, expected: Any, got: Any) -> Iterator[Failure]:
    if expected != got:
        yield Failure(check, show(expected), show(got))


class SuiteContext:
    """Engine, optional finite oracle and cached brute-force truth for one ring."""

    def __init__(self, ring: RingHandle, settings: Settings):
        self.ring = ring
        self.settings = settings
        self.engine: InverseEngine = engine_for(ring, settings)
        self.oracle: Optional[FiniteBackend] = None
        if ring.is_finite and ring.cardinality <= settings.enumeration.max_cardinality:
            self.oracle = (
                self.engine.backend if isinstance(self.engine.backend, FiniteBackend) else FiniteBackend(ring, settings)
            )
        self._oracle_engine: Optional[InverseEngine] = None
        self._truth: Dict[Tuple[Element, Element, Element], Optional[Element]] = {}

    @property
    def backend(self):
        return self.engine.backend

    @property
    def oracle_engine(self) -> InverseEngine:
        """Engine over the finite oracle; the main engine when it already enumerates."""
        assert self.oracle is not None
        if self.engine.backend is self.oracle:
            return self.engine
        if self._oracle_engine is None:
            self._oracle_engine = InverseEngine(self.oracle, self.settings)
        return self._oracle_engine

    @property
    def elements(self) -> Tuple[Element, ...]:
        assert self.oracle is not None
        return self.oracle.elements

    def truth(self, a: Element, b: Element, c: Element) -> Optional[Element]:
        """The (b,c)-inverse by definitional search when enumerable, else from the engine."""
        key = (a, b, c)
        if key not in self._truth:
            if self.oracle is not None:
                self._truth[key] = self.oracle.brute_force_bc(a, b, c)
            else:
                report = self.engine.bc_inverse(a, b, c)
                self._truth[key] = report.value if report.exists else None
        return self._truth[key]

    def inner_inverses(self, x: Element) -> List[Element]:
        if self.oracle is not None:
            return self.oracle.inner_inverses(x)
        return self.backend.inner_inverse_witnesses(x, limit=2)

    def search(self, predicate: Callable[[Element], bool]) -> List[Element]:
        assert self.oracle is not None
        return self.oracle.solutions(predicate)


Check = Callable[..., Iterable[Failure]]


@dataclass(frozen=True)
class Suite:
    id: str
    params: Tuple[str, ...]
    check: Check
    needs_oracle: bool = False
    needs_involution: bool = False
    needs_field_matrices: bool = False
    summary: str = ""

    @property
    def arity(self) -> int:
        return len(self.params)

    def inapplicable_reason(self, context: SuiteContext) -> Optional[str]:
        if self.needs_involution and not context.ring.has_involution:
            return f"{context.ring.spec} carries no involution"
        if self.needs_oracle and context.oracle is None:
            return f"{context.ring.spec} cannot be enumerated"
        if self.needs_field_matrices and not (isinstance(context.ring, MatrixRing) and context.ring.is_finite):
            return f"{context.ring.spec} is not a matrix ring over a finite field"
        return None

    def require_applicable(self, context: SuiteContext) -> None:
        reason = self.inapplicable_reason(context)
        if reason is not None:
            raise SuiteNotApplicable(f"suite {self.id} does not apply: {reason}", {"suite": self.id})

    def tuple_count(self, cardinality: int) -> int:
        return cardinality ** self.arity


SUITES: Dict[str, Suite] = {}


def suite(
    suite_id: str,
    params: str,
    *,
    needs_oracle: bool = False,
    needs_involution: bool = False,
    needs_field_matrices: bool = False,
) -> Callable[[Check], Check]:
    def register(check: Check) -> Check:
        SUITES[suite_id] = Suite(
            id=suite_id,
            params=tuple(params.split(",")),
            check=check,
            needs_oracle=needs_oracle,
            needs_involution=needs_involution,
            needs_field_matrices=needs_field_matrices,
            summary=(check.__doc__ or "").strip(),
        )
        return check

    return register


def get_suite(suite_id: str) -> Suite:
    from bcinverse_engine.verifier import suites  # noqa: F401  registers every suite

    try:
        return SUITES[suite_id]
    except KeyError:
        raise UnknownSuite(f"unknown suite {suite_id!r}", {"known": sorted(SUITES)}) from None


def all_suites() -> List[Suite]:
    from bcinverse_engine.verifier import suites  # noqa: F401

    return [SUITES[k] for k in SUITES]


def guard_tuples(suite_: Suite, context: SuiteContext) -> None:
    cardinality = context.ring.cardinality
    limit = context.settings.enumeration.max_tuples
    if cardinality is None:
        return
    count = suite_.tuple_count(cardinality)
    if count > limit:
        logger.warning(f"Refusing exhaustive {suite_.id} on {context.ring.spec}: {count} tuples > {limit}")
        raise CardinalityGuard(
            f"{suite_.id} on {context.ring.spec} needs {count} tuples, above the limit {limit}; use sampled mode",
            {"tuples": count, "limit": limit},
        )

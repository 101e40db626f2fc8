# bcinverse_engine/verifier/runner.py
"""
Sweep a suite over a ring.

Exhaustive sweeps walk the tuple space in canonical order; sampled sweeps draw
every tuple from its own RNG seeded by ``f"{seed}:{index}"``. Either way the
first coordinate (or the sample index) is split into chunks that run in-process
or on a ProcessPoolExecutor and are merged back in order, so the report does
not depend on the worker count.
"""
import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

from bcinverse_engine.config.settings import Settings, get_settings
from bcinverse_engine.errors import AlgebraError
from bcinverse_engine.rings.base import Element, RingHandle
from bcinverse_engine.rings.matrix_ring import MatrixRing
from bcinverse_engine.rings.parsing import parse_ring
from bcinverse_engine.rings.scalars import PrimeField
from bcinverse_engine.verifier.registry import (
    Failure,
    Suite,
    SuiteContext,
    all_suites,
    get_suite,
    guard_tuples,
)
from bcinverse_engine.verifier.reports import Counterexample, SuiteReport, SweepMode, Verdict

logger = logging.getLogger(__name__)

CHUNKS_PER_WORKER = 4


@dataclass
class ChunkResult:
    tuples_checked: int = 0
    failures: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)


def _tuples(
    context: SuiteContext, suite: Suite, mode: SweepMode, seed: int, start: int, stop: int
) -> Iterator[Tuple[Element, ...]]:
    if mode == SweepMode.EXHAUSTIVE:
        elements = context.elements
        for first in elements[start:stop]:
            for tail in itertools.product(elements, repeat=suite.arity - 1):
                yield (first, *tail)
        return
    bound = context.settings.verifier.entry_bound
    for index in range(start, stop):
        rng = random.Random(f"{seed}:{index}")
        yield tuple(context.ring.random_element(rng, bound) for _ in suite.params)


def _check_tuple(context: SuiteContext, suite: Suite, xs: Tuple[Element, ...]) -> List[Failure]:
    try:
        return list(suite.check(context, *xs))
    except AlgebraError as exc:
        logger.debug(f"{suite.id} raised {exc.code} at {[x.literal() for x in xs]}")
        return [Failure("raised", "no error", f"{exc.code}: {exc.message}")]
    except Exception as exc:
        logger.warning(f"{suite.id} crashed at {[x.literal() for x in xs]}: {type(exc).__name__}: {exc}")
        return [Failure("raised", "no error", f"{type(exc).__name__}: {exc}")]


def run_chunk(
    context: SuiteContext, suite: Suite, mode: SweepMode, seed: int, start: int, stop: int
) -> ChunkResult:
    limit = context.settings.verifier.max_counterexamples
    result = ChunkResult()
    for xs in _tuples(context, suite, mode, seed, start, stop):
        result.tuples_checked += 1
        found = _check_tuple(context, suite, xs)
        if not found:
            continue
        result.failures += 1
        inputs = {name: x.literal() for name, x in zip(suite.params, xs)}
        for failure in found:
            if len(result.counterexamples) < limit:
                result.counterexamples.append(
                    Counterexample(inputs=inputs, check=failure.check, expected=failure.expected, got=failure.got)
                )
    return result


def _work(
    spec: str, suite_id: str, mode: str, seed: int, start: int, stop: int, settings: Dict[str, Any]
) -> ChunkResult:
    """Process-pool entry point; rebuilds the context from picklable arguments."""
    context = SuiteContext(parse_ring(spec), Settings.model_validate(settings))
    return run_chunk(context, get_suite(suite_id), SweepMode(mode), seed, start, stop)


def _chunks(total: int, pieces: int) -> List[Tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step, extra = divmod(total, pieces)
    bounds, start = [], 0
    for i in range(pieces):
        stop = start + step + (1 if i < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def _reparses(ring: RingHandle) -> bool:
    try:
        return parse_ring(ring.spec) == ring
    except AlgebraError:
        return False


def _sweep(context: SuiteContext, suite: Suite, mode: SweepMode, seed: int) -> ChunkResult:
    settings = context.settings
    total = len(context.elements) if mode == SweepMode.EXHAUSTIVE else settings.verifier.sample_count
    workers = settings.verifier.workers
    if workers <= 1 or total <= 1 or not _reparses(context.ring):
        return run_chunk(context, suite, mode, seed, 0, total)

    bounds = _chunks(total, workers * CHUNKS_PER_WORKER)
    dump = settings.model_dump()
    logger.info(f"Splitting {suite.id} on {context.ring.spec} into {len(bounds)} chunks over {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_work, context.ring.spec, suite.id, mode.value, seed, start, stop, dump)
            for start, stop in bounds
        ]
        parts = [f.result() for f in futures]

    merged = ChunkResult()
    for part in parts:
        merged.tuples_checked += part.tuples_checked
        merged.failures += part.failures
        merged.counterexamples.extend(part.counterexamples)
    del merged.counterexamples[settings.verifier.max_counterexamples:]
    return merged


def run_suite(
    ring: RingHandle,
    suite_id: str,
    *,
    sampled: bool = False,
    seed: Optional[int] = None,
    settings: Optional[Settings] = None,
    context: Optional[SuiteContext] = None,
) -> SuiteReport:
    settings = settings or get_settings()
    suite = get_suite(suite_id)
    context = context or SuiteContext(ring, settings)
    suite.require_applicable(context)

    mode = SweepMode.SAMPLED if sampled or context.oracle is None else SweepMode.EXHAUSTIVE
    if mode == SweepMode.EXHAUSTIVE:
        guard_tuples(suite, context)
    seed = settings.verifier.default_seed if seed is None else seed

    logger.info(f"Running {suite.id} on {ring.spec} ({mode.value})")
    started = time.perf_counter()
    result = _sweep(context, suite, mode, seed)
    elapsed = time.perf_counter() - started

    verdict = Verdict.FAIL if result.counterexamples else Verdict.PASS
    log = logger.warning if verdict == Verdict.FAIL else logger.info
    log(f"{suite.id} on {ring.spec}: {verdict.value}, {result.tuples_checked} tuples, {result.failures} failing")
    return SuiteReport(
        suite=suite.id,
        ring=ring.spec,
        mode=mode,
        seed=seed if mode == SweepMode.SAMPLED else None,
        tuples_checked=result.tuples_checked,
        failures=result.failures,
        counterexamples=result.counterexamples,
        elapsed_seconds=round(elapsed, 6),
        verdict=verdict,
    )


def run_suites(
    ring: RingHandle,
    selector: str,
    *,
    sampled: bool = False,
    seed: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> List[SuiteReport]:
    """One report for ``selector``, or one per applicable suite when it is "all"."""
    settings = settings or get_settings()
    context = SuiteContext(ring, settings)
    if selector != "all":
        return [run_suite(ring, selector, sampled=sampled, seed=seed, settings=settings, context=context)]

    reports = []
    for suite in all_suites():
        reason = suite.inapplicable_reason(context)
        if reason is not None:
            logger.info(f"Skipping {suite.id}: {reason}")
            continue
        reports.append(run_suite(ring, suite.id, sampled=sampled, seed=seed, settings=settings, context=context))
    return reports


def cross_backend_check(
    p: int, k: int, *, sampled: bool = False, seed: Optional[int] = None, settings: Optional[Settings] = None
) -> SuiteReport:
    """Matrix-backend subspace predicates against finite enumeration over M_k(Z_p)."""
    ring = MatrixRing(PrimeField(p), k)
    return run_suite(ring, "cross-backend", sampled=sampled, seed=seed, settings=settings)

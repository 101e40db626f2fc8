"""
Suite registry and sweep runner
"""
import pytest

from bcinverse_engine.config.settings import Settings, VerifierSettings
from bcinverse_engine.errors import CardinalityGuard, SuiteNotApplicable, UnknownSuite
from bcinverse_engine.rings.parsing import parse_ring
from bcinverse_engine.verifier.registry import SUITES, Suite, SuiteContext, all_suites, get_suite, show
from bcinverse_engine.verifier.reports import SweepMode, Verdict
from bcinverse_engine.verifier.runner import _chunks, cross_backend_check, run_suite, run_suites


def sampling(count=25, workers=1):
    return Settings(_env_file=None, verifier=VerifierSettings(sample_count=count, workers=workers))


class TestRegistry:
    """Suite lookup"""

    def test_every_result_is_registered(self):
        ids = {s.id for s in all_suites()}
        for expected in ("eq1-uniqueness", "thm-informuast2a", "thm-coincide", "lemma-star-duality", "cross-backend"):
            assert expected in ids

    def test_arity(self):
        assert get_suite("lemma-star-duality").params == ("y", "a", "b", "c")
        assert get_suite("lemma-pirgroupa").arity == 1

    def test_summary_from_docstring(self):
        assert get_suite("lemma-abcirg").summary.startswith("A (b,c)-inverse exists")

    def test_unknown_suite(self, z6):
        with pytest.raises(UnknownSuite):
            run_suite(z6, "no-such-suite")

    def test_show(self, z6):
        assert show(True) == "true"
        assert show(None) == "none"
        assert show([z6.one, z6.zero]) == "[1, 0]"


class TestExhaustive:
    """Full sweeps over small finite rings"""

    def test_formula_sweep_z6(self, z6, settings):
        report = run_suite(z6, "thm-informuast2a", settings=settings)
        assert report.passed
        assert report.mode == SweepMode.EXHAUSTIVE
        assert report.tuples_checked == 216
        assert report.seed is None
        assert report.counterexamples == []

    def test_uniqueness_z2(self, settings):
        report = run_suite(parse_ring("zn:2"), "eq1-uniqueness", settings=settings)
        assert report.verdict == Verdict.PASS
        assert report.tuples_checked == 8

    def test_noncommutative_coincidence(self, upper_triangular, settings):
        report = run_suite(upper_triangular, "thm-coincide", settings=settings)
        assert report.passed
        assert report.tuples_checked == 512

    def test_noncommutative_formula(self, upper_triangular, settings):
        assert run_suite(upper_triangular, "thm-informuast2a", settings=settings).passed

    def test_tuple_guard(self, z6):
        tight = Settings(_env_file=None, enumeration={"max_tuples": 100})
        with pytest.raises(CardinalityGuard):
            run_suite(z6, "thm-informuast2a", settings=tight)

    def test_workers_do_not_change_the_report(self):
        z4 = parse_ring("zn:4")
        single = run_suite(z4, "thm-fiveway", settings=sampling(workers=1))
        pooled = run_suite(z4, "thm-fiveway", settings=sampling(workers=2))
        assert single.model_dump(exclude={"elapsed_seconds"}) == pooled.model_dump(exclude={"elapsed_seconds"})


class TestSampled:
    """Seeded sampling"""

    def test_infinite_rings_sample(self, m2q):
        report = run_suite(m2q, "lemma-abcirg", seed=7, settings=sampling())
        assert report.mode == SweepMode.SAMPLED
        assert report.seed == 7
        assert report.tuples_checked == 25
        assert report.passed

    def test_deterministic(self, m2q):
        first = run_suite(m2q, "thm-informuast2a", seed=11, settings=sampling())
        second = run_suite(m2q, "thm-informuast2a", seed=11, settings=sampling())
        assert first.model_dump(exclude={"elapsed_seconds"}) == second.model_dump(exclude={"elapsed_seconds"})

    def test_default_seed(self, z6):
        report = run_suite(z6, "lemma-pirgroupa", sampled=True, settings=sampling())
        assert report.seed == sampling().verifier.default_seed

    def test_sampled_on_finite_ring(self, z6):
        report = run_suite(z6, "thm-inofbcbca", sampled=True, seed=3, settings=sampling(count=40))
        assert report.mode == SweepMode.SAMPLED
        assert report.tuples_checked == 40
        assert report.passed


class TestApplicability:
    """Suites refuse rings they cannot check"""

    def test_needs_involution(self, upper_triangular, settings):
        with pytest.raises(SuiteNotApplicable):
            run_suite(upper_triangular, "lemma-star-duality", settings=settings)

    def test_needs_oracle(self, m2q, settings):
        with pytest.raises(SuiteNotApplicable):
            run_suite(m2q, "eq1-uniqueness", settings=settings)

    def test_needs_field_matrices(self, z6, settings):
        with pytest.raises(SuiteNotApplicable):
            run_suite(z6, "cross-backend", settings=settings)

    def test_all_skips_inapplicable(self, m2q):
        reports = run_suites(m2q, "all", seed=5, settings=sampling(count=5))
        ran = {r.suite for r in reports}
        assert "eq1-uniqueness" not in ran
        assert "lemma-abcirg" in ran
        assert all(r.passed for r in reports)

    def test_context_oracle(self, z6, m2q, settings):
        assert SuiteContext(z6, settings).oracle is not None
        assert SuiteContext(m2q, settings).oracle is None


class TestCrossBackend:
    """Matrix backend against enumeration"""

    def test_scalars(self, settings):
        report = cross_backend_check(3, 1, settings=settings)
        assert report.passed
        assert report.ring == "mat:zp:3:1"
        assert report.tuples_checked == 27

    def test_sampled_m2z2(self):
        assert cross_backend_check(2, 2, sampled=True, seed=1, settings=sampling(count=30)).passed

    def test_guard(self, settings):
        with pytest.raises(CardinalityGuard):
            cross_backend_check(2, 3, settings=settings)


class TestUnexpectedErrors:
    """A crashing check fails its tuple, not the sweep"""

    def test_recorded_as_counterexample(self, monkeypatch, settings):
        def crashes_on_one(ctx, a):
            if a == ctx.ring.one:
                raise ValueError("boom")
            return iter(())

        monkeypatch.setitem(SUITES, "crashes-on-one", Suite(id="crashes-on-one", params=("a",), check=crashes_on_one))
        report = run_suite(parse_ring("zn:3"), "crashes-on-one", settings=settings)
        assert report.verdict == Verdict.FAIL
        assert report.tuples_checked == 3
        assert report.failures == 1
        assert report.counterexamples[0].inputs == {"a": "1"}
        assert report.counterexamples[0].got == "ValueError: boom"


CRITERION_SUITES = (
    "eq1-uniqueness",
    "lemma-abcirg",
    "lemma-abcirl",
    "thm-anihilata",
    "thm-informuast2a",
    "thm-fiveway",
)


@pytest.mark.slow
class TestAcceptanceSweeps:
    """Exhaustive sweeps over every triple of the small reference rings"""

    @pytest.mark.parametrize("n", range(2, 13))
    def test_criteria_match_definitional_search(self, n, settings):
        ring = parse_ring(f"zn:{n}")
        context = SuiteContext(ring, settings)
        for suite_id in CRITERION_SUITES:
            report = run_suite(ring, suite_id, settings=settings, context=context)
            assert report.mode == SweepMode.EXHAUSTIVE
            assert report.tuples_checked == n ** 3
            assert report.passed, (suite_id, report.counterexamples)

    @pytest.mark.parametrize("spec", [f"zn:{n}" for n in range(2, 11)] + ["mat:zn:2:2"])
    def test_inner_outer_characterization(self, spec, settings):
        ring = parse_ring(spec)
        report = run_suite(ring, "thm-inofbcbca", settings=settings)
        assert report.mode == SweepMode.EXHAUSTIVE
        assert report.tuples_checked == ring.cardinality ** 3
        assert report.passed, report.counterexamples

    def test_cross_backend_m2z2(self, settings):
        report = cross_backend_check(2, 2, settings=settings)
        assert report.mode == SweepMode.EXHAUSTIVE
        assert report.tuples_checked == 4096
        assert report.failures == 0
        assert report.passed

    def test_drazin_on_ring_without_involution(self, upper_triangular, settings):
        report = run_suite(upper_triangular, "drazin", settings=settings)
        assert report.tuples_checked == 8
        assert report.passed, report.counterexamples


class TestChunks:
    """Work splitting"""

    def test_even_and_uneven(self):
        assert _chunks(6, 3) == [(0, 2), (2, 4), (4, 6)]
        assert _chunks(5, 2) == [(0, 3), (3, 5)]
        assert _chunks(2, 8) == [(0, 1), (1, 2)]

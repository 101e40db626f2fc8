"""
Command line surface
"""
import json
from pathlib import Path

import pytest

from bcinverse_engine.cli import build_parser, dump, main

Z2_NO_STAR = '{"order": 2, "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 1]], "zero": 0, "one": 1}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestCompute:
    """bcinverse compute"""

    def test_bc_inverse(self, capsys):
        code, payload = run(capsys, "compute", "--ring", "zn:6", "--op", "bc_inverse", "--a", "2", "--b", "4", "--c", "4")
        assert code == 0
        assert payload["exists"] is True
        assert payload["value"] == "2"
        assert payload["definitional_check"] is True

    def test_compact_output(self, capsys):
        main(["compute", "--ring", "zn:6", "--op", "group_inverse", "--a", "2"])
        out = capsys.readouterr().out
        assert out.strip().startswith('{"exists":true,"value":"2"')
        assert "\n" not in out.strip()

    def test_pretty_output(self, capsys):
        main(["compute", "--ring", "zn:6", "--op", "group_inverse", "--a", "2", "--pretty"])
        assert '\n  "exists": true' in capsys.readouterr().out

    def test_pretty_before_subcommand(self, capsys):
        main(["--pretty", "enumerate", "--ring", "zn:2"])
        assert '\n  "cardinality": 2' in capsys.readouterr().out

    def test_predicate_reads_candidate_from_d(self, capsys):
        code, payload = run(
            capsys, "compute", "--ring", "zn:6", "--op", "is_bc_inverse", "--d", "2", "--a", "2", "--b", "4", "--c", "4"
        )
        assert code == 0
        assert payload["exists"] is True
        assert payload["value"] is None

    def test_matrix_ring(self, capsys):
        code, payload = run(capsys, "compute", "--ring", "mat:q:2", "--op", "moore_penrose", "--a", "[[2,0],[0,0]]")
        assert code == 0
        assert payload["value"] == "[[1/2,0],[0,0]]"

    def test_drazin_index(self, capsys):
        _, payload = run(capsys, "compute", "--ring", "mat:q:2", "--op", "drazin_inverse", "--a", "[[0,1],[0,0]]")
        assert payload["index"] == 2
        assert payload["invertible"] is False

    def test_only_one_sided_signal(self, capsys):
        code, payload = run(
            capsys, "compute", "--ring", "mat:q:2", "--op", "left_right_coincide",
            "--a", "[[1,0],[0,1]]", "--b", "[[1,0],[0,0]]", "--c", "[[1,0],[0,1]]",
        )
        assert code == 0
        assert payload["exists"] is False
        assert payload["signal"] == "only_one_sided"

    def test_optional_arguments(self, capsys):
        code, payload = run(
            capsys, "compute", "--ring", "zn:6", "--op", "group_via_along", "--a", "2", "--d", "4", "--b", "4", "--c", "4"
        )
        assert code == 0
        assert payload["value"] == "2"


class TestErrors:
    """Usage errors exit 2, algebra errors exit 1 with a JSON error object"""

    def test_unknown_op(self):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--ring", "zn:6", "--op", "nope", "--a", "1"])
        assert exc.value.code == 2

    def test_missing_argument(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--ring", "zn:6", "--op", "bc_inverse", "--a", "2", "--b", "4"])
        assert exc.value.code == 2
        assert "bc_inverse takes" in capsys.readouterr().err

    def test_unexpected_argument(self):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--ring", "zn:6", "--op", "group_inverse", "--a", "2", "--u", "1"])
        assert exc.value.code == 2

    def test_negative_seed(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--ring", "zn:2", "--suite", "all", "--seed", "-1"])
        assert exc.value.code == 2

    def test_invalid_literal(self, capsys):
        code, payload = run(capsys, "compute", "--ring", "zn:6", "--op", "group_inverse", "--a", "9")
        assert code == 1
        assert payload["error"] == "invalid_literal"

    def test_invalid_ring(self, capsys):
        code, payload = run(capsys, "enumerate", "--ring", "zn:x")
        assert code == 1
        assert payload["error"] == "invalid_ring_spec"

    def test_no_involution(self, capsys, tmp_path):
        path = tmp_path / "z2.json"
        path.write_text(Z2_NO_STAR, encoding="utf-8")
        code, payload = run(capsys, "compute", "--ring", f"table:{path}", "--op", "moore_penrose", "--a", "1")
        assert code == 1
        assert payload["error"] == "no_involution"

    def test_mistyped_table(self, capsys, tmp_path):
        path = tmp_path / "rows.json"
        path.write_text(Z2_NO_STAR.replace("[[0, 1], [1, 0]]", "[1, 0]"), encoding="utf-8")
        code, payload = run(capsys, "enumerate", "--ring", f"table:{path}")
        assert code == 1
        assert payload["error"] == "invalid_ring_table"

    def test_infinite_enumeration(self, capsys):
        code, payload = run(capsys, "enumerate", "--ring", "mat:q:2")
        assert code == 1
        assert payload["error"] == "infinite_ring"

    def test_unknown_suite(self, capsys):
        code, payload = run(capsys, "verify", "--ring", "zn:2", "--suite", "nope")
        assert code == 1
        assert payload["error"] == "unknown_suite"
        assert "eq1-uniqueness" in payload["details"]["known"]


class TestVerify:
    """bcinverse verify and crosscheck"""

    def test_single_suite(self, capsys):
        code, payload = run(capsys, "verify", "--ring", "zn:3", "--suite", "thm-informuast2a")
        assert code == 0
        assert len(payload) == 1
        assert payload[0]["verdict"] == "pass"
        assert payload[0]["mode"] == "exhaustive"
        assert payload[0]["tuples_checked"] == 27

    def test_all_suites_z6(self, capsys):
        code, payload = run(capsys, "verify", "--ring", "zn:6", "--suite", "all")
        assert code == 0
        assert all(r["verdict"] == "pass" for r in payload)
        assert {r["suite"] for r in payload} >= {"eq1-uniqueness", "lemma-star-duality", "thm-coincide"}

    def test_sampled_with_seed(self, capsys):
        code, payload = run(capsys, "verify", "--ring", "mat:q:2", "--suite", "lemma-abcirg", "--seed", "4")
        assert code == 0
        assert payload[0]["mode"] == "sampled"
        assert payload[0]["seed"] == 4

    def test_crosscheck(self, capsys):
        code, payload = run(capsys, "crosscheck", "--p", "2", "--k", "1")
        assert code == 0
        assert payload["suite"] == "cross-backend"
        assert payload["verdict"] == "pass"

    def test_crosscheck_guard(self, capsys):
        code, payload = run(capsys, "crosscheck", "--p", "2", "--k", "3")
        assert code == 1
        assert payload["error"] == "cardinality_guard"


class TestEnumerate:
    """bcinverse enumerate"""

    def test_z6(self, capsys):
        code, payload = run(capsys, "enumerate", "--ring", "zn:6")
        assert code == 0
        assert payload["cardinality"] == 6
        assert payload["involution"] == "identity"
        assert payload["units"] == ["1", "5"]
        assert payload["idempotents"] == ["0", "1", "3", "4"]
        counts = {r["element"]: r["inner_inverses"] for r in payload["regular"]}
        assert counts == {"0": 6, "1": 1, "2": 2, "3": 3, "4": 2, "5": 1}

    def test_non_regular_elements_are_left_out(self, capsys):
        _, payload = run(capsys, "enumerate", "--ring", "zn:4")
        assert [r["element"] for r in payload["regular"]] == ["0", "1", "3"]


class TestParser:
    """Argument parsing and output helpers"""

    def test_subcommand_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_dump(self):
        assert dump({"a": [1, 2]}) == '{"a":[1,2]}'
        assert dump({"a": 1}, pretty=True) == '{\n  "a": 1\n}'


GOLDEN_DIR = Path(__file__).parent / "data" / "golden"


class TestGoldenTranscripts:
    """Documented invocations reproduce their stored JSON byte for byte"""

    @pytest.mark.parametrize(
        "argv, golden",
        [
            (
                ["compute", "--ring", "zn:6", "--op", "bc_inverse", "--a", "2", "--b", "4", "--c", "4"],
                "compute_bc_inverse_zn6.json",
            ),
            (
                ["compute", "--ring", "mat:q:2", "--op", "moore_penrose", "--a", "[[2,0],[0,0]]"],
                "compute_moore_penrose_m2q.json",
            ),
        ],
    )
    def test_compute(self, capsys, argv, golden):
        code = main(argv)
        assert code == 0
        assert capsys.readouterr().out == (GOLDEN_DIR / golden).read_text(encoding="utf-8")

    def test_verify_all(self, capsys):
        code = main(["verify", "--ring", "zn:6", "--suite", "all"])
        assert code == 0
        reports = json.loads(capsys.readouterr().out)
        for report in reports:
            del report["elapsed_seconds"]
        assert dump(reports) + "\n" == (GOLDEN_DIR / "verify_all_zn6.json").read_text(encoding="utf-8")

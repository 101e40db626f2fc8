"""
Ring spec and element literal parsing
"""
import pytest

from bcinverse_engine.errors import InvalidLiteral, InvalidRingSpec, InvalidRingTable
from bcinverse_engine.rings.base import Involution, RingKind
from bcinverse_engine.rings.parsing import format_element, parse_element, parse_ring

from tests.conftest import DATA_DIR


class TestRingSpecs:
    """Spec strings map to ring handles"""

    @pytest.mark.parametrize(
        "spec, kind, cardinality",
        [
            ("zn:6", RingKind.MODULAR, 6),
            ("mat:q:2", RingKind.MATRIX, None),
            ("mat:zp:3:2", RingKind.MATRIX, 81),
            ("mat:zn:4:2", RingKind.FINITE_MATRIX, 256),
        ],
    )
    def test_known_specs(self, spec, kind, cardinality):
        ring = parse_ring(spec)
        assert ring.kind == kind
        assert ring.cardinality == cardinality
        assert ring.spec == spec

    def test_whitespace_is_ignored(self):
        assert parse_ring("  zn:6 ") == parse_ring("zn:6")

    def test_table_spec(self):
        ring = parse_ring(f"table:{DATA_DIR / 'z2xz2.json'}")
        assert ring.cardinality == 4
        assert ring.involution == Involution.TABLE
        assert ring.one.literal() == "3"

    def test_default_involutions(self):
        assert parse_ring("zn:6").involution == Involution.IDENTITY
        assert parse_ring("mat:q:2").involution == Involution.TRANSPOSE

    @pytest.mark.parametrize("spec", ["zn:0", "zn:1", "zn:x", "mat:zp:4:2", "mat:q:0", "foo", "table:", "mat:q"])
    def test_invalid_specs(self, spec):
        with pytest.raises(InvalidRingSpec):
            parse_ring(spec)

    def test_missing_table_file(self, tmp_path):
        with pytest.raises(InvalidRingTable):
            parse_ring(f"table:{tmp_path / 'nope.json'}")

    def test_malformed_table_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(InvalidRingTable):
            parse_ring(f"table:{path}")

    def test_table_file_missing_fields(self, tmp_path):
        path = tmp_path / "partial.json"
        path.write_text('{"order": 2, "add": [[0,1],[1,0]]}', encoding="utf-8")
        with pytest.raises(InvalidRingTable):
            parse_ring(f"table:{path}")

    @pytest.mark.parametrize(
        "body",
        [
            '{"order": 2, "add": 5, "mul": [[0,0],[0,1]], "zero": 0, "one": 1}',
            '{"order": 2, "add": [1, 0], "mul": [[0,0],[0,1]], "zero": 0, "one": 1}',
            '{"order": 2, "add": [[0,1],[1,0]], "mul": 7, "zero": 0, "one": 1}',
            '{"order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1, "star": 7}',
            '{"order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "zero": false, "one": 1}',
            '{"order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "zero": 0, "one": true}',
            '{"order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1, "star": [0, true]}',
        ],
    )
    def test_mistyped_table_fields(self, tmp_path, body):
        path = tmp_path / "mistyped.json"
        path.write_text(body, encoding="utf-8")
        with pytest.raises(InvalidRingTable):
            parse_ring(f"table:{path}")

    def test_table_file_is_reread(self, tmp_path):
        path = tmp_path / "z2.json"
        base = '{"order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1'
        path.write_text(base + ', "star": [0, 1]}', encoding="utf-8")
        assert parse_ring(f"table:{path}").has_involution
        path.write_text(base + "}", encoding="utf-8")
        assert not parse_ring(f"table:{path}").has_involution


class TestElementLiterals:
    """Element literals are canonical and round-trip"""

    @pytest.mark.parametrize("literal", ["6", "-1", "x", "1.5", ""])
    def test_bad_residues(self, z6, literal):
        with pytest.raises(InvalidLiteral):
            parse_element(z6, literal)

    def test_residue_round_trip(self, z6):
        assert format_element(parse_element(z6, "4")) == "4"

    @pytest.mark.parametrize("literal", ["[[1,2,3],[4,5,6]]", "[[1,2],[3]]", "1", "[[1,2],[3,x]]", "[[1,2],[3,1/0]]"])
    def test_bad_matrices(self, m2q, literal):
        with pytest.raises(InvalidLiteral):
            parse_element(m2q, literal)

    def test_matrix_whitespace_and_reduction(self, m2q):
        x = parse_element(m2q, "[[ 2/4, -3 ], [0, 6/3]]")
        assert x.literal() == "[[1/2,-3],[0,2]]"

    def test_prime_field_entries_reduce(self):
        ring = parse_ring("mat:zp:3:2")
        assert ring.parse("[[1,2],[0,1]]").literal() == "[[1,2],[0,1]]"
        with pytest.raises(InvalidLiteral):
            ring.parse("[[4,0],[0,1]]")

    def test_table_index_range(self, gf4):
        assert gf4.parse("3").literal() == "3"
        with pytest.raises(InvalidLiteral):
            gf4.parse("4")

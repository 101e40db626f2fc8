# bcinverse_engine/rings/table.py
"""
Finite rings given by Cayley tables, loaded from JSON:

    {"order": n, "add": [[...]], "mul": [[...]], "zero": i, "one": j, "star": [...]}

Tables are validated eagerly; everything downstream trusts them.
"""
import hashlib
import json
import logging
import random
from pathlib import Path
from typing import Any, Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

from bcinverse_engine.errors import InvalidLiteral, InvalidRingTable
from bcinverse_engine.rings.base import Element, Involution, RingHandle, RingKind

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


def _is_index(v: Any, n: int) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < n


def _rows(raw: Any, name: str) -> List[Any]:
    if not isinstance(raw, (list, tuple)):
        raise InvalidRingTable(f"{name} must be a list of rows, got {type(raw).__name__}")
    return [list(r) if isinstance(r, (list, tuple)) else r for r in raw]


def _as_table(raw: Any, n: int, name: str) -> Table:
    if not isinstance(raw, list) or len(raw) != n:
        raise InvalidRingTable(f"{name} must be an {n}x{n} index matrix")
    rows = []
    for row in raw:
        if not isinstance(row, list) or len(row) != n:
            raise InvalidRingTable(f"{name} must be an {n}x{n} index matrix")
        for v in row:
            if not _is_index(v, n):
                raise InvalidRingTable(f"{name} entry {v!r} outside 0..{n - 1}")
        rows.append(tuple(row))
    return tuple(rows)


class TableRing(RingHandle):
    kind = RingKind.TABLE

    def __init__(
        self,
        add: Sequence[Sequence[int]],
        mul: Sequence[Sequence[int]],
        zero: int,
        one: int,
        star: Optional[Sequence[int]] = None,
        source: Optional[str] = None,
        validate: bool = True,
    ):
        add, mul = _rows(add, "add"), _rows(mul, "mul")
        n = len(add)
        if n < 2:
            raise InvalidRingTable("a nontrivial ring has at least two elements")
        self.order = n
        self.add_table = _as_table(add, n, "add")
        self.mul_table = _as_table(mul, n, "mul")
        for name, idx in (("zero", zero), ("one", one)):
            if not _is_index(idx, n):
                raise InvalidRingTable(f"{name} index {idx!r} outside 0..{n - 1}")
        self.zero_index = zero
        self.one_index = one
        self.star_table: Optional[Tuple[int, ...]] = None
        if star is not None:
            if not isinstance(star, (list, tuple)) or len(star) != n or not all(_is_index(v, n) for v in star):
                raise InvalidRingTable(f"star must be a length-{n} index array")
            self.star_table = tuple(star)
        self.involution = Involution.TABLE if star is not None else Involution.NONE
        self.neg_table = self._negations()
        self.source = source

        digest = hashlib.sha256(
            json.dumps([self.add_table, self.mul_table, zero, one, self.star_table]).encode()
        ).hexdigest()[:16]
        self._key = ("table", digest)
        if validate:
            violations = check_axioms(self)
            if violations:
                raise InvalidRingTable(f"ring axioms fail: {violations[0]}", {"violations": violations[:10]})

    def _negations(self) -> Tuple[int, ...]:
        neg = []
        for x in range(self.order):
            found = [y for y in range(self.order) if self.add_table[x][y] == self.zero_index]
            if len(found) != 1:
                raise InvalidRingTable(f"element {x} has {len(found)} additive inverses")
            neg.append(found[0])
        return tuple(neg)

    @property
    def key(self) -> Tuple:
        return self._key

    @property
    def spec(self) -> str:
        return f"table:{self.source}" if self.source else f"table:<{self._key[1]}>"

    @property
    def cardinality(self) -> Optional[int]:
        return self.order

    def _zero(self) -> int:
        return self.zero_index

    def _one(self) -> int:
        return self.one_index

    def _add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def _mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]

    def _neg(self, x: int) -> int:
        return self.neg_table[x]

    def _star(self, x: int) -> int:
        assert self.star_table is not None
        return self.star_table[x]

    def _unit_inverse(self, x: int) -> Optional[int]:
        for y in range(self.order):
            if self.mul_table[x][y] == self.one_index and self.mul_table[y][x] == self.one_index:
                return y
        return None

    def _payloads(self) -> Iterator[Hashable]:
        return iter(range(self.order))

    def _random_payload(self, rng: random.Random, bound: int) -> int:
        return rng.randrange(self.order)

    def validate_payload(self, payload: Any) -> bool:
        return isinstance(payload, int) and not isinstance(payload, bool) and 0 <= payload < self.order

    def format_payload(self, payload: int) -> str:
        return str(payload)

    def parse_payload(self, literal: str) -> int:
        try:
            value = int(literal)
        except ValueError:
            raise InvalidLiteral(f"not a table index: {literal!r}") from None
        if not 0 <= value < self.order:
            raise InvalidLiteral(f"index {value} out of range [0, {self.order})")
        return value

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "order": self.order,
            "add": [list(r) for r in self.add_table],
            "mul": [list(r) for r in self.mul_table],
            "zero": self.zero_index,
            "one": self.one_index,
        }
        if self.star_table is not None:
            payload["star"] = list(self.star_table)
        return payload


def check_axioms(ring: RingHandle) -> List[str]:
    """
    Exhaustively check the ring axioms and, when present, the involution
    axioms. Returns human-readable violations; empty means the ring is valid.
    """
    elems = list(ring.elements())
    zero, one = ring.zero, ring.one
    violations: List[str] = []

    if zero == one:
        violations.append("one equals zero")
    for x in elems:
        if x + zero != x or zero + x != x:
            violations.append(f"{x} + 0 != {x}")
        if x * one != x or one * x != x:
            violations.append(f"{x} * 1 != {x}")
        if x + (-x) != zero:
            violations.append(f"{x} has no additive inverse")
        if ring.has_involution and x.star().star() != x:
            violations.append(f"({x}*)* != {x}")
    for x in elems:
        for y in elems:
            if x + y != y + x:
                violations.append(f"{x} + {y} is not commutative")
            if ring.has_involution:
                if (x * y).star() != y.star() * x.star():
                    violations.append(f"({x}{y})* != {y}* {x}*")
                if (x + y).star() != x.star() + y.star():
                    violations.append(f"({x}+{y})* != {x}* + {y}*")
            xy = x * y
            for z in elems:
                if xy * z != x * (y * z):
                    violations.append(f"({x}{y}){z} != {x}({y}{z})")
                if (x + y) + z != x + (y + z):
                    violations.append(f"({x}+{y})+{z} != {x}+({y}+{z})")
                if x * (y + z) != xy + x * z:
                    violations.append(f"{x}({y}+{z}) != {x}{y}+{x}{z}")
                if (x + y) * z != x * z + y * z:
                    violations.append(f"({x}+{y}){z} != {x}{z}+{y}{z}")
            if len(violations) > 50:
                return violations
    return violations


def tabulate(ring: RingHandle, elements: Optional[Sequence[Element]] = None, source: Optional[str] = None) -> TableRing:
    """
    Cayley tables of a finite ring, or of a subring given by ``elements``
    (which must contain 0 and 1 and be closed under + and *).
    """
    elems = list(elements) if elements is not None else list(ring.elements())
    index = {e: i for i, e in enumerate(elems)}
    try:
        add = [[index[x + y] for y in elems] for x in elems]
        mul = [[index[x * y] for y in elems] for x in elems]
        star = None
        if ring.has_involution:
            star = [index[x.star()] for x in elems]
        return TableRing(add, mul, index[ring.zero], index[ring.one], star, source=source)
    except KeyError as exc:
        raise InvalidRingTable(f"element set is not closed: {exc}") from None


def load_table_ring(path: str) -> TableRing:
    file = Path(path)
    try:
        raw = json.loads(file.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InvalidRingTable(f"table file {path} does not exist") from None
    except json.JSONDecodeError as e:
        raise InvalidRingTable(f"table file {path} is not valid JSON: {e}") from None

    if not isinstance(raw, dict):
        raise InvalidRingTable("table file must hold a JSON object")
    missing = [k for k in ("order", "add", "mul", "zero", "one") if k not in raw]
    if missing:
        raise InvalidRingTable(f"table file misses fields: {', '.join(missing)}")
    if isinstance(raw["add"], list) and len(raw["add"]) != raw["order"]:
        raise InvalidRingTable(f"order {raw['order']} does not match the table size")

    ring = TableRing(raw["add"], raw["mul"], raw["zero"], raw["one"], raw.get("star"), source=path)
    logger.info(f"Loaded table ring of order {ring.order} from {path}")
    return ring

# bcinverse_engine/rings/matrix_ring.py
"""
Full matrix rings M_k(F) over the rationals or a prime field, and M_k(Z/nZ).
Payloads are row-major tuples of canonical scalars; the involution is transpose.
"""
import itertools
import random
from typing import Any, Hashable, Iterator, Optional, Tuple

from bcinverse_engine.backends.linalg import ExactMatrix, adjugate, integer_determinant, matrix_inverse
from bcinverse_engine.errors import InvalidLiteral, InvalidRingSpec
from bcinverse_engine.rings.base import Involution, RingHandle, RingKind
from bcinverse_engine.rings.scalars import Rationals, Residues, ScalarRing

Payload = Tuple[Tuple[Any, ...], ...]


def parse_matrix_literal(literal: str, field: ScalarRing, size: int) -> Payload:
    text = "".join(literal.split())
    if not (text.startswith("[[") and text.endswith("]]")):
        raise InvalidLiteral(f"matrix literals look like [[1,2],[3,4]], got {literal!r}")
    rows = text[2:-2].split("],[")
    if len(rows) != size:
        raise InvalidLiteral(f"expected {size} rows, got {len(rows)}")
    parsed = []
    for row in rows:
        tokens = row.split(",")
        if len(tokens) != size:
            raise InvalidLiteral(f"expected {size} entries per row, got {len(tokens)}")
        parsed.append(tuple(field.parse(tok) for tok in tokens))
    return tuple(parsed)


class _SquareMatrixRing(RingHandle):
    scalars: ScalarRing
    size: int

    def _setup(self, scalars: ScalarRing, size: int, involution: Involution) -> None:
        if size < 1:
            raise InvalidRingSpec("matrix size must be positive")
        if involution not in (Involution.TRANSPOSE, Involution.NONE):
            raise InvalidRingSpec(f"matrix rings support transpose only, got {involution.value}")
        self.scalars = scalars
        self.size = size
        self.involution = involution
        self._zero_payload = ExactMatrix.zeros(scalars, size, size).entries
        self._one_payload = ExactMatrix.identity(scalars, size).entries

    def to_matrix(self, payload: Payload) -> ExactMatrix:
        return ExactMatrix(self.scalars, payload)

    def _zero(self) -> Payload:
        return self._zero_payload

    def _one(self) -> Payload:
        return self._one_payload

    def _add(self, x: Payload, y: Payload) -> Payload:
        return (self.to_matrix(x) + self.to_matrix(y)).entries

    def _mul(self, x: Payload, y: Payload) -> Payload:
        return (self.to_matrix(x) @ self.to_matrix(y)).entries

    def _neg(self, x: Payload) -> Payload:
        return (-self.to_matrix(x)).entries

    def _star(self, x: Payload) -> Payload:
        return tuple(zip(*x))

    def _payloads(self) -> Iterator[Hashable]:
        k = self.size
        for flat in itertools.product(list(self.scalars.elements()), repeat=k * k):
            yield tuple(tuple(flat[i * k:(i + 1) * k]) for i in range(k))

    def validate_payload(self, payload: Any) -> bool:
        if not isinstance(payload, tuple) or len(payload) != self.size:
            return False
        for row in payload:
            if not isinstance(row, tuple) or len(row) != self.size:
                return False
            if any(self.scalars.normalize(x) != x or type(x) is not type(self.scalars.zero) for x in row):
                return False
        return True

    def format_payload(self, payload: Payload) -> str:
        return self.to_matrix(payload).format()

    def parse_payload(self, literal: str) -> Payload:
        return parse_matrix_literal(literal, self.scalars, self.size)


class MatrixRing(_SquareMatrixRing):
    """M_k(F) with F the rationals or a prime field."""

    kind = RingKind.MATRIX

    def __init__(self, base: ScalarRing, size: int, involution: Involution = Involution.TRANSPOSE):
        if not base.is_field:
            raise InvalidRingSpec("MatrixRing needs a field; use FiniteMatrixRing for Z/nZ entries")
        self._setup(base, size, involution)
        self._key = ("mat", base.key, size, involution.value)

    @property
    def base(self) -> ScalarRing:
        return self.scalars

    @property
    def key(self) -> Tuple:
        return self._key

    @property
    def spec(self) -> str:
        if isinstance(self.scalars, Rationals):
            return f"mat:q:{self.size}"
        return f"mat:zp:{self.scalars.modulus}:{self.size}"

    @property
    def cardinality(self) -> Optional[int]:
        if self.scalars.cardinality is None:
            return None
        return self.scalars.cardinality ** (self.size * self.size)

    def _unit_inverse(self, x: Payload) -> Optional[Payload]:
        inv = matrix_inverse(self.to_matrix(x))
        return None if inv is None else inv.entries

    def _random_payload(self, rng: random.Random, bound: int) -> Payload:
        return random_square_matrix(self.scalars, self.size, rng, bound).entries


class FiniteMatrixRing(_SquareMatrixRing):
    """M_k(Z/nZ). Only the finite backend handles these; units go through the adjugate."""

    kind = RingKind.FINITE_MATRIX

    def __init__(self, modulus: int, size: int, involution: Involution = Involution.TRANSPOSE):
        self._setup(Residues(modulus), size, involution)
        self.modulus = modulus
        self._key = ("matzn", modulus, size, involution.value)

    @property
    def key(self) -> Tuple:
        return self._key

    @property
    def spec(self) -> str:
        return f"mat:zn:{self.modulus}:{self.size}"

    @property
    def cardinality(self) -> Optional[int]:
        return self.modulus ** (self.size * self.size)

    def _unit_inverse(self, x: Payload) -> Optional[Payload]:
        det_inv = self.scalars.unit_inverse(integer_determinant(x) % self.modulus)
        if det_inv is None:
            return None
        adj = adjugate(x)
        return ExactMatrix.from_rows(self.scalars, ((det_inv * v for v in row) for row in adj)).entries

    def _random_payload(self, rng: random.Random, bound: int) -> Payload:
        return random_square_matrix(self.scalars, self.size, rng, bound).entries


def random_square_matrix(field: ScalarRing, size: int, rng: random.Random, bound: int) -> ExactMatrix:
    """
    Draw a matrix that is dense, low rank or nilpotent-plus-low-rank with equal
    odds, so that singular and non-group-invertible samples are common.
    """
    def dense(rows: int, cols: int) -> ExactMatrix:
        return ExactMatrix.from_rows(
            field, ((field.random(rng, bound) for _ in range(cols)) for _ in range(rows))
        )

    strategy = rng.choice(("dense", "low_rank", "nilpotent"))
    if strategy == "dense":
        return dense(size, size)
    r = rng.randint(1, max(1, size - 1))
    low = dense(size, r) @ dense(r, size)
    if strategy == "low_rank":
        return low
    strict = ExactMatrix.from_rows(
        field,
        ((field.random(rng, bound) if j > i else 0 for j in range(size)) for i in range(size)),
    )
    return strict if rng.random() < 0.5 else strict + low

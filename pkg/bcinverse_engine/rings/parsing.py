# bcinverse_engine/rings/parsing.py
"""
Ring spec strings and element literals:

    zn:<n> | mat:q:<k> | mat:zp:<p>:<k> | mat:zn:<n>:<k> | table:<path>
"""
from functools import lru_cache

from bcinverse_engine.errors import InvalidRingSpec
from bcinverse_engine.rings.base import Element, RingHandle
from bcinverse_engine.rings.matrix_ring import FiniteMatrixRing, MatrixRing
from bcinverse_engine.rings.modular import ModularRing
from bcinverse_engine.rings.scalars import PrimeField, Rationals
from bcinverse_engine.rings.table import load_table_ring


def _positive(token: str, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InvalidRingSpec(f"{what} must be an integer, got {token!r}") from None
    if value < 1:
        raise InvalidRingSpec(f"{what} must be positive, got {value}")
    return value


def parse_ring(spec: str) -> RingHandle:
    """Table specs are reread on every call; the algebraic kinds are cached."""
    spec = spec.strip()
    if spec.startswith("table:"):
        path = spec[len("table:"):]
        if not path:
            raise InvalidRingSpec("table: needs a path")
        return load_table_ring(path)
    return _parse_builtin(spec)


@lru_cache(maxsize=64)
def _parse_builtin(spec: str) -> RingHandle:
    parts = spec.split(":")
    match parts:
        case ["zn", n]:
            return ModularRing(_positive(n, "modulus"))
        case ["mat", "q", k]:
            return MatrixRing(Rationals(), _positive(k, "size"))
        case ["mat", "zp", p, k]:
            return MatrixRing(PrimeField(_positive(p, "prime")), _positive(k, "size"))
        case ["mat", "zn", n, k]:
            return FiniteMatrixRing(_positive(n, "modulus"), _positive(k, "size"))
    raise InvalidRingSpec(
        f"unknown ring spec {spec!r}; expected zn:<n>, mat:q:<k>, mat:zp:<p>:<k>, mat:zn:<n>:<k> or table:<path>"
    )


def parse_element(ring: RingHandle, literal: str) -> Element:
    return ring.parse(literal)


def format_element(x: Element) -> str:
    return x.literal()

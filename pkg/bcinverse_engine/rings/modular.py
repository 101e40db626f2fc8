# bcinverse_engine/rings/modular.py
import math
import random
from typing import Any, Hashable, Iterator, Optional, Tuple

from bcinverse_engine.errors import InvalidLiteral, InvalidRingSpec
from bcinverse_engine.rings.base import Involution, RingHandle, RingKind


class ModularRing(RingHandle):
    """Z/nZ. Commutative, so the identity map is an involution."""

    kind = RingKind.MODULAR

    def __init__(self, n: int, involution: Involution = Involution.IDENTITY):
        if n < 2:
            raise InvalidRingSpec(f"zn:{n} is not a nontrivial ring")
        if involution not in (Involution.IDENTITY, Involution.NONE):
            raise InvalidRingSpec(f"Z/nZ supports the identity involution only, got {involution.value}")
        self.n = n
        self.involution = involution
        self._key = ("zn", n, involution.value)

    @property
    def key(self) -> Tuple:
        return self._key

    @property
    def spec(self) -> str:
        return f"zn:{self.n}"

    @property
    def cardinality(self) -> Optional[int]:
        return self.n

    def _zero(self) -> int:
        return 0

    def _one(self) -> int:
        return 1

    def _add(self, x: int, y: int) -> int:
        return (x + y) % self.n

    def _mul(self, x: int, y: int) -> int:
        return (x * y) % self.n

    def _neg(self, x: int) -> int:
        return -x % self.n

    def _star(self, x: int) -> int:
        return x

    def _unit_inverse(self, x: int) -> Optional[int]:
        if math.gcd(x, self.n) != 1:
            return None
        return pow(x, -1, self.n)

    def _payloads(self) -> Iterator[Hashable]:
        return iter(range(self.n))

    def _random_payload(self, rng: random.Random, bound: int) -> int:
        return rng.randrange(self.n)

    def validate_payload(self, payload: Any) -> bool:
        return isinstance(payload, int) and not isinstance(payload, bool) and 0 <= payload < self.n

    def format_payload(self, payload: int) -> str:
        return str(payload)

    def parse_payload(self, literal: str) -> int:
        try:
            value = int(literal)
        except ValueError:
            raise InvalidLiteral(f"not a residue literal: {literal!r}") from None
        if not 0 <= value < self.n:
            raise InvalidLiteral(f"residue {value} out of range [0, {self.n})")
        return value

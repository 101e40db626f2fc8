# bcinverse_engine/rings/base.py
"""
Ring abstraction: a unital ring handle with an optional involution, and
immutable elements carrying a canonical payload.
"""
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Hashable, Iterator, Optional, Tuple

from bcinverse_engine.errors import InfiniteRing, InvalidLiteral, MixedRings, NoInvolution


class RingKind(str, Enum):
    MODULAR = "modular"
    MATRIX = "matrix"
    FINITE_MATRIX = "finite_matrix"
    TABLE = "table"


class Involution(str, Enum):
    IDENTITY = "identity"
    TRANSPOSE = "transpose"
    TABLE = "table"
    NONE = "none"


class RingHandle(ABC):
    """A concrete unital ring. Handles are immutable after construction."""

    kind: RingKind
    involution: Involution = Involution.NONE

    @property
    @abstractmethod
    def key(self) -> Tuple:
        """Structural identity; elements of handles with equal keys mix freely."""

    @property
    @abstractmethod
    def spec(self) -> str:
        """The ring spec string this handle was (or could be) parsed from."""

    @property
    @abstractmethod
    def cardinality(self) -> Optional[int]:
        """Number of elements, None for infinite rings."""

    @property
    def is_finite(self) -> bool:
        return self.cardinality is not None

    @property
    def has_involution(self) -> bool:
        return self.involution != Involution.NONE

    # payload-level arithmetic, implemented per kind

    @abstractmethod
    def _zero(self) -> Hashable:
        ...

    @abstractmethod
    def _one(self) -> Hashable:
        ...

    @abstractmethod
    def _add(self, x: Any, y: Any) -> Hashable:
        ...

    @abstractmethod
    def _mul(self, x: Any, y: Any) -> Hashable:
        ...

    @abstractmethod
    def _neg(self, x: Any) -> Hashable:
        ...

    @abstractmethod
    def _star(self, x: Any) -> Hashable:
        ...

    @abstractmethod
    def _unit_inverse(self, x: Any) -> Optional[Hashable]:
        ...

    @abstractmethod
    def _payloads(self) -> Iterator[Hashable]:
        ...

    @abstractmethod
    def _random_payload(self, rng: random.Random, bound: int) -> Hashable:
        ...

    @abstractmethod
    def validate_payload(self, payload: Any) -> bool:
        ...

    @abstractmethod
    def format_payload(self, payload: Any) -> str:
        ...

    @abstractmethod
    def parse_payload(self, literal: str) -> Hashable:
        ...

    def sort_key(self, payload: Any) -> Any:
        return payload

    # element constructors

    def element(self, payload: Any) -> "Element":
        if not self.validate_payload(payload):
            raise InvalidLiteral(f"payload {payload!r} is not valid in {self.spec}")
        return Element(self, payload)

    @property
    def zero(self) -> "Element":
        return Element(self, self._zero())

    @property
    def one(self) -> "Element":
        return Element(self, self._one())

    def elements(self) -> Iterator["Element"]:
        """Canonical enumeration; every element exactly once."""
        if not self.is_finite:
            raise InfiniteRing(f"{self.spec} is infinite and cannot be enumerated")
        for payload in self._payloads():
            yield Element(self, payload)

    def random_element(self, rng: random.Random, bound: int = 3) -> "Element":
        return Element(self, self._random_payload(rng, bound))

    def parse(self, literal: str) -> "Element":
        return Element(self, self.parse_payload(literal.strip()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingHandle) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec!r})"


@dataclass(frozen=True)
class Element:
    ring: RingHandle
    payload: Hashable

    def _same(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if self.ring != other.ring:
            raise MixedRings(f"{self.ring.spec} and {other.ring.spec} elements cannot be combined")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.ring, self.ring._add(self.payload, other.payload))

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.ring, self.ring._add(self.payload, self.ring._neg(other.payload)))

    def __mul__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.ring, self.ring._mul(self.payload, other.payload))

    def __neg__(self) -> "Element":
        return Element(self.ring, self.ring._neg(self.payload))

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise ValueError("negative exponents are not supported")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def star(self) -> "Element":
        if not self.ring.has_involution:
            raise NoInvolution(f"{self.ring.spec} carries no involution")
        return Element(self.ring, self.ring._star(self.payload))

    def is_zero(self) -> bool:
        return self.payload == self.ring._zero()

    def is_one(self) -> bool:
        return self.payload == self.ring._one()

    def is_idempotent(self) -> bool:
        return self * self == self

    def unit_inverse(self) -> Optional["Element"]:
        inv = self.ring._unit_inverse(self.payload)
        return None if inv is None else Element(self.ring, inv)

    def literal(self) -> str:
        return self.ring.format_payload(self.payload)

    def sort_key(self) -> Any:
        return self.ring.sort_key(self.payload)

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"Element({self.ring.spec}, {self.literal()})"


# =========================
# Free-function arithmetic
# =========================

def add(x: Element, y: Element) -> Element:
    return x + y


def sub(x: Element, y: Element) -> Element:
    return x - y


def mul(x: Element, y: Element) -> Element:
    return x * y


def neg(x: Element) -> Element:
    return -x


def star(x: Element) -> Element:
    return x.star()


def power(x: Element, k: int) -> Element:
    return x ** k


def is_zero(x: Element) -> bool:
    return x.is_zero()


def is_one(x: Element) -> bool:
    return x.is_one()


def is_unit(x: Element) -> Optional[Element]:
    return x.unit_inverse()


def is_idempotent(x: Element) -> bool:
    return x.is_idempotent()


def product(*factors: Element) -> Element:
    if not factors:
        raise ValueError("empty product needs a ring")
    result = factors[0]
    for f in factors[1:]:
        result = result * f
    return result

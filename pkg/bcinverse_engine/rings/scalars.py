# bcinverse_engine/rings/scalars.py
"""
Exact scalar arithmetic for matrix entries: the rationals, prime fields and
residue rings Z/nZ. No floating point anywhere.
"""
import math
import random
import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterator, Optional, Tuple, Union

from bcinverse_engine.errors import InvalidLiteral, InvalidRingSpec

Scalar = Union[int, Fraction]

_INTEGER = re.compile(r"-?\d+")
_RATIONAL = re.compile(r"-?\d+(?:/\d+)?")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


class ScalarRing(ABC):
    """Commutative coefficient ring for matrices."""

    is_field: bool = False

    @property
    @abstractmethod
    def key(self) -> Tuple:
        """Structural identity, used for equality and hashing."""

    @property
    @abstractmethod
    def cardinality(self) -> Optional[int]:
        ...

    @property
    def zero(self) -> Scalar:
        return self.normalize(0)

    @property
    def one(self) -> Scalar:
        return self.normalize(1)

    @abstractmethod
    def normalize(self, value: Scalar) -> Scalar:
        ...

    def add(self, x: Scalar, y: Scalar) -> Scalar:
        return self.normalize(x + y)

    def sub(self, x: Scalar, y: Scalar) -> Scalar:
        return self.normalize(x - y)

    def mul(self, x: Scalar, y: Scalar) -> Scalar:
        return self.normalize(x * y)

    def neg(self, x: Scalar) -> Scalar:
        return self.normalize(-x)

    def is_zero(self, x: Scalar) -> bool:
        return x == 0

    def inv(self, x: Scalar) -> Scalar:
        raise NotImplementedError(f"{self} is not a field")

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return self.mul(x, self.inv(y))

    @abstractmethod
    def elements(self) -> Iterator[Scalar]:
        ...

    @abstractmethod
    def parse(self, token: str) -> Scalar:
        ...

    def format(self, x: Scalar) -> str:
        return str(x)

    @abstractmethod
    def random(self, rng: random.Random, bound: int) -> Scalar:
        ...

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScalarRing) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)


class Rationals(ScalarRing):
    is_field = True

    @property
    def key(self) -> Tuple:
        return ("Q",)

    @property
    def cardinality(self) -> Optional[int]:
        return None

    def normalize(self, value: Scalar) -> Fraction:
        # Fraction keeps the reduced form with a positive denominator
        return Fraction(value)

    def inv(self, x: Scalar) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def elements(self) -> Iterator[Scalar]:
        raise InvalidRingSpec("the rationals cannot be enumerated")

    def parse(self, token: str) -> Fraction:
        if not _RATIONAL.fullmatch(token):
            raise InvalidLiteral(f"not a rational entry: {token!r}")
        num, _, den = token.partition("/")
        if den and int(den) == 0:
            raise InvalidLiteral(f"zero denominator in {token!r}")
        return Fraction(int(num), int(den) if den else 1)

    def format(self, x: Scalar) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def random(self, rng: random.Random, bound: int) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def __repr__(self) -> str:
        return "Rationals()"


class Residues(ScalarRing):
    """Z/nZ with canonical residues in [0, n)."""

    def __init__(self, modulus: int):
        if modulus < 2:
            raise InvalidRingSpec(f"modulus must be at least 2, got {modulus}")
        self.modulus = modulus

    @property
    def key(self) -> Tuple:
        return ("Zn", self.modulus)

    @property
    def cardinality(self) -> Optional[int]:
        return self.modulus

    def normalize(self, value: Scalar) -> int:
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, self.modulus)) % self.modulus
        return value % self.modulus

    def unit_inverse(self, x: int) -> Optional[int]:
        if math.gcd(x, self.modulus) != 1:
            return None
        return pow(x, -1, self.modulus)

    def elements(self) -> Iterator[int]:
        return iter(range(self.modulus))

    def parse(self, token: str) -> int:
        if not _INTEGER.fullmatch(token):
            raise InvalidLiteral(f"not an integer entry: {token!r}")
        value = int(token)
        if not 0 <= value < self.modulus:
            raise InvalidLiteral(f"residue {value} out of range [0, {self.modulus})")
        return value

    def random(self, rng: random.Random, bound: int) -> int:
        return rng.randrange(self.modulus)

    def __repr__(self) -> str:
        return f"Residues({self.modulus})"


class PrimeField(Residues):
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise InvalidRingSpec(f"{p} is not prime")
        super().__init__(p)

    @property
    def key(self) -> Tuple:
        return ("Zp", self.modulus)

    def inv(self, x: Scalar) -> int:
        x = self.normalize(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.modulus)

    def __repr__(self) -> str:
        return f"PrimeField({self.modulus})"

# bcinverse_engine/errors.py
"""
Exception hierarchy shared by every layer.

Each error carries a stable ``code`` that the CLI and the HTTP surface put in
their JSON error objects.
"""
from typing import Any, Dict, Optional, TypeVar

T = TypeVar("T")


class AlgebraError(Exception):
    code = "algebra_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"error": self.code, "message": self.message}
        if self.details:
            payload["details"] = self.details
        return payload


# =========================
# ring-core
# =========================

class MixedRings(AlgebraError):
    code = "mixed_rings"


class NoInvolution(AlgebraError):
    code = "no_involution"


class InvalidRingSpec(AlgebraError):
    code = "invalid_ring_spec"


class InvalidLiteral(AlgebraError):
    code = "invalid_literal"


class InvalidRingTable(AlgebraError):
    code = "invalid_ring_table"


# =========================
# backends
# =========================

class InfiniteRing(AlgebraError):
    code = "infinite_ring"


class CardinalityGuard(AlgebraError):
    code = "cardinality_guard"


class UniquenessViolation(AlgebraError):
    code = "uniqueness_violation"


class NotAdditivelyClosed(AlgebraError):
    code = "not_additively_closed"


class DimensionMismatch(AlgebraError):
    code = "dimension_mismatch"


class UnsupportedBackend(AlgebraError):
    code = "unsupported_backend"


# =========================
# engine
# =========================

class NotRegular(AlgebraError):
    code = "not_regular"


class CriteriaDisagreement(AlgebraError):
    code = "criteria_disagreement"


class NotOneSidedInvertible(AlgebraError):
    code = "not_one_sided_invertible"


class OnlyOneSided(AlgebraError):
    """Exactly one of the one-sided (b,c)-inverses exists. A signal, not a failure."""

    code = "only_one_sided"

    def __init__(self, side: str):
        super().__init__(f"only the {side} (b,c)-inverse exists", {"side": side})
        self.side = side


class HypothesisFailed(AlgebraError):
    code = "hypothesis_failed"


class IndexBoundExceeded(AlgebraError):
    code = "index_bound_exceeded"


class AssertionFailed(AlgebraError):
    code = "assertion_failed"


# =========================
# verifier
# =========================

class UnknownSuite(AlgebraError):
    code = "unknown_suite"


class SuiteNotApplicable(AlgebraError):
    code = "suite_not_applicable"


# =========================
# commands
# =========================

class InvalidCommand(AlgebraError):
    """Unknown op or wrong argument set; a usage error, not a domain error."""

    code = "invalid_command"


def ensure(condition: bool, message: str, **details: Any) -> None:
    """Raise AssertionFailed unless an identity the theory guarantees holds."""
    if not condition:
        raise AssertionFailed(message, details or None)


def present(value: Optional[T], message: str, **details: Any) -> T:
    """``value`` itself, or AssertionFailed when it is missing."""
    if value is None:
        raise AssertionFailed(message, details or None)
    return value

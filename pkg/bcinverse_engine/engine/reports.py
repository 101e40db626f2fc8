# bcinverse_engine/engine/reports.py
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional

from bcinverse_engine.engine.criteria import CriterionId
from bcinverse_engine.errors import ensure
from bcinverse_engine.rings.base import Element


@dataclass(frozen=True)
class InverseReport:
    exists: bool
    value: Optional[Element] = None
    index: Optional[int] = None
    criteria: Dict[CriterionId, bool] = field(default_factory=dict)
    inner_inverse_used: Optional[Element] = None
    definitional_check: bool = False
    invertible: Optional[bool] = None
    signal: Optional[str] = None

    def __post_init__(self) -> None:
        # verdict-only reports (predicates, existence tests) carry no value
        if self.value is not None:
            ensure(self.exists, "absent inverse carrying a value")
            ensure(self.definitional_check, "inverse failed its definitional check")
        for criterion, verdict in self.criteria.items():
            ensure(
                verdict == self.exists,
                f"{criterion.value} disagrees with the existence verdict",
                criterion=criterion.value,
            )

    @classmethod
    def absent(cls, criteria: Optional[Dict[CriterionId, bool]] = None) -> "InverseReport":
        return cls(exists=False, criteria=dict(criteria or {}))

    def with_criteria(self, extra: Dict[CriterionId, bool]) -> "InverseReport":
        return replace(self, criteria={**self.criteria, **extra})

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "exists": self.exists,
            "value": None if self.value is None else self.value.literal(),
            "index": self.index,
            "criteria": {k.value: v for k, v in self.criteria.items()},
            "inner_inverse_used": None if self.inner_inverse_used is None else self.inner_inverse_used.literal(),
            "definitional_check": self.definitional_check,
        }
        if self.invertible is not None:
            payload["invertible"] = self.invertible
        if self.signal is not None:
            payload["signal"] = self.signal
        return payload

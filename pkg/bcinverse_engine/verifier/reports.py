# bcinverse_engine/verifier/reports.py
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class SweepMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class Counterexample(BaseModel):
    inputs: Dict[str, str]
    check: str
    expected: str
    got: str


class SuiteReport(BaseModel):
    suite: str
    ring: str
    mode: SweepMode
    seed: Optional[int] = None
    tuples_checked: int = Field(0, ge=0)
    failures: int = Field(0, ge=0)
    counterexamples: List[Counterexample] = Field(default_factory=list)
    elapsed_seconds: float = 0.0
    verdict: Verdict = Verdict.PASS

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_dict(self) -> dict:
        return self.model_dump(mode="json")

# bcinverse_engine/api/schemas.py

from typing import Dict, Optional

from pydantic import BaseModel, Field

from bcinverse_engine.services import ARGUMENT_NAMES, Compute, CrossCheck, Enumerate, Verify


# ---------
# Compute
# ---------
class ComputeRequest(BaseModel):
    ring: str = Field(..., min_length=1, examples=["zn:6"])
    op: str = Field(..., min_length=1, examples=["bc_inverse"])
    a: Optional[str] = None
    b: Optional[str] = None
    c: Optional[str] = None
    d: Optional[str] = Field(None, description="Also the candidate y for predicate ops")
    u: Optional[str] = None
    v: Optional[str] = None

    def to_command(self) -> Compute:
        given: Dict[str, str] = {}
        for name in ARGUMENT_NAMES:
            value = getattr(self, name)
            if value is not None:
                given[name] = value
        return Compute(ring=self.ring, op=self.op, args=given)


# ---------
# Verify
# ---------
class VerifyRequest(BaseModel):
    ring: str = Field(..., min_length=1)
    suite: str = Field("all", min_length=1)
    seed: Optional[int] = Field(None, ge=0)
    sampled: bool = False

    def to_command(self) -> Verify:
        return Verify(ring=self.ring, suite=self.suite, seed=self.seed, sampled=self.sampled)


# ---------
# Enumerate
# ---------
class EnumerateRequest(BaseModel):
    ring: str = Field(..., min_length=1)

    def to_command(self) -> Enumerate:
        return Enumerate(ring=self.ring)


# ---------
# Cross-check
# ---------
class CrossCheckRequest(BaseModel):
    p: int = Field(..., ge=2)
    k: int = Field(..., ge=1)
    seed: Optional[int] = Field(None, ge=0)
    sampled: bool = False

    def to_command(self) -> CrossCheck:
        return CrossCheck(p=self.p, k=self.k, seed=self.seed, sampled=self.sampled)

from __future__ import annotations

from typing import List, Literal

from pydantic import BaseModel, Field

from app.schemas.common import BigInt


class Mismatch(BaseModel):
    """First exponent at which the two sides differ."""

    exponent: int = Field(description="Exponent of the first differing coefficient")
    lhs: BigInt = Field(description="Left-hand coefficient")
    rhs: BigInt = Field(description="Right-hand coefficient")


class IdentityReport(BaseModel):
    """Exact comparison of both sides of a registered identity."""

    name: str = Field(description="Registry name")
    reference: str = Field(description="The identity in readable form")
    order: int = Field(description="Truncation order in the identity's own variable")
    substitution: int = Field(default=1, description="r in q = t**r for identities written in t")
    status: Literal["pass", "fail"] = Field(description="Verification status")
    mismatch: Mismatch | None = Field(default=None, description="First mismatch, if any")
    members: List[IdentityReport] = Field(default_factory=list, description="Reports of the members of a group")


IdentityReport.model_rebuild()


class IdentityInfo(BaseModel):
    """Registry listing entry."""

    name: str
    reference: str
    default_order: int
    substitution: int = 1
    members: List[str] = Field(default_factory=list)


class SuiteEntry(BaseModel):
    """One named acceptance check."""

    claim: str = Field(description="What is being checked")
    status: Literal["pass", "fail"] = Field(description="Outcome")
    detail: str = Field(default="", description="Counts, mismatches or timings")


class SuiteReport(BaseModel):
    """Aggregate of a batch of checks."""

    status: Literal["pass", "fail"]
    passed: int
    failed: int
    entries: List[SuiteEntry] = Field(default_factory=list)
    identities: List[IdentityReport] = Field(default_factory=list)

from typing import Dict, List

from pydantic import BaseModel, Field


class FamilyInfo(BaseModel):
    """A family in its canonical compact form."""

    name: str = Field(description="Family name as given")
    spec: str = Field(description="Constraints, tail bound and staircase, e.g. d1:1,d2:0;tail=1;stair=1:0")


class PartitionsResponse(BaseModel):
    """Partitions of one weight, optionally of one length."""

    family: FamilyInfo
    weight: int = Field(description="Weight of every listed partition")
    length: int | None = Field(default=None, description="Length filter, if any")
    count: int = Field(description="Number of partitions")
    by_length: Dict[int, int] = Field(default_factory=dict, description="Counts per length")
    partitions: List[List[int]] = Field(default_factory=list, description="Partitions in lexicographic order")
    staircase: List[List[int]] | None = Field(default=None, description="Images under the staircase map, same order")


class MaxLengthResponse(BaseModel):
    """Largest length realized at a given weight."""

    family: FamilyInfo
    weight: int
    max_length: int

from typing import List

from pydantic import BaseModel, Field

from app.schemas.common import BigInt


class SliceResponse(BaseModel):
    """Coefficients of J(q) along the progression r n + s."""

    r: int = Field(description="Progression step")
    s: int = Field(description="Progression offset")
    order: int = Field(description="Number of coefficients returned")
    coefficients: List[BigInt] = Field(description="j(r n + s) for n = 0 .. order - 1")

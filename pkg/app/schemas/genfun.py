from typing import List, Literal

from pydantic import BaseModel, Field

from app.schemas.common import BigInt


class BiSeriesResponse(BaseModel):
    """Bivariate series as rows of q-coefficients, one row per power of z."""

    family: str = Field(description="Family, system or multi-sum name")
    source: Literal["closed_form", "enumeration", "qdiff", "multisum"] = Field(description="How the series was computed")
    staircase: bool = Field(default=False, description="Whether the staircase weight shift was applied")
    z_max: int = Field(description="Largest tracked power of z")
    q_order: int = Field(description="Number of q-coefficients per row")
    rows: List[List[BigInt]] = Field(description="rows[m][n] is the coefficient of z^m q^n")

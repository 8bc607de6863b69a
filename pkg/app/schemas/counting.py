from typing import Dict, List, Literal

from pydantic import BaseModel, Field

from app.schemas.common import BigInt


class Counterexample(BaseModel):
    """First index at which a claimed divisibility fails."""

    n: int = Field(description="Progression index n")
    argument: int = Field(description="The argument r*n + s")
    value: BigInt = Field(description="j(r*n + s)")


class CongruencePrediction(BaseModel):
    """Predicted power-of-two divisor of j along an arithmetic progression."""

    r: int = Field(description="Progression step")
    s: int = Field(description="Progression offset, 1 <= s < r")
    p_prime: int = Field(description="Least number of squares over the inspected progression terms")
    c: int = Field(description="Ordered p_prime-tuples of nonzero square residues mod r summing to s mod r")
    upgraded: bool = Field(description="No (p_prime + 1)-tuple of nonzero square residues reaches s mod r")
    factor: int = Field(description="The factor a in a * 2**p_prime")
    modulus: int = Field(description="Predicted modulus a * 2**p_prime")
    window: int = Field(description="Number of progression terms inspected")


class CongruenceReport(BaseModel):
    """Outcome of checking a divisibility claim against the exact j-table."""

    claim: str = Field(description="Human-readable claim")
    range: List[int] = Field(description="Inclusive range [first, last] of arguments checked")
    status: Literal["pass", "fail"] = Field(description="Verification status")
    counterexample: Counterexample | None = Field(default=None, description="First failure, if any")


class SquaresBreakdown(BaseModel):
    """Signed sums over representations of n as ordered sums of p positive squares."""

    n: int = Field(description="Argument")
    terms: Dict[int, int] = Field(description="p -> signed representation count; contribution is 2**p times this")
    total: BigInt = Field(description="Sum of 2**p * terms[p], equal to j(n)")


class CountResponse(BaseModel):
    """j(n) computed by every available method."""

    n: int = Field(description="Argument")
    recurrence: BigInt = Field(description="From the sum-of-squares recurrence")
    convolution: BigInt = Field(description="From sum p(n - m) d(m)")
    series: BigInt = Field(description="Coefficient of (-q; q)_inf / (q; q)_inf")
    enumeration: BigInt | None = Field(default=None, description="Brute-force count, small n only")
    squares: SquaresBreakdown | None = Field(default=None, description="Signed squares expansion")
    estimate: float | None = Field(default=None, description="Asymptotic estimate")
    min_squares: int | None = Field(default=None, description="Least number of squares summing to n")

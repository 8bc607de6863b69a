from fastapi import APIRouter, HTTPException, Query

from app.core.config import settings
from app.core.errors import JaggedError
from app.schemas.families import MaxLengthResponse, PartitionsResponse
from app.services.families_service import max_length_report, parse_family, partitions_report


router = APIRouter(prefix="/families", tags=["families"])


@router.get("/{family}/partitions", response_model=PartitionsResponse, summary="Enumerate partitions of a family")
def get_partitions(
    family: str,
    weight: int = Query(..., ge=0, le=settings.enumeration_limit, description="Weight of the partitions"),
    length: int | None = Query(default=None, ge=0, description="Restrict to one length"),
    staircase: bool = Query(default=False, description="Also return the staircase images"),
) -> PartitionsResponse:
    """
    All partitions of the family with the given weight, in lexicographic order.

    ``family`` is a built-in name (01, 02, 012, 001, 0p1:<p>) or a constraint
    string such as ``d1:1,d2:0;tail=1``.
    """
    try:
        return partitions_report(parse_family(family), weight, length, staircase)
    except JaggedError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@router.get("/{family}/max-length", response_model=MaxLengthResponse, summary="Largest length at a given weight")
def get_max_length(family: str, weight: int = Query(..., ge=0, le=settings.max_count_n)) -> MaxLengthResponse:
    try:
        return max_length_report(parse_family(family), weight)
    except JaggedError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

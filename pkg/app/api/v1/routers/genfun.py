from typing import Literal

from fastapi import APIRouter, HTTPException, Query

from app.core.config import settings
from app.core.errors import JaggedError
from app.schemas.genfun import BiSeriesResponse
from app.services.genfun_service import series_report


router = APIRouter(prefix="/genfun", tags=["genfun"])


@router.get("/{family}", response_model=BiSeriesResponse, summary="Length-graded generating function")
def get_series(
    family: str,
    zmax: int | None = Query(default=None, ge=0, le=64),
    order: int | None = Query(default=None, ge=1, le=200),
    source: Literal["closed_form", "enumeration", "qdiff", "multisum"] = Query(default="closed_form"),
    staircase: bool = Query(default=False, description="Apply the family's staircase weight shift"),
) -> BiSeriesResponse:
    if source == "enumeration" and order is not None and order > settings.enumeration_limit + 1:
        raise HTTPException(
            status_code=400,
            detail=f"enumeration is limited to weights up to {settings.enumeration_limit}, got order {order}",
        )
    try:
        return series_report(family, source, zmax, order, staircase)
    except JaggedError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

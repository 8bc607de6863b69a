from fastapi import APIRouter, HTTPException, Query

from app.core.config import settings
from app.core.errors import JaggedError
from app.schemas.series import SliceResponse
from app.services.counting_service import slice_report


router = APIRouter(prefix="/series", tags=["series"])


@router.get("/slice", response_model=SliceResponse, summary="Coefficients of J along r n + s")
def get_slice(
    r: int = Query(..., ge=1),
    s: int = Query(..., ge=0),
    order: int | None = Query(default=None, ge=1, le=2000),
) -> SliceResponse:
    depth = r * (settings.default_order if order is None else order) + s
    if depth > settings.max_table_size:
        raise HTTPException(status_code=400, detail=f"slice reaches j({depth}), above the limit {settings.max_table_size}")
    try:
        return slice_report(r, s, order)
    except JaggedError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

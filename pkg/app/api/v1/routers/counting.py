from fastapi import APIRouter, HTTPException, Path, Query

from app.core.config import settings
from app.core.errors import JaggedError
from app.schemas.counting import CongruencePrediction, CongruenceReport, CountResponse
from app.services.counting_service import congruence_predict, congruence_verify, count_report


router = APIRouter(prefix="/counting", tags=["counting"])


@router.get("/j/{n}", response_model=CountResponse, summary="Number of jagged partitions of n by every method")
def get_count(n: int = Path(..., ge=0, le=settings.max_count_n)) -> CountResponse:
    try:
        return count_report(n)
    except JaggedError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@router.get("/congruence/predict", response_model=CongruencePrediction, summary="Predict a power of two dividing j(rn+s)")
def get_prediction(
    r: int = Query(..., ge=2, le=settings.max_table_size // settings.congruence_window),
    s: int = Query(..., ge=1),
) -> CongruencePrediction:
    try:
        return congruence_predict(r, s)
    except JaggedError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@router.get("/congruence/verify", response_model=CongruenceReport, summary="Check modulus | j(rn+s) up to a bound")
def get_verification(
    r: int = Query(..., ge=1),
    s: int = Query(..., ge=0),
    modulus: int = Query(..., ge=1),
    upto: int = Query(..., ge=0, le=settings.max_table_size),
    min_index: int = Query(default=0, ge=0),
) -> CongruenceReport:
    try:
        return congruence_verify(r, s, modulus, upto, min_index)
    except JaggedError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

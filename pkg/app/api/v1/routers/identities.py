from typing import List

from fastapi import APIRouter, HTTPException, Query

from app.core.errors import JaggedError, UnknownIdentityError
from app.schemas.identities import IdentityInfo, IdentityReport, SuiteReport
from app.services.identities_service import list_identities, verify
from app.services.suite_service import run_suite


router = APIRouter(prefix="/identities", tags=["identities"])


@router.get("", response_model=List[IdentityInfo], summary="List registered identities")
def get_identities() -> List[IdentityInfo]:
    return list_identities()


@router.get("/suite", response_model=SuiteReport, summary="Run every acceptance check")
def get_suite(order: int | None = Query(default=None, ge=1, le=1000)) -> SuiteReport:
    return run_suite(order)


@router.get("/{name}", response_model=IdentityReport, summary="Verify one identity or group")
def get_identity(name: str, order: int | None = Query(default=None, ge=1, le=2000)) -> IdentityReport:
    try:
        return verify(name, order)
    except UnknownIdentityError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc
    except JaggedError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

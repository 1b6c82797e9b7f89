# core/hecke_core/parabolic/router.py
import logging

from fastapi import APIRouter, HTTPException, status

from core.hecke_core.cli.context import build_context
from core.hecke_core.errors import HeckeError
from core.hecke_core.parabolic import schemas

# Initialize logging
logger = logging.getLogger(__name__)

router = APIRouter()


@router.post("/quotient", response_model=schemas.QuotientResponse)
def enumerate_quotient(request: schemas.QuotientRequest):
    """
    Minimal coset representatives up to the requested length
    """
    try:
        context = build_context(request.config)
        elements = context.datum.enumerate_quotient(context.max_length(request.max_length))
    except HeckeError as exc:
        logger.error(f"Quotient enumeration failed: {exc}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.to_dict())

    return schemas.QuotientResponse(
        elements=[
            schemas.QuotientElement(element=context.system.format_element(x), length=x.length)
            for x in elements
        ],
        count=len(elements),
    )

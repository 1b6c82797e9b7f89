# core/hecke_core/realisation/router.py
import logging

from fastapi import APIRouter, HTTPException, status

from core.hecke_core.cli.context import build_context
from core.hecke_core.errors import HeckeError
from core.hecke_core.realisation import schemas

# Initialize logging
logger = logging.getLogger(__name__)

router = APIRouter()


@router.post("/validate", response_model=schemas.RealisationReport)
def validate_realisation(request: schemas.ValidateRequest):
    """
    Check every finite bond of the configured Cartan matrix
    """
    try:
        context = build_context(request.config)
        return schemas.RealisationReport.build(context.system, context.cartan)
    except HeckeError as exc:
        logger.error(f"Realisation check failed: {exc}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.to_dict())

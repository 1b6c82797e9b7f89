# core/hecke_core/gram/router.py
import logging

from fastapi import APIRouter, HTTPException, status

from core.hecke_core.cli.context import build_context
from core.hecke_core.errors import HeckeError
from core.hecke_core.gram import schemas

# Initialize logging
logger = logging.getLogger(__name__)

router = APIRouter()


@router.post("/matrix", response_model=schemas.GramMatrixResponse)
def gram_matrix(request: schemas.GramRequest):
    """
    Cellular Gram matrix of the light-leaves basis (universal systems only)
    """
    try:
        context = build_context(request.config)
        report = context.gram.gram_matrix(context.word(request.weight), context.element(request.shape))
    except HeckeError as exc:
        logger.error(f"Gram matrix failed: {exc}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.to_dict())

    return schemas.GramMatrixResponse(**report.to_json(context.system))

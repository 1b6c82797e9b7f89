# core/hecke_core/coxeter/router.py
import logging

from fastapi import APIRouter, HTTPException, status

from core.hecke_core.cli.context import build_context
from core.hecke_core.coxeter import schemas
from core.hecke_core.errors import HeckeError

# Initialize logging
logger = logging.getLogger(__name__)

router = APIRouter()


@router.post("/reduce", response_model=schemas.ReduceResponse)
def reduce_word(request: schemas.ReduceRequest):
    """
    Reduce a word to the canonical reduced expression of its element
    """
    try:
        context = build_context(request.config)
        system = context.system
        word = context.word(request.word)
        x = system.reduce(word)
    except HeckeError as exc:
        logger.error(f"Reduce failed: {exc}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.to_dict())

    return schemas.ReduceResponse(
        word=system.format_word(word),
        reduced=system.format_element(x),
        length=x.length,
        is_reduced=system.is_reduced(word),
        left_descents=[system.generators[s] for s in sorted(system.left_descents(x))],
        right_descents=[system.generators[s] for s in sorted(system.right_descents(x))],
    )
